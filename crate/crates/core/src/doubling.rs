//! The doubling functor: twist multiplication, the switch negation map,
//! the Z2-grading, doubled Lie brackets, and multilinear identity transfer.
//!
//! A doubled module stores the positive copy in the first half of the
//! coordinates and the negative copy in the second half.

use crate::lie::{check_lie_axioms, LieFlags, LiePairDef, StructureConstants};
use crate::module_pairs::{ModuleElement, NullModel, PairDef, ProductTable, Submodule};
use crate::report::{CheckReport, Verdict};
use crate::semiring::{BasePair, Error};

/// A pair of module elements viewed as one element of the doubled module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledElement {
    pub pos: ModuleElement,
    pub neg: ModuleElement,
}

impl DoubledElement {
    pub fn new(pos: ModuleElement, neg: ModuleElement) -> Result<Self, Error> {
        if pos.rank() != neg.rank() {
            return Err(Error::RankMismatch {
                expected: pos.rank(),
                got: neg.rank(),
            });
        }
        if pos.spec != neg.spec {
            return Err(Error::SpecMismatch(
                "doubled halves over different semirings".into(),
            ));
        }
        Ok(DoubledElement { pos, neg })
    }

    pub fn from_flat(v: &ModuleElement) -> Result<Self, Error> {
        if v.rank() % 2 != 0 {
            return Err(Error::Precondition(
                "doubled elements have even rank".into(),
            ));
        }
        let half = v.rank() / 2;
        Ok(DoubledElement {
            pos: ModuleElement::new(v.spec.clone(), v.coeffs[..half].to_vec())?,
            neg: ModuleElement::new(v.spec.clone(), v.coeffs[half..].to_vec())?,
        })
    }

    pub fn flatten(&self) -> ModuleElement {
        let mut coeffs = self.pos.coeffs.clone();
        coeffs.extend(self.neg.coeffs.clone());
        ModuleElement {
            spec: self.pos.spec.clone(),
            coeffs,
        }
    }

    pub fn add(&self, other: &DoubledElement) -> Result<DoubledElement, Error> {
        Ok(DoubledElement {
            pos: self.pos.add(&other.pos)?,
            neg: self.neg.add(&other.neg)?,
        })
    }
}

/// The twist product
/// `(b1, b2)(b1', b2') = (b1 b1' + b2 b2', b1 b2' + b2 b1')`,
/// with both halves multiplied through the given bilinear product.
pub fn double_mul(
    x: &DoubledElement,
    y: &DoubledElement,
    product: &ProductTable,
) -> Result<DoubledElement, Error> {
    let pos = product
        .eval(&x.pos, &y.pos)?
        .add(&product.eval(&x.neg, &y.neg)?)?;
    let neg = product
        .eval(&x.pos, &y.neg)?
        .add(&product.eval(&x.neg, &y.pos)?)?;
    DoubledElement::new(pos, neg)
}

/// The switch negation `(b1, b2) ↦ (b2, b1)`; of order exactly two.
pub fn switch(x: &DoubledElement) -> DoubledElement {
    DoubledElement {
        pos: x.neg.clone(),
        neg: x.pos.clone(),
    }
}

/// Verify the Z2-grading of a doubled product on all basis pairs:
/// same-sign products land in the positive part, mixed products in the
/// negative part.
pub fn check_grading(product: &ProductTable) -> Result<CheckReport, Error> {
    let n = product.rank;
    let spec = &product.entries[0][0].spec;
    let mut report = CheckReport::new();
    let basis = |i: usize| ModuleElement::basis(spec, n, i);
    let zero = ModuleElement::zero(spec, n);
    for i in 0..n {
        for j in 0..n {
            let pp = double_mul(
                &DoubledElement::new(basis(i), zero.clone())?,
                &DoubledElement::new(basis(j), zero.clone())?,
                product,
            )?;
            let nn = double_mul(
                &DoubledElement::new(zero.clone(), basis(i))?,
                &DoubledElement::new(zero.clone(), basis(j))?,
                product,
            )?;
            let pn = double_mul(
                &DoubledElement::new(basis(i), zero.clone())?,
                &DoubledElement::new(zero.clone(), basis(j))?,
                product,
            )?;
            let np = double_mul(
                &DoubledElement::new(zero.clone(), basis(i))?,
                &DoubledElement::new(basis(j), zero.clone())?,
                product,
            )?;
            let mut push = |axiom: &str, ok: bool, v: &DoubledElement| {
                report.push(
                    axiom,
                    &[i + 1, j + 1],
                    if ok {
                        Verdict::Pass
                    } else {
                        Verdict::Fail(format!("({}, {})", v.pos.render(), v.neg.render()))
                    },
                );
            };
            push("grading-pos-pos", pp.neg.is_zero(), &pp);
            push("grading-neg-neg", nn.neg.is_zero(), &nn);
            push("grading-pos-neg", pn.pos.is_zero(), &pn);
            push("grading-neg-pos", np.pos.is_zero(), &np);
        }
    }
    report.sort();
    Ok(report)
}

/// Which null the doubled pair carries: the diagonal span alone, or the
/// larger `Diag + {(b1, b2) : b1 + b2 ∈ A0}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NullMode {
    Diag,
    Sum,
}

fn doubled_null(
    base: &BasePair,
    rank: usize,
    inner: &NullModel,
    mode: NullMode,
) -> Result<NullModel, Error> {
    let spec = &base.spec;
    let mut gens = Vec::new();
    for i in 0..rank {
        // basis diagonals (e_i, e_i)
        let mut coeffs = vec![spec.zero(); 2 * rank];
        coeffs[i] = spec.one();
        coeffs[rank + i] = spec.one();
        gens.push(ModuleElement::new(spec.clone(), coeffs)?);
    }
    match mode {
        NullMode::Diag => Ok(NullModel::Span(Submodule::closed(2 * rank, gens))),
        NullMode::Sum => {
            for g in &inner.span().generators {
                let mut pos = g.coeffs.clone();
                pos.extend(vec![spec.zero(); rank]);
                gens.push(ModuleElement::new(spec.clone(), pos)?);
                let mut neg = vec![spec.zero(); rank];
                neg.extend(g.coeffs.clone());
                gens.push(ModuleElement::new(spec.clone(), neg)?);
            }
            Ok(NullModel::DoubledSum {
                span: Submodule::closed(2 * rank, gens),
                inner: Box::new(inner.clone()),
            })
        }
    }
}

/// Outcome of a doubling: the doubled pair, its axiom report, and the
/// embedding check for `y ↦ (y, 0)`.
pub struct Doubled {
    pub lp: LiePairDef,
    pub report: CheckReport,
}

/// Double a Lie pair: bracket
/// `[(x1, x2)(y1, y2)] = ([x1 y1] + [x2 y2], [x1 y2] + [x2 y1])`,
/// null per the selected mode.
pub fn double_lie(lp: &LiePairDef, mode: NullMode, bound: usize) -> Result<Doubled, Error> {
    let n = lp.rank();
    let spec = &lp.base().spec;
    let rank = 2 * n;
    let zero = ModuleElement::zero(spec, n);
    let embed = |pos: &ModuleElement, neg: &ModuleElement| -> Result<ModuleElement, Error> {
        DoubledElement::new(pos.clone(), neg.clone()).map(|d| d.flatten())
    };
    let mut entries = vec![vec![ModuleElement::zero(spec, rank); rank]; rank];
    for i in 0..n {
        for j in 0..n {
            let v = &lp.sc.entries[i][j];
            entries[i][j] = embed(v, &zero)?;
            entries[i][rank / 2 + j] = embed(&zero, v)?;
            entries[rank / 2 + i][j] = embed(&zero, v)?;
            entries[rank / 2 + i][rank / 2 + j] = embed(v, &zero)?;
        }
    }
    let sc = StructureConstants::new(rank, entries)?;
    let null = doubled_null(lp.base(), n, &lp.pair.null, mode)?;
    let pair = PairDef::new(lp.base().clone(), rank, null)?;
    let doubled = LiePairDef::with_options(pair, sc, lp.flags, true)?;
    let mut report = check_lie_axioms(&doubled, bound)?;

    // the positive-copy embedding y ↦ (y, 0) is a Lie homomorphism
    let images: Vec<ModuleElement> = (0..n)
        .map(|i| ModuleElement::basis(spec, rank, i))
        .collect();
    let morphism = crate::lie::check_lie_morphism(
        lp,
        &doubled,
        &images,
        crate::lie::MorphismKind::Homomorphism,
        bound,
        1,
    )?;
    report.extend(morphism);
    report.sort();
    Ok(Doubled {
        lp: doubled,
        report,
    })
}

/// Double a semiring pair with the bracket of the doubled commutator:
/// `[(x1, y1)(x2, y2)] = (x1x2 + y1y2 + x2y1 + y2x1, x1y2 + y1x2 + x2x1 + y2y1)`.
pub fn double_semiring_lie(
    pair: &PairDef,
    product: &ProductTable,
    mode: NullMode,
    bound: usize,
) -> Result<Doubled, Error> {
    let n = pair.rank;
    let spec = &pair.base.spec;
    let rank = 2 * n;
    let basis = |i: usize| ModuleElement::basis(spec, n, i);
    let zero = ModuleElement::zero(spec, n);
    let bracket = |x: &DoubledElement, y: &DoubledElement| -> Result<DoubledElement, Error> {
        let (x1, y1) = (&x.pos, &x.neg);
        let (x2, y2) = (&y.pos, &y.neg);
        let p = |a: &ModuleElement, b: &ModuleElement| product.eval(a, b);
        let pos = p(x1, x2)?
            .add(&p(y1, y2)?)?
            .add(&p(x2, y1)?)?
            .add(&p(y2, x1)?)?;
        let neg = p(x1, y2)?
            .add(&p(y1, x2)?)?
            .add(&p(x2, x1)?)?
            .add(&p(y2, y1)?)?;
        DoubledElement::new(pos, neg)
    };
    let mut entries = vec![vec![ModuleElement::zero(spec, rank); rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            let di = if i < n {
                DoubledElement::new(basis(i), zero.clone())?
            } else {
                DoubledElement::new(zero.clone(), basis(i - n))?
            };
            let dj = if j < n {
                DoubledElement::new(basis(j), zero.clone())?
            } else {
                DoubledElement::new(zero.clone(), basis(j - n))?
            };
            entries[i][j] = bracket(&di, &dj)?.flatten();
        }
    }
    let sc = StructureConstants::new(rank, entries)?;
    let null = doubled_null(&pair.base, n, &pair.null, mode)?;
    let dpair = PairDef::new(pair.base.clone(), rank, null)?;
    let doubled = LiePairDef::with_options(dpair, sc, LieFlags::default(), true)?;
    let report = check_lie_axioms(&doubled, bound)?;
    Ok(Doubled {
        lp: doubled,
        report,
    })
}

/// A formal bracket word over numbered variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketTree {
    Var(usize),
    Bracket(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn var(i: usize) -> Self {
        BracketTree::Var(i)
    }
    pub fn bracket(l: BracketTree, r: BracketTree) -> Self {
        BracketTree::Bracket(Box::new(l), Box::new(r))
    }

    fn count_vars(&self, counts: &mut [usize]) {
        match self {
            BracketTree::Var(i) => counts[*i] += 1,
            BracketTree::Bracket(l, r) => {
                l.count_vars(counts);
                r.count_vars(counts);
            }
        }
    }

    fn eval(&self, lp: &LiePairDef, args: &[ModuleElement]) -> Result<ModuleElement, Error> {
        match self {
            BracketTree::Var(i) => Ok(args[*i].clone()),
            BracketTree::Bracket(l, r) => lp.bracket(&l.eval(lp, args)?, &r.eval(lp, args)?),
        }
    }
}

/// A multilinear null-membership identity: the sum of the monomials must lie
/// in the null at every basis substitution.
#[derive(Clone, Debug)]
pub struct MultilinearIdentity {
    pub name: String,
    pub vars: usize,
    pub monomials: Vec<BracketTree>,
}

impl MultilinearIdentity {
    /// The antisymmetry identity `[x1 x2] + [x2 x1] ∈ L0`.
    pub fn antisymmetry() -> Self {
        MultilinearIdentity {
            name: "antisymmetry".into(),
            vars: 2,
            monomials: vec![
                BracketTree::bracket(BracketTree::var(0), BracketTree::var(1)),
                BracketTree::bracket(BracketTree::var(1), BracketTree::var(0)),
            ],
        }
    }

    /// The Jacobi identity
    /// `[[x1 x2] x3] + [[x2 x3] x1] + [[x3 x1] x2] ∈ L0`.
    pub fn jacobi() -> Self {
        let b = BracketTree::bracket;
        let v = BracketTree::var;
        MultilinearIdentity {
            name: "jacobi".into(),
            vars: 3,
            monomials: vec![
                b(b(v(0), v(1)), v(2)),
                b(b(v(1), v(2)), v(0)),
                b(b(v(2), v(0)), v(1)),
            ],
        }
    }

    /// Every variable must appear exactly once in every monomial.
    pub fn is_multilinear(&self) -> bool {
        self.monomials.iter().all(|m| {
            let mut counts = vec![0usize; self.vars];
            m.count_vars(&mut counts);
            counts.iter().all(|&c| c == 1)
        })
    }

    /// Evaluate the identity on every basis tuple of the pair.
    pub fn check(&self, lp: &LiePairDef, bound: usize) -> Result<CheckReport, Error> {
        let n = lp.rank();
        let mut report = CheckReport::new();
        let mut tuple = vec![0usize; self.vars];
        loop {
            let args: Vec<ModuleElement> = tuple.iter().map(|&i| lp.basis(i)).collect();
            let mut sum = ModuleElement::zero(&lp.base().spec, n);
            for m in &self.monomials {
                sum = sum.add(&m.eval(lp, &args)?)?;
            }
            let verdict = match lp.pair.null.membership(&sum, bound)? {
                crate::module_pairs::MembershipVerdict::In { .. } => Verdict::Pass,
                crate::module_pairs::MembershipVerdict::NotIn { .. } => {
                    Verdict::Fail(format!("sum = {}", sum.render()))
                }
                crate::module_pairs::MembershipVerdict::Unknown { bound } => {
                    Verdict::Inconclusive(format!("membership unknown at bound {}", bound))
                }
            };
            let idx: Vec<usize> = tuple.iter().map(|&i| i + 1).collect();
            report.push(&self.name, &idx, verdict);
            // odometer over basis tuples
            let mut pos = 0;
            loop {
                if pos == self.vars {
                    report.sort();
                    return Ok(report);
                }
                tuple[pos] += 1;
                if tuple[pos] < n {
                    break;
                }
                tuple[pos] = 0;
                pos += 1;
            }
        }
    }
}

/// Identity transfer to the doubled pair: a multilinear identity holding on
/// the original pair also holds on the doubled pair. The report carries both
/// evaluations plus the transfer verdict.
pub fn transfer_identities(
    lp: &LiePairDef,
    identity: &MultilinearIdentity,
    mode: NullMode,
    bound: usize,
) -> Result<CheckReport, Error> {
    if !identity.is_multilinear() {
        return Err(Error::Precondition(format!(
            "identity `{}` is not multilinear",
            identity.name
        )));
    }
    let base = identity.check(lp, bound)?;
    let doubled = double_lie(lp, mode, bound)?;
    let on_doubled = identity.check(&doubled.lp, bound)?;
    let mut report = CheckReport::new();
    for item in base.items {
        report.push(
            &format!("{}-base", identity.name),
            &item.index,
            item.verdict,
        );
    }
    let doubled_ok = on_doubled.all_pass();
    for item in on_doubled.items {
        report.push(
            &format!("{}-doubled", identity.name),
            &item.index,
            item.verdict,
        );
    }
    let base_ok = report
        .items
        .iter()
        .filter(|i| i.axiom.ends_with("-base"))
        .all(|i| i.verdict.is_pass());
    report.push(
        "identity-transfer",
        &[],
        if !base_ok || doubled_ok {
            Verdict::Pass
        } else {
            Verdict::Fail("identity holds on the base pair but not on the double".into())
        },
    );
    report.sort();
    Ok(report)
}
