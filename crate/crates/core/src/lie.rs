//! Structure-constant Lie brackets and the axiom checkers.
//!
//! A bracket on a free module is stored as the table `[b_i b_j] = Σ c^k_ij b_k`
//! and extended bilinearly; the checkers verify every axiom instance by exact
//! membership in the pair's null. Both the Jacobi sum and its reflection are
//! checked at every index triple (repeated indices included — over a pair the
//! repeated cases do not follow from the distinct ones). When the null is
//! exactly the `C0`-span of the basis, the scalar coefficient criteria are
//! checked as well and reported separately.

use crate::module_pairs::{
    surpasses, MembershipVerdict, ModuleElement, PairDef, ProductTable, Submodule,
};
use crate::report::{CheckReport, Verdict};
use crate::rng::SplitMix64;
use crate::semiring::{BasePair, Error, Scalar};

/// The bracket table: entry `(i, j)` holds `[b_i b_j]`.
pub type StructureConstants = ProductTable;

/// Declared claims to verify alongside the core axioms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LieFlags {
    pub dagger_reversible: bool,
    pub l0_reversible: bool,
    pub l0_symmetric: bool,
}

/// A free module pair together with a structure-constant bracket.
#[derive(Clone, Debug)]
pub struct LiePairDef {
    pub pair: PairDef,
    pub sc: StructureConstants,
    pub flags: LieFlags,
    /// Some constructions legitimately produce `L = L0` (for example the
    /// involution pair over booleans); they set this and the checker notes it.
    pub degenerate_allowed: bool,
}

impl LiePairDef {
    pub fn new(pair: PairDef, sc: StructureConstants, flags: LieFlags) -> Result<Self, Error> {
        Self::with_options(pair, sc, flags, false)
    }

    pub fn with_options(
        pair: PairDef,
        sc: StructureConstants,
        flags: LieFlags,
        degenerate_allowed: bool,
    ) -> Result<Self, Error> {
        if sc.rank != pair.rank {
            return Err(Error::RankMismatch {
                expected: pair.rank,
                got: sc.rank,
            });
        }
        for row in &sc.entries {
            for e in row {
                pair.base.spec.check_element(e)?;
            }
        }
        let lp = LiePairDef {
            pair,
            sc,
            flags,
            degenerate_allowed,
        };
        if !degenerate_allowed && lp.is_degenerate()? {
            return Err(Error::Degenerate(
                "every basis element lies in the null submodule".into(),
            ));
        }
        Ok(lp)
    }

    pub fn rank(&self) -> usize {
        self.pair.rank
    }

    pub fn base(&self) -> &BasePair {
        &self.pair.base
    }

    /// `L = L0` exactly when every basis element is null.
    pub fn is_degenerate(&self) -> Result<bool, Error> {
        for i in 0..self.pair.rank {
            let b = ModuleElement::basis(&self.pair.base.spec, self.pair.rank, i);
            if !self
                .pair
                .null
                .membership(&b, crate::module_pairs::DEFAULT_BOUND)?
                .is_in()
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Bilinear bracket evaluation `Σ x_i y_j [b_i b_j]`.
    pub fn bracket(&self, x: &ModuleElement, y: &ModuleElement) -> Result<ModuleElement, Error> {
        self.sc.eval(x, y)
    }

    pub fn basis(&self, i: usize) -> ModuleElement {
        ModuleElement::basis(&self.pair.base.spec, self.pair.rank, i)
    }

    /// The reflected pair: bracket table transposed, same null.
    pub fn reflected(&self) -> LiePairDef {
        LiePairDef {
            pair: self.pair.clone(),
            sc: self.sc.transpose(),
            flags: self.flags,
            degenerate_allowed: self.degenerate_allowed,
        }
    }
}

fn membership_verdict(v: &MembershipVerdict, witness: String) -> Verdict {
    match v {
        MembershipVerdict::In { .. } => Verdict::Pass,
        MembershipVerdict::NotIn { .. } => Verdict::Fail(witness),
        MembershipVerdict::Unknown { bound } => {
            Verdict::Inconclusive(format!("membership unknown at bound {}", bound))
        }
    }
}

/// Full axiom check. Element-level conditions are always verified:
///
/// * `fgen-1 (i)`: `[b_i b_i]` null,
/// * `fgen-2 (i,j)`: `[b_i b_j] + [b_j b_i]` null,
/// * `fgen-3 (i,j,k)`: the Jacobi sum `[[b_i b_j] b_k] + [[b_j b_k] b_i] + [[b_k b_i] b_j]` null,
/// * `fgen-4 (i,j,k)`: the reflected Jacobi sum `[b_k [b_j b_i]] + [b_i [b_k b_j]] + [b_j [b_i b_k]]` null,
/// * `lie-f (g,j)`: brackets of null generators with basis elements stay null.
pub fn check_lie_axioms(lp: &LiePairDef, bound: usize) -> Result<CheckReport, Error> {
    check_lie_axioms_filtered(lp, bound, None)
}

/// Same, restricted to axiom instances accepted by the filter (used for
/// truncated tensor pairs, where only degree-respecting tuples are checked).
/// The filter receives the axiom kind and the zero-based index tuple.
pub fn check_lie_axioms_filtered(
    lp: &LiePairDef,
    bound: usize,
    filter: Option<&dyn Fn(&str, &[usize]) -> bool>,
) -> Result<CheckReport, Error> {
    let n = lp.rank();
    let mut report = CheckReport::new();
    let accepts = |kind: &str, idx: &[usize]| filter.map_or(true, |f| f(kind, idx));

    if lp.is_degenerate()? {
        report.push("degenerate-noted", &[], Verdict::Pass);
    } else {
        report.push("nondegenerate", &[], Verdict::Pass);
    }

    for i in 0..n {
        if !accepts("fgen-1", &[i]) {
            continue;
        }
        let v = &lp.sc.entries[i][i];
        let m = lp.pair.null.membership(v, bound)?;
        report.push(
            "fgen-1",
            &[i + 1],
            membership_verdict(&m, format!("[b{}b{}] = {}", i + 1, i + 1, v.render())),
        );
    }

    for i in 0..n {
        for j in i..n {
            if !accepts("fgen-2", &[i, j]) {
                continue;
            }
            let s = lp.sc.entries[i][j].add(&lp.sc.entries[j][i])?;
            let m = lp.pair.null.membership(&s, bound)?;
            report.push(
                "fgen-2",
                &[i + 1, j + 1],
                membership_verdict(
                    &m,
                    format!(
                        "[b{}b{}]+[b{}b{}] = {}",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1,
                        s.render()
                    ),
                ),
            );
        }
    }

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !accepts("fgen-3", &[i, j, k]) {
                    continue;
                }
                let b = |t: usize| lp.basis(t);
                let jac = lp
                    .bracket(&lp.sc.entries[i][j], &b(k))?
                    .add(&lp.bracket(&lp.sc.entries[j][k], &b(i))?)?
                    .add(&lp.bracket(&lp.sc.entries[k][i], &b(j))?)?;
                let m = lp.pair.null.membership(&jac, bound)?;
                report.push(
                    "fgen-3",
                    &[i + 1, j + 1, k + 1],
                    membership_verdict(&m, format!("jacobi sum = {}", jac.render())),
                );

                let refl = lp
                    .bracket(&b(k), &lp.sc.entries[j][i])?
                    .add(&lp.bracket(&b(i), &lp.sc.entries[k][j])?)?
                    .add(&lp.bracket(&b(j), &lp.sc.entries[i][k])?)?;
                let m = lp.pair.null.membership(&refl, bound)?;
                report.push(
                    "fgen-4",
                    &[i + 1, j + 1, k + 1],
                    membership_verdict(&m, format!("reflected jacobi sum = {}", refl.render())),
                );
            }
        }
    }

    // Linearity clauses on the null: brackets of null generators with basis
    // elements stay null.
    for (gi, g) in lp.pair.null.span().generators.iter().enumerate() {
        for j in 0..n {
            if !accepts("lie-f", &[gi, j]) {
                continue;
            }
            let bj = lp.basis(j);
            for (side, (tag, v)) in [
                ("left", lp.bracket(g, &bj)?),
                ("right", lp.bracket(&bj, g)?),
            ]
            .into_iter()
            .enumerate()
            {
                let m = lp.pair.null.membership(&v, bound)?;
                report.push(
                    "lie-f",
                    &[gi + 1, j + 1, side + 1],
                    membership_verdict(
                        &m,
                        format!("{} bracket of null generator = {}", tag, v.render()),
                    ),
                );
            }
        }
    }

    if lp.pair.null_is_c0_span() {
        scalar_fgen_checks(lp, &mut report, &accepts)?;
    }

    report.sort();
    Ok(report)
}

/// The scalar coefficient criteria, valid when the null is the `C0`-span of
/// the basis: `c^m_ii ∈ C0`, `c^m_ij + c^m_ji ∈ C0`, and the (reflected)
/// Jacobi sums of products of structure constants in `C0`, coordinatewise.
fn scalar_fgen_checks(
    lp: &LiePairDef,
    report: &mut CheckReport,
    accepts: &dyn Fn(&str, &[usize]) -> bool,
) -> Result<(), Error> {
    let n = lp.rank();
    let base = lp.base();
    let spec = &base.spec;
    let c = |i: usize, j: usize, l: usize| -> &Scalar { &lp.sc.entries[i][j].coeffs[l] };
    let scalar_verdict = |s: &Scalar| -> Result<Verdict, Error> {
        Ok(match base.scalar_in_c0(s)? {
            crate::semiring::ScalarMembership::In { .. } => Verdict::Pass,
            crate::semiring::ScalarMembership::NotIn => Verdict::Fail(format!("{}", s)),
            crate::semiring::ScalarMembership::Unknown { bound } => {
                Verdict::Inconclusive(format!("scalar membership unknown at bound {}", bound))
            }
        })
    };

    for i in 0..n {
        if !accepts("fgen-1", &[i]) {
            continue;
        }
        for m in 0..n {
            report.push(
                "fgen-1-scalar",
                &[i + 1, m + 1],
                scalar_verdict(c(i, i, m))?,
            );
        }
    }
    for i in 0..n {
        for j in i..n {
            if !accepts("fgen-2", &[i, j]) {
                continue;
            }
            for m in 0..n {
                let s = spec.add(c(i, j, m), c(j, i, m))?;
                report.push("fgen-2-scalar", &[i + 1, j + 1, m + 1], scalar_verdict(&s)?);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !accepts("fgen-3", &[i, j, k]) {
                    continue;
                }
                for m in 0..n {
                    let mut cyc = spec.zero();
                    let mut refl = spec.zero();
                    for l in 0..n {
                        cyc = spec.add(&cyc, &spec.mul(c(i, j, l), c(l, k, m))?)?;
                        cyc = spec.add(&cyc, &spec.mul(c(j, k, l), c(l, i, m))?)?;
                        cyc = spec.add(&cyc, &spec.mul(c(k, i, l), c(l, j, m))?)?;
                        refl = spec.add(&refl, &spec.mul(c(j, i, l), c(k, l, m))?)?;
                        refl = spec.add(&refl, &spec.mul(c(k, j, l), c(i, l, m))?)?;
                        refl = spec.add(&refl, &spec.mul(c(i, k, l), c(j, l, m))?)?;
                    }
                    report.push(
                        "fgen-3-scalar",
                        &[i + 1, j + 1, k + 1, m + 1],
                        scalar_verdict(&cyc)?,
                    );
                    report.push(
                        "fgen-4-scalar",
                        &[i + 1, j + 1, k + 1, m + 1],
                        scalar_verdict(&refl)?,
                    );
                }
            }
        }
    }
    Ok(())
}

/// †-reversibility `[[yz]x] = [x[zy]]` as the exact scalar-sum condition
/// `Σ_l c^l_ij c^m_lk = Σ_l c^l_ji c^m_kl` for all index tuples.
pub fn check_dagger_reversibility(lp: &LiePairDef) -> Result<CheckReport, Error> {
    let n = lp.rank();
    let spec = &lp.base().spec;
    let c = |i: usize, j: usize, l: usize| -> &Scalar { &lp.sc.entries[i][j].coeffs[l] };
    let mut report = CheckReport::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m in 0..n {
                    let mut lhs = spec.zero();
                    let mut rhs = spec.zero();
                    for l in 0..n {
                        lhs = spec.add(&lhs, &spec.mul(c(i, j, l), c(l, k, m))?)?;
                        rhs = spec.add(&rhs, &spec.mul(c(j, i, l), c(k, l, m))?)?;
                    }
                    let verdict = if lhs == rhs {
                        Verdict::Pass
                    } else {
                        Verdict::Fail(format!(
                            "[[b{}b{}]b{}] coefficient {} is {} but [b{}[b{}b{}]] gives {}",
                            i + 1,
                            j + 1,
                            k + 1,
                            m + 1,
                            lhs,
                            k + 1,
                            j + 1,
                            i + 1,
                            rhs
                        ))
                    };
                    report.push("dagger-rev", &[i + 1, j + 1, k + 1, m + 1], verdict);
                }
            }
        }
    }
    report.sort();
    Ok(report)
}

/// `L0`-reversibility on basis pairs plus the supplied samples: wherever
/// `[xy]` is null, `[yx]` must be as well.
pub fn check_l0_reversibility(
    lp: &LiePairDef,
    samples: &[(ModuleElement, ModuleElement)],
    bound: usize,
) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new();
    let mut pairs: Vec<(ModuleElement, ModuleElement, Vec<usize>)> = Vec::new();
    for i in 0..lp.rank() {
        for j in 0..lp.rank() {
            pairs.push((lp.basis(i), lp.basis(j), vec![i + 1, j + 1]));
        }
    }
    for (s, (x, y)) in samples.iter().enumerate() {
        pairs.push((x.clone(), y.clone(), vec![lp.rank() + s + 1, 0]));
    }
    for (x, y, idx) in pairs {
        let fwd = lp.bracket(&x, &y)?;
        match lp.pair.null.membership(&fwd, bound)? {
            MembershipVerdict::In { .. } => {
                let back = lp.bracket(&y, &x)?;
                let m = lp.pair.null.membership(&back, bound)?;
                report.push(
                    "l0-rev",
                    &idx,
                    membership_verdict(
                        &m,
                        format!(
                            "[xy] = {} null but [yx] = {} is not",
                            fwd.render(),
                            back.render()
                        ),
                    ),
                );
            }
            MembershipVerdict::Unknown { bound } => {
                report.push(
                    "l0-rev",
                    &idx,
                    Verdict::Inconclusive(format!("[xy] membership unknown at bound {}", bound)),
                );
            }
            MembershipVerdict::NotIn { .. } => {
                // premise fails; nothing to check at this pair
            }
        }
    }
    report.sort();
    Ok(report)
}

/// `L0`-symmetry: `[g y] = [y g]` exactly, for null generators `g`.
pub fn check_l0_symmetry(lp: &LiePairDef) -> Result<CheckReport, Error> {
    let mut report = CheckReport::new();
    for (gi, g) in lp.pair.null.span().generators.iter().enumerate() {
        for j in 0..lp.rank() {
            let bj = lp.basis(j);
            let l = lp.bracket(g, &bj)?;
            let r = lp.bracket(&bj, g)?;
            report.push(
                "l0-sym",
                &[gi + 1, j + 1],
                if l == r {
                    Verdict::Pass
                } else {
                    Verdict::Fail(format!("{} vs {}", l.render(), r.render()))
                },
            );
        }
    }
    report.sort();
    Ok(report)
}

/// The Jacobi surpassing identity
/// `[[b_i b_j] b_k] ≼0 [b_i [b_j b_k]] + [b_j [b_k b_i]]`
/// on all basis triples. The extension to general elements is justified only
/// for `L0`-additive pairs; the report carries that proviso as a note.
pub fn check_jacobi_preceq(lp: &LiePairDef, bound: usize) -> Result<CheckReport, Error> {
    let n = lp.rank();
    let mut report = CheckReport::new();
    report.push("jacobi-preceq-proviso", &[], Verdict::Pass);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = lp.bracket(&lp.sc.entries[i][j], &lp.basis(k))?;
                let rhs = lp
                    .bracket(&lp.basis(i), &lp.sc.entries[j][k])?
                    .add(&lp.bracket(&lp.basis(j), &lp.sc.entries[k][i])?)?;
                let s = surpasses(&lp.pair, &lhs, &rhs, bound)?;
                report.push(
                    "jacobi-preceq",
                    &[i + 1, j + 1, k + 1],
                    membership_verdict(
                        &s.verdict,
                        format!("{} does not surpass to {}", lhs.render(), rhs.render()),
                    ),
                );
            }
        }
    }
    report.sort();
    Ok(report)
}

/// Which side an adjoint matrix acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjointSide {
    Left,
    Right,
}

/// Matrix of `ad_x` (columns are `[x b_j]`) or `ad_x†` (columns `[b_j x]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointMatrix {
    pub side: AdjointSide,
    /// `matrix[i][j]` is the `b_i` coefficient of the image of `b_j`.
    pub matrix: Vec<Vec<Scalar>>,
}

impl AdjointMatrix {
    pub fn apply(&self, lp: &LiePairDef, y: &ModuleElement) -> Result<ModuleElement, Error> {
        let spec = &lp.base().spec;
        let n = lp.rank();
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = spec.zero();
            for j in 0..n {
                acc = spec.add(&acc, &spec.mul(&self.matrix[i][j], &y.coeffs[j])?)?;
            }
            coeffs.push(acc);
        }
        ModuleElement::new(spec.clone(), coeffs)
    }

    /// Flatten to a coefficient vector (row-major), for embedding adjoints
    /// into an endomorphism module.
    pub fn flatten(&self, spec: &crate::semiring::SemiringSpec) -> Result<ModuleElement, Error> {
        let coeffs: Vec<Scalar> = self.matrix.iter().flatten().cloned().collect();
        ModuleElement::new(spec.clone(), coeffs)
    }
}

pub fn adjoint(
    lp: &LiePairDef,
    x: &ModuleElement,
    side: AdjointSide,
) -> Result<AdjointMatrix, Error> {
    let n = lp.rank();
    let mut matrix = vec![vec![lp.base().spec.zero(); n]; n];
    for j in 0..n {
        let bj = lp.basis(j);
        let col = match side {
            AdjointSide::Left => lp.bracket(x, &bj)?,
            AdjointSide::Right => lp.bracket(&bj, x)?,
        };
        for i in 0..n {
            matrix[i][j] = col.coeffs[i].clone();
        }
    }
    Ok(AdjointMatrix { side, matrix })
}

/// The three morphism kinds of the theory.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismKind {
    Weak,
    Preceq,
    Homomorphism,
}

/// Check that the linear map sending `b_i ↦ images[i]` is a Lie bracket map
/// of the requested kind: brackets are preserved exactly, null generators map
/// into the target null, and for the `≼`-kind order preservation is verified
/// on a seeded sample of surpassing pairs.
pub fn check_lie_morphism(
    src: &LiePairDef,
    dst: &LiePairDef,
    images: &[ModuleElement],
    kind: MorphismKind,
    bound: usize,
    seed: u64,
) -> Result<CheckReport, Error> {
    if images.len() != src.rank() {
        return Err(Error::RankMismatch {
            expected: src.rank(),
            got: images.len(),
        });
    }
    let apply = |v: &ModuleElement| -> Result<ModuleElement, Error> {
        let mut acc = ModuleElement::zero(&dst.base().spec, dst.rank());
        for (c, img) in v.coeffs.iter().zip(images) {
            acc = acc.add(&img.scale(c)?)?;
        }
        Ok(acc)
    };

    let mut report = CheckReport::new();
    for i in 0..src.rank() {
        for j in 0..src.rank() {
            let lhs = apply(&src.sc.entries[i][j])?;
            let rhs = dst.bracket(&images[i], &images[j])?;
            report.push(
                "morphism-bracket",
                &[i + 1, j + 1],
                if lhs == rhs {
                    Verdict::Pass
                } else {
                    Verdict::Fail(format!(
                        "f([b{}b{}]) = {} but [f(b{})f(b{})] = {}",
                        i + 1,
                        j + 1,
                        lhs.render(),
                        i + 1,
                        j + 1,
                        rhs.render()
                    ))
                },
            );
        }
    }

    for (gi, g) in src.pair.null.span().generators.iter().enumerate() {
        let img = apply(g)?;
        let m = dst.pair.null.membership(&img, bound)?;
        report.push(
            "morphism-null",
            &[gi + 1],
            membership_verdict(&m, format!("f(g{}) = {} not null", gi + 1, img.render())),
        );
    }

    match kind {
        MorphismKind::Weak => {}
        MorphismKind::Homomorphism => {
            // additivity holds by linearity of the matrix representation
            report.push("morphism-additivity", &[], Verdict::Pass);
        }
        MorphismKind::Preceq => {
            let mut rng = SplitMix64::new(seed);
            let gens = &src.pair.null.span().generators;
            for s in 0..8usize {
                let mut v = ModuleElement::zero(&src.base().spec, src.rank());
                for i in 0..src.rank() {
                    let c = small_scalar(&src.base().spec, &mut rng);
                    v = v.add(&src.basis(i).scale(&c)?)?;
                }
                let mut z = ModuleElement::zero(&src.base().spec, src.rank());
                if !gens.is_empty() {
                    let g = &gens[(rng.below(gens.len() as u64)) as usize];
                    z = g.clone();
                }
                let w = v.add(&z)?;
                let sp = surpasses(&dst.pair, &apply(&v)?, &apply(&w)?, bound)?;
                report.push(
                    "morphism-preceq",
                    &[s + 1],
                    membership_verdict(
                        &sp.verdict,
                        format!("f({}) does not surpass to f({})", v.render(), w.render()),
                    ),
                );
            }
        }
    }
    report.sort();
    Ok(report)
}

fn small_scalar(spec: &crate::semiring::SemiringSpec, rng: &mut SplitMix64) -> Scalar {
    use crate::semiring::SemiringSpec as S;
    match spec {
        S::Naturals => Scalar::nat(rng.below(4)),
        S::Booleans => Scalar::Bool(rng.below(2) == 1),
        S::Integers => Scalar::int(rng.below(7) as i64 - 3),
        S::NonnegRationals => Scalar::rat(rng.below(5) as i64, 1 + rng.below(2) as i64),
        S::MaxPlus => {
            if rng.below(4) == 0 {
                Scalar::maxplus_bottom()
            } else {
                Scalar::maxplus(rng.below(7) as i64 - 3, 1)
            }
        }
        S::FiniteTable(t) => Scalar::Table(rng.below(t.size as u64) as usize),
    }
}

/// Saturate a null generator list under the bracket (brackets of generators
/// with basis elements on both sides) until a membership fixed point or the
/// round cap. Returns the saturated submodule and whether it closed.
pub fn saturate_null_under_bracket(
    rank: usize,
    generators: Vec<ModuleElement>,
    sc: &StructureConstants,
    rounds: usize,
    bound: usize,
) -> Result<(Submodule, bool), Error> {
    let mut gens = generators;
    let mut closed = false;
    for _ in 0..rounds {
        let mut added: Vec<ModuleElement> = Vec::new();
        for g in &gens {
            for j in 0..rank {
                let spec = &g.spec;
                let bj = ModuleElement::basis(spec, rank, j);
                for v in [sc.eval(g, &bj)?, sc.eval(&bj, g)?] {
                    if v.is_zero() {
                        continue;
                    }
                    let probe =
                        Submodule::closed(rank, gens.iter().chain(added.iter()).cloned().collect());
                    if !crate::module_pairs::submodule_membership(&probe, &v, bound)?.is_in() {
                        added.push(v);
                    }
                }
            }
        }
        if added.is_empty() {
            closed = true;
            break;
        }
        gens.extend(added);
    }
    let sub = if closed {
        Submodule::closed(rank, gens)
    } else {
        Submodule::unsaturated(rank, gens)
    };
    Ok((sub, closed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module_pairs::NullModel;
    use crate::semiring::{BasePair, SemiringSpec};

    fn nat(coeffs: &[u64]) -> ModuleElement {
        ModuleElement::new(
            SemiringSpec::Naturals,
            coeffs.iter().map(|&c| Scalar::nat(c)).collect(),
        )
        .unwrap()
    }

    fn int(coeffs: &[i64]) -> ModuleElement {
        ModuleElement::new(
            SemiringSpec::Integers,
            coeffs.iter().map(|&c| Scalar::int(c)).collect(),
        )
        .unwrap()
    }

    /// The standard 3-dimensional filiform pair over the naturals:
    /// `[x1 x2] = x3`, `[x2 x1] = x3`, everything else zero, null `2·x3`.
    fn filiform() -> LiePairDef {
        let spec = SemiringSpec::Naturals;
        let zero = ModuleElement::zero(&spec, 3);
        let mut entries = vec![vec![zero.clone(); 3]; 3];
        entries[0][1] = nat(&[0, 0, 1]);
        entries[1][0] = nat(&[0, 0, 1]);
        let sc = StructureConstants::new(3, entries).unwrap();
        let base = BasePair::zero_only(spec);
        let null = NullModel::Span(Submodule::closed(3, vec![nat(&[0, 0, 2])]));
        let pair = PairDef::new(base, 3, null).unwrap();
        LiePairDef::new(pair, sc, LieFlags::default()).unwrap()
    }

    /// Classical cross product over the integers: `c_i = -b_i`, `d_i = 0`.
    fn cross_classical() -> LiePairDef {
        let spec = SemiringSpec::Integers;
        let zero = ModuleElement::zero(&spec, 3);
        let mut entries = vec![vec![zero.clone(); 3]; 3];
        entries[0][1] = int(&[0, 0, 1]);
        entries[0][2] = int(&[0, -1, 0]);
        entries[1][0] = int(&[0, 0, -1]);
        entries[1][2] = int(&[1, 0, 0]);
        entries[2][0] = int(&[0, 1, 0]);
        entries[2][1] = int(&[-1, 0, 0]);
        let sc = StructureConstants::new(3, entries).unwrap();
        let base = BasePair::zero_only(spec);
        let pair = PairDef::new(base, 3, NullModel::Span(Submodule::zero(3))).unwrap();
        LiePairDef::new(pair, sc, LieFlags::default()).unwrap()
    }

    #[test]
    fn filiform_passes_all_axioms() {
        let lp = filiform();
        let report = check_lie_axioms(&lp, 32).unwrap();
        assert!(report.all_pass(), "{}", report);
        assert_eq!(report.inconclusive_count(), 0);
    }

    #[test]
    fn mutated_filiform_fails_diagonal_axiom() {
        let mut lp = filiform();
        // plant c^1_{11} = 1
        lp.sc.entries[0][0] = nat(&[1, 0, 0]);
        let report = check_lie_axioms(&lp, 32).unwrap();
        let fail = report
            .failures()
            .find(|i| i.axiom == "fgen-1")
            .expect("diagonal axiom must fail");
        assert_eq!(fail.index, vec![1]);
    }

    #[test]
    fn bracket_eval_matches_examples() {
        let lp = cross_classical();
        let b0 = lp.basis(0);
        let b1 = lp.basis(1);
        assert_eq!(lp.bracket(&b0, &b1).unwrap(), int(&[0, 0, 1]));
        assert_eq!(lp.bracket(&b1, &b0).unwrap(), int(&[0, 0, -1]));
        let zero = ModuleElement::zero(&lp.base().spec, 3);
        assert!(lp.bracket(&zero, &b1).unwrap().is_zero());
    }

    #[test]
    fn two_dim_bracket_with_xx_equal_y() {
        // L0 = N·y, [xx] = y, [xy] = [yx] = y, [yy] = 0.
        let spec = SemiringSpec::Naturals;
        let zero = ModuleElement::zero(&spec, 2);
        let mut entries = vec![vec![zero.clone(); 2]; 2];
        entries[0][0] = nat(&[0, 1]);
        entries[0][1] = nat(&[0, 1]);
        entries[1][0] = nat(&[0, 1]);
        let sc = StructureConstants::new(2, entries).unwrap();
        let base = BasePair::zero_only(spec);
        let null = NullModel::Span(Submodule::closed(2, vec![nat(&[0, 1])]));
        let pair = PairDef::new(base, 2, null).unwrap();
        let lp = LiePairDef::new(pair, sc, LieFlags::default()).unwrap();
        let x = lp.basis(0);
        assert_eq!(lp.bracket(&x, &x).unwrap(), nat(&[0, 1]));
        let report = check_lie_axioms(&lp, 32).unwrap();
        assert!(report.all_pass(), "{}", report);
    }

    #[test]
    fn classical_cross_product_passes_and_is_dagger_reversible() {
        let lp = cross_classical();
        let report = check_lie_axioms(&lp, 32).unwrap();
        assert!(report.all_pass(), "{}", report);
        let dag = check_dagger_reversibility(&lp).unwrap();
        assert!(dag.all_pass(), "{}", dag);
    }

    #[test]
    fn generic_natural_cross_product_fails_dagger_reversibility() {
        // c_0 = b_0 + 2b_1 breaks the table symmetry: [[b_2 b_1] b_0] picks up
        // 2[b_1 b_0] = 2b_2 while the reflected route [b_0 [b_1 b_2]] vanishes.
        let spec = SemiringSpec::Naturals;
        let zero = ModuleElement::zero(&spec, 3);
        let mut entries = vec![vec![zero.clone(); 3]; 3];
        entries[0][1] = nat(&[0, 0, 1]);
        entries[0][2] = nat(&[0, 1, 0]);
        entries[1][0] = nat(&[0, 0, 1]);
        entries[1][2] = nat(&[1, 0, 0]);
        entries[2][0] = nat(&[0, 1, 0]);
        entries[2][1] = nat(&[1, 2, 0]);
        let sc = StructureConstants::new(3, entries).unwrap();
        let base = BasePair::zero_only(spec);
        let null = NullModel::Span(Submodule::closed(
            3,
            vec![nat(&[2, 0, 0]), nat(&[0, 2, 0]), nat(&[0, 0, 2])],
        ));
        let pair = PairDef::new(base, 3, null).unwrap();
        let lp = LiePairDef::new(pair, sc, LieFlags::default()).unwrap();
        let dag = check_dagger_reversibility(&lp).unwrap();
        assert!(dag.failures().next().is_some());
    }

    #[test]
    fn abelian_pair_is_dagger_and_l0_reversible() {
        let spec = SemiringSpec::Naturals;
        let zero = ModuleElement::zero(&spec, 2);
        let sc = StructureConstants::new(2, vec![vec![zero.clone(); 2]; 2]).unwrap();
        let base = BasePair::zero_only(spec);
        let pair = PairDef::new(base, 2, NullModel::Span(Submodule::zero(2))).unwrap();
        let lp = LiePairDef::new(pair, sc, LieFlags::default()).unwrap();
        assert!(check_dagger_reversibility(&lp).unwrap().all_pass());
        let rev = check_l0_reversibility(&lp, &[], 32).unwrap();
        assert!(rev.all_pass());
        assert!(!rev.items.is_empty());
    }

    #[test]
    fn adjoint_of_cross_product_is_rotation_generator() {
        let lp = cross_classical();
        let ad = adjoint(&lp, &lp.basis(0), AdjointSide::Left).unwrap();
        let expected = vec![
            vec![Scalar::int(0), Scalar::int(0), Scalar::int(0)],
            vec![Scalar::int(0), Scalar::int(0), Scalar::int(-1)],
            vec![Scalar::int(0), Scalar::int(1), Scalar::int(0)],
        ];
        assert_eq!(ad.matrix, expected);
        // ad_{cx} = c·ad_x
        let scaled = adjoint(
            &lp,
            &lp.basis(0).scale(&Scalar::int(3)).unwrap(),
            AdjointSide::Left,
        )
        .unwrap();
        for (row_s, row) in scaled.matrix.iter().zip(&ad.matrix) {
            for (s, c) in row_s.iter().zip(row) {
                assert_eq!(*s, lp.base().spec.mul(&Scalar::int(3), c).unwrap());
            }
        }
    }

    #[test]
    fn adjoint_left_plus_right_lands_in_null_when_fgen2_holds() {
        let lp = filiform();
        for i in 0..3 {
            let x = lp.basis(i);
            let l = adjoint(&lp, &x, AdjointSide::Left).unwrap();
            let r = adjoint(&lp, &x, AdjointSide::Right).unwrap();
            for j in 0..3 {
                let y = lp.basis(j);
                let s = l
                    .apply(&lp, &y)
                    .unwrap()
                    .add(&r.apply(&lp, &y).unwrap())
                    .unwrap();
                assert!(lp.pair.null.membership(&s, 32).unwrap().is_in());
            }
        }
    }

    #[test]
    fn reflection_preserves_axiom_verdicts() {
        for lp in [filiform(), cross_classical()] {
            let a = check_lie_axioms(&lp, 32).unwrap().all_pass();
            let b = check_lie_axioms(&lp.reflected(), 32).unwrap().all_pass();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn sub_pair_closed_under_table_is_a_lie_pair() {
        // restricting the filiform pair to span{x2, x3} gives the zero table
        let spec = SemiringSpec::Naturals;
        let zero = ModuleElement::zero(&spec, 2);
        let sc = StructureConstants::new(2, vec![vec![zero.clone(); 2]; 2]).unwrap();
        let null = NullModel::Span(Submodule::closed(2, vec![nat(&[0, 2])]));
        let pair = PairDef::new(BasePair::zero_only(spec), 2, null).unwrap();
        let sub = LiePairDef::new(pair, sc, LieFlags::default()).unwrap();
        assert!(check_lie_axioms(&sub, 32).unwrap().all_pass());
    }

    #[test]
    fn jacobi_preceq_holds_on_filiform() {
        let lp = filiform();
        let report = check_jacobi_preceq(&lp, 32).unwrap();
        assert!(report.all_pass(), "{}", report);
    }

    #[test]
    fn jacobi_preceq_can_fail_where_null_jacobi_holds() {
        // brute-force search over small rank-2 tables over the naturals for a
        // pair passing the element-level axioms but failing the ≼ form
        let spec = SemiringSpec::Naturals;
        let base = BasePair::zero_only(spec.clone());
        let mut found = None;
        'search: for bits in 0..(1u32 << 12) {
            let val = |t: u32| -> ModuleElement {
                match t {
                    0 => ModuleElement::zero(&spec, 2),
                    1 => nat(&[1, 1]),
                    2 => nat(&[2, 2]),
                    3 => nat(&[0, 2]),
                    4 => nat(&[2, 0]),
                    5 => nat(&[1, 0]),
                    6 => nat(&[0, 1]),
                    _ => nat(&[2, 1]),
                }
            };
            let mut entries = vec![vec![ModuleElement::zero(&spec, 2); 2]; 2];
            let mut b = bits;
            for i in 0..2 {
                for j in 0..2 {
                    entries[i][j] = val(b & 7);
                    b >>= 3;
                }
            }
            let sc = StructureConstants::new(2, entries).unwrap();
            for gen in [nat(&[1, 1]), nat(&[2, 2]), nat(&[2, 0])] {
                let null = NullModel::Span(Submodule::closed(2, vec![gen]));
                let Ok(pair) = PairDef::new(base.clone(), 2, null) else {
                    continue;
                };
                let Ok(lp) = LiePairDef::new(pair, sc.clone(), LieFlags::default()) else {
                    continue;
                };
                if !check_lie_axioms(&lp, 32).unwrap().all_pass() {
                    continue;
                }
                let preceq = check_jacobi_preceq(&lp, 32).unwrap();
                if preceq.failures().next().is_some() {
                    found = Some(preceq);
                    break 'search;
                }
            }
        }
        let preceq = found.expect("search must find a null-Jacobi pair failing the ≼ form");
        assert!(preceq.failures().next().is_some());
    }

    #[test]
    fn identity_into_larger_null_is_a_homomorphism() {
        let lp = filiform();
        let null = NullModel::Span(Submodule::closed(3, vec![nat(&[0, 0, 1])]));
        let pair = PairDef::new(lp.base().clone(), 3, null).unwrap();
        let bigger = LiePairDef::new(pair, lp.sc.clone(), LieFlags::default()).unwrap();
        let images: Vec<ModuleElement> = (0..3).map(|i| lp.basis(i)).collect();
        let report =
            check_lie_morphism(&lp, &bigger, &images, MorphismKind::Homomorphism, 32, 1).unwrap();
        assert!(report.all_pass(), "{}", report);
    }

    #[test]
    fn identity_is_a_preceq_morphism_on_sampled_pairs() {
        let lp = filiform();
        let images: Vec<ModuleElement> = (0..3).map(|i| lp.basis(i)).collect();
        let report = check_lie_morphism(&lp, &lp, &images, MorphismKind::Preceq, 32, 7).unwrap();
        assert!(report.all_pass(), "{}", report);
        assert!(report.items.iter().any(|i| i.axiom == "morphism-preceq"));
    }

    #[test]
    fn degenerate_pair_is_rejected_unless_allowed() {
        let spec = SemiringSpec::Naturals;
        let zero = ModuleElement::zero(&spec, 1);
        let sc = StructureConstants::new(1, vec![vec![zero]]).unwrap();
        let null = NullModel::Span(Submodule::closed(1, vec![nat(&[1])]));
        let pair = PairDef::new(BasePair::zero_only(spec), 1, null).unwrap();
        let err = LiePairDef::new(pair.clone(), sc.clone(), LieFlags::default());
        assert!(matches!(err, Err(Error::Degenerate(_))));
        let lp = LiePairDef::with_options(pair, sc, LieFlags::default(), true).unwrap();
        let report = check_lie_axioms(&lp, 32).unwrap();
        assert!(report.items.iter().any(|i| i.axiom == "degenerate-noted"));
        assert!(report.all_pass());
    }

    #[test]
    fn saturation_closes_filiform_variant_two() {
        // ℓ21 = x1: the null C(x3 + ℓ21) needs its brackets adjoined
        let spec = SemiringSpec::Naturals;
        let zero = ModuleElement::zero(&spec, 3);
        let mut entries = vec![vec![zero.clone(); 3]; 3];
        entries[0][1] = nat(&[0, 0, 1]);
        entries[1][0] = nat(&[1, 0, 0]); // ℓ21 = x1
        let sc = StructureConstants::new(3, entries).unwrap();
        let gens = vec![nat(&[1, 0, 1])];
        let (sub, closed) = saturate_null_under_bracket(3, gens, &sc, 16, 32).unwrap();
        assert!(closed);
        let base = BasePair::zero_only(spec);
        let pair = PairDef::new(base, 3, NullModel::Span(sub)).unwrap();
        let lp = LiePairDef::new(pair, sc, LieFlags::default()).unwrap();
        let report = check_lie_axioms(&lp, 32).unwrap();
        assert!(report.all_pass(), "{}", report);
    }

    #[test]
    fn reflection_invariance_on_random_tables() {
        // transposing the bracket table swaps the two Jacobi families and
        // fixes everything else, so the aggregate verdict is invariant
        let spec = SemiringSpec::Naturals;
        let base = BasePair::zero_only(spec.clone());
        let mut rng = crate::rng::SplitMix64::new(606);
        let mut seen_pass = false;
        let mut seen_fail = false;
        for _ in 0..60 {
            let entries: Vec<Vec<ModuleElement>> = (0..2)
                .map(|_| {
                    (0..2)
                        .map(|_| {
                            ModuleElement::new(
                                spec.clone(),
                                (0..2).map(|_| Scalar::nat(rng.below(3))).collect(),
                            )
                            .unwrap()
                        })
                        .collect()
                })
                .collect();
            let sc = StructureConstants::new(2, entries).unwrap();
            let null = NullModel::Span(Submodule::closed(2, vec![nat(&[1, 1])]));
            let Ok(pair) = PairDef::new(base.clone(), 2, null) else {
                continue;
            };
            let Ok(lp) = LiePairDef::new(pair, sc, LieFlags::default()) else {
                continue;
            };
            let fwd = check_lie_axioms(&lp, 32).unwrap().all_pass();
            let bwd = check_lie_axioms(&lp.reflected(), 32).unwrap().all_pass();
            assert_eq!(fwd, bwd);
            seen_pass |= fwd;
            seen_fail |= !fwd;
        }
        // the sample exercises both outcomes
        assert!(seen_pass && seen_fail);
    }

    #[test]
    fn unsaturated_null_reports_inconclusive_not_fail() {
        // soundness over completeness: a membership that cannot be decided
        // against an unsaturated null never becomes a pass or a fail
        let spec = SemiringSpec::Naturals;
        let zero = ModuleElement::zero(&spec, 2);
        let mut entries = vec![vec![zero.clone(); 2]; 2];
        entries[0][0] = nat(&[0, 1]);
        let sc = StructureConstants::new(2, entries).unwrap();
        let null = NullModel::Span(Submodule::unsaturated(2, vec![nat(&[2, 0])]));
        let pair = PairDef::new(BasePair::zero_only(spec), 2, null).unwrap();
        let lp = LiePairDef::new(pair, sc, LieFlags::default()).unwrap();
        let report = check_lie_axioms(&lp, 16).unwrap();
        assert_eq!(report.fail_count(), 0);
        assert!(report.inconclusive_count() > 0);
        let item = report
            .items
            .iter()
            .find(|i| i.axiom == "fgen-1" && i.index == vec![1])
            .unwrap();
        assert!(matches!(item.verdict, Verdict::Inconclusive(_)));
    }

    #[test]
    fn maxplus_lie_pair_checks_end_to_end() {
        // a rank-2 pair over exact max-plus: every bracket is the null
        // generator, antisymmetry holds by idempotency of max
        let spec = SemiringSpec::MaxPlus;
        let g = ModuleElement::new(
            spec.clone(),
            vec![Scalar::maxplus(0, 1), Scalar::maxplus(-1, 1)],
        )
        .unwrap();
        let mut entries = vec![vec![ModuleElement::zero(&spec, 2); 2]; 2];
        entries[0][1] = g.clone();
        entries[1][0] = g.clone();
        let sc = StructureConstants::new(2, entries).unwrap();
        let base = BasePair::zero_only(spec);
        let null = NullModel::Span(Submodule::closed(2, vec![g]));
        let pair = PairDef::new(base, 2, null).unwrap();
        let lp = LiePairDef::new(pair, sc, LieFlags::default()).unwrap();
        let report = check_lie_axioms(&lp, 32).unwrap();
        assert!(report.all_pass(), "{}", report);
        assert_eq!(report.inconclusive_count(), 0);
        let preceq = check_jacobi_preceq(&lp, 32).unwrap();
        assert!(preceq.all_pass(), "{}", preceq);
    }

    #[test]
    fn scalar_and_element_families_agree_on_aligned_nulls() {
        // when the null is the C0-span of the basis, the scalar coefficient
        // criteria are equivalent to the element-level axioms; the two
        // report families must agree instance by instance
        let spec = SemiringSpec::Naturals;
        let base = BasePair::new(
            spec.clone(),
            crate::semiring::CNull::PrincipalMultiple(Scalar::nat(2)),
        )
        .unwrap();
        let mut rng = crate::rng::SplitMix64::new(909);
        let mut agree_pass = 0;
        let mut agree_fail = 0;
        for _ in 0..80 {
            let entries: Vec<Vec<ModuleElement>> = (0..2)
                .map(|_| {
                    (0..2)
                        .map(|_| {
                            ModuleElement::new(
                                spec.clone(),
                                (0..2).map(|_| Scalar::nat(rng.below(4))).collect(),
                            )
                            .unwrap()
                        })
                        .collect()
                })
                .collect();
            let sc = StructureConstants::new(2, entries).unwrap();
            let null = NullModel::Span(Submodule::closed(
                2,
                vec![nat(&[2, 0]), nat(&[0, 2])],
            ));
            let Ok(pair) = PairDef::new(base.clone(), 2, null) else {
                continue;
            };
            let Ok(lp) = LiePairDef::new(pair, sc, LieFlags::default()) else {
                continue;
            };
            let report = check_lie_axioms(&lp, 32).unwrap();
            assert!(lp.pair.null_is_c0_span());
            let family_pass = |suffix: &str| {
                report
                    .items
                    .iter()
                    .filter(|i| i.axiom.ends_with(suffix))
                    .all(|i| i.verdict.is_pass())
            };
            // diagonal, antisymmetry, and both Jacobi families
            for (elem, scal) in [
                ("fgen-1", "fgen-1-scalar"),
                ("fgen-2", "fgen-2-scalar"),
                ("fgen-3", "fgen-3-scalar"),
                ("fgen-4", "fgen-4-scalar"),
            ] {
                let e = report
                    .items
                    .iter()
                    .filter(|i| i.axiom == elem)
                    .all(|i| i.verdict.is_pass());
                let s = family_pass(scal);
                assert_eq!(e, s, "{} vs {} disagree:\n{}", elem, scal, report);
            }
            if report.all_pass() {
                agree_pass += 1;
            } else {
                agree_fail += 1;
            }
        }
        assert!(agree_pass > 0 && agree_fail > 0);
    }

    #[test]
    fn boolean_checker_agrees_with_exhaustive_element_oracle() {
        // over a finite carrier the axioms can be evaluated on every module
        // element; the basis checker must pass exactly when that oracle does
        let spec = SemiringSpec::Booleans;
        let base = BasePair::zero_only(spec.clone());
        let elems: Vec<ModuleElement> = (0..4u8)
            .map(|bits| {
                ModuleElement::new(
                    spec.clone(),
                    (0..2).map(|i| Scalar::Bool(bits >> i & 1 == 1)).collect(),
                )
                .unwrap()
            })
            .collect();
        let mut checked = 0usize;
        for table_bits in 0..(1u32 << 8) {
            let cell = |b: u32| -> ModuleElement {
                ModuleElement::new(
                    spec.clone(),
                    vec![Scalar::Bool(b & 1 == 1), Scalar::Bool(b >> 1 & 1 == 1)],
                )
                .unwrap()
            };
            let entries = vec![
                vec![cell(table_bits & 3), cell(table_bits >> 2 & 3)],
                vec![cell(table_bits >> 4 & 3), cell(table_bits >> 6 & 3)],
            ];
            let sc = StructureConstants::new(2, entries).unwrap();
            for null_bits in 0..4u32 {
                let gens: Vec<ModuleElement> = (0..2)
                    .filter(|i| null_bits >> i & 1 == 1)
                    .map(|i| ModuleElement::basis(&spec, 2, i))
                    .collect();
                let null = NullModel::Span(Submodule::closed(2, gens));
                let Ok(pair) = PairDef::new(base.clone(), 2, null) else {
                    continue;
                };
                let Ok(lp) = LiePairDef::new(pair, sc.clone(), LieFlags::default()) else {
                    continue;
                };
                let checker = check_lie_axioms(&lp, 32).unwrap().all_pass();
                // exhaustive element-level oracle
                let mut oracle = true;
                let member = |v: &ModuleElement| lp.pair.null.membership(v, 32).unwrap().is_in();
                for x in &elems {
                    oracle &= member(&lp.bracket(x, x).unwrap());
                    for y in &elems {
                        let s = lp
                            .bracket(x, y)
                            .unwrap()
                            .add(&lp.bracket(y, x).unwrap())
                            .unwrap();
                        oracle &= member(&s);
                        for z in &elems {
                            let jac = lp
                                .bracket(&lp.bracket(x, y).unwrap(), z)
                                .unwrap()
                                .add(&lp.bracket(&lp.bracket(y, z).unwrap(), x).unwrap())
                                .unwrap()
                                .add(&lp.bracket(&lp.bracket(z, x).unwrap(), y).unwrap())
                                .unwrap();
                            oracle &= member(&jac);
                            let refl = lp
                                .bracket(z, &lp.bracket(y, x).unwrap())
                                .unwrap()
                                .add(&lp.bracket(x, &lp.bracket(z, y).unwrap()).unwrap())
                                .unwrap()
                                .add(&lp.bracket(y, &lp.bracket(x, z).unwrap()).unwrap())
                                .unwrap();
                            oracle &= member(&refl);
                        }
                    }
                    // null absorption on elements of the null span
                    for g in &lp.pair.null.span().generators {
                        oracle &= member(&lp.bracket(g, x).unwrap());
                        oracle &= member(&lp.bracket(x, g).unwrap());
                    }
                }
                assert_eq!(
                    checker, oracle,
                    "table {:08b} null {:02b}: checker {} oracle {}",
                    table_bits, null_bits, checker, oracle
                );
                checked += 1;
            }
        }
        assert!(checked > 500);
    }

    #[test]
    fn scalar_checks_apply_on_c0_span_nulls() {
        // over (N, 2N) with null = 2N-span of the basis the scalar checks run
        let spec = SemiringSpec::Naturals;
        let base = BasePair::new(
            spec.clone(),
            crate::semiring::CNull::PrincipalMultiple(Scalar::nat(2)),
        )
        .unwrap();
        let zero = ModuleElement::zero(&spec, 2);
        let mut entries = vec![vec![zero.clone(); 2]; 2];
        entries[0][1] = nat(&[2, 0]);
        entries[1][0] = nat(&[2, 0]);
        let sc = StructureConstants::new(2, entries).unwrap();
        let null = NullModel::Span(Submodule::closed(2, vec![nat(&[2, 0]), nat(&[0, 2])]));
        let pair = PairDef::new(base, 2, null).unwrap();
        let lp = LiePairDef::new(pair, sc, LieFlags::default()).unwrap();
        let report = check_lie_axioms(&lp, 32).unwrap();
        assert!(report.items.iter().any(|i| i.axiom == "fgen-1-scalar"));
        assert!(report.all_pass(), "{}", report);
    }
}
