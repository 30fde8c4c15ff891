//! Truncated nonassociative tensor modules: parenthesized words over the
//! generators as a free-module basis, juxtaposition as the product, and the
//! free Lie-pair null of diagonal, antisymmetry, and Jacobi generators.
//!
//! Products exceeding the truncation degree are diverted to a recorded
//! overflow bucket, never silently dropped, so every verified identity is
//! exact within the configured degree.

use std::collections::BTreeMap;

use crate::lie::{check_lie_axioms_filtered, LieFlags, LiePairDef, StructureConstants};
use crate::module_pairs::{ModuleElement, NullModel, PairDef, Submodule};
use crate::report::CheckReport;
use crate::semiring::{BasePair, Error, Scalar, SemiringSpec};

/// A parenthesized word: leaves are generator indices, internal nodes are
/// tensor products. `(x1(x2 x3))` and `((x1 x2)x3)` are different words.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Word {
    Leaf(usize),
    Node(Box<Word>, Box<Word>),
}

impl Word {
    pub fn degree(&self) -> usize {
        match self {
            Word::Leaf(_) => 1,
            Word::Node(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn node(l: Word, r: Word) -> Word {
        Word::Node(Box::new(l), Box::new(r))
    }

    pub fn render(&self) -> String {
        match self {
            Word::Leaf(i) => format!("x{}", i + 1),
            Word::Node(l, r) => format!("({} {})", l.render(), r.render()),
        }
    }

    /// All leaf positions, left to right.
    fn leaves(&self) -> usize {
        self.degree()
    }

    /// Replace the `pos`-th leaf (left to right) by the given generator.
    fn substitute(&self, pos: usize, gen: usize) -> Word {
        match self {
            Word::Leaf(_) => {
                debug_assert_eq!(pos, 0);
                Word::Leaf(gen)
            }
            Word::Node(l, r) => {
                let ln = l.leaves();
                if pos < ln {
                    Word::node(l.substitute(pos, gen), (**r).clone())
                } else {
                    Word::node((**l).clone(), r.substitute(pos - ln, gen))
                }
            }
        }
    }
}

/// The free module on all words of degree at most `degree` over `generators`
/// leaves, with a fixed canonical basis order (degree, then structure).
pub struct TensorModule {
    pub spec: SemiringSpec,
    pub generators: usize,
    pub degree: usize,
    pub words: Vec<Word>,
    index: BTreeMap<Word, usize>,
}

impl TensorModule {
    pub fn new(spec: SemiringSpec, generators: usize, degree: usize) -> Self {
        // words_by_degree[d] = all words of degree d+1
        let mut by_degree: Vec<Vec<Word>> = Vec::with_capacity(degree);
        by_degree.push((0..generators).map(Word::Leaf).collect());
        for d in 2..=degree {
            let mut level = Vec::new();
            for split in 1..d {
                for l in &by_degree[split - 1] {
                    for r in &by_degree[d - split - 1] {
                        level.push(Word::node(l.clone(), r.clone()));
                    }
                }
            }
            by_degree.push(level);
        }
        let mut words: Vec<Word> = by_degree.into_iter().flatten().collect();
        words.sort();
        words.sort_by_key(|w| w.degree());
        let index = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        TensorModule {
            spec,
            generators,
            degree,
            words,
            index,
        }
    }

    pub fn rank(&self) -> usize {
        self.words.len()
    }

    pub fn word_index(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn zero(&self) -> ModuleElement {
        ModuleElement::zero(&self.spec, self.rank())
    }

    pub fn from_terms(&self, terms: &[(Word, Scalar)]) -> Result<ModuleElement, Error> {
        let mut elem = self.zero();
        for (w, c) in terms {
            let i = self.word_index(w).ok_or_else(|| {
                Error::Precondition(format!("word {} exceeds the truncation", w.render()))
            })?;
            elem.coeffs[i] = self.spec.add(&elem.coeffs[i], c)?;
        }
        Ok(elem)
    }

    /// Embed a rank-`generators` element as a degree-one tensor element.
    pub fn embed_degree_one(&self, v: &ModuleElement) -> Result<ModuleElement, Error> {
        if v.rank() != self.generators {
            return Err(Error::RankMismatch {
                expected: self.generators,
                got: v.rank(),
            });
        }
        let mut elem = self.zero();
        for (i, c) in v.coeffs.iter().enumerate() {
            let idx = self.word_index(&Word::Leaf(i)).unwrap();
            elem.coeffs[idx] = c.clone();
        }
        Ok(elem)
    }

    /// The degree of the highest-degree word with a nonzero coefficient.
    pub fn max_degree(&self, v: &ModuleElement) -> usize {
        v.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.spec.is_zero(c))
            .map(|(i, _)| self.words[i].degree())
            .max()
            .unwrap_or(0)
    }
}

/// Result of a truncated product: the part within degree plus the diverted
/// overflow terms.
pub struct TensorProduct {
    pub kept: ModuleElement,
    pub overflow: Vec<(Word, Scalar)>,
}

/// Juxtaposition with a new root node; terms exceeding the truncation go to
/// the overflow bucket.
pub fn tensor_mul(
    tm: &TensorModule,
    a: &ModuleElement,
    b: &ModuleElement,
) -> Result<TensorProduct, Error> {
    let spec = &tm.spec;
    let mut kept = tm.zero();
    let mut overflow = Vec::new();
    for (i, ca) in a.coeffs.iter().enumerate() {
        if spec.is_zero(ca) {
            continue;
        }
        for (j, cb) in b.coeffs.iter().enumerate() {
            if spec.is_zero(cb) {
                continue;
            }
            let w = Word::node(tm.words[i].clone(), tm.words[j].clone());
            let c = spec.mul(ca, cb)?;
            match tm.word_index(&w) {
                Some(k) => kept.coeffs[k] = spec.add(&kept.coeffs[k], &c)?,
                None => overflow.push((w, c)),
            }
        }
    }
    Ok(TensorProduct { kept, overflow })
}

/// The null of the free `L0`-additive Lie pair at the truncation: the tensor
/// null (simple tensors with a `V0` factor or a `C0` coefficient) together
/// with all diagonal squares `(ww)`, antisymmetry sums `(wv + vw)`, and
/// Jacobi sums `((wv)u + (vu)w + (uw)v)` of words within degree.
pub fn free_lie_null(
    tm: &TensorModule,
    base: &BasePair,
    v0_generators: &[ModuleElement],
) -> Result<Submodule, Error> {
    let spec = &tm.spec;
    let one = spec.one();
    let mut gens: Vec<ModuleElement> = Vec::new();

    // (a) simple tensors containing a factor in V0
    for w in &tm.words {
        for pos in 0..w.degree() {
            for g in v0_generators {
                let mut terms = Vec::new();
                for (t, c) in g.coeffs.iter().enumerate() {
                    if !spec.is_zero(c) {
                        terms.push((w.substitute(pos, t), c.clone()));
                    }
                }
                if !terms.is_empty() {
                    gens.push(tm.from_terms(&terms)?);
                }
            }
        }
    }
    // (b) simple tensors with C0 coefficients
    for c in crate::module_pairs::PairDef::c0_generator_scalars(base)? {
        for w in &tm.words {
            gens.push(tm.from_terms(&[(w.clone(), c.clone())])?);
        }
    }
    // diagonal squares
    for w in &tm.words {
        if 2 * w.degree() <= tm.degree {
            gens.push(tm.from_terms(&[(Word::node(w.clone(), w.clone()), one.clone())])?);
        }
    }
    // antisymmetry sums
    for (i, w) in tm.words.iter().enumerate() {
        for v in tm.words.iter().skip(i + 1) {
            if w.degree() + v.degree() <= tm.degree {
                gens.push(tm.from_terms(&[
                    (Word::node(w.clone(), v.clone()), one.clone()),
                    (Word::node(v.clone(), w.clone()), one.clone()),
                ])?);
            }
        }
    }
    // Jacobi sums over word triples, in both association shapes: the
    // left-associated cyclic sums give axiom (c), and the reflected axiom
    // (c') needs the right-associated ones, which are not in the span of
    // the former over a semiring.
    for w in &tm.words {
        for v in &tm.words {
            for u in &tm.words {
                if w.degree() + v.degree() + u.degree() > tm.degree {
                    continue;
                }
                gens.push(tm.from_terms(&[
                    (
                        Word::node(Word::node(w.clone(), v.clone()), u.clone()),
                        one.clone(),
                    ),
                    (
                        Word::node(Word::node(v.clone(), u.clone()), w.clone()),
                        one.clone(),
                    ),
                    (
                        Word::node(Word::node(u.clone(), w.clone()), v.clone()),
                        one.clone(),
                    ),
                ])?);
                gens.push(tm.from_terms(&[
                    (
                        Word::node(w.clone(), Word::node(v.clone(), u.clone())),
                        one.clone(),
                    ),
                    (
                        Word::node(v.clone(), Word::node(u.clone(), w.clone())),
                        one.clone(),
                    ),
                    (
                        Word::node(u.clone(), Word::node(w.clone(), v.clone())),
                        one.clone(),
                    ),
                ])?);
            }
        }
    }
    gens.retain(|g| !g.is_zero());

    // the pair is L0-additive: the null is an ideal, so close the generator
    // list under juxtaposition with words on both sides (all generators are
    // degree-homogeneous, so products within the truncation are exact)
    let mut frontier = gens.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            let gdeg = tm.max_degree(g);
            for w in &tm.words {
                if gdeg + w.degree() > tm.degree {
                    continue;
                }
                let wb = tm.from_terms(&[(w.clone(), one.clone())])?;
                for p in [tensor_mul(tm, &wb, g)?, tensor_mul(tm, g, &wb)?] {
                    debug_assert!(p.overflow.is_empty());
                    if !p.kept.is_zero() {
                        next.push(p.kept);
                    }
                }
            }
        }
        let mut added = Vec::new();
        for cand in next {
            let probe = Submodule::closed(
                tm.rank(),
                gens.iter().chain(added.iter()).cloned().collect(),
            );
            if !crate::module_pairs::submodule_membership(&probe, &cand, 32)?.is_in() {
                added.push(cand);
            }
        }
        if added.is_empty() {
            break;
        }
        gens.extend(added.clone());
        frontier = added;
    }
    Ok(Submodule::closed(tm.rank(), gens))
}

impl crate::module_pairs::PairDef {
    pub(crate) fn c0_generator_scalars(base: &BasePair) -> Result<Vec<Scalar>, Error> {
        Ok(match &base.null {
            crate::semiring::CNull::ZeroOnly => vec![],
            crate::semiring::CNull::PrincipalMultiple(m) => vec![m.clone()],
            crate::semiring::CNull::ExplicitFiniteSet(s) => s
                .iter()
                .filter(|x| !base.spec.is_zero(x))
                .cloned()
                .collect(),
            crate::semiring::CNull::GeneratorList(g) => g.clone(),
        })
    }
}

/// The free `L0`-additive Lie pair at the truncation: the tensor module with
/// juxtaposition as the bracket and the free Lie null. Products beyond the
/// truncation are zeroed in the table but excluded from every check by the
/// degree filter.
pub struct FreeLiePair {
    pub tm: TensorModule,
    pub lp: LiePairDef,
}

pub fn free_lie_pair(
    base: &BasePair,
    generators: usize,
    degree: usize,
    v0_generators: &[ModuleElement],
    bound: usize,
) -> Result<(FreeLiePair, CheckReport), Error> {
    let tm = TensorModule::new(base.spec.clone(), generators, degree);
    let rank = tm.rank();
    let spec = &tm.spec;
    let mut entries = vec![vec![ModuleElement::zero(spec, rank); rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            let w = Word::node(tm.words[i].clone(), tm.words[j].clone());
            if let Some(k) = tm.word_index(&w) {
                entries[i][j] = ModuleElement::basis(spec, rank, k);
            }
        }
    }
    let sc = StructureConstants::new(rank, entries)?;
    let null = free_lie_null(&tm, base, v0_generators)?;
    let pair = PairDef::new(base.clone(), rank, NullModel::Span(null))?;
    let lp = LiePairDef::new(pair, sc, LieFlags::default())?;

    let degree_of = |i: usize| tm.words[i].degree();
    let null_gens_max_degree: Vec<usize> = lp
        .pair
        .null
        .span()
        .generators
        .iter()
        .map(|g| tm.max_degree(g))
        .collect();
    let filter = move |kind: &str, idx: &[usize]| -> bool {
        match kind {
            "fgen-1" => 2 * degree_of(idx[0]) <= degree,
            "fgen-2" => degree_of(idx[0]) + degree_of(idx[1]) <= degree,
            "fgen-3" => degree_of(idx[0]) + degree_of(idx[1]) + degree_of(idx[2]) <= degree,
            "lie-f" => null_gens_max_degree[idx[0]] + degree_of(idx[1]) <= degree,
            _ => true,
        }
    };
    let report = check_lie_axioms_filtered(&lp, bound, Some(&filter))?;
    Ok((FreeLiePair { tm, lp }, report))
}
