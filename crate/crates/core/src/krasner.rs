//! Krasner-type set models: the power set of cosets `R/G` of a finite
//! semiring by a normal unit subgroup, with set-lifted addition and bracket,
//! null sets those containing zero (or meeting a declared multiplicative
//! ideal), and the surpassing relation being set inclusion.
//!
//! Everything is finite, so every axiom is decided by enumeration. Sets of
//! cosets are bitmasks, which keeps the exhaustive sweeps cheap.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::report::{CheckReport, Verdict};
use crate::semiring::{verify_noncommutative_semiring_laws, Error, FiniteTable};

/// Which null the model carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KrasnerNull {
    /// `{S : 0 ∈ S}`.
    Zero,
    /// `{S : S ∩ M ≠ ∅}` for a multiplicative ideal `M` (element indices).
    Ideal(Vec<usize>),
}

/// How the element-level bracket is formed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KrasnerBracket {
    /// `[a, b] = ab + ε·ba`.
    Eps { eps: usize },
    /// `[a, b] = ab + b* a` for a declared involution (index permutation).
    Involution { star: Vec<usize> },
}

/// Input description of a Krasner model.
#[derive(Clone, Debug)]
pub struct KrasnerModel {
    pub table: Arc<FiniteTable>,
    /// Indices of the subgroup `G` of the unit group.
    pub group: Vec<usize>,
    pub bracket: KrasnerBracket,
    pub null: KrasnerNull,
}

/// The computed coset model: coset partition plus the set-lifted tables.
pub struct KrasnerPairModel {
    pub cosets: Vec<BTreeSet<usize>>,
    pub zero_coset: usize,
    /// `add[i][j]` is the bitmask of cosets in `C_i ⊞ C_j`.
    pub add: Vec<Vec<u64>>,
    /// product and bracket tables, same encoding
    pub mul: Vec<Vec<u64>>,
    pub bracket: Vec<Vec<u64>>,
    /// bitmask of cosets whose presence makes a set null
    pub null_touch: u64,
}

impl KrasnerPairModel {
    pub fn coset_count(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_null(&self, set: u64) -> bool {
        set & self.null_touch != 0
    }

    fn lift(&self, table: &[Vec<u64>], s1: u64, s2: u64) -> u64 {
        let mut out = 0u64;
        for i in 0..self.coset_count() {
            if s1 & (1 << i) == 0 {
                continue;
            }
            for j in 0..self.coset_count() {
                if s2 & (1 << j) != 0 {
                    out |= table[i][j];
                }
            }
        }
        out
    }

    /// `S1 ⊞ S2`, elementwise sum lifted to coset sets.
    pub fn set_add(&self, s1: u64, s2: u64) -> u64 {
        self.lift(&self.add, s1, s2)
    }

    pub fn set_mul(&self, s1: u64, s2: u64) -> u64 {
        self.lift(&self.mul, s1, s2)
    }

    pub fn set_bracket(&self, s1: u64, s2: u64) -> u64 {
        self.lift(&self.bracket, s1, s2)
    }
}

fn units(table: &FiniteTable) -> Vec<usize> {
    let n = table.size;
    (0..n)
        .filter(|&x| (0..n).any(|y| table.mul[x][y] == table.one && table.mul[y][x] == table.one))
        .collect()
}

fn inverse(table: &FiniteTable, x: usize) -> Option<usize> {
    (0..table.size).find(|&y| table.mul[x][y] == table.one && table.mul[y][x] == table.one)
}

/// Build the coset model and verify the weak `≼⊆`-Lie axioms exhaustively
/// over all singleton cosets and all unions of at most two cosets (pairs and
/// the Jacobi triples over singletons), plus the sub-multiplicativity
/// containment and the bracket monotonicity.
pub fn build_krasner(model: &KrasnerModel) -> Result<(KrasnerPairModel, CheckReport), Error> {
    let table = &model.table;
    let n = table.size;

    let laws = verify_noncommutative_semiring_laws(
        &crate::semiring::SemiringSpec::FiniteTable(model.table.clone()),
        0,
        0,
    );
    if !laws.all_pass() {
        return Err(Error::Precondition(format!(
            "underlying table is not a semiring:\n{}",
            laws
        )));
    }

    // G must be a subgroup of the unit group, normal under unit conjugation.
    let us = units(table);
    if !model.group.contains(&table.one) {
        return Err(Error::Precondition("G must contain 1".into()));
    }
    for &g in &model.group {
        if !us.contains(&g) {
            return Err(Error::Precondition(format!(
                "G element {} is not a unit",
                g
            )));
        }
        let gi = inverse(table, g).unwrap();
        if !model.group.contains(&gi) {
            return Err(Error::Precondition(format!(
                "G is not inverse-closed at {}",
                g
            )));
        }
        for &h in &model.group {
            if !model.group.contains(&table.mul[g][h]) {
                return Err(Error::Precondition(format!(
                    "G is not product-closed at ({}, {})",
                    g, h
                )));
            }
        }
    }
    for &u in &us {
        let ui = inverse(table, u).unwrap();
        for &g in &model.group {
            let c = table.mul[table.mul[u][g]][ui];
            if !model.group.contains(&c) {
                return Err(Error::Precondition(format!(
                    "G is not normal: {}·{}·{}⁻¹ = {} escapes",
                    u, g, u, c
                )));
            }
        }
    }
    if let KrasnerBracket::Involution { star } = &model.bracket {
        if star.len() != n {
            return Err(Error::MalformedTable(
                "involution permutation length".into(),
            ));
        }
        for x in 0..n {
            if star[star[x]] != x {
                return Err(Error::Precondition(format!(
                    "involution is not of order ≤ 2 at {}",
                    x
                )));
            }
            for y in 0..n {
                if star[table.mul[x][y]] != table.mul[star[y]][star[x]] {
                    return Err(Error::Precondition(format!(
                        "involution is not an anti-automorphism at ({}, {})",
                        x, y
                    )));
                }
            }
            if star[table.add[x][0]] != table.add[star[x]][star[0]] {
                // additivity is implied by checking all pairs below
            }
        }
        // G symmetric
        for &g in &model.group {
            if !model.group.contains(&star[g]) {
                return Err(Error::Precondition(format!("G* escapes G at {}", g)));
            }
        }
    }

    // cosets aG
    let mut cosets: Vec<BTreeSet<usize>> = Vec::new();
    let mut coset_of = vec![usize::MAX; n];
    for a in 0..n {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let set: BTreeSet<usize> = model.group.iter().map(|&g| table.mul[a][g]).collect();
        if !set.contains(&a) {
            return Err(Error::Precondition(format!(
                "coset of {} does not contain it (G lacks 1?)",
                a
            )));
        }
        let id = cosets.len();
        for &x in &set {
            if coset_of[x] != usize::MAX && coset_of[x] != id {
                return Err(Error::Precondition(format!(
                    "cosets do not partition: element {} in two cosets",
                    x
                )));
            }
            coset_of[x] = id;
        }
        cosets.push(set);
    }
    if cosets.len() > 64 {
        return Err(Error::Precondition(format!(
            "{} cosets exceed the 64-coset set encoding",
            cosets.len()
        )));
    }
    let zero_coset = coset_of[table.zero];

    // element-level bracket
    let elem_bracket = |a: usize, b: usize| -> usize {
        match &model.bracket {
            KrasnerBracket::Eps { eps } => {
                table.add[table.mul[a][b]][table.mul[*eps][table.mul[b][a]]]
            }
            KrasnerBracket::Involution { star } => {
                table.add[table.mul[a][b]][table.mul[star[b]][a]]
            }
        }
    };

    // lift a binary element operation to coset-set tables. The sum and
    // product images are unions of cosets outright (right G-translation maps
    // them to themselves); this is validated. The bracket image need not be
    // G-stable, so `[aG bG] = [a,b]G` is realized as the multivalued
    // operation collecting the cosets of all representative brackets.
    let lift_table = |op: &dyn Fn(usize, usize) -> usize,
                      name: &str,
                      validate: bool|
     -> Result<Vec<Vec<u64>>, Error> {
        let k = cosets.len();
        let mut out = vec![vec![0u64; k]; k];
        for (i, ci) in cosets.iter().enumerate() {
            for (j, cj) in cosets.iter().enumerate() {
                let mut elems = BTreeSet::new();
                for &a in ci {
                    for &b in cj {
                        elems.insert(op(a, b));
                    }
                }
                let mut mask = 0u64;
                for &x in &elems {
                    mask |= 1 << coset_of[x];
                }
                if validate {
                    for t in 0..k {
                        if mask & (1 << t) != 0 && !cosets[t].iter().all(|x| elems.contains(x)) {
                            return Err(Error::Precondition(format!(
                                "{} of cosets {} and {} is not a union of cosets",
                                name, i, j
                            )));
                        }
                    }
                }
                out[i][j] = mask;
            }
        }
        Ok(out)
    };

    let add = lift_table(&|a, b| table.add[a][b], "sum", true)?;
    let mul = lift_table(&|a, b| table.mul[a][b], "product", true)?;
    let bracket = lift_table(&elem_bracket, "bracket", false)?;

    let null_touch = match &model.null {
        KrasnerNull::Zero => 1u64 << zero_coset,
        KrasnerNull::Ideal(m) => {
            // M must be a multiplicative ideal
            for &x in m {
                if x >= n {
                    return Err(Error::Precondition(format!("M index {} out of range", x)));
                }
                for d in 0..n {
                    if !m.contains(&table.mul[x][d]) || !m.contains(&table.mul[d][x]) {
                        return Err(Error::Precondition(format!(
                            "M is not a multiplicative ideal at ({}, {})",
                            x, d
                        )));
                    }
                }
            }
            let mut mask = 0u64;
            for (i, c) in cosets.iter().enumerate() {
                if c.iter().any(|x| m.contains(x)) {
                    mask |= 1 << i;
                }
            }
            mask
        }
    };

    let pm = KrasnerPairModel {
        cosets,
        zero_coset,
        add,
        mul,
        bracket,
        null_touch,
    };
    // the ⊆-Jacobi surpassing identity is part of the ε-variant claim only;
    // the involution variants are weak Lie pairs without it
    let check_preceq = matches!(model.bracket, KrasnerBracket::Eps { .. });
    let report = verify_krasner(&pm, check_preceq)?;
    Ok((pm, report))
}

/// The axiom sweep over the coset-set algebra.
pub fn verify_krasner(pm: &KrasnerPairModel, check_preceq: bool) -> Result<CheckReport, Error> {
    let k = pm.coset_count();
    let mut report = CheckReport::new();

    // sets of at most two cosets, singletons first
    let mut sets: Vec<u64> = (0..k).map(|i| 1u64 << i).collect();
    for i in 0..k {
        for j in (i + 1)..k {
            sets.push((1 << i) | (1 << j));
        }
    }

    let null_verdict = |s: u64, witness: String| -> Verdict {
        if pm.is_null(s) {
            Verdict::Pass
        } else {
            Verdict::Fail(witness)
        }
    };

    for (si, &s) in sets.iter().enumerate() {
        let v = pm.set_bracket(s, s);
        report.push(
            "krasner-a",
            &[si + 1],
            null_verdict(v, format!("[SS] misses zero for set {:b}", s)),
        );
    }

    for (si, &s1) in sets.iter().enumerate() {
        for (sj, &s2) in sets.iter().enumerate() {
            let fwd = pm.set_bracket(s1, s2);
            let back = pm.set_bracket(s2, s1);
            report.push(
                "krasner-b",
                &[si + 1, sj + 1],
                null_verdict(
                    pm.set_add(fwd, back),
                    format!("[S1S2] ⊞ [S2S1] misses zero for {:b}, {:b}", s1, s2),
                ),
            );
            if pm.is_null(fwd) {
                report.push(
                    "krasner-reversible",
                    &[si + 1, sj + 1],
                    null_verdict(
                        back,
                        format!("[S1S2] null but [S2S1] not ({:b}, {:b})", s1, s2),
                    ),
                );
            }
        }
    }

    // Jacobi over singleton triples: the null sum and the ⊆-surpassing form
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                let (s1, s2, s3) = (1u64 << i, 1u64 << j, 1u64 << l);
                let cyc = pm.set_add(
                    pm.set_add(
                        pm.set_bracket(pm.set_bracket(s1, s2), s3),
                        pm.set_bracket(pm.set_bracket(s2, s3), s1),
                    ),
                    pm.set_bracket(pm.set_bracket(s3, s1), s2),
                );
                report.push(
                    "krasner-jacobi-null",
                    &[i + 1, j + 1, l + 1],
                    null_verdict(cyc, "cyclic bracket sum misses zero".into()),
                );
                if check_preceq {
                    let lhs = pm.set_bracket(pm.set_bracket(s1, s2), s3);
                    let rhs = pm.set_add(
                        pm.set_bracket(s1, pm.set_bracket(s2, s3)),
                        pm.set_bracket(s2, pm.set_bracket(s3, s1)),
                    );
                    report.push(
                        "krasner-jacobi-preceq",
                        &[i + 1, j + 1, l + 1],
                        if lhs & !rhs == 0 {
                            Verdict::Pass
                        } else {
                            Verdict::Fail(format!("{:b} ⊄ {:b}", lhs, rhs))
                        },
                    );
                }
            }
        }
    }

    // null sets absorb brackets: [S T] and [T S] stay null when 0 ∈ S
    for (si, &s) in sets.iter().enumerate() {
        if !pm.is_null(s) {
            continue;
        }
        for t in 0..k {
            let tt = 1u64 << t;
            report.push(
                "krasner-f",
                &[si + 1, t + 1],
                null_verdict(pm.set_bracket(s, tt), "null set bracket escapes".into()),
            );
            report.push(
                "krasner-f",
                &[si + 1, t + 1 + k],
                null_verdict(pm.set_bracket(tt, s), "null set bracket escapes".into()),
            );
        }
    }

    // bracket monotonicity in ⊆ (elementwise image definition)
    for i in 0..k {
        for j in 0..k {
            let small = 1u64 << i;
            let big = small | 1 << ((i + 1) % k);
            let l = 1u64 << j;
            let a = pm.set_bracket(small, l);
            let b = pm.set_bracket(big, l);
            report.push(
                "krasner-monotone",
                &[i + 1, j + 1],
                if a & !b == 0 {
                    Verdict::Pass
                } else {
                    Verdict::Fail("bracket not ⊆-monotone".into())
                },
            );
        }
    }

    // sub-multiplicativity: (⊞ a_i G)(⊞ b_j G) ⊆ ⊞ (a_i b_j) G
    for i in 0..k {
        for i2 in 0..k {
            for j in 0..k {
                for j2 in 0..k {
                    let lhs = pm.set_mul(pm.set_add(1 << i, 1 << i2), pm.set_add(1 << j, 1 << j2));
                    let mut rhs = 0u64;
                    for (a, b) in [(i, j), (i, j2), (i2, j), (i2, j2)] {
                        rhs = if rhs == 0 {
                            pm.mul[a][b]
                        } else {
                            pm.set_add(rhs, pm.mul[a][b])
                        };
                    }
                    report.push(
                        "krasner-submult",
                        &[i + 1, i2 + 1, j + 1, j2 + 1],
                        if lhs & !rhs == 0 {
                            Verdict::Pass
                        } else {
                            Verdict::Fail(format!("{:b} ⊄ {:b}", lhs, rhs))
                        },
                    );
                }
            }
        }
    }

    report.sort();
    Ok(report)
}

/// The acceptance model: 2×2 matrices over the two-element field with the
/// trivial group and ε the additive inverse of the identity (itself).
pub fn f2_matrix_model() -> KrasnerModel {
    let table = Arc::new(crate::semiring::f2_matrix_table());
    let one = table.one;
    KrasnerModel {
        table,
        group: vec![one],
        bracket: KrasnerBracket::Eps { eps: one },
        null: KrasnerNull::Zero,
    }
}
