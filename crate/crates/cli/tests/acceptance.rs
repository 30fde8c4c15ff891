//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. All arithmetic is exact, so every comparison is at zero
//! tolerance.

use std::fmt::Write as _;
use std::time::Instant;

use tropical_lie_core::constructions::{
    build_bilinear_form_pair, build_classical, build_cross_product, build_filiform,
    build_involution_pair, build_j_graded_example, build_psi_commutator, catalog_low_dim,
    check_leibniz, matrix_product_table, ClassicalFamily, Involution, MatrixAlgebraPair,
};
use tropical_lie_core::doubling::{
    check_grading, double_lie, double_mul, double_semiring_lie, switch, transfer_identities,
    DoubledElement, MultilinearIdentity, NullMode,
};
use tropical_lie_core::krasner::{build_krasner, f2_matrix_model};
use tropical_lie_core::lie::{check_jacobi_preceq, LieFlags, LiePairDef, StructureConstants};
use tropical_lie_core::module_pairs::{
    submodule_membership, ModuleElement, NegationSpec, NullModel, PairDef, ProductTable, Submodule,
};
use tropical_lie_core::pbw::{
    check_lzs, pbw_eps, pbw_preceq, pbw_weak, EpsTarget, FlatWord, Letter, PreceqEnvelope,
};
use tropical_lie_core::report::CheckReport;
use tropical_lie_core::rng::SplitMix64;
use tropical_lie_core::semiring::{BasePair, CNull, Scalar, SemiringSpec};

const BOUND: usize = 32;

fn verdict_line(name: &str, pass: bool) {
    println!(
        "acceptance {}: {}",
        name,
        if pass { "pass" } else { "FAIL" }
    );
    assert!(pass, "acceptance {} failed", name);
}

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

fn nat_base_2n() -> BasePair {
    BasePair::new(
        SemiringSpec::Naturals,
        CNull::PrincipalMultiple(Scalar::nat(2)),
    )
    .unwrap()
}

fn clean(report: &CheckReport, what: &str, log: &mut String) -> bool {
    let ok = report.fail_count() == 0 && report.inconclusive_count() == 0;
    if !ok {
        let _ = writeln!(log, "  {} has failures:\n{}", what, report);
    }
    ok
}

fn filiform_standard() -> LiePairDef {
    build_filiform(
        3,
        &BasePair::zero_only(SemiringSpec::Naturals),
        &[(2, 1, nat(&[0, 0, 1]))],
        BOUND,
    )
    .unwrap()
    .lp
}

/// The ε = 1 filiform variant over (N, 2N): null enlarged to 2L so that
/// x + εx is null on the basis.
fn eps_filiform() -> LiePairDef {
    let spec = SemiringSpec::Naturals;
    let zero = ModuleElement::zero(&spec, 3);
    let mut entries = vec![vec![zero.clone(); 3]; 3];
    entries[0][1] = nat(&[0, 0, 1]);
    entries[1][0] = nat(&[0, 0, 1]);
    let sc = StructureConstants::new(3, entries).unwrap();
    let null = NullModel::Span(Submodule::closed(
        3,
        vec![nat(&[2, 0, 0]), nat(&[0, 2, 0]), nat(&[0, 0, 2])],
    ));
    let pair = PairDef::new(nat_base_2n(), 3, null).unwrap();
    LiePairDef::new(pair, sc, LieFlags::default()).unwrap()
}

fn heisenberg() -> LiePairDef {
    catalog_low_dim(BOUND)
        .unwrap()
        .into_iter()
        .find(|e| e.name == "dim4-heisenberg")
        .unwrap()
        .built
        .lp
}

#[test]
fn criterion_1_catalog_soundness() {
    let mut log = String::new();
    let mut ok = true;

    // the low-dimensional catalog
    for e in catalog_low_dim(BOUND).unwrap() {
        ok &= clean(&e.built.report, e.name, &mut log);
    }
    let (j_built, j_grading) = build_j_graded_example(BOUND).unwrap();
    ok &= clean(&j_built.report, "j-graded ambient", &mut log);
    ok &= clean(&j_grading, "j-grading", &mut log);

    // filiform, both variants
    let base = BasePair::zero_only(SemiringSpec::Naturals);
    let v1 = build_filiform(3, &base, &[(2, 1, nat(&[0, 0, 1]))], BOUND).unwrap();
    ok &= clean(&v1.report, "filiform ℓ21 = x3", &mut log);
    let v2 = build_filiform(3, &base, &[(2, 1, nat(&[1, 2, 1]))], BOUND).unwrap();
    ok &= clean(&v2.report, "filiform ℓ21 arbitrary", &mut log);

    // cross products: 20 seeded (c, d) choices over the naturals in the
    // doubling-style family c_i = b_i + 2e_i, d_i even, plus the classical
    // integer instance
    let mut rng = SplitMix64::new(0xC0FFEE);
    for t in 0..20 {
        let base = nat_base_2n();
        let spec = base.spec.clone();
        // c_i = b_i + 2e_i with seeded small e_i, d_i seeded even vectors
        let mut even_vec = || -> ModuleElement {
            ModuleElement::new(
                spec.clone(),
                (0..3).map(|_| Scalar::nat(2 * rng.below(3))).collect(),
            )
            .unwrap()
        };
        let mut c_vec = |unit: usize| -> ModuleElement {
            let mut v = even_vec();
            v.coeffs[unit] = spec.add(&v.coeffs[unit], &Scalar::nat(1)).unwrap();
            v
        };
        let c = [c_vec(0), c_vec(1), c_vec(2)];
        let d = [even_vec(), even_vec(), even_vec()];
        let built = build_cross_product(&base, &c, &d, BOUND).unwrap();
        ok &= clean(
            &built.report,
            &format!("cross product seed {}", t),
            &mut log,
        );
    }
    let zbase = BasePair::zero_only(SemiringSpec::Integers);
    let c = [int(&[-1, 0, 0]), int(&[0, -1, 0]), int(&[0, 0, -1])];
    let d = [int(&[0, 0, 0]), int(&[0, 0, 0]), int(&[0, 0, 0])];
    let classical = build_cross_product(&zbase, &c, &d, BOUND).unwrap();
    ok &= clean(&classical.report, "cross product classical", &mut log);

    // bilinear-form pairs over the booleans: every n = 2 table exhaustively,
    // seeded samples at n = 3, 4
    let bspec = SemiringSpec::Booleans;
    let bbase = BasePair::zero_only(bspec.clone());
    let bool_elem = |rank: usize, bits: u64| -> ModuleElement {
        ModuleElement::new(
            bspec.clone(),
            (0..rank)
                .map(|i| Scalar::Bool(bits >> i & 1 == 1))
                .collect(),
        )
        .unwrap()
    };
    for table_bits in 0..(1u64 << 8) {
        let entries = vec![
            vec![
                bool_elem(2, table_bits & 3),
                bool_elem(2, table_bits >> 2 & 3),
            ],
            vec![
                bool_elem(2, table_bits >> 4 & 3),
                bool_elem(2, table_bits >> 6 & 3),
            ],
        ];
        let built = build_bilinear_form_pair(2, entries, &bbase, BOUND).unwrap();
        ok &= clean(
            &built.report,
            &format!("bilinear n=2 table {}", table_bits),
            &mut log,
        );
    }
    let mut rng = SplitMix64::new(77);
    for n in [3usize, 4] {
        for t in 0..20 {
            let entries: Vec<Vec<ModuleElement>> = (0..n)
                .map(|_| (0..n).map(|_| bool_elem(n, rng.below(1 << n))).collect())
                .collect();
            let built = build_bilinear_form_pair(n, entries, &bbase, BOUND).unwrap();
            ok &= clean(
                &built.report,
                &format!("bilinear n={} sample {}", n, t),
                &mut log,
            );
        }
    }

    // involution pair: transpose on M2(booleans)
    let alg = MatrixAlgebraPair::principal(bbase.clone(), 2, None).unwrap();
    let inv = build_involution_pair(&alg, &Involution::Transpose, None, BOUND).unwrap();
    ok &= clean(&inv.report, "involution M2(bool)", &mut log);

    // classical families
    let sl2 = build_classical(
        ClassicalFamily::Sl,
        2,
        &nat_base_2n(),
        &Scalar::nat(1),
        BOUND,
    )
    .unwrap();
    ok &= clean(&sl2.report, "sl2 over (N, 2N)", &mut log);
    let eps = Scalar::int(-1);
    for (fam, n, name) in [
        (ClassicalFamily::SoOdd, 1usize, "so3"),
        (ClassicalFamily::SoEven, 2, "so4"),
        (ClassicalFamily::Sp, 1, "sp2"),
        (ClassicalFamily::Sp, 2, "sp4"),
    ] {
        match build_classical(fam, n, &zbase, &eps, BOUND) {
            Ok(cp) => ok &= clean(&cp.report, name, &mut log),
            Err(e) => {
                ok = false;
                let _ = writeln!(log, "  {} failed to build: {}", name, e);
            }
        }
    }

    // the ψ-commutator pair on M2(N) with ε = 1
    let base = nat_base_2n();
    let gens = (0..4)
        .map(|i| {
            ModuleElement::basis(&base.spec, 4, i)
                .scale(&Scalar::nat(2))
                .unwrap()
        })
        .collect();
    let pair = PairDef::new(base.clone(), 4, NullModel::Span(Submodule::closed(4, gens))).unwrap();
    let product = matrix_product_table(&base.spec, 2);
    let psi = NegationSpec::scalar(Scalar::nat(1), true);
    let comm = build_psi_commutator(&pair, &product, &psi, BOUND).unwrap();
    ok &= clean(&comm.report, "psi-commutator M2(N)", &mut log);

    if !log.is_empty() {
        eprintln!("{}", log);
    }
    verdict_line("criterion-1 catalog soundness", ok);
}

#[test]
fn criterion_2_leibniz_identities() {
    // 200 seeded triples in M2(N) with ε = 1
    let m2n = check_leibniz(
        &SemiringSpec::Naturals,
        2,
        &Scalar::nat(1),
        200,
        0xBEEF,
        false,
    )
    .unwrap();
    // exhaustive over the booleans: scalars and 2×2 matrices
    let bool_scalars =
        check_leibniz(&SemiringSpec::Booleans, 1, &Scalar::Bool(true), 0, 0, true).unwrap();
    let bool_m2 =
        check_leibniz(&SemiringSpec::Booleans, 2, &Scalar::Bool(true), 0, 0, true).unwrap();
    let ok = m2n.all_pass() && bool_scalars.all_pass() && bool_m2.all_pass();
    if !ok {
        eprintln!("{}\n{}\n{}", m2n, bool_scalars, bool_m2);
    }
    verdict_line("criterion-2 Leibniz identities", ok);
}

#[test]
fn criterion_3_doubling() {
    let mut ok = true;
    let mut log = String::new();

    // switch ∘ switch = identity on sampled elements
    let mut rng = SplitMix64::new(31);
    for _ in 0..100 {
        let x = DoubledElement::new(nat(&[rng.below(50)]), nat(&[rng.below(50)])).unwrap();
        if switch(&switch(&x)) != x {
            ok = false;
        }
    }

    // the twist product against an independently coded oracle
    let table = ProductTable::new(
        1,
        vec![vec![ModuleElement::basis(&SemiringSpec::Naturals, 1, 0)]],
    )
    .unwrap();
    let oracle = |x: (u64, u64), y: (u64, u64)| (x.0 * y.0 + x.1 * y.1, x.0 * y.1 + x.1 * y.0);
    let mut rng = SplitMix64::new(53);
    for _ in 0..100 {
        let x = (rng.below(30), rng.below(30));
        let y = (rng.below(30), rng.below(30));
        let got = double_mul(
            &DoubledElement::new(nat(&[x.0]), nat(&[x.1])).unwrap(),
            &DoubledElement::new(nat(&[y.0]), nat(&[y.1])).unwrap(),
            &table,
        )
        .unwrap();
        let want = oracle(x, y);
        if got.pos != nat(&[want.0]) || got.neg != nat(&[want.1]) {
            ok = false;
        }
    }

    // grading exhaustively over boolean doubled bases
    let bspec = SemiringSpec::Booleans;
    for rank in [1usize, 2] {
        let mut entries = vec![vec![ModuleElement::zero(&bspec, rank); rank]; rank];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                // a nontrivial boolean product: e_i e_j = e_max(i,j)
                *cell = ModuleElement::basis(&bspec, rank, i.max(j));
            }
        }
        let product = ProductTable::new(rank, entries).unwrap();
        let grading = check_grading(&product).unwrap();
        ok &= clean(&grading, &format!("grading rank {}", rank), &mut log);
    }

    // identity transfer on the filiform and Heisenberg pairs
    for (name, lp) in [
        ("filiform", filiform_standard()),
        ("heisenberg", heisenberg()),
    ] {
        for identity in [
            MultilinearIdentity::antisymmetry(),
            MultilinearIdentity::jacobi(),
        ] {
            let report = transfer_identities(&lp, &identity, NullMode::Sum, BOUND).unwrap();
            ok &= clean(&report, &format!("{} {}", name, identity.name), &mut log);
        }
    }

    // doubled pairs pass the axioms and the Jacobi surpassing identity
    for (name, lp) in [
        ("filiform", filiform_standard()),
        ("heisenberg", heisenberg()),
    ] {
        let d = double_lie(&lp, NullMode::Sum, BOUND).unwrap();
        ok &= clean(&d.report, &format!("double {}", name), &mut log);
        let preceq = check_jacobi_preceq(&d.lp, BOUND).unwrap();
        ok &= clean(&preceq, &format!("double {} jacobi-preceq", name), &mut log);
    }
    // the doubled semiring bracket over the naturals and the booleans
    for (name, spec) in [
        ("naturals", SemiringSpec::Naturals),
        ("booleans", SemiringSpec::Booleans),
    ] {
        let pair = PairDef::new(
            BasePair::zero_only(spec.clone()),
            1,
            NullModel::Span(Submodule::zero(1)),
        )
        .unwrap();
        let table = ProductTable::new(1, vec![vec![ModuleElement::basis(&spec, 1, 0)]]).unwrap();
        let d = double_semiring_lie(&pair, &table, NullMode::Sum, BOUND).unwrap();
        ok &= clean(&d.report, &format!("double semiring {}", name), &mut log);
        let preceq = check_jacobi_preceq(&d.lp, BOUND).unwrap();
        ok &= clean(
            &preceq,
            &format!("double semiring {} jacobi-preceq", name),
            &mut log,
        );
    }

    if !log.is_empty() {
        eprintln!("{}", log);
    }
    verdict_line("criterion-3 doubling", ok);
}

#[test]
fn criterion_4_membership_oracles() {
    let mut ok = true;

    // naturals: seeded generator sets with entries ≤ 3 at ranks 1..3,
    // all queries with entries ≤ 6, против brute-force enumeration
    fn brute_force_nat(gens: &[ModuleElement], v: &ModuleElement) -> bool {
        // coefficients up to the max query entry suffice: any generator has
        // an entry ≥ 1 wherever it is nonzero
        let cap = 6u64;
        let k = gens.len();
        let mut idx = vec![0u64; k];
        loop {
            let mut acc = ModuleElement::zero(&v.spec, v.rank());
            for (i, g) in gens.iter().enumerate() {
                acc = acc.add(&g.scale(&Scalar::nat(idx[i])).unwrap()).unwrap();
            }
            if acc == *v {
                return true;
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    return false;
                }
                idx[pos] += 1;
                if idx[pos] <= cap {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }

    let mut rng = SplitMix64::new(404);
    let mut disagreements = 0usize;
    for rank in 1usize..=3 {
        for _ in 0..20 {
            let gen_count = 1 + rng.below(3) as usize;
            let gens: Vec<ModuleElement> = (0..gen_count)
                .map(|_| {
                    ModuleElement::new(
                        SemiringSpec::Naturals,
                        (0..rank).map(|_| Scalar::nat(rng.below(4))).collect(),
                    )
                    .unwrap()
                })
                .collect();
            let sub = Submodule::closed(rank, gens.clone());
            let mut query = vec![0u64; rank];
            loop {
                let v = nat(&query);
                let fast = submodule_membership(&sub, &v, BOUND).unwrap().is_in();
                let slow = brute_force_nat(&gens, &v);
                if fast != slow {
                    disagreements += 1;
                }
                let mut pos = 0;
                loop {
                    if pos == rank {
                        break;
                    }
                    query[pos] += 1;
                    if query[pos] <= 6 {
                        break;
                    }
                    query[pos] = 0;
                    pos += 1;
                }
                if query.iter().all(|&q| q == 0) {
                    break;
                }
            }
        }
    }
    if disagreements > 0 {
        eprintln!("naturals: {} disagreements", disagreements);
        ok = false;
    }

    // max-plus: residuation against brute force over a rational grid,
    // 500 seeded instances
    let mp = |v: i64| Scalar::maxplus(v, 1);
    let mut rng = SplitMix64::new(505);
    let mut disagreements = 0usize;
    for _ in 0..500 {
        let rank = 2usize;
        let gen_count = 1 + rng.below(2) as usize;
        let gens: Vec<ModuleElement> = (0..gen_count)
            .map(|_| {
                ModuleElement::new(
                    SemiringSpec::MaxPlus,
                    (0..rank)
                        .map(|_| {
                            if rng.below(5) == 0 {
                                Scalar::maxplus_bottom()
                            } else {
                                mp(rng.below(5) as i64 - 2)
                            }
                        })
                        .collect(),
                )
                .unwrap()
            })
            .collect();
        let sub = Submodule::closed(rank, gens.clone());
        let v = ModuleElement::new(
            SemiringSpec::MaxPlus,
            (0..rank)
                .map(|_| {
                    if rng.below(6) == 0 {
                        Scalar::maxplus_bottom()
                    } else {
                        mp(rng.below(7) as i64 - 3)
                    }
                })
                .collect(),
        )
        .unwrap();
        let fast = submodule_membership(&sub, &v, BOUND).unwrap().is_in();
        // brute force: coefficients from a grid wide enough to cover any
        // witness for entries in [-3, 3] against generators in [-2, 2]
        let grid: Vec<Scalar> = (-6..=6)
            .map(mp)
            .chain(std::iter::once(Scalar::maxplus_bottom()))
            .collect();
        let mut slow = false;
        let mut coeffs = vec![0usize; gen_count];
        'outer: loop {
            let mut acc = ModuleElement::zero(&SemiringSpec::MaxPlus, rank);
            for (i, g) in gens.iter().enumerate() {
                acc = acc.add(&g.scale(&grid[coeffs[i]]).unwrap()).unwrap();
            }
            if acc == v {
                slow = true;
                break;
            }
            let mut pos = 0;
            loop {
                if pos == gen_count {
                    break 'outer;
                }
                coeffs[pos] += 1;
                if coeffs[pos] < grid.len() {
                    break;
                }
                coeffs[pos] = 0;
                pos += 1;
            }
        }
        if fast != slow {
            disagreements += 1;
        }
    }
    if disagreements > 0 {
        eprintln!("max-plus: {} disagreements", disagreements);
        ok = false;
    }

    verdict_line("criterion-4 membership oracle cross-validation", ok);
}

#[test]
fn criterion_5_pbw_weak() {
    let mut ok = true;
    // rank-2 and rank-3 free (abelian) pairs over the naturals at D = 3
    for rank in [2usize, 3] {
        let spec = SemiringSpec::Naturals;
        let zero = ModuleElement::zero(&spec, rank);
        let sc = StructureConstants::new(rank, vec![vec![zero; rank]; rank]).unwrap();
        let pair = PairDef::new(
            BasePair::zero_only(spec),
            rank,
            NullModel::Span(Submodule::zero(rank)),
        )
        .unwrap();
        let lp = LiePairDef::new(pair, sc, LieFlags::default()).unwrap();
        let psi = NegationSpec::scalar(Scalar::nat(1), false);
        let (_, report) = pbw_weak(&lp, &psi, 3, BOUND).unwrap();
        let established = report
            .items
            .iter()
            .any(|i| i.axiom == "pbw-weak-inject" && i.verdict.is_pass());
        if !established || report.fail_count() > 0 {
            eprintln!("rank {}:\n{}", rank, report);
            ok = false;
        }
    }
    // over the integers the check is skipped behind the LZS gate
    {
        let spec = SemiringSpec::Integers;
        let zero = ModuleElement::zero(&spec, 2);
        let sc = StructureConstants::new(2, vec![vec![zero; 2]; 2]).unwrap();
        let pair = PairDef::new(
            BasePair::zero_only(spec),
            2,
            NullModel::Span(Submodule::zero(2)),
        )
        .unwrap();
        let lp = LiePairDef::new(pair, sc, LieFlags::default()).unwrap();
        let psi = NegationSpec::scalar(Scalar::int(-1), true);
        let (_, report) = pbw_weak(&lp, &psi, 3, BOUND).unwrap();
        let skipped = report
            .items
            .iter()
            .any(|i| i.axiom == "pbw-weak-inject-skipped");
        let not_claimed = !report.items.iter().any(|i| i.axiom == "pbw-weak-inject");
        if !(skipped && not_claimed) {
            eprintln!("integers:\n{}", report);
            ok = false;
        }
    }
    // LZS verdicts behind the gate
    ok &= check_lzs(&SemiringSpec::Naturals).0;
    ok &= !check_lzs(&SemiringSpec::Integers).0;

    verdict_line("criterion-5 PBW weak injectivity", ok);
}

#[test]
fn criterion_6_pbw_preceq() {
    let mut ok = true;
    let mut log = String::new();
    let mut pairs: Vec<(String, LiePairDef)> = catalog_low_dim(BOUND)
        .unwrap()
        .into_iter()
        .map(|e| (e.name.to_string(), e.built.lp))
        .collect();
    pairs.push(("eps-filiform".into(), eps_filiform()));
    for (name, lp) in &pairs {
        match pbw_preceq(lp, 3, BOUND) {
            Ok(out) => {
                if !out.report.all_pass() {
                    ok = false;
                    let _ = writeln!(log, "  {}:\n{}", name, out.report);
                }
                // the step bound is part of the report; double-check the
                // binomial bound explicitly on the top-degree monomials
                let env = PreceqEnvelope::new(lp, 3);
                let one = lp.base().spec.one();
                let n = lp.rank();
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            let w = FlatWord(vec![Letter::X(a), Letter::X(b), Letter::X(c)]);
                            let steps = env
                                .rewrite_word(w, one.clone(), None)
                                .map(|r| r.top_steps)
                                .unwrap_or(usize::MAX);
                            if steps > 3 {
                                ok = false;
                                let _ =
                                    writeln!(log, "  {}: monomial exceeded the step bound", name);
                            }
                        }
                    }
                }
            }
            Err(e) => {
                ok = false;
                let _ = writeln!(log, "  {}: {}", name, e);
            }
        }
    }
    if !log.is_empty() {
        eprintln!("{}", log);
    }
    verdict_line("criterion-6 PBW preceq rewriting and overlaps", ok);
}

#[test]
fn criterion_7_pbw_eps() {
    let mut ok = true;
    let mut log = String::new();
    let lp = eps_filiform();

    // Eq. (eq:ep2) on all degree-≤3 monomial pairs, and the surpassing
    // reduction on all basis triples, are part of the report
    let out = pbw_eps(&lp, &Scalar::nat(1), 3, None, BOUND).unwrap();
    if !out.report.all_pass() {
        ok = false;
        let _ = writeln!(log, "  base report:\n{}", out.report);
    }
    if !out.report.items.iter().any(|i| i.axiom == "pbw-eps-ep2") {
        ok = false;
    }
    if !out
        .report
        .items
        .iter()
        .any(|i| i.axiom == "pbw-eps-reduction")
    {
        ok = false;
    }

    // a hand-built f satisfying the bracket condition factors through ι:
    // the Heisenberg representation x1 ↦ E12, x2 ↦ E23, x3 ↦ E13 in M3(N)
    let spec = SemiringSpec::Naturals;
    let e = |a: usize, b: usize| {
        ModuleElement::basis(
            &spec,
            9,
            tropical_lie_core::constructions::unit_index(3, a, b),
        )
    };
    let good = EpsTarget {
        matrix_size: 3,
        images: vec![e(0, 1), e(1, 2), e(0, 2)],
    };
    let out = pbw_eps(&lp, &Scalar::nat(1), 3, Some(&good), BOUND).unwrap();
    if !out.report.all_pass() || out.factorization.is_none() {
        ok = false;
        let _ = writeln!(log, "  factorization report:\n{}", out.report);
    }

    // a planted violation is rejected with a correct witness pair
    let bad = EpsTarget {
        matrix_size: 3,
        images: vec![e(0, 1), e(1, 2), e(0, 0)],
    };
    let out = pbw_eps(&lp, &Scalar::nat(1), 3, Some(&bad), BOUND).unwrap();
    let witness = out
        .report
        .failures()
        .find(|i| i.axiom == "pbw-eps-fix")
        .map(|i| i.index.clone());
    if witness != Some(vec![1, 2]) || out.factorization.is_some() {
        ok = false;
        let _ = writeln!(log, "  planted violation report:\n{}", out.report);
    }

    if !log.is_empty() {
        eprintln!("{}", log);
    }
    verdict_line("criterion-7 PBW eps", ok);
}

#[test]
fn criterion_8_krasner() {
    let start = Instant::now();
    let (pm, report) = build_krasner(&f2_matrix_model()).unwrap();
    let ok = report.all_pass()
        && report.inconclusive_count() == 0
        && pm.coset_count() == 16
        && report.items.iter().any(|i| i.axiom == "krasner-submult")
        && start.elapsed().as_secs() < 60;
    if !ok {
        eprintln!("elapsed {:?}\n{}", start.elapsed(), report);
    }
    verdict_line("criterion-8 Krasner model", ok);
}

#[test]
fn criterion_9_negative_controls() {
    use tropical_lie::pairfile;

    let dir = std::env::temp_dir().join("tropical-lie-negative-controls");
    std::fs::create_dir_all(&dir).unwrap();

    // each control: a passing fixture, a single-constant mutation, and the
    // axiom id expected to catch it
    struct Control {
        name: &'static str,
        mutate: Box<dyn Fn(&mut pairfile::PairFile)>,
        expect_axiom: &'static str,
    }

    let filiform_file = || pairfile::from_lie_pair(&filiform_standard(), None);
    let heisenberg_file = || pairfile::from_lie_pair(&heisenberg(), None);
    let eps_filiform_file = || pairfile::from_lie_pair(&eps_filiform(), None);
    let cross_file = || {
        let zbase = BasePair::zero_only(SemiringSpec::Integers);
        let c = [int(&[-1, 0, 0]), int(&[0, -1, 0]), int(&[0, 0, -1])];
        let d = [int(&[0, 0, 0]), int(&[0, 0, 0]), int(&[0, 0, 0])];
        pairfile::from_lie_pair(
            &build_cross_product(&zbase, &c, &d, BOUND).unwrap().lp,
            None,
        )
    };
    let sl2_file = || {
        let cp = build_classical(
            ClassicalFamily::Sl,
            2,
            &nat_base_2n(),
            &Scalar::nat(1),
            BOUND,
        )
        .unwrap();
        pairfile::from_lie_pair(&cp.lp, None)
    };

    let controls: Vec<(Control, pairfile::PairFile)> = vec![
        (
            Control {
                name: "filiform-diag",
                mutate: Box::new(|f| {
                    f.sc.as_mut().unwrap()[0][0][0] = Scalar::nat(1);
                }),
                expect_axiom: "fgen-1",
            },
            filiform_file(),
        ),
        (
            Control {
                name: "filiform-antisym",
                mutate: Box::new(|f| {
                    f.sc.as_mut().unwrap()[0][1][1] = Scalar::nat(1);
                }),
                expect_axiom: "fgen-2",
            },
            filiform_file(),
        ),
        (
            Control {
                name: "filiform-null-gen",
                mutate: Box::new(|f| {
                    f.null_generators[0][2] = Scalar::nat(3);
                }),
                expect_axiom: "fgen-2",
            },
            filiform_file(),
        ),
        (
            Control {
                name: "heisenberg-bracket",
                mutate: Box::new(|f| {
                    // [x z1] = z1 becomes x itself
                    f.sc.as_mut().unwrap()[0][2][0] = Scalar::nat(1);
                    f.sc.as_mut().unwrap()[0][2][2] = Scalar::nat(0);
                }),
                expect_axiom: "fgen-2",
            },
            heisenberg_file(),
        ),
        (
            Control {
                name: "heisenberg-null-closure",
                mutate: Box::new(|f| {
                    // [z1 z2] = x escapes the null span: lie-f catches it
                    f.sc.as_mut().unwrap()[2][3][0] = Scalar::nat(1);
                }),
                expect_axiom: "lie-f",
            },
            heisenberg_file(),
        ),
        (
            Control {
                name: "cross-product-entry",
                mutate: Box::new(|f| {
                    f.sc.as_mut().unwrap()[0][1][2] = Scalar::int(2);
                }),
                expect_axiom: "fgen-2",
            },
            cross_file(),
        ),
        (
            Control {
                name: "cross-product-diag",
                mutate: Box::new(|f| {
                    f.sc.as_mut().unwrap()[1][1][0] = Scalar::int(1);
                }),
                expect_axiom: "fgen-1",
            },
            cross_file(),
        ),
        (
            Control {
                name: "sl2-entry",
                mutate: Box::new(|f| {
                    // plant an odd coefficient in a diagonal bracket
                    f.sc.as_mut().unwrap()[0][0][0] = Scalar::nat(1);
                }),
                expect_axiom: "fgen-1",
            },
            sl2_file(),
        ),
        (
            Control {
                name: "eps-filiform-bracket",
                mutate: Box::new(|f| {
                    // [x1 x2] = 2x3: the antisymmetry sum 3x3 is odd
                    f.sc.as_mut().unwrap()[0][1][2] = Scalar::nat(2);
                }),
                expect_axiom: "fgen-2",
            },
            eps_filiform_file(),
        ),
        (
            Control {
                name: "dim2-bracket",
                mutate: Box::new(|f| {
                    // [xx] = y becomes [xx] = x
                    f.sc.as_mut().unwrap()[0][0][0] = Scalar::nat(1);
                    f.sc.as_mut().unwrap()[0][0][1] = Scalar::nat(0);
                }),
                expect_axiom: "fgen-1",
            },
            {
                let entries = catalog_low_dim(BOUND).unwrap();
                let e = entries.iter().find(|e| e.name == "dim2-yy-zero").unwrap();
                pairfile::from_lie_pair(&e.built.lp, None)
            },
        ),
    ];

    let mut ok = true;
    assert_eq!(controls.len(), 10);
    for (i, (control, mut file)) in controls.into_iter().enumerate() {
        // the unmutated fixture passes
        let clean_path = dir.join(format!("control-{}-clean.pair", i));
        std::fs::write(&clean_path, pairfile::render(&file)).unwrap();
        let mut out = Vec::new();
        let code = tropical_lie::run(
            &["check".to_string(), clean_path.display().to_string()],
            &mut out,
        );
        if code != 0 {
            eprintln!(
                "control {} clean fixture did not pass: exit {}\n{}",
                control.name,
                code,
                String::from_utf8_lossy(&out)
            );
            ok = false;
            continue;
        }
        // the mutated fixture fails with the expected witness
        (control.mutate)(&mut file);
        let path = dir.join(format!("control-{}.pair", i));
        std::fs::write(&path, pairfile::render(&file)).unwrap();
        let mut out = Vec::new();
        let code = tropical_lie::run(&["check".to_string(), path.display().to_string()], &mut out);
        let text = String::from_utf8_lossy(&out);
        let witnessed = text
            .lines()
            .any(|l| l.starts_with(control.expect_axiom) && l.contains(" fail "));
        if code != 1 || !witnessed {
            eprintln!(
                "control {}: exit {}, expected axiom {}\n{}",
                control.name, code, control.expect_axiom, text
            );
            ok = false;
        }
    }
    verdict_line("criterion-9 negative controls", ok);
}
