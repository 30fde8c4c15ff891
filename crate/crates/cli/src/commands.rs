//! Command implementations. Exit codes: 0 all checks pass, 1 at least one
//! fail, 2 inconclusive entries only, 3 structural error (parse failure,
//! malformed input, construction precondition).

use std::fs;
use std::io::Write;

use tropical_lie_core::constructions::{
    self, build_classical, build_cross_product, build_filiform, build_involution_pair,
    build_psi_commutator, catalog_low_dim, ClassicalFamily, Involution, MatrixAlgebraPair,
};
use tropical_lie_core::doubling::{double_lie, NullMode};
use tropical_lie_core::krasner::build_krasner;
use tropical_lie_core::lie::{
    check_dagger_reversibility, check_l0_reversibility, check_l0_symmetry, check_lie_axioms,
};
use tropical_lie_core::module_pairs::{ModuleElement, NegationSpec};
use tropical_lie_core::pbw::{
    free_preceq_lie, pbw_eps, pbw_preceq, pbw_weak, EpsTarget, PbwPresentation,
};
use tropical_lie_core::report::CheckReport;
use tropical_lie_core::semiring::{BasePair, CNull, Error, FiniteTable, SemiringSpec};

use crate::pairfile::{self, DoubledInfo, KrasnerSection, MapFile, PairFile};

pub struct Options {
    pub membership_bound: usize,
    pub degree: usize,
    pub seed: u64,
    pub null_mode: NullMode,
    pub out: Option<String>,
    pub rest: Vec<String>,
}

pub fn split_options(args: &[String]) -> Result<Options, Error> {
    let mut opts = Options {
        membership_bound: 32,
        degree: 3,
        seed: 2024,
        null_mode: NullMode::Sum,
        out: None,
        rest: Vec::new(),
    };
    let mut it = args.iter().peekable();
    while let Some(a) = it.next() {
        let mut take = |name: &str| -> Result<String, Error> {
            it.next()
                .cloned()
                .ok_or_else(|| Error::Parse(format!("missing value for {}", name)))
        };
        match a.as_str() {
            "--membership-bound" => {
                opts.membership_bound = take("--membership-bound")?
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad bound: {}", e)))?;
            }
            "--degree" => {
                opts.degree = take("--degree")?
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad degree: {}", e)))?;
            }
            "--seed" => {
                opts.seed = take("--seed")?
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad seed: {}", e)))?;
            }
            "--null-mode" => {
                opts.null_mode = match take("--null-mode")?.as_str() {
                    "diag" => NullMode::Diag,
                    "sum" => NullMode::Sum,
                    other => return Err(Error::Parse(format!("unknown null mode `{}`", other))),
                };
            }
            "-o" | "--out" => {
                opts.out = Some(take("-o")?);
            }
            _ => opts.rest.push(a.clone()),
        }
    }
    Ok(opts)
}

fn value_of(rest: &[String], name: &str) -> Option<String> {
    rest.iter()
        .position(|a| a == name)
        .and_then(|i| rest.get(i + 1).cloned())
}

fn exit_code(report: &CheckReport) -> i32 {
    if report.fail_count() > 0 {
        1
    } else if report.inconclusive_count() > 0 {
        2
    } else {
        0
    }
}

fn print_report(out: &mut dyn Write, report: &CheckReport) {
    for item in &report.items {
        let _ = writeln!(out, "{}", item);
    }
}

pub fn cmd_check(out: &mut dyn Write, opts: &Options) -> i32 {
    let Some(path) = opts.rest.first() else {
        let _ = writeln!(out, "error: check needs a pair file");
        return 3;
    };
    match check_file(path, opts) {
        Ok(report) => {
            print_report(out, &report);
            exit_code(&report)
        }
        Err(e) => {
            let _ = writeln!(out, "error: {}", e);
            3
        }
    }
}

fn check_file(path: &str, opts: &Options) -> Result<CheckReport, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {}", path, e)))?;
    let pf = pairfile::parse(&text)?;
    if let Some(model) = pf.krasner_model()? {
        let (_, report) = build_krasner(&model)?;
        return Ok(report);
    }
    // semiring law verification: exhaustive for finite carriers, a seeded
    // sample otherwise; a violated law in a user-supplied table is a
    // structural error, not an axiom failure
    let laws = tropical_lie_core::semiring::verify_semiring_laws(&pf.spec, 200, opts.seed);
    if pf.spec.is_finite() && !laws.all_pass() {
        let witness = laws.failures().next().unwrap();
        return Err(Error::MalformedTable(format!(
            "semiring law {} fails at {}",
            witness.axiom,
            match &witness.verdict {
                tropical_lie_core::report::Verdict::Fail(w) => w.clone(),
                _ => String::new(),
            }
        )));
    }
    let lp = pf.lie_pair()?;
    let mut report = CheckReport::new();
    for item in laws.items {
        report.items.push(tropical_lie_core::report::CheckItem {
            axiom: format!("law-{}", item.axiom),
            index: item.index,
            verdict: item.verdict,
        });
    }
    report.extend(check_lie_axioms(&lp, opts.membership_bound)?);
    if pf.flags.dagger_reversible {
        report.extend(check_dagger_reversibility(&lp)?);
    }
    if pf.flags.l0_reversible {
        report.extend(check_l0_reversibility(&lp, &[], opts.membership_bound)?);
    }
    if pf.flags.l0_symmetric {
        report.extend(check_l0_symmetry(&lp)?);
    }
    if let Some(psi) = &pf.negation {
        report.extend(
            tropical_lie_core::module_pairs::verify_pre_negation(
                &lp.pair,
                psi,
                Some(&lp.sc),
                opts.membership_bound,
            )?
            .items
            .into_iter()
            .fold(CheckReport::new(), |mut r, item| {
                r.items.push(item);
                r
            }),
        );
    }
    report.sort();
    Ok(report)
}

fn parse_base(rest: &[String]) -> Result<BasePair, Error> {
    let spec = match value_of(rest, "--base").as_deref() {
        None | Some("nat") => SemiringSpec::Naturals,
        Some("bool") => SemiringSpec::Booleans,
        Some("int") => SemiringSpec::Integers,
        Some("qplus") => SemiringSpec::NonnegRationals,
        Some("maxplus") => SemiringSpec::MaxPlus,
        Some(other) => return Err(Error::Parse(format!("unknown base `{}`", other))),
    };
    let c0 = match value_of(rest, "--c0") {
        None => CNull::ZeroOnly,
        Some(v) => match v.split_once(':') {
            Some(("principal", lit)) => CNull::PrincipalMultiple(spec.parse_scalar(lit)?),
            None if v == "zero" => CNull::ZeroOnly,
            _ => return Err(Error::Parse(format!("unknown c0 `{}`", v))),
        },
    };
    BasePair::new(spec, c0)
}

fn parse_vectors(
    spec: &SemiringSpec,
    text: &str,
    rank: usize,
) -> Result<Vec<ModuleElement>, Error> {
    text.split(';')
        .map(|part| {
            let coeffs = part
                .split(',')
                .map(|w| spec.parse_scalar(w.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            if coeffs.len() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    got: coeffs.len(),
                });
            }
            ModuleElement::new(spec.clone(), coeffs)
        })
        .collect()
}

pub fn cmd_construct(out: &mut dyn Write, opts: &Options) -> i32 {
    match construct(opts) {
        Ok((file, report)) => {
            let text = pairfile::render(&file);
            if let Some(path) = &opts.out {
                if let Err(e) = fs::write(path, &text) {
                    let _ = writeln!(out, "error: {}: {}", path, e);
                    return 3;
                }
            } else {
                let _ = write!(out, "{}", text);
            }
            print_report(out, &report);
            exit_code(&report)
        }
        Err(e) => {
            let _ = writeln!(out, "error: {}", e);
            3
        }
    }
}

fn construct(opts: &Options) -> Result<(PairFile, CheckReport), Error> {
    let rest = &opts.rest;
    let family = rest
        .first()
        .ok_or_else(|| Error::Parse("construct needs a family".into()))?;
    let bound = opts.membership_bound;
    match family.as_str() {
        "cross-product" => {
            let base = parse_base(rest)?;
            let c = parse_vectors(
                &base.spec,
                &value_of(rest, "--c").ok_or_else(|| Error::Parse("missing --c".into()))?,
                3,
            )?;
            let d = parse_vectors(
                &base.spec,
                &value_of(rest, "--d").ok_or_else(|| Error::Parse("missing --d".into()))?,
                3,
            )?;
            if c.len() != 3 || d.len() != 3 {
                return Err(Error::Parse("--c and --d need three vectors each".into()));
            }
            let built = build_cross_product(
                &base,
                &[c[0].clone(), c[1].clone(), c[2].clone()],
                &[d[0].clone(), d[1].clone(), d[2].clone()],
                bound,
            )?;
            Ok((pairfile::from_lie_pair(&built.lp, None), built.report))
        }
        "bilinear" => {
            let base = parse_base(rest)?;
            let n: usize = value_of(rest, "--n")
                .ok_or_else(|| Error::Parse("missing --n".into()))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad --n: {}", e)))?;
            let rows = value_of(rest, "--entries")
                .ok_or_else(|| Error::Parse("missing --entries".into()))?;
            let mut entries = Vec::new();
            for row in rows.split('|') {
                let cells = row
                    .split(';')
                    .map(|cell| {
                        let coeffs = cell
                            .split(',')
                            .map(|w| base.spec.parse_scalar(w.trim()))
                            .collect::<Result<Vec<_>, _>>()?;
                        ModuleElement::new(base.spec.clone(), coeffs)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                entries.push(cells);
            }
            let built = tropical_lie_core::constructions::build_bilinear_form_pair(
                n, entries, &base, bound,
            )?;
            Ok((pairfile::from_lie_pair(&built.lp, None), built.report))
        }
        "filiform" => {
            let base = parse_base(rest)?;
            let n: usize = value_of(rest, "--n")
                .map(|v| v.parse().unwrap_or(3))
                .unwrap_or(3);
            let mut overrides = Vec::new();
            if let Some(spec_text) = value_of(rest, "--overrides") {
                // i,j:c1,c2,... pairs separated by ';'
                for part in spec_text.split(';') {
                    let (ij, coeffs) = part
                        .split_once(':')
                        .ok_or_else(|| Error::Parse(format!("bad override `{}`", part)))?;
                    let (i, j) = ij
                        .split_once(',')
                        .ok_or_else(|| Error::Parse(format!("bad override index `{}`", ij)))?;
                    let i: usize = i
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad index: {}", e)))?;
                    let j: usize = j
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad index: {}", e)))?;
                    let v = parse_vectors(&base.spec, coeffs, n)?;
                    overrides.push((i, j, v[0].clone()));
                }
            }
            let built = build_filiform(n, &base, &overrides, bound)?;
            Ok((pairfile::from_lie_pair(&built.lp, None), built.report))
        }
        "classical" => {
            let base = parse_base(rest)?;
            let fam = match value_of(rest, "--family").as_deref() {
                Some("sl") => ClassicalFamily::Sl,
                Some("so-odd") => ClassicalFamily::SoOdd,
                Some("so-even") => ClassicalFamily::SoEven,
                Some("sp") => ClassicalFamily::Sp,
                other => return Err(Error::Parse(format!("unknown family {:?}", other))),
            };
            let n: usize = value_of(rest, "--n")
                .ok_or_else(|| Error::Parse("missing --n".into()))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad --n: {}", e)))?;
            let eps = base.spec.parse_scalar(
                &value_of(rest, "--eps").ok_or_else(|| Error::Parse("missing --eps".into()))?,
            )?;
            let cp = build_classical(fam, n, &base, &eps, bound)?;
            Ok((pairfile::from_lie_pair(&cp.lp, None), cp.report))
        }
        "psi-commutator" => {
            let base = parse_base(rest)?;
            let size: usize = value_of(rest, "--size")
                .map(|v| v.parse().unwrap_or(2))
                .unwrap_or(2);
            let eps = base.spec.parse_scalar(
                &value_of(rest, "--eps").ok_or_else(|| Error::Parse("missing --eps".into()))?,
            )?;
            let rank = size * size;
            let m = match &base.null {
                CNull::PrincipalMultiple(m) => Some(m.clone()),
                _ => None,
            };
            let alg = MatrixAlgebraPair::principal(base.clone(), size, m.as_ref())?;
            let gens = alg.null_generators.clone();
            let pair = tropical_lie_core::PairDef::new(
                base.clone(),
                rank,
                tropical_lie_core::NullModel::Span(tropical_lie_core::Submodule::closed(
                    rank, gens,
                )),
            )?;
            let product = constructions::matrix_product_table(&base.spec, size);
            let order_two = base.spec.mul(&eps, &eps)? == base.spec.one();
            let psi = NegationSpec::scalar(eps, order_two);
            let built = build_psi_commutator(&pair, &product, &psi, bound)?;
            let mut file = pairfile::from_lie_pair(&built.lp, None);
            file.negation = Some(psi);
            Ok((file, built.report))
        }
        "pre-lie" => {
            // a bimagma product table with the same cell syntax as bilinear:
            // rows separated by |, cells by ;, coefficients by ,
            let base = parse_base(rest)?;
            let n: usize = value_of(rest, "--n")
                .ok_or_else(|| Error::Parse("missing --n".into()))?
                .parse()
                .map_err(|e| Error::Parse(format!("bad --n: {}", e)))?;
            let rows =
                value_of(rest, "--product").ok_or_else(|| Error::Parse("missing --product".into()))?;
            let mut entries = Vec::new();
            for row in rows.split('|') {
                let cells = row
                    .split(';')
                    .map(|cell| {
                        let coeffs = cell
                            .split(',')
                            .map(|w| base.spec.parse_scalar(w.trim()))
                            .collect::<Result<Vec<_>, _>>()?;
                        ModuleElement::new(base.spec.clone(), coeffs)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                entries.push(cells);
            }
            let product = tropical_lie_core::ProductTable::new(n, entries)?;
            let eps = base.spec.parse_scalar(
                &value_of(rest, "--eps").ok_or_else(|| Error::Parse("missing --eps".into()))?,
            )?;
            let order_two = base.spec.mul(&eps, &eps)? == base.spec.one();
            let psi = NegationSpec::scalar(eps, order_two);
            // the input pair carries the C0-span null
            let c0_gens: Vec<ModuleElement> = match &base.null {
                CNull::PrincipalMultiple(m) => (0..n)
                    .map(|i| ModuleElement::basis(&base.spec, n, i).scale(m))
                    .collect::<Result<Vec<_>, _>>()?,
                CNull::ZeroOnly => vec![],
                _ => {
                    return Err(Error::Parse(
                        "pre-lie needs a zero or principal c0".into(),
                    ))
                }
            };
            let pair = tropical_lie_core::PairDef::new(
                base.clone(),
                n,
                tropical_lie_core::NullModel::Span(tropical_lie_core::Submodule::closed(
                    n, c0_gens,
                )),
            )?;
            let built =
                tropical_lie_core::constructions::build_pre_lie(&pair, &product, &psi, bound)?;
            let mut file = pairfile::from_lie_pair(&built.lp, None);
            file.negation = Some(psi);
            Ok((file, built.report))
        }
        "involution" => {
            let base = parse_base(rest)?;
            let size: usize = value_of(rest, "--size")
                .map(|v| v.parse().unwrap_or(2))
                .unwrap_or(2);
            let inv = match value_of(rest, "--inv").as_deref() {
                None | Some("transpose") => Involution::Transpose,
                Some("jtranspose") => {
                    let eps = base.spec.parse_scalar(
                        &value_of(rest, "--eps")
                            .ok_or_else(|| Error::Parse("jtranspose needs --eps".into()))?,
                    )?;
                    Involution::JTranspose { eps }
                }
                Some(other) => return Err(Error::Parse(format!("unknown involution `{}`", other))),
            };
            let eps = match value_of(rest, "--bracket-eps") {
                None => None,
                Some(v) => Some(base.spec.parse_scalar(&v)?),
            };
            let alg = MatrixAlgebraPair::principal(base, size, None)?;
            let built = build_involution_pair(&alg, &inv, eps.as_ref(), bound)?;
            let mut file = pairfile::from_lie_pair(&built.lp, None);
            file.involution = Some(match inv {
                Involution::Transpose => "transpose".into(),
                Involution::JTranspose { .. } => "jtranspose".into(),
            });
            Ok((file, built.report))
        }
        "krasner" => {
            let table_arg =
                value_of(rest, "--table").ok_or_else(|| Error::Parse("missing --table".into()))?;
            let table = if table_arg == "f2m2" {
                tropical_lie_core::semiring::f2_matrix_table()
            } else {
                let text = fs::read_to_string(&table_arg)
                    .map_err(|e| Error::Parse(format!("{}: {}", table_arg, e)))?;
                FiniteTable::parse(&text)?
            };
            let table = std::sync::Arc::new(table);
            let group: Vec<usize> = match value_of(rest, "--G").as_deref() {
                None | Some("identity") => vec![table.one],
                Some(list) => list
                    .split(',')
                    .map(|w| w.trim().parse())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| Error::Parse(format!("bad --G: {}", e)))?,
            };
            let eps: usize = match value_of(rest, "--eps") {
                None => table.one,
                Some(v) => v
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad --eps: {}", e)))?,
            };
            let star: Option<Vec<usize>> = match value_of(rest, "--star") {
                None => None,
                Some(list) => Some(
                    list.split(',')
                        .map(|w| w.trim().parse())
                        .collect::<Result<Vec<usize>, _>>()
                        .map_err(|e| Error::Parse(format!("bad --star: {}", e)))?,
                ),
            };
            let ideal = match value_of(rest, "--ideal") {
                None => None,
                Some(list) => Some(
                    list.split(',')
                        .map(|w| w.trim().parse())
                        .collect::<Result<Vec<usize>, _>>()
                        .map_err(|e| Error::Parse(format!("bad --ideal: {}", e)))?,
                ),
            };
            let bracket = match &star {
                None => tropical_lie_core::krasner::KrasnerBracket::Eps { eps },
                Some(perm) => {
                    tropical_lie_core::krasner::KrasnerBracket::Involution { star: perm.clone() }
                }
            };
            let model = tropical_lie_core::krasner::KrasnerModel {
                table: table.clone(),
                group: group.clone(),
                bracket,
                null: match &ideal {
                    None => tropical_lie_core::krasner::KrasnerNull::Zero,
                    Some(m) => tropical_lie_core::krasner::KrasnerNull::Ideal(m.clone()),
                },
            };
            let (_, report) = build_krasner(&model)?;
            let file = PairFile {
                spec: SemiringSpec::FiniteTable(table),
                c0: CNull::ZeroOnly,
                rank: 1,
                basis: vec!["x1".into()],
                null_generators: vec![],
                null_closed: true,
                sc: None,
                negation: None,
                involution: None,
                flags: Default::default(),
                degenerate_allowed: false,
                doubled: None,
                krasner: Some(KrasnerSection {
                    group,
                    eps: if star.is_none() { Some(eps) } else { None },
                    involution: star,
                    ideal,
                }),
            };
            Ok((file, report))
        }
        other => Err(Error::Parse(format!("unknown family `{}`", other))),
    }
}

pub fn cmd_double(out: &mut dyn Write, opts: &Options) -> i32 {
    let Some(path) = opts.rest.first() else {
        let _ = writeln!(out, "error: double needs a pair file");
        return 3;
    };
    let run = || -> Result<(PairFile, CheckReport), Error> {
        let text =
            fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {}", path, e)))?;
        let pf = pairfile::parse(&text)?;
        let lp = pf.lie_pair()?;
        let doubled = double_lie(&lp, opts.null_mode, opts.membership_bound)?;
        let info = DoubledInfo {
            half: lp.rank(),
            mode: match opts.null_mode {
                NullMode::Diag => "diag",
                NullMode::Sum => "sum",
            },
            inner_null: lp
                .pair
                .null
                .span()
                .generators
                .iter()
                .map(|g| g.coeffs.clone())
                .collect(),
        };
        Ok((
            pairfile::from_lie_pair(&doubled.lp, Some(info)),
            doubled.report,
        ))
    };
    match run() {
        Ok((file, report)) => {
            let text = pairfile::render(&file);
            if let Some(p) = &opts.out {
                if let Err(e) = fs::write(p, &text) {
                    let _ = writeln!(out, "error: {}: {}", p, e);
                    return 3;
                }
            } else {
                let _ = write!(out, "{}", text);
            }
            print_report(out, &report);
            exit_code(&report)
        }
        Err(e) => {
            let _ = writeln!(out, "error: {}", e);
            3
        }
    }
}

fn render_presentation(p: &PbwPresentation) -> String {
    let mut out = String::new();
    out.push_str("tropical-lie-pbw v1\n");
    out.push_str(&format!(
        "variant {}\n",
        match p.variant {
            tropical_lie_core::pbw::PbwVariant::WeakPsi => "weak",
            tropical_lie_core::pbw::PbwVariant::Preceq => "preceq",
            tropical_lie_core::pbw::PbwVariant::Eps => "eps",
        }
    ));
    out.push_str(&format!("rank {}\n", p.rank));
    out.push_str(&format!("degree {}\n", p.degree));
    out.push_str(&format!("order {}\n", p.monomial_order));
    if !p.slacks.is_empty() {
        out.push_str("slacks\n");
        for (j, i) in &p.slacks {
            out.push_str(&format!("y{{{},{}}}\n", j + 1, i + 1));
        }
        out.push_str("end\n");
    }
    if !p.relations.is_empty() {
        out.push_str("relations\n");
        for (lhs, rhs) in &p.relations {
            out.push_str(&format!("{} => {}\n", lhs, rhs));
        }
        out.push_str("end\n");
    }
    out.push_str("null\n");
    for g in &p.null_generators {
        out.push_str(g);
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

pub fn cmd_pbw(out: &mut dyn Write, opts: &Options) -> i32 {
    let run = || -> Result<(String, CheckReport), Error> {
        let variant = opts
            .rest
            .first()
            .ok_or_else(|| Error::Parse("pbw needs a variant (weak|preceq|eps|free)".into()))?;
        let path = opts
            .rest
            .get(1)
            .ok_or_else(|| Error::Parse("pbw needs a pair file".into()))?;
        let text =
            fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {}", path, e)))?;
        let pf = pairfile::parse(&text)?;
        match variant.as_str() {
            "weak" => {
                let lp = pf.lie_pair()?;
                let psi = pf
                    .negation
                    .clone()
                    .unwrap_or_else(|| NegationSpec::scalar(lp.base().spec.one(), false));
                let (env, report) = pbw_weak(&lp, &psi, opts.degree, opts.membership_bound)?;
                Ok((render_presentation(&env.presentation), report))
            }
            "preceq" => {
                let lp = pf.lie_pair()?;
                let outp = pbw_preceq(&lp, opts.degree, opts.membership_bound)?;
                Ok((render_presentation(&outp.presentation), outp.report))
            }
            "eps" => {
                let lp = pf.lie_pair()?;
                let eps = match value_of(&opts.rest, "--eps") {
                    Some(v) => lp.base().spec.parse_scalar(&v)?,
                    None => match &pf.negation {
                        Some(NegationSpec {
                            kind: tropical_lie_core::module_pairs::NegationKind::ScalarMultiple(e),
                            ..
                        }) => e.clone(),
                        _ => lp.base().spec.one(),
                    },
                };
                let target = match value_of(&opts.rest, "--target") {
                    None => None,
                    Some(tpath) => {
                        let mtext = fs::read_to_string(&tpath)
                            .map_err(|e| Error::Parse(format!("{}: {}", tpath, e)))?;
                        let mf: MapFile = pairfile::parse_map(&mtext)?;
                        if mf.spec != lp.base().spec {
                            return Err(Error::SpecMismatch(
                                "target map semiring differs from the pair's".into(),
                            ));
                        }
                        Some(EpsTarget {
                            matrix_size: mf.matrix_size,
                            images: mf
                                .images
                                .iter()
                                .map(|v| ModuleElement::new(lp.base().spec.clone(), v.clone()))
                                .collect::<Result<Vec<_>, _>>()?,
                        })
                    }
                };
                let outp = pbw_eps(
                    &lp,
                    &eps,
                    opts.degree,
                    target.as_ref(),
                    opts.membership_bound,
                )?;
                Ok((render_presentation(&outp.presentation), outp.report))
            }
            "free" => {
                let base = pf.base_pair()?;
                let outp =
                    free_preceq_lie(&base, pf.rank, opts.degree, None, opts.membership_bound)?;
                Ok((render_presentation(&outp.presentation), outp.report))
            }
            other => Err(Error::Parse(format!("unknown pbw variant `{}`", other))),
        }
    };
    match run() {
        Ok((presentation, report)) => {
            if let Some(p) = &opts.out {
                if let Err(e) = fs::write(p, &presentation) {
                    let _ = writeln!(out, "error: {}: {}", p, e);
                    return 3;
                }
            } else {
                let _ = write!(out, "{}", presentation);
            }
            print_report(out, &report);
            exit_code(&report)
        }
        Err(e) => {
            let _ = writeln!(out, "error: {}", e);
            3
        }
    }
}

pub fn cmd_catalog(out: &mut dyn Write, opts: &Options) -> i32 {
    match catalog_low_dim(opts.membership_bound) {
        Ok(entries) => {
            let mut all_ok = true;
            for e in &entries {
                let ok = e.built.report.all_pass();
                all_ok &= ok;
                let _ = writeln!(
                    out,
                    "catalog {} {}",
                    e.name,
                    if ok { "pass" } else { "fail" }
                );
                if let Some(dir) = &opts.out {
                    let file = pairfile::from_lie_pair(&e.built.lp, None);
                    let path = format!("{}/catalog-{}.pair", dir, e.name);
                    if let Err(err) = fs::write(&path, pairfile::render(&file)) {
                        let _ = writeln!(out, "error: {}: {}", path, err);
                        return 3;
                    }
                }
            }
            match constructions::build_j_graded_example(opts.membership_bound) {
                Ok((built, grading)) => {
                    let ok = built.report.all_pass() && grading.all_pass();
                    all_ok &= ok;
                    let _ = writeln!(out, "catalog j-graded {}", if ok { "pass" } else { "fail" });
                }
                Err(e) => {
                    let _ = writeln!(out, "error: {}", e);
                    return 3;
                }
            }
            if all_ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(out, "error: {}", e);
            3
        }
    }
}
