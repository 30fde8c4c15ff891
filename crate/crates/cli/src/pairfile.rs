//! The pair-file schema: a structured plain-text document declaring the
//! semiring, the base null, the module, null generators, and optionally a
//! structure-constant table, a negation map, an involution, flags, doubling
//! data, and a Krasner section. Files written by this module parse back to
//! the same value and re-render byte-identically.

use std::fmt::Write as _;
use std::sync::Arc;

use tropical_lie_core::krasner::{KrasnerBracket, KrasnerModel, KrasnerNull};
use tropical_lie_core::lie::LieFlags;
use tropical_lie_core::module_pairs::{
    ClosureState, ModuleElement, NegationKind, NegationSpec, NullModel, Submodule,
};
use tropical_lie_core::semiring::{BasePair, CNull, Error, FiniteTable, Scalar, SemiringSpec};
use tropical_lie_core::{LiePairDef, PairDef, StructureConstants};

pub const HEADER: &str = "tropical-lie-pair v1";

/// Doubling metadata: the half rank, the null mode, and the inner null
/// generators (needed to reconstruct the sum-criterion membership).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledInfo {
    pub half: usize,
    pub mode: &'static str, // "diag" | "sum"
    pub inner_null: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KrasnerSection {
    pub group: Vec<usize>,
    pub eps: Option<usize>,
    pub involution: Option<Vec<usize>>,
    pub ideal: Option<Vec<usize>>,
}

/// The parsed document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFile {
    pub spec: SemiringSpec,
    pub c0: CNull,
    pub rank: usize,
    pub basis: Vec<String>,
    pub null_generators: Vec<Vec<Scalar>>,
    pub null_closed: bool,
    pub sc: Option<Vec<Vec<Vec<Scalar>>>>,
    pub negation: Option<NegationSpec>,
    pub involution: Option<String>,
    pub flags: LieFlags,
    pub degenerate_allowed: bool,
    pub doubled: Option<DoubledInfo>,
    pub krasner: Option<KrasnerSection>,
}

impl PairFile {
    pub fn base_pair(&self) -> Result<BasePair, Error> {
        BasePair::new(self.spec.clone(), self.c0.clone())
    }

    pub fn pair_def(&self) -> Result<PairDef, Error> {
        let gens = self
            .null_generators
            .iter()
            .map(|g| ModuleElement::new(self.spec.clone(), g.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        let sub = if self.null_closed {
            Submodule::closed(self.rank, gens)
        } else {
            Submodule::unsaturated(self.rank, gens)
        };
        let null = match &self.doubled {
            None => NullModel::Span(sub),
            Some(d) => {
                if d.mode == "diag" {
                    NullModel::Span(sub)
                } else {
                    let inner_gens = d
                        .inner_null
                        .iter()
                        .map(|g| ModuleElement::new(self.spec.clone(), g.clone()))
                        .collect::<Result<Vec<_>, _>>()?;
                    NullModel::DoubledSum {
                        span: sub,
                        inner: Box::new(NullModel::Span(Submodule::closed(d.half, inner_gens))),
                    }
                }
            }
        };
        PairDef::new(self.base_pair()?, self.rank, null)
    }

    pub fn lie_pair(&self) -> Result<LiePairDef, Error> {
        let sc_rows = self
            .sc
            .as_ref()
            .ok_or_else(|| Error::Precondition("no structure-constant table in file".into()))?;
        let entries = sc_rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|cell| ModuleElement::new(self.spec.clone(), cell.clone()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let sc = StructureConstants::new(self.rank, entries)?;
        LiePairDef::with_options(self.pair_def()?, sc, self.flags, self.degenerate_allowed)
    }

    pub fn krasner_model(&self) -> Result<Option<KrasnerModel>, Error> {
        let Some(k) = &self.krasner else {
            return Ok(None);
        };
        let SemiringSpec::FiniteTable(table) = &self.spec else {
            return Err(Error::Precondition(
                "a krasner section needs a table semiring".into(),
            ));
        };
        let bracket = match (&k.eps, &k.involution) {
            (Some(e), None) => KrasnerBracket::Eps { eps: *e },
            (None, Some(star)) => KrasnerBracket::Involution { star: star.clone() },
            _ => {
                return Err(Error::Precondition(
                    "a krasner section needs exactly one of eps or involution".into(),
                ))
            }
        };
        let null = match &k.ideal {
            None => KrasnerNull::Zero,
            Some(m) => KrasnerNull::Ideal(m.clone()),
        };
        Ok(Some(KrasnerModel {
            table: table.clone(),
            group: k.group.clone(),
            bracket,
            null,
        }))
    }
}

fn scalars_to_string(row: &[Scalar]) -> String {
    row.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cell_to_string(cell: &[Scalar]) -> String {
    cell.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Render in the canonical order; `parse(render(f)) == f` and
/// `render(parse(s)) == s` for canonical documents.
pub fn render(f: &PairFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", HEADER);
    let _ = writeln!(out, "semiring {}", f.spec.name());
    if let SemiringSpec::FiniteTable(t) = &f.spec {
        let _ = writeln!(out, "table");
        out.push_str(&t.render());
        let _ = writeln!(out, "end");
    }
    match &f.c0 {
        CNull::ZeroOnly => {
            let _ = writeln!(out, "c0 zero");
        }
        CNull::PrincipalMultiple(m) => {
            let _ = writeln!(out, "c0 principal {}", m);
        }
        CNull::ExplicitFiniteSet(s) => {
            let _ = writeln!(out, "c0 set {}", scalars_to_string(s));
        }
        CNull::GeneratorList(g) => {
            let _ = writeln!(out, "c0 gens {}", scalars_to_string(g));
        }
    }
    let _ = writeln!(out, "rank {}", f.rank);
    let _ = writeln!(out, "basis {}", f.basis.join(" "));
    if !f.null_generators.is_empty() {
        let _ = writeln!(out, "null");
        for g in &f.null_generators {
            let _ = writeln!(out, "{}", scalars_to_string(g));
        }
        let _ = writeln!(out, "end");
    }
    if !f.null_closed {
        let _ = writeln!(out, "null-unsaturated");
    }
    if let Some(d) = &f.doubled {
        let _ = writeln!(out, "doubled {} {}", d.half, d.mode);
        if !d.inner_null.is_empty() {
            let _ = writeln!(out, "innernull");
            for g in &d.inner_null {
                let _ = writeln!(out, "{}", scalars_to_string(g));
            }
            let _ = writeln!(out, "end");
        }
    }
    if let Some(sc) = &f.sc {
        let _ = writeln!(out, "sc");
        for row in sc {
            let cells: Vec<String> = row.iter().map(|c| cell_to_string(c)).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        let _ = writeln!(out, "end");
    }
    if let Some(neg) = &f.negation {
        let suffix = if neg.order_two { " order2" } else { "" };
        match &neg.kind {
            NegationKind::ScalarMultiple(e) => {
                let _ = writeln!(out, "negation scalar {}{}", e, suffix);
            }
            NegationKind::Switch => {
                let _ = writeln!(out, "negation switch{}", suffix);
            }
            NegationKind::Matrix(rows) => {
                let _ = writeln!(out, "negation matrix{}", suffix);
                for row in rows {
                    let _ = writeln!(out, "{}", scalars_to_string(row));
                }
                let _ = writeln!(out, "end");
            }
        }
    }
    if let Some(inv) = &f.involution {
        let _ = writeln!(out, "involution {}", inv);
    }
    let mut flags = Vec::new();
    if f.flags.dagger_reversible {
        flags.push("dagger_reversible");
    }
    if f.flags.l0_reversible {
        flags.push("l0_reversible");
    }
    if f.flags.l0_symmetric {
        flags.push("l0_symmetric");
    }
    if f.degenerate_allowed {
        flags.push("degenerate_allowed");
    }
    if !flags.is_empty() {
        let _ = writeln!(out, "flags {}", flags.join(" "));
    }
    if let Some(k) = &f.krasner {
        let _ = writeln!(out, "krasner");
        let _ = writeln!(
            out,
            "G {}",
            k.group
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        );
        if let Some(e) = k.eps {
            let _ = writeln!(out, "eps {}", e);
        }
        if let Some(star) = &k.involution {
            let _ = writeln!(
                out,
                "star {}",
                star.iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
        if let Some(m) = &k.ideal {
            let _ = writeln!(
                out,
                "ideal {}",
                m.iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
        let _ = writeln!(out, "end");
    }
    out
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Option<&'a str> {
        while self.pos < self.lines.len() {
            let l = self.lines[self.pos];
            self.pos += 1;
            if !l.trim().is_empty() {
                return Some(l.trim_end());
            }
        }
        None
    }

    fn line_no(&self) -> usize {
        self.pos
    }
}

fn parse_err(lines: &Lines, msg: impl Into<String>) -> Error {
    Error::Parse(format!("line {}: {}", lines.line_no(), msg.into()))
}

/// Parse the pair-file format.
pub fn parse(text: &str) -> Result<PairFile, Error> {
    let mut lines = Lines {
        lines: text.lines().collect(),
        pos: 0,
    };
    let header = lines
        .next()
        .ok_or_else(|| parse_err(&lines, "empty file"))?;
    if header != HEADER {
        return Err(parse_err(&lines, format!("expected header `{}`", HEADER)));
    }

    let mut spec: Option<SemiringSpec> = None;
    let mut c0 = CNull::ZeroOnly;
    let mut rank: Option<usize> = None;
    let mut basis: Vec<String> = Vec::new();
    let mut null_generators = Vec::new();
    let mut null_closed = true;
    let mut sc = None;
    let mut negation = None;
    let mut involution = None;
    let mut flags = LieFlags::default();
    let mut degenerate_allowed = false;
    let mut doubled: Option<DoubledInfo> = None;
    let mut krasner: Option<KrasnerSection> = None;

    while let Some(line) = lines.next() {
        let mut words = line.split_whitespace();
        let key = words.next().unwrap();
        match key {
            "semiring" => {
                let kind = words
                    .next()
                    .ok_or_else(|| parse_err(&lines, "missing semiring kind"))?;
                spec = Some(match kind {
                    "nat" => SemiringSpec::Naturals,
                    "bool" => SemiringSpec::Booleans,
                    "int" => SemiringSpec::Integers,
                    "qplus" => SemiringSpec::NonnegRationals,
                    "maxplus" => SemiringSpec::MaxPlus,
                    "table" => SemiringSpec::Naturals, // placeholder until the table section
                    other => {
                        return Err(parse_err(&lines, format!("unknown semiring `{}`", other)))
                    }
                });
                if kind == "table" {
                    spec = None; // filled by the table section
                }
            }
            "table" => {
                let mut body = String::new();
                loop {
                    let l = lines
                        .next()
                        .ok_or_else(|| parse_err(&lines, "unterminated table section"))?;
                    if l == "end" {
                        break;
                    }
                    body.push_str(l);
                    body.push('\n');
                }
                spec = Some(SemiringSpec::FiniteTable(Arc::new(FiniteTable::parse(
                    &body,
                )?)));
            }
            "c0" => {
                let spec_ref = spec
                    .as_ref()
                    .ok_or_else(|| parse_err(&lines, "c0 before semiring"))?;
                let kind = words
                    .next()
                    .ok_or_else(|| parse_err(&lines, "missing c0 kind"))?;
                c0 = match kind {
                    "zero" => CNull::ZeroOnly,
                    "principal" => {
                        let lit = words
                            .next()
                            .ok_or_else(|| parse_err(&lines, "missing principal scalar"))?;
                        CNull::PrincipalMultiple(spec_ref.parse_scalar(lit)?)
                    }
                    "set" => CNull::ExplicitFiniteSet(
                        words
                            .map(|w| spec_ref.parse_scalar(w))
                            .collect::<Result<Vec<_>, _>>()?,
                    ),
                    "gens" => CNull::GeneratorList(
                        words
                            .map(|w| spec_ref.parse_scalar(w))
                            .collect::<Result<Vec<_>, _>>()?,
                    ),
                    other => return Err(parse_err(&lines, format!("unknown c0 kind `{}`", other))),
                };
            }
            "rank" => {
                rank = Some(
                    words
                        .next()
                        .ok_or_else(|| parse_err(&lines, "missing rank"))?
                        .parse()
                        .map_err(|e| parse_err(&lines, format!("bad rank: {}", e)))?,
                );
            }
            "basis" => {
                basis = words.map(|w| w.to_string()).collect();
            }
            "null" => {
                let spec_ref = spec
                    .as_ref()
                    .ok_or_else(|| parse_err(&lines, "null before semiring"))?;
                loop {
                    let l = lines
                        .next()
                        .ok_or_else(|| parse_err(&lines, "unterminated null section"))?;
                    if l == "end" {
                        break;
                    }
                    let row = l
                        .split_whitespace()
                        .map(|w| spec_ref.parse_scalar(w))
                        .collect::<Result<Vec<_>, _>>()?;
                    null_generators.push(row);
                }
            }
            "null-unsaturated" => {
                null_closed = false;
            }
            "doubled" => {
                let half = words
                    .next()
                    .ok_or_else(|| parse_err(&lines, "missing doubled half rank"))?
                    .parse()
                    .map_err(|e| parse_err(&lines, format!("bad half rank: {}", e)))?;
                let mode = match words.next() {
                    Some("diag") => "diag",
                    Some("sum") => "sum",
                    _ => return Err(parse_err(&lines, "doubled mode must be diag or sum")),
                };
                doubled = Some(DoubledInfo {
                    half,
                    mode,
                    inner_null: vec![],
                });
            }
            "innernull" => {
                let spec_ref = spec
                    .as_ref()
                    .ok_or_else(|| parse_err(&lines, "innernull before semiring"))?;
                let d = doubled
                    .as_mut()
                    .ok_or_else(|| parse_err(&lines, "innernull before doubled"))?;
                loop {
                    let l = lines
                        .next()
                        .ok_or_else(|| parse_err(&lines, "unterminated innernull section"))?;
                    if l == "end" {
                        break;
                    }
                    let row = l
                        .split_whitespace()
                        .map(|w| spec_ref.parse_scalar(w))
                        .collect::<Result<Vec<_>, _>>()?;
                    d.inner_null.push(row);
                }
            }
            "sc" => {
                let spec_ref = spec
                    .as_ref()
                    .ok_or_else(|| parse_err(&lines, "sc before semiring"))?;
                let mut rows = Vec::new();
                loop {
                    let l = lines
                        .next()
                        .ok_or_else(|| parse_err(&lines, "unterminated sc section"))?;
                    if l == "end" {
                        break;
                    }
                    let row = l
                        .split_whitespace()
                        .map(|cell| {
                            cell.split(',')
                                .map(|w| spec_ref.parse_scalar(w))
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    rows.push(row);
                }
                sc = Some(rows);
            }
            "negation" => {
                let spec_ref = spec
                    .as_ref()
                    .ok_or_else(|| parse_err(&lines, "negation before semiring"))?;
                let kind = words
                    .next()
                    .ok_or_else(|| parse_err(&lines, "missing negation kind"))?;
                let rest: Vec<&str> = words.collect();
                let order_two = rest.contains(&"order2");
                negation = Some(match kind {
                    "scalar" => {
                        let lit = rest
                            .first()
                            .ok_or_else(|| parse_err(&lines, "missing negation scalar"))?;
                        NegationSpec {
                            kind: NegationKind::ScalarMultiple(spec_ref.parse_scalar(lit)?),
                            order_two,
                        }
                    }
                    "switch" => NegationSpec {
                        kind: NegationKind::Switch,
                        order_two: true,
                    },
                    "matrix" => {
                        let mut rows = Vec::new();
                        loop {
                            let l = lines
                                .next()
                                .ok_or_else(|| parse_err(&lines, "unterminated negation matrix"))?;
                            if l == "end" {
                                break;
                            }
                            rows.push(
                                l.split_whitespace()
                                    .map(|w| spec_ref.parse_scalar(w))
                                    .collect::<Result<Vec<_>, _>>()?,
                            );
                        }
                        NegationSpec {
                            kind: NegationKind::Matrix(rows),
                            order_two,
                        }
                    }
                    other => {
                        return Err(parse_err(
                            &lines,
                            format!("unknown negation kind `{}`", other),
                        ))
                    }
                });
            }
            "involution" => {
                involution = Some(
                    words
                        .next()
                        .ok_or_else(|| parse_err(&lines, "missing involution kind"))?
                        .to_string(),
                );
            }
            "flags" => {
                for w in words {
                    match w {
                        "dagger_reversible" => flags.dagger_reversible = true,
                        "l0_reversible" => flags.l0_reversible = true,
                        "l0_symmetric" => flags.l0_symmetric = true,
                        "degenerate_allowed" => degenerate_allowed = true,
                        other => {
                            return Err(parse_err(&lines, format!("unknown flag `{}`", other)))
                        }
                    }
                }
            }
            "krasner" => {
                let mut section = KrasnerSection {
                    group: vec![],
                    eps: None,
                    involution: None,
                    ideal: None,
                };
                loop {
                    let l = lines
                        .next()
                        .ok_or_else(|| parse_err(&lines, "unterminated krasner section"))?;
                    if l == "end" {
                        break;
                    }
                    let mut kw = l.split_whitespace();
                    match kw.next().unwrap() {
                        "G" => {
                            section.group = kw
                                .map(|w| w.parse::<usize>())
                                .collect::<Result<Vec<_>, _>>()
                                .map_err(|e| parse_err(&lines, format!("bad G: {}", e)))?;
                        }
                        "eps" => {
                            section.eps = Some(
                                kw.next()
                                    .ok_or_else(|| parse_err(&lines, "missing eps"))?
                                    .parse()
                                    .map_err(|e| parse_err(&lines, format!("bad eps: {}", e)))?,
                            );
                        }
                        "star" => {
                            section.involution = Some(
                                kw.map(|w| w.parse::<usize>())
                                    .collect::<Result<Vec<_>, _>>()
                                    .map_err(|e| parse_err(&lines, format!("bad star: {}", e)))?,
                            );
                        }
                        "ideal" => {
                            section.ideal = Some(
                                kw.map(|w| w.parse::<usize>())
                                    .collect::<Result<Vec<_>, _>>()
                                    .map_err(|e| parse_err(&lines, format!("bad ideal: {}", e)))?,
                            );
                        }
                        other => {
                            return Err(parse_err(
                                &lines,
                                format!("unknown krasner key `{}`", other),
                            ))
                        }
                    }
                }
                krasner = Some(section);
            }
            other => {
                return Err(parse_err(&lines, format!("unknown key `{}`", other)));
            }
        }
    }

    let spec = spec.ok_or_else(|| parse_err(&lines, "missing semiring"))?;
    let rank = rank.ok_or_else(|| parse_err(&lines, "missing rank"))?;
    if basis.is_empty() {
        basis = (1..=rank).map(|i| format!("x{}", i)).collect();
    }
    if basis.len() != rank {
        return Err(parse_err(&lines, "basis length does not match rank"));
    }
    for row in &null_generators {
        if row.len() != rank {
            return Err(parse_err(
                &lines,
                "null generator length does not match rank",
            ));
        }
    }
    if let Some(rows) = &sc {
        if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
            return Err(parse_err(&lines, "sc table is not rank × rank"));
        }
        for row in rows {
            for cell in row {
                if cell.len() != rank {
                    return Err(parse_err(&lines, "sc cell length does not match rank"));
                }
            }
        }
    }
    Ok(PairFile {
        spec,
        c0,
        rank,
        basis,
        null_generators,
        null_closed,
        sc,
        negation,
        involution,
        flags,
        degenerate_allowed,
        doubled,
        krasner,
    })
}

/// Build a `PairFile` straight from a Lie pair (used by the construct and
/// double commands).
pub fn from_lie_pair(lp: &LiePairDef, doubled: Option<DoubledInfo>) -> PairFile {
    let span = lp.pair.null.span();
    PairFile {
        spec: lp.base().spec.clone(),
        c0: lp.base().null.clone(),
        rank: lp.rank(),
        basis: (1..=lp.rank()).map(|i| format!("x{}", i)).collect(),
        null_generators: span.generators.iter().map(|g| g.coeffs.clone()).collect(),
        null_closed: span.closure == ClosureState::Closed,
        sc: Some(
            lp.sc
                .entries
                .iter()
                .map(|row| row.iter().map(|e| e.coeffs.clone()).collect())
                .collect(),
        ),
        negation: None,
        involution: None,
        flags: lp.flags,
        degenerate_allowed: lp.degenerate_allowed,
        doubled,
        krasner: None,
    }
}

/// The target-map file for the ε factorization: a matrix size plus one image
/// per source basis element, row-major.
pub const MAP_HEADER: &str = "tropical-lie-map v1";

pub struct MapFile {
    pub spec: SemiringSpec,
    pub matrix_size: usize,
    pub images: Vec<Vec<Scalar>>,
}

pub fn render_map(m: &MapFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", MAP_HEADER);
    let _ = writeln!(out, "semiring {}", m.spec.name());
    let _ = writeln!(out, "target matrix {}", m.matrix_size);
    let _ = writeln!(out, "images");
    for img in &m.images {
        let _ = writeln!(out, "{}", scalars_to_string(img));
    }
    let _ = writeln!(out, "end");
    out
}

pub fn parse_map(text: &str) -> Result<MapFile, Error> {
    let mut lines = Lines {
        lines: text.lines().collect(),
        pos: 0,
    };
    let header = lines
        .next()
        .ok_or_else(|| parse_err(&lines, "empty map file"))?;
    if header != MAP_HEADER {
        return Err(parse_err(
            &lines,
            format!("expected header `{}`", MAP_HEADER),
        ));
    }
    let mut spec: Option<SemiringSpec> = None;
    let mut size: Option<usize> = None;
    let mut images = Vec::new();
    while let Some(line) = lines.next() {
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "semiring" => {
                spec = Some(match words.next() {
                    Some("nat") => SemiringSpec::Naturals,
                    Some("bool") => SemiringSpec::Booleans,
                    Some("int") => SemiringSpec::Integers,
                    Some("qplus") => SemiringSpec::NonnegRationals,
                    Some("maxplus") => SemiringSpec::MaxPlus,
                    other => {
                        return Err(parse_err(
                            &lines,
                            format!("unsupported map semiring {:?}", other),
                        ))
                    }
                });
            }
            "target" => {
                let kind = words.next();
                if kind != Some("matrix") {
                    return Err(parse_err(&lines, "only matrix targets are supported"));
                }
                size = Some(
                    words
                        .next()
                        .ok_or_else(|| parse_err(&lines, "missing matrix size"))?
                        .parse()
                        .map_err(|e| parse_err(&lines, format!("bad size: {}", e)))?,
                );
            }
            "images" => {
                let spec_ref = spec
                    .as_ref()
                    .ok_or_else(|| parse_err(&lines, "images before semiring"))?;
                loop {
                    let l = lines
                        .next()
                        .ok_or_else(|| parse_err(&lines, "unterminated images section"))?;
                    if l == "end" {
                        break;
                    }
                    images.push(
                        l.split_whitespace()
                            .map(|w| spec_ref.parse_scalar(w))
                            .collect::<Result<Vec<_>, _>>()?,
                    );
                }
            }
            other => return Err(parse_err(&lines, format!("unknown map key `{}`", other))),
        }
    }
    let spec = spec.ok_or_else(|| parse_err(&lines, "missing semiring"))?;
    let size = size.ok_or_else(|| parse_err(&lines, "missing target size"))?;
    for img in &images {
        if img.len() != size * size {
            return Err(parse_err(&lines, "image length does not match matrix size"));
        }
    }
    Ok(MapFile {
        spec,
        matrix_size: size,
        images,
    })
}
