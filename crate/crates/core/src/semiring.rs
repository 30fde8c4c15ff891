//! Commutative semirings, exact scalars, and the base pair `(C, C0)`.
//!
//! Six semiring families are supported. Max-plus scalars are exact rationals
//! extended with a bottom element acting as the additive neutral; addition is
//! max and multiplication is rational addition. Finite semirings are given by
//! explicit addition/multiplication tables and are checked exhaustively.

use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::report::{CheckItem, CheckMode, LawReport, Verdict};
use crate::rng::SplitMix64;

/// Errors shared across the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A scalar did not belong to the semiring an operation was performed in.
    SpecMismatch(String),
    RankMismatch {
        expected: usize,
        got: usize,
    },
    BaseMismatch(String),
    MalformedTable(String),
    InvalidScalar(String),
    /// `L = L0`; the axioms would be vacuous.
    Degenerate(String),
    Precondition(String),
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SpecMismatch(m) => write!(f, "semiring mismatch: {}", m),
            Error::RankMismatch { expected, got } => {
                write!(f, "rank mismatch: expected {}, got {}", expected, got)
            }
            Error::BaseMismatch(m) => write!(f, "base pair mismatch: {}", m),
            Error::MalformedTable(m) => write!(f, "malformed table: {}", m),
            Error::InvalidScalar(m) => write!(f, "invalid scalar: {}", m),
            Error::Degenerate(m) => write!(f, "degenerate pair: {}", m),
            Error::Precondition(m) => write!(f, "precondition failed: {}", m),
            Error::Parse(m) => write!(f, "parse error: {}", m),
        }
    }
}

impl std::error::Error for Error {}

/// A finite semiring presented by tables. Commutativity of multiplication is
/// required when used as a base semiring but not for Krasner models.
#[derive(Debug, PartialEq, Eq)]
pub struct FiniteTable {
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl FiniteTable {
    pub fn new(
        size: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    ) -> Result<Self, Error> {
        let check = |name: &str, t: &[Vec<usize>]| -> Result<(), Error> {
            if t.len() != size {
                return Err(Error::MalformedTable(format!(
                    "{} table has {} rows, expected {}",
                    name,
                    t.len(),
                    size
                )));
            }
            for (i, row) in t.iter().enumerate() {
                if row.len() != size {
                    return Err(Error::MalformedTable(format!(
                        "{} table row {} has {} entries, expected {}",
                        name,
                        i,
                        row.len(),
                        size
                    )));
                }
                for (j, &v) in row.iter().enumerate() {
                    if v >= size {
                        return Err(Error::MalformedTable(format!(
                            "{} table cell ({},{}) = {} out of range",
                            name, i, j, v
                        )));
                    }
                }
            }
            Ok(())
        };
        check("addition", &add)?;
        check("multiplication", &mul)?;
        if zero >= size || one >= size {
            return Err(Error::MalformedTable(format!(
                "zero={} one={} out of range for size {}",
                zero, one, size
            )));
        }
        Ok(FiniteTable {
            size,
            add,
            mul,
            zero,
            one,
        })
    }

    /// Parse the plain-text table format: first line `n`, then `n` addition
    /// rows, `n` multiplication rows, and a final `zero=<i> one=<j>` line.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty table file".into()))?
            .trim()
            .parse()
            .map_err(|e| Error::Parse(format!("bad size line: {}", e)))?;
        let mut read_table = |name: &str| -> Result<Vec<Vec<usize>>, Error> {
            let mut t = Vec::with_capacity(n);
            for i in 0..n {
                let line = lines
                    .next()
                    .ok_or_else(|| Error::Parse(format!("missing {} row {}", name, i)))?;
                let row: Result<Vec<usize>, _> =
                    line.split_whitespace().map(|w| w.parse()).collect();
                t.push(row.map_err(|e| Error::Parse(format!("{} row {}: {}", name, i, e)))?);
            }
            Ok(t)
        };
        let add = read_table("addition")?;
        let mul = read_table("multiplication")?;
        let last = lines
            .next()
            .ok_or_else(|| Error::Parse("missing zero/one line".into()))?;
        let mut zero = None;
        let mut one = None;
        for part in last.split_whitespace() {
            if let Some(v) = part.strip_prefix("zero=") {
                zero = Some(
                    v.parse()
                        .map_err(|e| Error::Parse(format!("bad zero index: {}", e)))?,
                );
            } else if let Some(v) = part.strip_prefix("one=") {
                one = Some(
                    v.parse()
                        .map_err(|e| Error::Parse(format!("bad one index: {}", e)))?,
                );
            }
        }
        let zero = zero.ok_or_else(|| Error::Parse("missing zero=<i>".into()))?;
        let one = one.ok_or_else(|| Error::Parse("missing one=<j>".into()))?;
        FiniteTable::new(n, add, mul, zero, one)
    }

    /// Render in the same plain-text format `parse` accepts.
    pub fn render(&self) -> String {
        let mut out = format!("{}\n", self.size);
        for t in [&self.add, &self.mul] {
            for row in t.iter() {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                out.push_str(&cells.join(" "));
                out.push('\n');
            }
        }
        out.push_str(&format!("zero={} one={}\n", self.zero, self.one));
        out
    }
}

/// One of the supported commutative semirings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemiringSpec {
    Naturals,
    Booleans,
    MaxPlus,
    NonnegRationals,
    /// The integers viewed as a semiring, kept for classical sanity checks.
    Integers,
    FiniteTable(Arc<FiniteTable>),
}

/// An exact scalar tagged by the semiring family it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Nat(BigUint),
    Bool(bool),
    /// `None` is the bottom element (the additive neutral of max-plus).
    MaxPlus(Option<BigRational>),
    NonnegRat(BigRational),
    Int(BigInt),
    Table(usize),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Nat(v) => write!(f, "{}", v),
            Scalar::Bool(b) => write!(f, "{}", if *b { 1 } else { 0 }),
            Scalar::MaxPlus(None) => write!(f, "-inf"),
            Scalar::MaxPlus(Some(r)) => write!(f, "{}", r),
            Scalar::NonnegRat(r) => write!(f, "{}", r),
            Scalar::Int(v) => write!(f, "{}", v),
            Scalar::Table(i) => write!(f, "{}", i),
        }
    }
}

impl Scalar {
    pub fn nat(v: u64) -> Scalar {
        Scalar::Nat(BigUint::from(v))
    }
    pub fn int(v: i64) -> Scalar {
        Scalar::Int(BigInt::from(v))
    }
    pub fn rat(num: i64, den: i64) -> Scalar {
        Scalar::NonnegRat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
    pub fn maxplus(num: i64, den: i64) -> Scalar {
        Scalar::MaxPlus(Some(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }
    pub fn maxplus_bottom() -> Scalar {
        Scalar::MaxPlus(None)
    }
}

impl SemiringSpec {
    pub fn name(&self) -> &'static str {
        match self {
            SemiringSpec::Naturals => "nat",
            SemiringSpec::Booleans => "bool",
            SemiringSpec::MaxPlus => "maxplus",
            SemiringSpec::NonnegRationals => "qplus",
            SemiringSpec::Integers => "int",
            SemiringSpec::FiniteTable(_) => "table",
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            SemiringSpec::Naturals => Scalar::Nat(BigUint::zero()),
            SemiringSpec::Booleans => Scalar::Bool(false),
            SemiringSpec::MaxPlus => Scalar::MaxPlus(None),
            SemiringSpec::NonnegRationals => Scalar::NonnegRat(BigRational::zero()),
            SemiringSpec::Integers => Scalar::Int(BigInt::zero()),
            SemiringSpec::FiniteTable(t) => Scalar::Table(t.zero),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            SemiringSpec::Naturals => Scalar::Nat(BigUint::one()),
            SemiringSpec::Booleans => Scalar::Bool(true),
            SemiringSpec::MaxPlus => Scalar::MaxPlus(Some(BigRational::zero())),
            SemiringSpec::NonnegRationals => Scalar::NonnegRat(BigRational::one()),
            SemiringSpec::Integers => Scalar::Int(BigInt::one()),
            SemiringSpec::FiniteTable(t) => Scalar::Table(t.one),
        }
    }

    /// Reject scalars from a different semiring (or out-of-range table indices).
    pub fn check(&self, s: &Scalar) -> Result<(), Error> {
        let ok = match (self, s) {
            (SemiringSpec::Naturals, Scalar::Nat(_)) => true,
            (SemiringSpec::Booleans, Scalar::Bool(_)) => true,
            (SemiringSpec::MaxPlus, Scalar::MaxPlus(_)) => true,
            (SemiringSpec::NonnegRationals, Scalar::NonnegRat(r)) => !r.is_negative(),
            (SemiringSpec::Integers, Scalar::Int(_)) => true,
            (SemiringSpec::FiniteTable(t), Scalar::Table(i)) => *i < t.size,
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::SpecMismatch(format!(
                "scalar {} does not belong to semiring {}",
                s,
                self.name()
            )))
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, Error> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (Scalar::Nat(x), Scalar::Nat(y)) => Scalar::Nat(x + y),
            (Scalar::Bool(x), Scalar::Bool(y)) => Scalar::Bool(*x || *y),
            (Scalar::MaxPlus(x), Scalar::MaxPlus(y)) => Scalar::MaxPlus(match (x, y) {
                (None, v) => v.clone(),
                (v, None) => v.clone(),
                (Some(p), Some(q)) => Some(p.max(q).clone()),
            }),
            (Scalar::NonnegRat(x), Scalar::NonnegRat(y)) => Scalar::NonnegRat(x + y),
            (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x + y),
            (Scalar::Table(x), Scalar::Table(y)) => match self {
                SemiringSpec::FiniteTable(t) => Scalar::Table(t.add[*x][*y]),
                _ => unreachable!(),
            },
            _ => unreachable!(),
        })
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, Error> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (Scalar::Nat(x), Scalar::Nat(y)) => Scalar::Nat(x * y),
            (Scalar::Bool(x), Scalar::Bool(y)) => Scalar::Bool(*x && *y),
            (Scalar::MaxPlus(x), Scalar::MaxPlus(y)) => Scalar::MaxPlus(match (x, y) {
                (None, _) | (_, None) => None,
                (Some(p), Some(q)) => Some(p + q),
            }),
            (Scalar::NonnegRat(x), Scalar::NonnegRat(y)) => Scalar::NonnegRat(x * y),
            (Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x * y),
            (Scalar::Table(x), Scalar::Table(y)) => match self {
                SemiringSpec::FiniteTable(t) => Scalar::Table(t.mul[*x][*y]),
                _ => unreachable!(),
            },
            _ => unreachable!(),
        })
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        *a == self.zero()
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a Scalar>>(&self, it: I) -> Result<Scalar, Error> {
        let mut acc = self.zero();
        for s in it {
            acc = self.add(&acc, s)?;
        }
        Ok(acc)
    }

    /// True when the carrier is finite; such specs admit exhaustive law checks.
    pub fn is_finite(&self) -> bool {
        matches!(self, SemiringSpec::Booleans | SemiringSpec::FiniteTable(_))
    }

    pub fn carrier(&self) -> Option<Vec<Scalar>> {
        match self {
            SemiringSpec::Booleans => Some(vec![Scalar::Bool(false), Scalar::Bool(true)]),
            SemiringSpec::FiniteTable(t) => Some((0..t.size).map(Scalar::Table).collect()),
            _ => None,
        }
    }

    /// Deterministic sample element used by the sampled law checker.
    pub fn sample(&self, rng: &mut SplitMix64) -> Scalar {
        match self {
            SemiringSpec::Naturals => Scalar::Nat(BigUint::from(rng.below(50))),
            SemiringSpec::Booleans => Scalar::Bool(rng.below(2) == 1),
            SemiringSpec::MaxPlus => {
                if rng.below(8) == 0 {
                    Scalar::MaxPlus(None)
                } else {
                    let num = rng.below(41) as i64 - 20;
                    let den = rng.below(4) as i64 + 1;
                    Scalar::maxplus(num, den)
                }
            }
            SemiringSpec::NonnegRationals => {
                let num = rng.below(30) as i64;
                let den = rng.below(5) as i64 + 1;
                Scalar::rat(num, den)
            }
            SemiringSpec::Integers => Scalar::Int(BigInt::from(rng.below(61) as i64 - 30)),
            SemiringSpec::FiniteTable(t) => Scalar::Table(rng.below(t.size as u64) as usize),
        }
    }

    /// Parse a coefficient literal: integers, rationals `p/q`, `-inf` for the
    /// max-plus bottom, table elements as indices.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, Error> {
        let text = text.trim();
        let s = match self {
            SemiringSpec::Naturals => Scalar::Nat(
                text.parse::<BigUint>()
                    .map_err(|e| Error::Parse(format!("natural `{}`: {}", text, e)))?,
            ),
            SemiringSpec::Booleans => match text {
                "0" | "false" => Scalar::Bool(false),
                "1" | "true" => Scalar::Bool(true),
                _ => return Err(Error::Parse(format!("boolean `{}`", text))),
            },
            SemiringSpec::MaxPlus => {
                if text == "-inf" {
                    Scalar::MaxPlus(None)
                } else {
                    Scalar::MaxPlus(Some(parse_rational(text)?))
                }
            }
            SemiringSpec::NonnegRationals => {
                let r = parse_rational(text)?;
                if r.is_negative() {
                    return Err(Error::InvalidScalar(format!(
                        "negative literal `{}` in nonnegative rationals",
                        text
                    )));
                }
                Scalar::NonnegRat(r)
            }
            SemiringSpec::Integers => Scalar::Int(
                text.parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("integer `{}`: {}", text, e)))?,
            ),
            SemiringSpec::FiniteTable(_) => Scalar::Table(
                text.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("table index `{}`: {}", text, e)))?,
            ),
        };
        self.check(&s)?;
        Ok(s)
    }
}

fn parse_rational(text: &str) -> Result<BigRational, Error> {
    if let Some((num, den)) = text.split_once('/') {
        let n = num
            .trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("rational numerator `{}`: {}", num, e)))?;
        let d = den
            .trim()
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("rational denominator `{}`: {}", den, e)))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{}`", text)));
        }
        Ok(BigRational::new(n, d))
    } else {
        let n = text
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("rational `{}`: {}", text, e)))?;
        Ok(BigRational::from_integer(n))
    }
}

/// Verify the semiring laws. Finite tables are checked exhaustively; infinite
/// carriers on a seeded sample of `budget` triples with the seed recorded.
pub fn verify_semiring_laws(spec: &SemiringSpec, budget: usize, seed: u64) -> LawReport {
    verify_laws_impl(spec, budget, seed, true)
}

/// Same checks without commutativity of multiplication; used for the table
/// semirings underlying Krasner models, which may be noncommutative.
pub fn verify_noncommutative_semiring_laws(
    spec: &SemiringSpec,
    budget: usize,
    seed: u64,
) -> LawReport {
    verify_laws_impl(spec, budget, seed, false)
}

fn verify_laws_impl(
    spec: &SemiringSpec,
    budget: usize,
    seed: u64,
    require_mul_comm: bool,
) -> LawReport {
    let (triples, mode) = match spec.carrier() {
        Some(c) => {
            let mut v = Vec::new();
            for a in &c {
                for b in &c {
                    for d in &c {
                        v.push((a.clone(), b.clone(), d.clone()));
                    }
                }
            }
            (v, CheckMode::Exhaustive)
        }
        None => {
            let mut rng = SplitMix64::new(seed);
            let v = (0..budget)
                .map(|_| {
                    (
                        spec.sample(&mut rng),
                        spec.sample(&mut rng),
                        spec.sample(&mut rng),
                    )
                })
                .collect();
            (v, CheckMode::Sampled { seed, budget })
        }
    };

    let zero = spec.zero();
    let one = spec.one();
    let mut items: Vec<CheckItem> = Vec::new();
    let mut law = |name: &str, witness: Option<String>| {
        items.push(CheckItem {
            axiom: name.to_string(),
            index: vec![],
            verdict: match witness {
                None => Verdict::Pass,
                Some(w) => Verdict::Fail(w),
            },
        });
    };

    // Each closure returns the first violating witness, if any; the witness
    // prints only the arguments the law actually uses.
    let find3 = |f: &dyn Fn(&Scalar, &Scalar, &Scalar) -> bool| -> Option<String> {
        triples
            .iter()
            .find(|(a, b, c)| !f(a, b, c))
            .map(|(a, b, c)| format!("({}, {}, {})", a, b, c))
    };
    let find2 = |f: &dyn Fn(&Scalar, &Scalar) -> bool| -> Option<String> {
        triples
            .iter()
            .find(|(a, b, _)| !f(a, b))
            .map(|(a, b, _)| format!("({}, {})", a, b))
    };
    let find1 = |f: &dyn Fn(&Scalar) -> bool| -> Option<String> {
        triples
            .iter()
            .find(|(a, _, _)| !f(a))
            .map(|(a, _, _)| format!("({})", a))
    };

    let add = |a: &Scalar, b: &Scalar| spec.add(a, b).unwrap();
    let mul = |a: &Scalar, b: &Scalar| spec.mul(a, b).unwrap();

    law(
        "add-assoc",
        find3(&|a, b, c| add(&add(a, b), c) == add(a, &add(b, c))),
    );
    law("add-comm", find2(&|a, b| add(a, b) == add(b, a)));
    // witness prints the violating (a, 0) pair
    law(
        "add-neutral",
        triples
            .iter()
            .find(|(a, _, _)| add(a, &zero) != *a)
            .map(|(a, _, _)| format!("({}, {})", a, zero)),
    );
    law(
        "mul-assoc",
        find3(&|a, b, c| mul(&mul(a, b), c) == mul(a, &mul(b, c))),
    );
    if require_mul_comm {
        law("mul-comm", find2(&|a, b| mul(a, b) == mul(b, a)));
    }
    law(
        "mul-neutral",
        find1(&|a| mul(a, &one) == *a && mul(&one, a) == *a),
    );
    law(
        "distributivity",
        find3(&|a, b, c| {
            mul(a, &add(b, c)) == add(&mul(a, b), &mul(a, c))
                && mul(&add(b, c), a) == add(&mul(b, a), &mul(c, a))
        }),
    );
    law(
        "zero-absorbing",
        find1(&|a| mul(a, &zero) == zero && mul(&zero, a) == zero),
    );

    LawReport { mode, items }
}

/// Description of the null sub-semiring `C0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CNull {
    ZeroOnly,
    /// `C0 = m·C`.
    PrincipalMultiple(Scalar),
    ExplicitFiniteSet(Vec<Scalar>),
    GeneratorList(Vec<Scalar>),
}

/// The base pair `(C, C0)`: the scalar semiring with its null part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePair {
    pub spec: SemiringSpec,
    pub null: CNull,
}

/// Verdict of a scalar membership query, with a witness that recombines
/// exactly to the queried scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarMembership {
    In { witness: Scalar },
    NotIn,
    Unknown { bound: usize },
}

impl ScalarMembership {
    pub fn is_in(&self) -> bool {
        matches!(self, ScalarMembership::In { .. })
    }
}

impl BasePair {
    pub fn new(spec: SemiringSpec, null: CNull) -> Result<Self, Error> {
        match &null {
            CNull::ZeroOnly => {}
            CNull::PrincipalMultiple(m) => {
                spec.check(m)?;
            }
            CNull::ExplicitFiniteSet(set) => {
                for s in set {
                    spec.check(s)?;
                }
                if !set.contains(&spec.zero()) {
                    return Err(Error::Precondition("0 must belong to C0".into()));
                }
                // Closure under addition is decidable for a finite set.
                for a in set {
                    for b in set {
                        let s = spec.add(a, b)?;
                        if !set.contains(&s) {
                            return Err(Error::Precondition(format!(
                                "C0 not closed under addition: {} + {} = {}",
                                a, b, s
                            )));
                        }
                    }
                }
                // Closure under arbitrary scalar multiples: exhaustive for
                // finite carriers; over infinite carriers only {0} survives.
                match spec.carrier() {
                    Some(carrier) => {
                        for c in &carrier {
                            for a in set {
                                let p = spec.mul(c, a)?;
                                if !set.contains(&p) {
                                    return Err(Error::Precondition(format!(
                                        "C0 not closed under scalars: {}·{} = {}",
                                        c, a, p
                                    )));
                                }
                            }
                        }
                    }
                    None => {
                        if set.iter().any(|s| !spec.is_zero(s)) {
                            return Err(Error::Precondition(
                                "finite C0 over an infinite carrier must be {0}".into(),
                            ));
                        }
                    }
                }
            }
            CNull::GeneratorList(gens) => {
                for s in gens {
                    spec.check(s)?;
                }
            }
        }
        let bp = BasePair { spec, null };
        // For C0 = m·C the element m itself is null by construction.
        if let CNull::PrincipalMultiple(m) = &bp.null {
            debug_assert!(bp.scalar_in_c0(m).unwrap().is_in());
        }
        Ok(bp)
    }

    pub fn zero_only(spec: SemiringSpec) -> Self {
        BasePair {
            spec,
            null: CNull::ZeroOnly,
        }
    }

    /// Decide `c ∈ C0`, returning a witness on success.
    pub fn scalar_in_c0(&self, c: &Scalar) -> Result<ScalarMembership, Error> {
        self.spec.check(c)?;
        let spec = &self.spec;
        Ok(match &self.null {
            CNull::ZeroOnly => {
                if spec.is_zero(c) {
                    ScalarMembership::In {
                        witness: spec.zero(),
                    }
                } else {
                    ScalarMembership::NotIn
                }
            }
            CNull::PrincipalMultiple(m) => principal_divide(spec, m, c)?,
            CNull::ExplicitFiniteSet(set) => {
                if set.contains(c) {
                    ScalarMembership::In { witness: c.clone() }
                } else {
                    ScalarMembership::NotIn
                }
            }
            CNull::GeneratorList(gens) => {
                // Rank-1 module membership over the generator list.
                let sub = crate::module_pairs::Submodule::closed(
                    1,
                    gens.iter()
                        .map(|g| {
                            crate::module_pairs::ModuleElement::new(spec.clone(), vec![g.clone()])
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                );
                let v = crate::module_pairs::ModuleElement::new(spec.clone(), vec![c.clone()])?;
                match crate::module_pairs::submodule_membership(&sub, &v, 64)? {
                    crate::module_pairs::MembershipVerdict::In { .. } => {
                        ScalarMembership::In { witness: c.clone() }
                    }
                    crate::module_pairs::MembershipVerdict::NotIn { .. } => ScalarMembership::NotIn,
                    crate::module_pairs::MembershipVerdict::Unknown { bound } => {
                        ScalarMembership::Unknown { bound }
                    }
                }
            }
        })
    }
}

/// Decide `c = m·c'` for some carrier element `c'`, exactly per family.
fn principal_divide(
    spec: &SemiringSpec,
    m: &Scalar,
    c: &Scalar,
) -> Result<ScalarMembership, Error> {
    let witness = |w: Scalar| ScalarMembership::In { witness: w };
    Ok(match (m, c) {
        (Scalar::Nat(m), Scalar::Nat(c)) => {
            if m.is_zero() {
                if c.is_zero() {
                    witness(spec.zero())
                } else {
                    ScalarMembership::NotIn
                }
            } else {
                let (q, r) = c.div_rem(m);
                if r.is_zero() {
                    witness(Scalar::Nat(q))
                } else {
                    ScalarMembership::NotIn
                }
            }
        }
        (Scalar::Int(m), Scalar::Int(c)) => {
            if m.is_zero() {
                if c.is_zero() {
                    witness(spec.zero())
                } else {
                    ScalarMembership::NotIn
                }
            } else {
                let (q, r) = c.div_rem(m);
                if r.is_zero() {
                    witness(Scalar::Int(q))
                } else {
                    ScalarMembership::NotIn
                }
            }
        }
        (Scalar::Bool(m), Scalar::Bool(c)) => {
            if *m {
                witness(Scalar::Bool(*c))
            } else if !*c {
                witness(Scalar::Bool(false))
            } else {
                ScalarMembership::NotIn
            }
        }
        (Scalar::NonnegRat(m), Scalar::NonnegRat(c)) => {
            if m.is_zero() {
                if c.is_zero() {
                    witness(spec.zero())
                } else {
                    ScalarMembership::NotIn
                }
            } else {
                witness(Scalar::NonnegRat(c / m))
            }
        }
        (Scalar::MaxPlus(m), Scalar::MaxPlus(c)) => match (m, c) {
            (None, None) => witness(Scalar::MaxPlus(None)),
            (None, Some(_)) => ScalarMembership::NotIn,
            (Some(_), None) => witness(Scalar::MaxPlus(None)),
            (Some(m), Some(c)) => witness(Scalar::MaxPlus(Some(c - m))),
        },
        (Scalar::Table(_), Scalar::Table(c)) => {
            let carrier = spec.carrier().unwrap();
            match carrier
                .iter()
                .find(|w| spec.mul(m, w).unwrap() == Scalar::Table(*c))
            {
                Some(w) => witness(w.clone()),
                None => ScalarMembership::NotIn,
            }
        }
        _ => {
            return Err(Error::SpecMismatch(format!(
                "mixed scalars {} and {} in principal divide",
                m, c
            )))
        }
    })
}

/// The 16-element semiring of 2×2 matrices over the two-element field,
/// indexed by `a + 2b + 4c + 8d` for the matrix `[[a, b], [c, d]]`.
/// Noncommutative; used by the Krasner model.
pub fn f2_matrix_table() -> FiniteTable {
    let n = 16;
    let bits = |x: usize| ((x & 1), (x >> 1) & 1, (x >> 2) & 1, (x >> 3) & 1);
    let pack = |a: usize, b: usize, c: usize, d: usize| a + 2 * b + 4 * c + 8 * d;
    let mut add = vec![vec![0; n]; n];
    let mut mul = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            add[x][y] = x ^ y;
            let (a, b, c, d) = bits(x);
            let (e, f, g, h) = bits(y);
            mul[x][y] = pack(
                (a * e + b * g) % 2,
                (a * f + b * h) % 2,
                (c * e + d * g) % 2,
                (c * f + d * h) % 2,
            );
        }
    }
    FiniteTable::new(n, add, mul, 0, pack(1, 0, 0, 1)).unwrap()
}
