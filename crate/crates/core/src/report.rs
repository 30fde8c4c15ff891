//! Verdict reporting shared by the law checker and the Lie axiom checkers.

use std::fmt;

/// Outcome of a single axiom instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// The instance fails; the string is a concrete witness.
    Fail(String),
    /// Membership could not be decided (bound reached, unsaturated null).
    Inconclusive(String),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }
}

/// One axiom instance: an axiom id, the index tuple it was checked at, and the verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub axiom: String,
    pub index: Vec<usize>,
    pub verdict: Verdict,
}

impl fmt::Display for CheckItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.index.iter().map(|i| i.to_string()).collect();
        write!(f, "{} ({})", self.axiom, idx.join(","))?;
        match &self.verdict {
            Verdict::Pass => write!(f, " pass"),
            Verdict::Fail(w) => write!(f, " fail {}", w),
            Verdict::Inconclusive(r) => write!(f, " inconclusive {}", r),
        }
    }
}

/// A sorted list of axiom-instance verdicts.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { items: Vec::new() }
    }

    pub fn push(&mut self, axiom: &str, index: &[usize], verdict: Verdict) {
        self.items.push(CheckItem {
            axiom: axiom.to_string(),
            index: index.to_vec(),
            verdict,
        });
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    /// Canonical order: axiom id, then index tuple. Report merging is
    /// order-independent once sorted.
    pub fn sort(&mut self) {
        self.items
            .sort_by(|a, b| (&a.axiom, &a.index).cmp(&(&b.axiom, &b.index)));
    }

    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.verdict.is_pass())
    }

    pub fn fail_count(&self) -> usize {
        self.items.iter().filter(|i| i.verdict.is_fail()).count()
    }

    pub fn inconclusive_count(&self) -> usize {
        self.items
            .iter()
            .filter(|i| matches!(i.verdict, Verdict::Inconclusive(_)))
            .count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| i.verdict.is_fail())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(f, "{}", item)?;
        }
        Ok(())
    }
}

/// How a law report was established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    /// Deterministic pseudo-random sample; the seed is recorded so the run
    /// can be reproduced exactly.
    Sampled {
        seed: u64,
        budget: usize,
    },
}

/// Report of semiring/pre-negation law verification.
#[derive(Clone, Debug)]
pub struct LawReport {
    pub mode: CheckMode,
    pub items: Vec<CheckItem>,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.verdict.is_pass())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| i.verdict.is_fail())
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mode {
            CheckMode::Exhaustive => writeln!(f, "mode exhaustive")?,
            CheckMode::Sampled { seed, budget } => {
                writeln!(f, "mode sampled seed={} budget={}", seed, budget)?
            }
        }
        for item in &self.items {
            writeln!(f, "{}", item)?;
        }
        Ok(())
    }
}
