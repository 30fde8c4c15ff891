//! Exact-arithmetic Lie pairs over commutative semirings.
//!
//! A *pair* `(L, L0)` is a module `L` with a distinguished null submodule `L0`
//! standing in for zero: every axiom of the theory is a membership statement
//! `… ∈ L0` rather than an equation `… = 0`. This crate provides
//!
//! * the base semirings (naturals, booleans, max-plus over exact rationals,
//!   nonnegative rationals, integers, finite tables) and their law checker,
//! * free modules over a base pair, null submodules with exact membership
//!   oracles, the surpassing relation, pre-negation maps and Weak Property N,
//! * structure-constant Lie brackets with full axiom verification,
//! * the construction catalog (commutator pairs, involution pairs, classical
//!   families, cross products, filiform pairs, Krasner set models),
//! * the doubling functor (twist product, switch negation, identity transfer),
//! * truncated tensor pairs and the three enveloping presentations.
//!
//! All arithmetic is exact; there is no floating point anywhere.
//!
//! ```
//! use tropical_lie_core::lie::{check_lie_axioms, LieFlags, LiePairDef};
//! use tropical_lie_core::{
//!     BasePair, ModuleElement, NullModel, PairDef, Scalar, SemiringSpec, StructureConstants,
//!     Submodule,
//! };
//!
//! // the standard 3-dimensional filiform pair over the naturals:
//! // [x1 x2] = x3 = [x2 x1], null generated by 2·x3
//! let spec = SemiringSpec::Naturals;
//! let elem = |coeffs: &[u64]| {
//!     ModuleElement::new(
//!         spec.clone(),
//!         coeffs.iter().map(|&c| Scalar::nat(c)).collect(),
//!     )
//!     .unwrap()
//! };
//! let mut table = vec![vec![ModuleElement::zero(&spec, 3); 3]; 3];
//! table[0][1] = elem(&[0, 0, 1]);
//! table[1][0] = elem(&[0, 0, 1]);
//! let sc = StructureConstants::new(3, table)?;
//! let null = NullModel::Span(Submodule::closed(3, vec![elem(&[0, 0, 2])]));
//! let pair = PairDef::new(BasePair::zero_only(spec), 3, null)?;
//! let lp = LiePairDef::new(pair, sc, LieFlags::default())?;
//!
//! let report = check_lie_axioms(&lp, 32)?;
//! assert!(report.all_pass());
//! # Ok::<(), tropical_lie_core::Error>(())
//! ```

pub mod constructions;
pub mod doubling;
pub mod krasner;
pub mod lie;
pub mod module_pairs;
pub mod pbw;
pub mod report;
pub mod rng;
pub mod semiring;
pub mod tensor;

pub use lie::{AdjointMatrix, LieFlags, LiePairDef, StructureConstants};
pub use module_pairs::{
    InWitness, MembershipVerdict, ModuleElement, NegationSpec, NullModel, PairDef, ProductTable,
    Submodule,
};
pub use report::{CheckItem, CheckReport, LawReport, Verdict};
pub use semiring::{BasePair, CNull, Error, FiniteTable, Scalar, SemiringSpec};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, semiring::Error>;

#[cfg(test)]
mod concurrency {
    // every value is immutable after construction and every operation is a
    // pure function; shared use across threads needs the types to be
    // Send + Sync, asserted here at compile time
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_send_and_sync() {
        assert_send_sync::<crate::semiring::SemiringSpec>();
        assert_send_sync::<crate::semiring::Scalar>();
        assert_send_sync::<crate::semiring::BasePair>();
        assert_send_sync::<crate::module_pairs::ModuleElement>();
        assert_send_sync::<crate::module_pairs::Submodule>();
        assert_send_sync::<crate::module_pairs::NullModel>();
        assert_send_sync::<crate::module_pairs::PairDef>();
        assert_send_sync::<crate::lie::LiePairDef>();
        assert_send_sync::<crate::report::CheckReport>();
        assert_send_sync::<crate::krasner::KrasnerPairModel>();
    }
}
