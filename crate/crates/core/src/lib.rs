//! Exact decision procedures for obstructions to the retract rationality of
//! invariant fields `k(G)`, where `G` is a finite group and `k` is either `ℚ`
//! or a quadratic field `ℚ(√d)`.
//!
//! Two sufficient criteria are implemented:
//!
//! * **cyclic 2-power quotient** (tag `"1.2"`): `G` surjects onto `C_{2^n}`
//!   for some `n ≥ 3` and `k(ζ_{2^n})/k` is not cyclic;
//! * **quaternion Sylow** (tag `"1.5"`): the 2-Sylow subgroup of `G` is the
//!   generalized quaternion group `Q₁₆` and both `3⟨1⟩⊥⟨−7⟩` and `8⟨1⟩` are
//!   anisotropic over `k`.
//!
//! Everything below the verdict is exact: arbitrary-precision rationals,
//! Hilbert symbols at every place of `ℚ`, Hasse–Minkowski decisions over `ℚ`
//! and `ℚ(√d)`, fully enumerated finite groups, and Galois groups of
//! 2-power cyclotomic extensions as subgroups of `(ℤ/2ⁿ)ˣ`.

pub mod error;
pub mod exact;
pub mod galois;
pub mod groups;
pub mod localfields;
pub mod oracle;
pub mod quadforms;
pub mod report;
pub mod verdict;

pub use error::{Error, Result};
pub use exact::{FieldDescriptor, QuadFieldElem, Rational};
pub use galois::{BaileyGroup, BrauerClass2, UnitSubgroup2n};
pub use groups::{FiniteGroupTable, GroupSpec, Permutation, Subgroup};
pub use localfields::{DiagonalForm, Place};
pub use quadforms::{Decision, FormInvariants, IsotropyOutcome, Level};
pub use report::Report;
pub use verdict::{verdict, Criterion, Outcome, Verdict, Witness};
