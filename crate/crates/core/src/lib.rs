//! The two-generator Frobenius problem of the first kind in `Z[√m]`.
//!
//! For generators `α₁, α₂ ∈ N[√m] \ {0}` the semigroup `SG(α₁, α₂)` is the
//! set of combinations `λ₁α₁ + λ₂α₂` with `λᵢ ∈ N[√m]`, and the Frobenius
//! set is `Frob(α₁, α₂) = {w : w + N[√m] ⊆ SG(α₁, α₂)}`. When the pair
//! spans 1 and at least one generator has a vanishing part,
//!
//! ```text
//! Frob(α₁, α₂) = (α₁ − 1)(α₂ − 1)(1 + √m) + N[√m].
//! ```
//!
//! The crate is `no_std` (it needs `alloc`) and uses checked `i128`
//! arithmetic throughout; overflow surfaces as [`Error::Overflow`].
//!
//! ```
//! use frobq_core::{classify, frobenius_set, FrobResult, QuadInt, RingContext};
//!
//! let ctx = RingContext::new(2).unwrap();
//! let pair = classify(QuadInt::new(3, 0), QuadInt::new(1, 1), ctx).unwrap();
//! assert_eq!(frobenius_set(&pair).unwrap(), FrobResult::Cone(QuadInt::new(4, 2)));
//! ```
//!
//! The second-kind problem (coefficients in `Z[√m] ∩ [0, ∞)`) is not
//! handled here: for a spanning family its Frobenius set is the whole
//! nonnegative half of the ring.
#![no_std]

extern crate alloc;

pub mod diophantine;
pub mod error;
pub mod frobenius;
pub mod membership;
pub mod oracle;
pub mod quad;

pub use diophantine::{CanonicalSolution, Case, MixedSystem, Solution4};
pub use error::{Error, Result};
pub use frobenius::{
    classify, corner_product, formula_member, frobenius_set, lattice_spans_one,
    representable_above, spans_one, FrobResult, GeneratorPair, GeneratorTag,
};
pub use membership::{
    certificate_check, coin_decompose, coin_member, member_mixed, member_split, Certificate,
    MembershipResult, SplitShape,
};
pub use oracle::{
    check_point, falsify_frontier, oracle_member, verify_box, verify_region, RegionReport,
    RegionRow, TargetBox, WitnessEntry, WitnessFamily, WitnessReport,
};
pub use quad::{egcd, floor_divmod, gcd, is_nonsquare, EgcdResult, QuadInt, RingContext};
