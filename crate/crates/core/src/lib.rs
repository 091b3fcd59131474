//! Exact arithmetic for layered tropical polynomial semirings.
//!
//! The semiring elements are pairs `value^[layer]`: a tangible value in the
//! max-plus rationals together with a sorting layer. Three layer structures
//! are supported (`SemiringMode`): plain max-plus (`{1}`), the standard
//! supertropical ghost extension (`{1, ∞}`), and exact rational layers
//! (`ℚ≥1 ∪ {∞}`). On top of the scalars the crate builds polynomial maps,
//! essential-support analysis, corner/ghost loci, binomial lattice reduction,
//! factorization and division with machine-checked certificates, and the
//! valuation bridge from classical Puiseux-series polynomials.
//!
//! Everything is exact: values and layers are arbitrary-precision rationals,
//! and every feasibility or comparison decision is made symbolically, never
//! with floating point.

pub mod scalar;
pub mod poly;
pub mod feasibility;
pub mod compare;
pub mod geometry;
pub mod lattice;
pub mod factor;
pub mod puiseux;
pub mod parse;
pub mod record;
pub mod error;

pub use error::Error;
pub use scalar::{Layer, LayeredScalar, SemiringMode};
pub use poly::{ExponentMode, TropPoly};

/// Exact rational scalar used for values, layers, and exponents.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for integer-valued rationals.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Convenience constructor for `p/q` rationals. Panics if `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}
