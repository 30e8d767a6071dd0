//! Exact-arithmetic elimination engine for flag-transitive, point-primitive
//! quasi-symmetric 2-designs (intersection numbers 0 and y, 2 <= y <= 10)
//! whose automorphism group has an exceptional socle of Lie type.
//!
//! Every candidate point stabilizer is reduced to a statement about
//! polynomials in `q` and integers, then closed by exact computation.

pub mod catalog;
pub mod error;
pub mod exactmath;
pub mod groups;
pub mod report;
pub mod scalar;
pub mod sieve;
pub mod special;

pub use error::{Error, Result};
pub use exactmath::{Poly, PrimePower};
pub use groups::Family;
pub use scalar::{Field, Int, Rat, Scalar};

/// Integer polynomial in `q`.
pub type IntPoly = exactmath::Poly<Int>;
/// Rational polynomial in `q`.
pub type RatPoly = exactmath::Poly<Rat>;
