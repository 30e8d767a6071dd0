//! Exact integer, rational, and polynomial arithmetic.

mod arith;
mod bezout;
mod bounds;
mod poly;

pub use arith::{divisors, exact_root, is_prime_u64, isqrt, p_part, prime_power_stream, PowerConstraint, PrimePower};
pub use bezout::{gcd_bound_multiplier, poly_xgcd, xgcd, Bezout, BezoutCertificate, GcdBound};
pub use bounds::{positive_from, root_bound, taylor_shift};
pub use poly::{IntPoly, Poly, RatPoly};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact Horner evaluation at an integer point.
pub fn eval_poly(p: &RatPoly, q: &BigInt) -> BigRational {
    p.eval(&BigRational::from_integer(q.clone()))
}
