//! Coefficient rings for [`Poly`](crate::exactmath::Poly).
//!
//! Polynomial code only needs ring operations plus a partial division that
//! reports whether a quotient exists. Exact types (`BigInt`, `BigRational`)
//! are what the engine itself uses; the machine types are there for quick
//! numeric experiments.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Zero};

pub trait Scalar: Num + Clone + Neg<Output = Self> + Debug {
    /// `Some(self / rhs)` when the quotient exists in the ring.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

/// Marker for coefficient types where every nonzero element is invertible.
pub trait Field: Scalar {}

macro_rules! int_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                if rhs.is_zero() {
                    return None;
                }
                let (q, r) = self.div_rem(rhs);
                r.is_zero().then_some(q)
            }
        }
    )*};
}

int_scalar!(i32, i64, i128, BigInt);

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                (*rhs != 0.0).then(|| self / rhs)
            }
        }
        impl Field for $t {}
    )*};
}

float_scalar!(f32, f64);

impl<T> Scalar for Ratio<T>
where
    T: Integer + Clone + Neg<Output = T> + Debug,
{
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self.clone() / rhs.clone())
    }
}

impl<T> Field for Ratio<T> where T: Integer + Clone + Neg<Output = T> + Debug {}

pub type Int = BigInt;
pub type Rat = BigRational;
