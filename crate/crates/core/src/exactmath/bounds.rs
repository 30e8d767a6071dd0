use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;

/// An integer `B` exceeding the modulus of every complex root (Fujiwara).
/// `None` for constant or zero polynomials.
pub fn root_bound(p: &IntPoly) -> Option<BigInt> {
    let n = p.degree().filter(|&d| d > 0)?;
    let lead = p.leading()?.abs();
    let mut best = BigInt::one();
    for i in 1..=n {
        let a = p.coeff(n - i).abs();
        if a.is_zero() {
            continue;
        }
        let ratio = (&a + &lead - BigInt::one()) / &lead;
        let mut b = ratio.nth_root(i as u32);
        if num_traits::pow(b.clone(), i) < ratio {
            b += 1;
        }
        if b > best {
            best = b;
        }
    }
    Some(best * 2 + 1)
}

/// `p(x + a)` expanded.
pub fn taylor_shift(p: &IntPoly, a: &BigInt) -> IntPoly {
    let mut c: Vec<BigInt> = p.coeffs().to_vec();
    let n = c.len();
    for i in 0..n {
        for j in (i..n.saturating_sub(1)).rev() {
            let t = &c[j + 1] * a;
            c[j] += t;
        }
    }
    IntPoly::new(c)
}

fn shift_is_nonnegative(p: &IntPoly, a: &BigInt) -> bool {
    let s = taylor_shift(p, a);
    s.coeff(0).is_positive() && s.coeffs().iter().all(|c| !c.is_negative())
}

/// An integer `x0 >= from` such that `p(x) > 0` for every integer `x >= x0`,
/// or `None` if the leading coefficient is not positive.
///
/// `x0` is the least `a >= from` for which `p(x + a)` has nonnegative
/// coefficients and a positive constant term, which may exceed the last root.
pub fn positive_from(p: &IntPoly, from: &BigInt) -> Option<BigInt> {
    if !p.leading()?.is_positive() {
        return None;
    }
    if shift_is_nonnegative(p, from) {
        return Some(from.clone());
    }
    let mut hi = root_bound(p)?.max(from.clone() + 1);
    while !shift_is_nonnegative(p, &hi) {
        hi *= 2;
    }
    let mut lo = from.clone();
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        if shift_is_nonnegative(p, &mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}
