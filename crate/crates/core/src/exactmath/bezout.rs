use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::poly::{IntPoly, Poly, RatPoly};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// `s*F + t*G = h` with `h` monic and the cofactors of minimal degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Bezout<T: Field> {
    pub h: Poly<T>,
    pub s: Poly<T>,
    pub t: Poly<T>,
}

/// Extended Euclid over a field.
///
/// The cofactors produced by the remainder sequence are the unique pair with
/// `deg s < deg G - deg h` and `deg t < deg F - deg h`.
pub fn xgcd<T: Field>(f: &Poly<T>, g: &Poly<T>) -> Result<Bezout<T>> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::domain("xgcd of two zero polynomials"));
    }
    // Remainders are kept monic, which bounds coefficient growth over Q.
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (Poly::one(), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), Poly::one());
    if let Some(lead) = r1.leading().cloned() {
        let inv = T::one() / lead;
        r1 = r1.scale(&inv);
        t1 = t1.scale(&inv);
    }
    while !r1.is_zero() {
        let (quot, rem) = r0.div_rem(&r1)?;
        let mut s2 = &s0 - &(&quot * &s1);
        let mut t2 = &t0 - &(&quot * &t1);
        let mut rem = rem;
        if let Some(lead) = rem.leading().cloned() {
            let inv = T::one() / lead;
            rem = rem.scale(&inv);
            s2 = s2.scale(&inv);
            t2 = t2.scale(&inv);
        }
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let lead = r0.leading().expect("gcd of non-zero input").clone();
    let inv = T::one() / lead;
    Ok(Bezout { h: r0.scale(&inv), s: s0.scale(&inv), t: t0.scale(&inv) })
}

/// Rational Bezout identity together with the denominator multiplier `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct BezoutCertificate {
    pub h: RatPoly,
    pub s: RatPoly,
    pub t: RatPoly,
    /// Least common multiple of every coefficient denominator of `s` and `t`.
    pub c: BigInt,
}

impl BezoutCertificate {
    pub fn verify(&self, f: &RatPoly, g: &RatPoly) -> bool {
        &(&self.s * f) + &(&self.t * g) == self.h
    }
}

pub fn poly_xgcd(f: &RatPoly, g: &RatPoly) -> Result<BezoutCertificate> {
    let Bezout { h, s, t } = xgcd(f, g)?;
    let c = s.denominator_lcm().lcm(&t.denominator_lcm());
    Ok(BezoutCertificate { h, s, t, c })
}

/// Integer form of the gcd bound: for every integer `q0`,
/// `gcd(F(q0), G(q0))` divides `c * h_int(q0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GcdBound {
    pub c: BigInt,
    pub h_int: IntPoly,
    pub certificate: BezoutCertificate,
}

/// Clears denominators in the Bezout identity of two integer polynomials.
///
/// `c*s` and `c*t` are integral, so `c*h = (c*s)F + (c*t)G` is an integer
/// polynomial; its content is folded into the returned multiplier and its
/// primitive part is `h_int`.
pub fn gcd_bound_multiplier(f: &IntPoly, g: &IntPoly) -> Result<GcdBound> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::domain("gcd bound needs two nonzero polynomials"));
    }
    let cert = poly_xgcd(&f.to_rational(), &g.to_rational())?;
    let scaled = cert
        .h
        .scale(&num_rational::BigRational::from_integer(cert.c.clone()))
        .to_integer()
        .ok_or_else(|| Error::domain("c*h is not integral"))?;
    let (content, h_int) = scaled.primitive_part();
    debug_assert!(content > BigInt::zero());
    Ok(GcdBound { c: content, h_int, certificate: cert })
}

impl GcdBound {
    /// `c * h_int(q0)`
    pub fn bound_at(&self, q0: &BigInt) -> BigInt {
        &self.c * self.h_int.eval(q0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;

    fn is_unit(p: &RatPoly) -> bool {
        p.degree() == Some(0) && p.coeff(0).is_one()
    }

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn coprime_pair_has_integral_cofactors() {
        let f = ip(&[-1, 1]).to_rational();
        let g = ip(&[0, 0, 1]).to_rational();
        let cert = poly_xgcd(&f, &g).unwrap();
        assert!(is_unit(&cert.h));
        assert!(cert.verify(&f, &g));
        assert_eq!(cert.c, BigInt::one());
        // s = -(q+1), t = 1
        assert_eq!(cert.s, ip(&[-1, -1]).to_rational());
        assert_eq!(cert.t, ip(&[1]).to_rational());
    }

    #[test]
    fn equal_inputs_give_monic_input() {
        let f = ip(&[2, 0, 2]).to_rational();
        let cert = poly_xgcd(&f, &f).unwrap();
        assert_eq!(cert.h, ip(&[1, 0, 1]).to_rational());
        assert!(cert.verify(&f, &f));
    }

    #[test]
    fn zero_inputs() {
        assert!(poly_xgcd(&RatPoly::zero(), &RatPoly::zero()).is_err());
        let g = ip(&[3, 3]).to_rational();
        let cert = poly_xgcd(&RatPoly::zero(), &g).unwrap();
        assert_eq!(cert.h, ip(&[1, 1]).to_rational());
        assert_eq!(cert.t, RatPoly::constant(BigRational::new(1.into(), 3.into())));
        assert!(gcd_bound_multiplier(&IntPoly::zero(), &ip(&[1])).is_err());
    }

    #[test]
    fn divisor_pair() {
        let b = gcd_bound_multiplier(&ip(&[0, 0, 1]), &ip(&[0, 0, 0, 1])).unwrap();
        assert_eq!(b.c, BigInt::one());
        assert_eq!(b.h_int, ip(&[0, 0, 1]));
    }

    #[test]
    fn f4_by_3d4_reproduces_549() {
        let m = |n| IntPoly::x_pow_minus_one(n);
        let q12 = IntPoly::monomial(BigInt::one(), 12);
        // 3(v-1) with v = q^12(q^8-1)(q^4-1)/3
        let f = &(&(&q12 * &m(8)) * &m(4)) - &IntPoly::constant(BigInt::from(3));
        let h8 = IntPoly::from_i64(&[1, 0, 0, 0, 1, 0, 0, 0, 1]);
        let g = &(&(&(&q12 * &h8) * &m(6)) * &m(2)) * &IntPoly::constant(BigInt::from(3));
        let b = gcd_bound_multiplier(&f, &g).unwrap();
        assert_eq!(b.h_int, h8);
        assert_eq!(b.c, BigInt::from(549));
        assert_eq!(b.certificate.c, BigInt::from(549));
        assert!(b.certificate.verify(&f.to_rational(), &g.to_rational()));
        // leading cofactor coefficient printed in the worked example: -5/183 q^18
        assert_eq!(b.certificate.s.degree(), Some(18));
        assert_eq!(b.certificate.s.coeff(18), BigRational::new(BigInt::from(-5), BigInt::from(183)));
        assert_eq!(b.certificate.t.degree(), Some(14));
    }
}
