//! Orders and outer-automorphism orders of the exceptional groups of Lie
//! type, plus the classical groups that appear inside their subgroups.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{IntPoly, PrimePower};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// ²B₂, Suzuki groups
    B2Twisted,
    /// ²G₂, small Ree groups
    G2Twisted,
    /// ³D₄, triality twist
    D4Triality,
    /// ²F₄, large Ree groups
    F4Twisted,
    G2,
    F4,
    E6,
    /// ²E₆
    E6Twisted,
    E7,
    E8,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::B2Twisted,
        Family::G2Twisted,
        Family::D4Triality,
        Family::F4Twisted,
        Family::G2,
        Family::F4,
        Family::E6,
        Family::E6Twisted,
        Family::E7,
        Family::E8,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::B2Twisted => "2B2",
            Family::G2Twisted => "2G2",
            Family::D4Triality => "3D4",
            Family::F4Twisted => "2F4",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E6Twisted => "2E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }

    /// Order of the universal version as a polynomial in `q`.
    pub fn order_poly(self) -> IntPoly {
        let m = IntPoly::x_pow_minus_one;
        let pl = IntPoly::x_pow_plus_one;
        let qn = |n| IntPoly::monomial(BigInt::one(), n);
        let prod = |n: usize, fs: Vec<IntPoly>| fs.iter().fold(qn(n), |acc, f| &acc * f);
        match self {
            Family::B2Twisted => prod(2, vec![pl(2), m(1)]),
            Family::G2Twisted => prod(3, vec![pl(3), m(1)]),
            Family::D4Triality => prod(12, vec![phi12_3(), m(6), m(2)]),
            Family::F4Twisted => prod(12, vec![pl(6), m(4), pl(3), m(1)]),
            Family::G2 => prod(6, vec![m(6), m(2)]),
            Family::F4 => prod(24, vec![m(2), m(6), m(8), m(12)]),
            Family::E6 => prod(36, vec![m(2), m(5), m(6), m(8), m(9), m(12)]),
            Family::E6Twisted => prod(36, vec![m(2), pl(5), m(6), m(8), pl(9), m(12)]),
            Family::E7 => prod(63, [2, 6, 8, 10, 12, 14, 18].map(m).to_vec()),
            Family::E8 => prod(120, [2, 8, 12, 14, 18, 20, 24, 30].map(m).to_vec()),
        }
    }

    /// `d(q)` with simple order `order_poly(q) / d(q)`.
    pub fn center_divisor(self, q: &PrimePower) -> u64 {
        match self {
            Family::E6 => (q.q - 1).gcd(&3),
            Family::E6Twisted => (q.q + 1).gcd(&3),
            Family::E7 => (q.q - 1).gcd(&2),
            _ => 1,
        }
    }

    pub fn valid_q(self, q: &PrimePower) -> bool {
        match self {
            Family::B2Twisted => q.p == 2 && q.f % 2 == 1 && q.q >= 8,
            Family::G2Twisted => q.p == 3 && q.f % 2 == 1 && q.q >= 27,
            Family::F4Twisted => q.p == 2 && q.f % 2 == 1,
            Family::G2 => q.q >= 3,
            _ => true,
        }
    }

    fn check(self, q: &PrimePower) -> Result<()> {
        if self.valid_q(q) {
            Ok(())
        } else {
            Err(Error::domain(format!("{}({}) is not a simple group", self.tag(), q.q)))
        }
    }

    /// Order of the simple group at `q`.
    pub fn order_of(self, q: &PrimePower) -> Result<BigInt> {
        self.check(q)?;
        Ok(self.universal_order(q) / BigInt::from(self.center_divisor(q)))
    }

    /// Universal-version order; no validity check, used for subfield subgroups.
    pub fn universal_order(self, q: &PrimePower) -> BigInt {
        self.order_poly().eval(&q.q_big())
    }

    /// `|Out(X)|`.
    pub fn out_order(self, q: &PrimePower) -> Result<u64> {
        self.check(q)?;
        let f = u64::from(q.f);
        Ok(match self {
            Family::B2Twisted | Family::G2Twisted | Family::F4Twisted | Family::E8 => f,
            Family::D4Triality => 3 * f,
            Family::G2 => {
                if q.p == 3 {
                    2 * f
                } else {
                    f
                }
            }
            Family::F4 => {
                if q.p == 2 {
                    2 * f
                } else {
                    f
                }
            }
            Family::E6 => 2 * f * (q.q - 1).gcd(&3),
            Family::E6Twisted => 2 * f * (q.q + 1).gcd(&3),
            Family::E7 => f * (q.q - 1).gcd(&2),
        })
    }

    /// The maximum of `|Out(X(q))| / f` over all valid `q = p^f`.
    pub fn out_per_field_degree(self) -> u64 {
        match self {
            Family::B2Twisted | Family::G2Twisted | Family::F4Twisted | Family::E8 => 1,
            Family::G2 | Family::F4 | Family::E7 => 2,
            Family::D4Triality => 3,
            Family::E6 | Family::E6Twisted => 6,
        }
    }

    /// Lie rank of the untwisted ambient type.
    pub fn untwisted_rank(self) -> usize {
        match self {
            Family::B2Twisted | Family::G2Twisted | Family::G2 => 2,
            Family::D4Triality | Family::F4Twisted | Family::F4 => 4,
            Family::E6 | Family::E6Twisted => 6,
            Family::E7 => 7,
            Family::E8 => 8,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain(format!("unknown family `{s}`")))
    }
}

/// `q^8 + q^4 + 1`
pub fn phi12_3() -> IntPoly {
    IntPoly::from_i64(&[1, 0, 0, 0, 1, 0, 0, 0, 1])
}

/// Order of the Tits group ²F₄(2)′.
pub const TITS_ORDER: u64 = 17_971_200;
/// `|Out(²F₄(2)′)|`
pub const TITS_OUT: u64 = 2;

/// Orders of the classical groups (universal versions) as polynomials in `q`.
pub mod classical {
    use super::*;

    fn q_pow(n: usize) -> IntPoly {
        IntPoly::monomial(BigInt::one(), n)
    }

    /// `|SL(n, q)|` for `eps = 1`, `|SU(n, q)|` for `eps = -1`.
    pub fn sl_eps(n: usize, eps: i8) -> IntPoly {
        let mut acc = q_pow(n * (n - 1) / 2);
        for i in 2..=n {
            let sign = if eps < 0 && i % 2 == 1 { 1 } else { -1 };
            let f = &q_pow(i) + &IntPoly::from_i64(&[sign]);
            acc = &acc * &f;
        }
        acc
    }

    pub fn sl(n: usize) -> IntPoly {
        sl_eps(n, 1)
    }

    pub fn su(n: usize) -> IntPoly {
        sl_eps(n, -1)
    }

    /// `|Sp(2n, q)|`, also the order of `Spin(2n+1, q)`.
    pub fn sp(n: usize) -> IntPoly {
        (1..=n).fold(q_pow(n * n), |acc, i| &acc * &IntPoly::x_pow_minus_one(2 * i))
    }

    /// `|Spin^eps(2n, q)|`
    pub fn spin_even(n: usize, eps: i8) -> IntPoly {
        let top = if eps < 0 { IntPoly::x_pow_plus_one(n) } else { IntPoly::x_pow_minus_one(n) };
        (1..n).fold(&q_pow(n * (n - 1)) * &top, |acc, i| &acc * &IntPoly::x_pow_minus_one(2 * i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{prime_power_stream, PowerConstraint};

    fn pp(q: u64) -> PrimePower {
        PrimePower::from_q(q).unwrap()
    }

    #[test]
    fn product_forms() {
        assert_eq!(Family::B2Twisted.order_poly(), IntPoly::from_i64(&[0, 0, -1, 1, -1, 1]));
        assert_eq!(Family::G2.order_poly().eval_i64(3), BigInt::from(4_245_696u64));
        assert_eq!(Family::D4Triality.order_poly().eval_i64(2), BigInt::from(211_341_312u64));
        assert_eq!(Family::F4Twisted.order_poly().eval_i64(2), BigInt::from(35_942_400u64));
        assert_eq!(Family::F4.order_poly().eval_i64(2), "3311126603366400".parse::<BigInt>().unwrap());
        assert_eq!(Family::E6Twisted.order_of(&pp(2)).unwrap(), "76532479683774853939200".parse::<BigInt>().unwrap());
        assert_eq!(Family::E6.order_of(&pp(2)).unwrap(), "214841575522005575270400".parse::<BigInt>().unwrap());
        assert_eq!(
            Family::E7.order_of(&pp(2)).unwrap(),
            "7997476042075799759100487262680802918400".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn center_divides_for_small_q() {
        for q in prime_power_stream(PowerConstraint::All, 100) {
            for fam in Family::ALL {
                if !fam.valid_q(&q) {
                    continue;
                }
                let u = fam.universal_order(&q);
                let d = BigInt::from(fam.center_divisor(&q));
                assert!((&u % &d) == BigInt::from(0), "{fam} at {}", q.q);
                assert!(fam.order_of(&q).unwrap() > BigInt::from(0));
            }
        }
    }

    #[test]
    fn out_orders() {
        assert_eq!(Family::F4.out_order(&pp(9)).unwrap(), 2);
        assert_eq!(Family::E8.out_order(&pp(2)).unwrap(), 1);
        assert_eq!(Family::E6Twisted.out_order(&pp(2)).unwrap(), 6);
        assert_eq!(Family::E6.out_order(&pp(4)).unwrap(), 12);
        assert_eq!(Family::E7.out_order(&pp(3)).unwrap(), 2);
        assert_eq!(Family::D4Triality.out_order(&pp(2)).unwrap(), 3);
        assert_eq!(Family::G2.out_order(&pp(3)).unwrap(), 2);
        for q in prime_power_stream(PowerConstraint::All, 200) {
            let two_p = if q.p == 2 { 2 } else { 1 };
            assert_eq!(Family::F4.out_order(&q).unwrap(), two_p * u64::from(q.f));
            if q.q >= 3 {
                assert!(Family::G2.out_order(&q).unwrap() <= 2 * u64::from(q.f));
            }
        }
        assert!(Family::G2.out_order(&pp(2)).is_err());
        for q in prime_power_stream(PowerConstraint::All, 1000) {
            for fam in Family::ALL.into_iter().filter(|f| f.valid_q(&q)) {
                let per_f = fam.out_order(&q).unwrap() / u64::from(q.f);
                assert!(per_f <= fam.out_per_field_degree(), "{fam} at {}", q.q);
            }
        }
    }

    #[test]
    fn validity() {
        assert!(Family::B2Twisted.valid_q(&pp(8)));
        assert!(!Family::B2Twisted.valid_q(&pp(2)));
        assert!(!Family::B2Twisted.valid_q(&pp(16)));
        assert!(!Family::G2.valid_q(&pp(2)));
        assert!(!Family::G2Twisted.valid_q(&pp(9)));
        assert!(Family::G2Twisted.valid_q(&pp(27)));
        assert!(Family::F4Twisted.valid_q(&pp(2)));
        assert!(Family::E8.valid_q(&pp(2)));
        assert!(Family::G2.order_of(&pp(2)).is_err());
    }

    #[test]
    fn classical_orders() {
        assert_eq!(classical::sl(2).eval_i64(5), BigInt::from(120));
        assert_eq!(classical::su(3).eval_i64(8), BigInt::from(16_547_328));
        assert_eq!(classical::sp(2).eval_i64(2), BigInt::from(720));
        assert_eq!(classical::spin_even(4, 1).eval_i64(2), BigInt::from(174_182_400u64));
        assert_eq!(classical::spin_even(4, -1).eval_i64(2), BigInt::from(197_406_720u64));
    }

    #[test]
    fn tags_round_trip() {
        for fam in Family::ALL {
            assert_eq!(fam.tag().parse::<Family>().unwrap(), fam);
        }
        assert!("H4".parse::<Family>().is_err());
    }
}
