use num_bigint::BigInt;

use super::{Ambient, QRule, SubgroupCase, SubgroupOrder};
use crate::exactmath::IntPoly;
use crate::groups::classical::{sl, sp, spin_even, su};
use crate::groups::Family;

/// `k * q^n * prod (q^d - 1) * prod (q^e + 1)`
fn qpoly(k: i64, n: usize, minus: &[usize], plus: &[usize]) -> IntPoly {
    let mut acc = IntPoly::monomial(BigInt::from(k), n);
    for &d in minus {
        acc = &acc * &IntPoly::x_pow_minus_one(d);
    }
    for &e in plus {
        acc = &acc * &IntPoly::x_pow_plus_one(e);
    }
    acc
}

fn k(c: i64) -> IntPoly {
    IntPoly::constant(BigInt::from(c))
}

fn mul(fs: &[IntPoly]) -> IntPoly {
    IntPoly::product(fs)
}

/// `q - eps`
fn q_minus(eps: i64) -> IntPoly {
    IntPoly::from_i64(&[-eps, 1])
}

/// `q^2 + eps*q + 1`
fn q2_eps_q_1(eps: i64) -> IntPoly {
    IntPoly::from_i64(&[1, eps, 1])
}

struct Rows {
    out: Vec<SubgroupCase>,
}

impl Rows {
    fn push(&mut self, ambient: Ambient, key: &str, desc: &str, order: SubgroupOrder, rule: QRule) {
        self.out.push(SubgroupCase {
            id: format!("{}:{key}", ambient.tag()),
            ambient,
            subgroup: desc.to_string(),
            order,
            rule,
        });
    }

    fn poly(&mut self, fam: Family, key: &str, desc: &str, order: IntPoly, rule: QRule) {
        let order = SubgroupOrder::Poly { order, center_free: false };
        self.push(Ambient::Lie(fam), key, desc, order, rule);
    }

    /// Subgroup meeting the centre of the universal group trivially.
    fn poly_cf(&mut self, fam: Family, key: &str, desc: &str, order: IntPoly, rule: QRule) {
        let order = SubgroupOrder::Poly { order, center_free: true };
        self.push(Ambient::Lie(fam), key, desc, order, rule);
    }

    fn subfield(&mut self, fam: Family, sub: Family, r: u32, min_q0: u64) {
        let key = format!("{}(q^1/{r})", sub.tag());
        let order = SubgroupOrder::Subfield { sub, r, min_q0 };
        self.push(Ambient::Lie(fam), &key, &key, order, QRule::Valid);
    }

    fn fixed(&mut self, ambient: Ambient, key: &str, desc: &str, at: &[(u64, u64)]) {
        let values = at.iter().map(|&(q, o)| (q, BigInt::from(o))).collect();
        self.push(ambient, key, desc, SubgroupOrder::Fixed(values), QRule::Valid);
    }

    fn fixed_big(&mut self, ambient: Ambient, key: &str, desc: &str, q: u64, order: &str) {
        let values = vec![(q, order.parse().expect("decimal order"))];
        self.push(ambient, key, desc, SubgroupOrder::Fixed(values), QRule::Valid);
    }
}

pub(super) fn all_rows() -> Vec<SubgroupCase> {
    use Family::*;
    let lie = Ambient::Lie;
    let mut t = Rows { out: Vec::new() };

    t.fixed(lie(B2Twisted), "(q+sqrt(2q)+1):4", "(q+sqrt(2q)+1):4", &[(8, 52), (32, 164)]);
    t.subfield(B2Twisted, B2Twisted, 3, 8);

    t.poly(G2Twisted, "A1", "2 x L2(q)", qpoly(1, 1, &[2], &[]), QRule::Valid);
    t.subfield(G2Twisted, G2Twisted, 3, 3);

    t.poly(D4Triality, "A1(q^3)A1(q)", "A1(q^3)A1(q)", qpoly(1, 4, &[6, 2], &[]), QRule::Valid);
    for eps in [1i64, -1] {
        let (key, desc) = if eps > 0 { ("(q^2+q+1)A2", "(q^2+q+1)A2(q)") } else { ("(q^2-q+1)2A2", "(q^2-q+1)2A2(q)") };
        let order = &(&q2_eps_q_1(eps) * &sl_or_su(3, eps)) * &k(2);
        t.poly(D4Triality, key, desc, order, QRule::Valid);
    }
    t.poly(D4Triality, "G2", "G2(q)", G2.order_poly(), QRule::Valid);
    t.subfield(D4Triality, D4Triality, 2, 2);
    t.fixed(lie(D4Triality), "7^2:SL(2,3)", "7^2:SL(2,3)", &[(2, 1176)]);

    let ree = QRule::MinQ(8);
    t.poly(F4Twisted, "2B2wr2", "2B2(q) wr 2", qpoly(2, 4, &[1, 1], &[2, 2]), ree.clone());
    t.poly(F4Twisted, "B2:2", "B2(q):2", qpoly(2, 4, &[2, 4], &[]), ree.clone());
    t.subfield(F4Twisted, F4Twisted, 3, 2);
    t.fixed(lie(F4Twisted), "SU(3,8):2", "SU(3,8):2", &[(8, 33_094_656)]);
    t.fixed(lie(F4Twisted), "PGU(3,8):2", "PGU(3,8):2", &[(8, 33_094_656)]);
    t.fixed(Ambient::Tits, "A2(3):2", "L3(3):2", &[(2, 11_232)]);
    t.fixed(Ambient::Tits, "A1(25)", "L2(25)", &[(2, 7_800)]);
    t.fixed(Ambient::Tits, "A6.2^2", "A6.2^2", &[(2, 1_440)]);
    t.fixed(Ambient::Tits, "5^2:4A4", "5^2:4A4", &[(2, 1_200)]);

    t.poly(G2, "A2+", "SL(3,q):2", &sl(3) * &k(2), QRule::Valid);
    t.poly(G2, "A2-", "SU(3,q):2", &su(3) * &k(2), QRule::Valid);
    t.poly(G2, "A1^2", "A1(q)^2", qpoly(1, 2, &[2, 2], &[]), QRule::Valid);
    t.subfield(G2, G2, 2, 2);
    t.subfield(G2, G2, 3, 2);
    t.poly(G2, "2G2", "2G2(q)", G2Twisted.order_poly(), QRule::OddPower(3));
    t.fixed(lie(G2), "G2(2)", "G2(2)", &[(5, 12_096), (7, 12_096)]);
    t.fixed(lie(G2), "A1(13)", "L2(13)", &[(4, 1_092)]);
    t.fixed(lie(G2), "J2", "J2", &[(4, 604_800)]);
    t.fixed(lie(G2), "J1", "J1", &[(11, 175_560)]);
    t.fixed(lie(G2), "2^3.A2(2)", "2^3.L3(2)", &[(3, 1_344), (5, 1_344)]);

    t.poly(F4, "B4", "Spin(9,q)", sp(4), QRule::Valid);
    t.poly(F4, "D4", "Spin+(8,q).S3", &spin_even(4, 1) * &k(6), QRule::Valid);
    t.poly(F4, "3D4", "3D4(q).3", &D4Triality.order_poly() * &k(3), QRule::Valid);
    t.subfield(F4, F4, 2, 2);
    t.subfield(F4, F4, 3, 2);
    t.poly(F4, "A1C3", "A1(q)C3(q)", &sl(2) * &sp(3), QRule::CharNot(2));
    t.poly(F4, "C4", "C4(q)", sp(4), QRule::CharIs(2));
    t.poly(F4, "C2(q^2)", "C2(q^2).2", &sp(2).substitute_power(2) * &k(2), QRule::CharIs(2));
    t.poly(F4, "C2^2", "C2(q)^2.2", mul(&[sp(2), sp(2), k(2)]), QRule::CharIs(2));
    t.poly(F4, "2F4", "2F4(q)", F4Twisted.order_poly(), QRule::OddPower(2));
    t.fixed(lie(F4), "3D4(2)", "3D4(2).3", &[(3, 634_023_936)]);
    t.fixed(lie(F4), "A9", "A9", &[(2, 181_440)]);
    t.fixed(lie(F4), "A10", "A10", &[(2, 1_814_400)]);
    t.fixed(lie(F4), "A3(3)", "L4(3).2", &[(2, 12_130_560)]);
    t.fixed(lie(F4), "J2", "J2", &[(2, 604_800)]);
    t.fixed(lie(F4), "S6wrS2", "S6 wr S2", &[(2, 1_036_800)]);
    t.poly(F4, "A1G2", "A1(q)G2(q)", &sl(2) * &G2.order_poly(), QRule::OddAbove(3));

    for (fam, eps) in [(E6, 1i64), (E6Twisted, -1)] {
        let tw = if eps > 0 { "" } else { "2" };
        let a5 = sl_or_su(6, eps);
        t.poly(fam, &format!("A1{tw}A5"), &format!("A1(q){tw}A5(q)"), &sl(2) * &a5, QRule::Valid);
        t.poly_cf(fam, "F4", "F4(q)", F4.order_poly(), QRule::Valid);
        t.poly_cf(fam, "C4", "PSp(8,q).2", sp(4), QRule::CharNot(2));
        let d4 = mul(&[q_minus(eps), q_minus(eps), spin_even(4, 1), k(6)]);
        let d4_rule = if eps > 0 { QRule::Except(2) } else { QRule::Valid };
        let key = if eps > 0 { "(q-1)^2.D4" } else { "(q+1)^2.D4" };
        t.poly(fam, key, &format!("{key}(q).S3"), d4, d4_rule);
        let t3 = mul(&[q2_eps_q_1(eps), D4Triality.order_poly(), k(3)]);
        let t3_rule = if eps > 0 { QRule::Valid } else { QRule::Except(2) };
        let key = format!("(q^2{}q+1).3D4", if eps > 0 { "+" } else { "-" });
        t.poly(fam, &key, &format!("{key}(q).3"), t3, t3_rule);
    }
    t.poly(E6Twisted, "(q+1)2D5", "(q+1).2D5(q)", &q_minus(-1) * &spin_even(5, -1), QRule::Valid);
    t.subfield(E6, E6, 2, 2);
    t.subfield(E6, E6Twisted, 2, 2);
    t.subfield(E6, E6, 3, 2);
    t.subfield(E6Twisted, E6Twisted, 3, 2);
    let e2 = Ambient::Lie(E6Twisted);
    t.fixed(e2, "J3", "J3", &[(2, 50_232_960)]);
    t.fixed(e2, "A12", "A12", &[(2, 239_500_800)]);
    t.fixed(e2, "B3(3)", "O7(3)", &[(2, 4_585_351_680)]);
    t.fixed_big(e2, "Fi22", "Fi22", 2, "64561751654400");

    t.poly(E7, "(q-1)E6", "(q-1).E6(q).2", mul(&[q_minus(1), E6.order_poly(), k(2)]), QRule::Valid);
    t.poly(E7, "(q+1)2E6", "(q+1).2E6(q).2", mul(&[q_minus(-1), E6Twisted.order_poly(), k(2)]), QRule::Valid);
    t.poly(E7, "A1D6", "A1(q)D6(q)", &sl(2) * &spin_even(6, 1), QRule::Valid);
    t.poly(E7, "A7", "A7(q).2", &sl(8) * &k(2), QRule::Valid);
    t.poly(E7, "2A7", "2A7(q).2", &su(8) * &k(2), QRule::Valid);
    t.poly(E7, "A1F4", "A1(q)F4(q)", &sl(2) * &F4.order_poly(), QRule::Valid);
    t.subfield(E7, E7, 2, 2);
    t.subfield(E7, E7, 3, 2);
    t.fixed_big(lie(E7), "Fi22", "Fi22", 2, "64561751654400");

    t.poly(E8, "A1E7", "A1(q)E7(q)", &sl(2) * &E7.order_poly(), QRule::Valid);
    t.poly(E8, "D8", "D8(q)", spin_even(8, 1), QRule::Valid);
    t.poly(E8, "A2E6", "A2(q)E6(q).2", mul(&[sl(3), E6.order_poly(), k(2)]), QRule::Valid);
    t.poly(E8, "2A2.2E6", "2A2(q)2E6(q).2", mul(&[su(3), E6Twisted.order_poly(), k(2)]), QRule::Valid);
    t.subfield(E8, E8, 2, 2);
    t.subfield(E8, E8, 3, 2);

    t.out
}

fn sl_or_su(n: usize, eps: i64) -> IntPoly {
    if eps > 0 {
        sl(n)
    } else {
        su(n)
    }
}
