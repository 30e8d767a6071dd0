//! Case list: large maximal non-parabolic subgroups and maximal parabolics.

mod cases;
pub mod weyl;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{prime_power_stream, IntPoly, PowerConstraint, PrimePower, RatPoly};
use crate::groups::{Family, TITS_ORDER, TITS_OUT};

pub use weyl::{parabolic_index, parabolic_nodes, LeviType, WeylData};

/// The simple group a case lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ambient {
    Lie(Family),
    /// ²F₄(2)′
    Tits,
}

impl Ambient {
    pub fn tag(self) -> String {
        match self {
            Ambient::Lie(f) => f.tag().to_string(),
            Ambient::Tits => "2F4(2)'".to_string(),
        }
    }

    pub fn family(self) -> Family {
        match self {
            Ambient::Lie(f) => f,
            Ambient::Tits => Family::F4Twisted,
        }
    }

    pub fn valid_q(self, q: &PrimePower) -> bool {
        match self {
            Ambient::Lie(f) => f.valid_q(q),
            Ambient::Tits => q.q == 2,
        }
    }

    pub fn order(self, q: &PrimePower) -> Result<BigInt> {
        match self {
            Ambient::Lie(f) => f.order_of(q),
            Ambient::Tits if q.q == 2 => Ok(BigInt::from(TITS_ORDER)),
            Ambient::Tits => Err(Error::domain("the Tits group is defined only at q = 2")),
        }
    }

    pub fn out_order(self, q: &PrimePower) -> Result<u64> {
        match self {
            Ambient::Lie(f) => f.out_order(q),
            Ambient::Tits if q.q == 2 => Ok(TITS_OUT),
            Ambient::Tits => Err(Error::domain("the Tits group is defined only at q = 2")),
        }
    }
}

/// Extra conditions on `q` beyond simplicity of the ambient group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QRule {
    Valid,
    CharIs(u64),
    CharNot(u64),
    /// `q = p^f` with `f` odd.
    OddPower(u64),
    /// `q` odd and `q > n`.
    OddAbove(u64),
    MinQ(u64),
    Except(u64),
}

impl QRule {
    pub fn admits(&self, q: &PrimePower) -> bool {
        match *self {
            QRule::Valid => true,
            QRule::CharIs(p) => q.p == p,
            QRule::CharNot(p) => q.p != p,
            QRule::OddPower(p) => q.p == p && q.f % 2 == 1,
            QRule::OddAbove(n) => q.p != 2 && q.q > n,
            QRule::MinQ(n) => q.q >= n,
            QRule::Except(n) => q.q != n,
        }
    }
}

impl fmt::Display for QRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QRule::Valid => f.write_str("-"),
            QRule::CharIs(p) => write!(f, "p={p}"),
            QRule::CharNot(p) => write!(f, "p!={p}"),
            QRule::OddPower(p) => write!(f, "q={p}^odd"),
            QRule::OddAbove(n) => write!(f, "q>{n} odd"),
            QRule::MinQ(n) => write!(f, "q>={n}"),
            QRule::Except(n) => write!(f, "q!={n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SubgroupOrder {
    /// Order of the subgroup of the universal group as a polynomial in `q`.
    ///
    /// With `center_free` the subgroup maps isomorphically into the simple
    /// group; otherwise it contains the centre and the index is
    /// `|X_universal| / order`.
    Poly { order: IntPoly, center_free: bool },
    /// `X(q0)` inside `X(q0^r)`.
    Subfield { sub: Family, r: u32, min_q0: u64 },
    /// `(q, |H ∩ X|)` at each admissible `q`.
    Fixed(Vec<(u64, BigInt)>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SubgroupCase {
    pub id: String,
    pub ambient: Ambient,
    pub subgroup: String,
    pub order: SubgroupOrder,
    pub rule: QRule,
}

/// `v = scale * w(x)` with `q = x^r`, and `g(x)` a multiple of `|H ∩ X|`.
#[derive(Clone, Debug, PartialEq)]
pub struct IndexForm {
    pub r: u32,
    pub w: RatPoly,
    pub g: IntPoly,
    /// Every value the scale can take.
    pub scales: Vec<BigRational>,
}

/// Index of a case: a polynomial form, or explicit values at fixed `q`.
#[derive(Clone, Debug, PartialEq)]
pub enum CaseIndex {
    Form(IndexForm),
    Values(Vec<(PrimePower, BigInt)>),
}

fn center_values(f: Family) -> &'static [u64] {
    match f {
        Family::E6 | Family::E6Twisted => &[1, 3],
        Family::E7 => &[1, 2],
        _ => &[1],
    }
}

/// `eps` with `d(q) = gcd(d, q - eps)`.
fn center_sign(f: Family) -> i64 {
    if f == Family::E6Twisted {
        -1
    } else {
        1
    }
}

/// Shape conditions on `q0` for the subfield subgroup, simplicity aside.
fn subfield_shape(sub: Family, q0: &PrimePower) -> bool {
    match sub {
        Family::B2Twisted | Family::F4Twisted => q0.p == 2 && q0.f % 2 == 1,
        Family::G2Twisted => q0.p == 3 && q0.f % 2 == 1,
        _ => true,
    }
}

fn rat(n: u64, d: u64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl SubgroupCase {
    pub fn family(&self) -> Family {
        self.ambient.family()
    }

    pub fn admits(&self, q: &PrimePower) -> bool {
        if !self.ambient.valid_q(q) || !self.rule.admits(q) {
            return false;
        }
        match &self.order {
            SubgroupOrder::Poly { .. } => true,
            SubgroupOrder::Subfield { sub, r, min_q0 } => {
                q.root(*r).is_some_and(|q0| q0.q >= *min_q0 && subfield_shape(*sub, &q0))
            }
            SubgroupOrder::Fixed(values) => values.iter().any(|(fq, _)| *fq == q.q),
        }
    }

    /// Admissible `q <= q_max`, ascending.
    pub fn admissible(&self, q_max: u64) -> Vec<PrimePower> {
        let constraint = match self.ambient {
            Ambient::Tits => PowerConstraint::Prime { p: 2 },
            Ambient::Lie(_) => PowerConstraint::All,
        };
        let q_max = match &self.order {
            SubgroupOrder::Fixed(values) => values.iter().map(|v| v.0).max().unwrap_or(0),
            _ => q_max,
        };
        prime_power_stream(constraint, q_max).into_iter().filter(|q| self.admits(q)).collect()
    }

    /// The conditions column: fixed `q` values, or the rule in words.
    pub fn conditions(&self) -> String {
        match &self.order {
            SubgroupOrder::Fixed(values) => {
                let qs: Vec<String> = values.iter().map(|v| v.0.to_string()).collect();
                format!("q in {{{}}}", qs.join(","))
            }
            SubgroupOrder::Subfield { r, min_q0, .. } => format!("q=q0^{r}, q0>={min_q0}"),
            SubgroupOrder::Poly { .. } => self.rule.to_string(),
        }
    }

    fn check(&self, q: &PrimePower) -> Result<()> {
        if self.admits(q) {
            Ok(())
        } else {
            Err(Error::domain(format!("{} is not defined at q = {}", self.id, q.q)))
        }
    }

    /// `|H ∩ X|` at an admissible `q`.
    pub fn subgroup_order(&self, q: &PrimePower) -> Result<BigInt> {
        self.check(q)?;
        let fam = self.family();
        let qb = q.q_big();
        let ord = match &self.order {
            SubgroupOrder::Poly { order, center_free } => {
                let o = order.eval(&qb);
                if *center_free {
                    o
                } else {
                    let d = BigInt::from(fam.center_divisor(q));
                    if !o.is_multiple_of(&d) {
                        return Err(Error::catalog(&self.id, format!("centre does not divide at q={}", q.q)));
                    }
                    o / d
                }
            }
            SubgroupOrder::Subfield { sub, r, .. } => {
                let q0 = q.root(*r).expect("admitted");
                let full = sub.universal_order(&q0);
                if sub.valid_q(&q0) {
                    let dh = sub.center_divisor(&q0);
                    full / BigInt::from(dh) * BigInt::from(subfield_diagonal(fam, *sub, q, &q0))
                } else {
                    full
                }
            }
            SubgroupOrder::Fixed(values) => {
                values.iter().find(|(fq, _)| *fq == q.q).map(|(_, o)| o.clone()).expect("admitted")
            }
        };
        Ok(ord)
    }

    /// `v = |X| / |H ∩ X|` at an admissible `q`; a non-integral index is a data error.
    pub fn index_at(&self, q: &PrimePower) -> Result<BigInt> {
        let h = self.subgroup_order(q)?;
        let x = self.ambient.order(q)?;
        let (v, rem) = x.div_rem(&h);
        if !rem.is_zero() {
            return Err(Error::catalog(&self.id, format!("non-integral index at q={}", q.q)));
        }
        Ok(v)
    }

    /// Polynomial description of the index. `None` for fixed-`q` rows.
    pub fn index_form(&self) -> Result<Option<IndexForm>> {
        let fam = self.family();
        let x_univ = fam.order_poly().to_rational();
        let form = match &self.order {
            SubgroupOrder::Fixed(_) => return Ok(None),
            SubgroupOrder::Poly { order, center_free } => {
                let w = x_univ
                    .div_exact(&order.to_rational())
                    .map_err(|_| Error::catalog(&self.id, "order does not divide |X| as polynomials"))?;
                let scales = if *center_free {
                    center_values(fam).iter().map(|&d| rat(1, d)).collect()
                } else {
                    vec![BigRational::one()]
                };
                IndexForm { r: 1, w, g: order.clone(), scales }
            }
            SubgroupOrder::Subfield { sub, r, .. } => {
                let h = sub.order_poly();
                let w = x_univ
                    .substitute_power(*r as usize)
                    .div_exact(&h.to_rational())
                    .map_err(|_| Error::catalog(&self.id, "subfield order does not divide"))?;
                let mut scales = BTreeSet::new();
                for &dx in center_values(fam) {
                    scales.insert(rat(1, dx));
                    for &dh in center_values(*sub) {
                        for t in [1, dh] {
                            scales.insert(rat(dh, dx * t));
                        }
                    }
                }
                IndexForm { r: *r, w, g: h, scales: scales.into_iter().collect() }
            }
        };
        Ok(Some(form))
    }

    /// The factor with `v(q) = scale * w(x)` at this `q`.
    pub fn scale_at(&self, q: &PrimePower) -> Result<BigRational> {
        self.check(q)?;
        let fam = self.family();
        Ok(match &self.order {
            SubgroupOrder::Poly { center_free: true, .. } => rat(1, fam.center_divisor(q)),
            SubgroupOrder::Subfield { sub, r, .. } => {
                let q0 = q.root(*r).expect("admitted");
                let dx = fam.center_divisor(q);
                if sub.valid_q(&q0) {
                    let dh = sub.center_divisor(&q0);
                    rat(dh, dx * subfield_diagonal(fam, *sub, q, &q0))
                } else {
                    rat(1, dx)
                }
            }
            _ => BigRational::one(),
        })
    }

    pub fn case_index(&self, q_max: u64) -> Result<CaseIndex> {
        if let Some(form) = self.index_form()? {
            return Ok(CaseIndex::Form(form));
        }
        let values =
            self.admissible(q_max).into_iter().map(|q| self.index_at(&q).map(|v| (q, v))).collect::<Result<_>>()?;
        Ok(CaseIndex::Values(values))
    }
}

/// How many diagonal automorphisms of `sub(q0)` are realised inside the
/// simple group `fam(q)`.
fn subfield_diagonal(fam: Family, sub: Family, q: &PrimePower, q0: &PrimePower) -> u64 {
    let dh = sub.center_divisor(q0);
    if dh == 1 {
        return 1;
    }
    let dx = fam.center_divisor(q);
    let lhs = (q0.q as i128 - center_sign(sub) as i128) * dx as i128;
    let rhs = q.q as i128 - center_sign(fam) as i128;
    if rhs % lhs == 0 {
        dh
    } else {
        1
    }
}

/// Every row of the large maximal non-parabolic table, one entry per sign.
pub fn nonparabolic_cases() -> Vec<SubgroupCase> {
    cases::all_rows()
}

pub fn find_case(id: &str) -> Option<SubgroupCase> {
    nonparabolic_cases().into_iter().find(|c| c.id == id)
}

/// How the parabolic elimination proceeds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParabolicRoute {
    /// Unique `p`-power subdegree.
    PPower,
    /// Same, valid when the group contains a graph automorphism.
    PPowerGraph,
    /// Rank-3 action with the subdegree `d1`.
    RankThree { d1: IntPoly },
    /// Gcd bound against the parabolic order.
    GcdBound,
    /// Closed by the Suzuki/Ree analysis.
    Special,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParabolicCase {
    pub id: String,
    pub family: Family,
    pub node: usize,
    pub index: IntPoly,
    pub route: ParabolicRoute,
}

impl ParabolicCase {
    /// Order of the parabolic in the universal group.
    pub fn universal_order(&self) -> IntPoly {
        self.family.order_poly().div_exact(&self.index).expect("parabolic index divides the group order")
    }

    pub fn admissible(&self, q_max: u64) -> Vec<PrimePower> {
        prime_power_stream(PowerConstraint::All, q_max).into_iter().filter(|q| self.family.valid_q(q)).collect()
    }
}

/// `d1 = q(q^8-1)(q^3+1)/(q-1)`
pub fn e6_p1_d1() -> IntPoly {
    let num = &(&IntPoly::x() * &IntPoly::x_pow_minus_one(8)) * &IntPoly::x_pow_plus_one(3);
    num.div_exact(&IntPoly::x_pow_minus_one(1)).expect("exact")
}

/// `d2 = q^8(q^5-1)(q^4+1)/(q-1)`
pub fn e6_p1_d2() -> IntPoly {
    let num = &(&IntPoly::monomial(BigInt::one(), 8) * &IntPoly::x_pow_minus_one(5)) * &IntPoly::x_pow_plus_one(4);
    num.div_exact(&IntPoly::x_pow_minus_one(1)).expect("exact")
}

pub fn parabolic_cases() -> Result<Vec<ParabolicCase>> {
    let mut out = Vec::new();
    for fam in Family::ALL {
        for node in parabolic_nodes(fam) {
            let route = match (fam, node) {
                (Family::B2Twisted | Family::G2Twisted, _) => ParabolicRoute::Special,
                (Family::E6, 1 | 6) => ParabolicRoute::RankThree { d1: e6_p1_d1() },
                (Family::E6, 3 | 5) => ParabolicRoute::GcdBound,
                (Family::E6, _) => ParabolicRoute::PPowerGraph,
                _ => ParabolicRoute::PPower,
            };
            out.push(ParabolicCase {
                id: format!("{}:P{node}", fam.tag()),
                family: fam,
                node,
                index: parabolic_index(fam, node)?,
                route,
            });
        }
    }
    Ok(out)
}

pub fn find_parabolic(id: &str) -> Option<ParabolicCase> {
    parabolic_cases().ok()?.into_iter().find(|c| c.id == id)
}
