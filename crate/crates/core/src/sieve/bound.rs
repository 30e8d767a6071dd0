use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::catalog::SubgroupCase;
use crate::error::{Error, Result};
use crate::exactmath::{
    gcd_bound_multiplier, positive_from, prime_power_stream, GcdBound, IntPoly, PowerConstraint, PrimePower, RatPoly,
};
use crate::report::{Entry, Stage, Verdict};
use crate::sieve::params::{param_search, ALL_Y};

/// `2(y-1)` at the largest admissible `y`.
pub const Y_FACTOR: u32 = 18;

/// `18 log2(x) <= x` from here on.
const LINEAR_FROM: u64 = 128;
/// `(18 log2(x))^2 <= x` from here on.
const SUBLINEAR_FROM: u64 = 1 << 18;

/// How `|Out|` was absorbed into the tail polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailKind {
    /// No `|Out|` factor in the bound.
    Plain,
    /// `|Out| <= x`.
    Linear,
    /// `|Out|^2 <= x`.
    Sublinear,
}

/// The bound fails for every integer `x >= from`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tail {
    pub kind: TailKind,
    pub from: BigInt,
}

/// Gcd bound for `F = L*v - L` against `G`, plus the tail where it cannot hold.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyBound {
    pub l: BigInt,
    pub gcd: GcdBound,
    pub tail: Option<Tail>,
}

impl PolyBound {
    /// `lv` is `L*v` as an integer polynomial in `x`.
    ///
    /// With `with_out`, the bound is `c|h(x)|·|Out|` and `|Out| <= 18 log2 x` is assumed.
    pub fn new(lv: &IntPoly, l: &BigInt, g: &IntPoly, with_out: bool) -> Result<Self> {
        let f = lv - &IntPoly::constant(l.clone());
        let gcd = gcd_bound_multiplier(&f, g)?;
        let c2h2 = gcd.h_int.pow(2).scale(&(&gcd.c * &gcd.c * l * BigInt::from(Y_FACTOR)));
        let tail = if with_out {
            let linear = lv - &(&c2h2 * &IntPoly::monomial(BigInt::one(), 2));
            positive_from(&linear, &BigInt::from(LINEAR_FROM))
                .map(|from| Tail { kind: TailKind::Linear, from })
                .or_else(|| {
                    let sub = lv - &(&c2h2 * &IntPoly::x());
                    positive_from(&sub, &BigInt::from(SUBLINEAR_FROM))
                        .map(|from| Tail { kind: TailKind::Sublinear, from })
                })
        } else {
            positive_from(&(lv - &c2h2), &BigInt::from(2)).map(|from| Tail { kind: TailKind::Plain, from })
        };
        Ok(PolyBound { l: l.clone(), gcd, tail })
    }

    /// `c|h(x)|`
    pub fn value_at(&self, x: &BigInt) -> BigInt {
        self.gcd.bound_at(x).abs()
    }

    /// `deg(v) >= 2 deg(h) + 3`
    pub fn dominance(&self, v_degree: usize) -> bool {
        let dh = self.gcd.h_int.degree().unwrap_or(0);
        v_degree >= 2 * dh + 3
    }
}

/// One bound per value the index scale can take.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaleBound {
    pub scale: BigRational,
    pub bound: PolyBound,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundCertificate {
    pub r: u32,
    pub w: RatPoly,
    pub scales: Vec<ScaleBound>,
    /// `|Out(X(q))| <= out_log * log2(x)`
    pub out_log: u64,
}

impl BoundCertificate {
    /// The least `x` beyond which every scale's bound fails, if all are certified.
    pub fn tail_from(&self) -> Option<BigInt> {
        if self.out_log > u64::from(Y_FACTOR) {
            return None;
        }
        let mut best = BigInt::one();
        for s in &self.scales {
            best = best.max(s.bound.tail.as_ref()?.from.clone());
        }
        Some(best)
    }

    pub fn dominance(&self) -> bool {
        let d = self.w.degree().unwrap_or(0);
        self.scales.iter().all(|s| s.bound.dominance(d))
    }

    fn scale_bound(&self, scale: &BigRational) -> Result<&ScaleBound> {
        self.scales
            .iter()
            .find(|s| &s.scale == scale)
            .ok_or_else(|| Error::domain(format!("no bound recorded for scale {scale}")))
    }
}

/// Symbolic gcd bound for a polynomial case; `None` for fixed-`q` rows.
pub fn bound_stage(case: &SubgroupCase) -> Result<Option<BoundCertificate>> {
    let Some(form) = case.index_form()? else {
        return Ok(None);
    };
    let mut scales = Vec::new();
    for scale in &form.scales {
        let v = form.w.scale(scale);
        let (l, lv) = v.clear_denominators();
        scales.push(ScaleBound { scale: scale.clone(), bound: PolyBound::new(&lv, &l, &form.g, true)? });
    }
    let out_log = case.family().out_per_field_degree() * u64::from(form.r);
    Ok(Some(BoundCertificate { r: form.r, w: form.w, scales, out_log }))
}

/// `x` with `q = x^r`.
fn base_of(q: &PrimePower, r: u32) -> Result<PrimePower> {
    q.root(r).ok_or_else(|| Error::domain(format!("{} is not an {r}-th power", q.q)))
}

/// `c|h(x)|·|Out(X(q))|` at an admissible `q`.
pub fn bound_at(case: &SubgroupCase, cert: &BoundCertificate, q: &PrimePower) -> Result<BigInt> {
    let x = base_of(q, cert.r)?.q_big();
    let sb = cert.scale_bound(&case.scale_at(q)?)?;
    Ok(sb.bound.value_at(&x) * BigInt::from(case.ambient.out_order(q)?))
}

/// Result of the ascending scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Feasible {
    /// Admissible `q` with `v <= 18 (c h(x) |Out|)^2`, or `h(x) = 0`.
    pub qs: Vec<PrimePower>,
    /// Largest base `x` scanned.
    pub x_limit: u64,
    pub scanned: usize,
    /// Whether the tail certificate covers everything past the scan.
    pub certified: bool,
}

/// Admissible `q = x^r` with `x <= x_limit`, ascending.
fn admissible_up_to(case: &SubgroupCase, r: u32, x_limit: u64) -> Vec<PrimePower> {
    prime_power_stream(PowerConstraint::All, x_limit)
        .into_iter()
        .filter_map(|x| x.pow(r))
        .filter(|q| case.admits(q))
        .collect()
}

/// Largest `x` with `x^r <= q_max`.
fn int_root(q_max: u64, r: u32) -> u64 {
    BigInt::from(q_max).nth_root(r).to_u64().expect("root fits")
}

/// Every admissible `q` at which the symbolic bound still holds.
///
/// The scan runs to `max(q_max, x^r)` with `x` the tail start, so that
/// together with the tail it covers every `q`.
pub fn q_feasible(case: &SubgroupCase, cert: &BoundCertificate, q_max: u64) -> Result<Feasible> {
    let tail = cert.tail_from();
    let tail_x = tail.as_ref().map(|t| (t - 1u32).to_u64()).unwrap_or(Some(0));
    let Some(tail_x) = tail_x else {
        return Err(Error::domain(format!("{}: tail start out of scan range", case.id)));
    };
    let x_limit = int_root(q_max, cert.r).max(tail_x);
    let mut qs = Vec::new();
    let candidates = admissible_up_to(case, cert.r, x_limit);
    for q in &candidates {
        let v = case.index_at(q)?;
        let b = bound_at(case, cert, q)?;
        if b.is_zero() || v <= BigInt::from(Y_FACTOR) * &b * &b {
            qs.push(*q);
        }
    }
    Ok(Feasible { qs, x_limit, scanned: candidates.len(), certified: tail.is_some() })
}

/// Closes one `q` given `v` and a multiple `a` of `r/(r,λ)`.
pub fn settle(base: Entry, v: &BigInt, a: &BigInt) -> Entry {
    let mut e = base;
    e.a = Some(a.clone());
    if *v > BigInt::from(Y_FACTOR) * a * a {
        e.stage = Stage::ExactGcd;
        e.verdict = Verdict::Eliminated;
        return e;
    }
    e.stage = Stage::ParamSearch;
    match param_search(v, &ALL_Y, Some(a)) {
        None => {
            e.verdict = Verdict::Unresolved;
            e.note(format!("could not factor gcd(v-1, {a})"))
        }
        Some(ps) if ps.is_empty() => {
            e.verdict = Verdict::Eliminated;
            e
        }
        Some(ps) => {
            e.params = ps;
            e.verdict = Verdict::Survivor;
            e
        }
    }
}

pub fn case_entry(case: &SubgroupCase, stage: Stage, verdict: Verdict) -> Entry {
    Entry::new(&case.id, &case.ambient.tag(), &case.subgroup, stage, verdict)
}

/// `a = gcd(v-1, |H ∩ X|·|Out|)`, then `v > 18a²` or a divisor-restricted search.
pub fn exact_stage(case: &SubgroupCase, q: &PrimePower) -> Result<Entry> {
    let v = case.index_at(q)?;
    let order = case.subgroup_order(q)? * BigInt::from(case.ambient.out_order(q)?);
    let a = (&v - BigInt::one()).gcd(&order);
    Ok(settle(case_entry(case, Stage::ExactGcd, Verdict::Eliminated).at(q.q), &v, &a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::find_case;

    #[test]
    fn f4_3d4_certificate() {
        let case = find_case("F4:3D4").unwrap();
        let cert = bound_stage(&case).unwrap().unwrap();
        assert_eq!(cert.scales.len(), 1);
        let b = &cert.scales[0].bound;
        assert_eq!(b.gcd.h_int, IntPoly::from_i64(&[1, 0, 0, 0, 1, 0, 0, 0, 1]));
        assert_eq!(b.gcd.c, BigInt::from(549));
        assert!(cert.dominance());
        let feas = q_feasible(&case, &cert, 1000).unwrap();
        let qs: Vec<u64> = feas.qs.iter().map(|q| q.q).collect();
        assert_eq!(qs, vec![2, 3, 4, 5, 7, 8, 9]);
        assert!(feas.certified);
        for q in &feas.qs {
            let e = exact_stage(&case, q).unwrap();
            assert_eq!((e.stage, e.verdict), (Stage::ExactGcd, Verdict::Eliminated));
        }
    }

    #[test]
    fn tail_is_sound_past_scan() {
        let case = find_case("F4:3D4").unwrap();
        let cert = bound_stage(&case).unwrap().unwrap();
        let from = cert.tail_from().unwrap().to_u64().unwrap();
        for q in admissible_up_to(&case, 1, from + 2000).into_iter().filter(|q| q.q >= from) {
            let v = case.index_at(&q).unwrap();
            let b = bound_at(&case, &cert, &q).unwrap();
            assert!(v > BigInt::from(Y_FACTOR) * &b * &b);
        }
    }

    #[test]
    fn settle_small_v_goes_to_search() {
        let base = Entry::new("t", "t", "t", Stage::ExactGcd, Verdict::Eliminated);
        let e = settle(base, &BigInt::from(2), &BigInt::from(1));
        assert_eq!((e.stage, e.verdict), (Stage::ParamSearch, Verdict::Eliminated));
    }
}
