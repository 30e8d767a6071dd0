//! Dedicated analyses for (G2, A2±) and the Suzuki and Ree parabolics.

mod g2;
mod twisted;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::exactmath::{divisors, exact_root, PrimePower};
use crate::report::Entry;
use crate::sieve::{param_search, DesignParams, ALL_Y};

pub use g2::{g2_a2_check, g2_divisor, g2_index, g2_u1_candidates, g2_u2_lambda};
pub use twisted::{ree_check, suzuki_check, Branch, TwistedFamily};

/// One root of a branch equation: `(y-1)·Q = value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSolution {
    pub k: BigInt,
    /// `y - 1`
    pub coefficient: u32,
    pub value: BigRational,
}

impl BranchSolution {
    /// `Q = value / (y-1)` when integral.
    pub fn q_value(&self) -> Option<BigInt> {
        let q = &self.value / BigRational::from_integer(BigInt::from(self.coefficient));
        q.is_integer().then(|| q.to_integer())
    }
}

/// Solutions of `m k² - (2m+a) k + m + a y = m (y-1) Q` with `k | N`,
/// `y | k`, `k > y` and `λ = m(k-1)/a` integral.
pub fn quadratic_case_solver(m: u64, a: u64, y: u32, n: u64) -> Vec<BranchSolution> {
    assert!(m >= 1 && a >= 1 && n >= 1 && (2..=10).contains(&y));
    let yy = u64::from(y);
    let ks = divisors(&n.into()).expect("small n factors");
    let mut out = Vec::new();
    for k in ks {
        let k: u64 = k.try_into().expect("divisor of u64");
        if !k.is_multiple_of(yy) || k <= yy || !(m * (k - 1)).is_multiple_of(a) {
            continue;
        }
        let (mb, ab, kb) = (BigInt::from(m), BigInt::from(a), BigInt::from(k));
        let lhs = &mb * &kb * &kb - (BigInt::from(2u32) * &mb + &ab) * &kb + &mb + &ab * BigInt::from(y);
        out.push(BranchSolution { k: kb, coefficient: y - 1, value: BigRational::new(lhs, mb) });
    }
    out
}

/// `Q = q^e` for a prime power `q = p^f` with `f` odd and `q >= min_q`.
pub fn is_odd_power_of(q_val: &BigInt, e: u32, p: u64, min_q: u64) -> bool {
    let Some(root) = exact_root(q_val, e) else {
        return false;
    };
    let Ok(root) = u64::try_from(root) else {
        return false;
    };
    PrimePower::from_q(root).is_some_and(|pp| pp.p == p && pp.f % 2 == 1 && pp.q >= min_q)
}

/// The divisor-restricted search next to the unrestricted search filtered afterwards.
pub(crate) fn cross_checked_search(v: &BigInt, d: &BigInt, check: bool) -> (Option<Vec<DesignParams>>, bool) {
    let fast = param_search(v, &ALL_Y, Some(d));
    if !check {
        return (fast, true);
    }
    let slow = param_search(v, &ALL_Y, None)
        .map(|ps| ps.into_iter().filter(|p| (d % p.r_reduced()).is_zero()).collect::<Vec<_>>());
    let agree = fast == slow;
    (fast, agree)
}

pub(crate) fn join_qs(qs: &[u64]) -> String {
    let v: Vec<String> = qs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", v.join(","))
}

pub(crate) fn entry(case_id: &str, family: &str, subgroup: &str, verdict: crate::report::Verdict) -> Entry {
    Entry::new(case_id, family, subgroup, crate::report::Stage::Special, verdict)
}
