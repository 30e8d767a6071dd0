use std::collections::BTreeSet;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exactmath::{divisors, isqrt};
use crate::report::decimal;

/// A candidate quintuple `(v, b, r, k, λ)` with intersection numbers `0` and `y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DesignParams {
    #[serde(with = "decimal")]
    pub v: BigInt,
    #[serde(with = "decimal")]
    pub b: BigInt,
    #[serde(with = "decimal")]
    pub r: BigInt,
    #[serde(with = "decimal")]
    pub k: BigInt,
    #[serde(with = "decimal")]
    pub lambda: BigInt,
    pub y: u32,
}

impl DesignParams {
    /// Every arithmetic condition a quasi-symmetric design with `x = 0` must meet.
    pub fn is_admissible(&self) -> bool {
        let DesignParams { v, b, r, k, lambda: l, .. } = self;
        let y = BigInt::from(self.y);
        let one = BigInt::one();
        if !(2..=10).contains(&self.y) || [v, b, r, k, l].iter().any(|x| !x.is_positive()) {
            return false;
        }
        r * (k - &one) == l * (v - &one)
            && v * r == b * k
            && b > v
            && k < r
            && *k > BigInt::from(2)
            && *k < v - &one
            && (&y - &one) * (r - &one) == (k - &one) * (l - &one)
            && k.is_multiple_of(&y)
            && (r - l).is_multiple_of(&y)
            && y < *l
            && *l <= k - &one
            && (&y - &one) * v < k * k - k
    }

    /// `r / gcd(r, λ)`
    pub fn r_reduced(&self) -> BigInt {
        &self.r / self.r.gcd(&self.lambda)
    }
}

impl std::fmt::Display for DesignParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{},{},{},{},y={}", self.v, self.b, self.r, self.k, self.lambda, self.y)
    }
}

/// Parameters from `v`, `k` and `y`, when the closed form gives integers.
pub fn params_from(v: &BigInt, k: &BigInt, y: u32) -> Option<DesignParams> {
    let one = BigInt::one();
    let kk = k - &one;
    let n = v - &one;
    let s = BigInt::from(y - 1);
    let den = &kk * &kk - &s * &n;
    if !den.is_positive() {
        return None;
    }
    let (lambda, rem) = (&kk * (k - BigInt::from(y))).div_rem(&den);
    if !rem.is_zero() || !lambda.is_positive() {
        return None;
    }
    let (r, rem) = (&lambda * &n).div_rem(&kk);
    if !rem.is_zero() {
        return None;
    }
    let (b, rem) = (v * &r).div_rem(k);
    if !rem.is_zero() {
        return None;
    }
    let p = DesignParams { v: v.clone(), b, r, k: k.clone(), lambda, y };
    p.is_admissible().then_some(p)
}

/// Every admissible quintuple on `v` points with `y` in `ys`.
///
/// With `r_divisor = Some(D)` only quintuples with `r/gcd(r,λ) | D` are kept,
/// and `k` is enumerated through divisors of `gcd(v-1, D)`. `None` is
/// returned when that gcd cannot be factored.
pub fn param_search(v: &BigInt, ys: &[u32], r_divisor: Option<&BigInt>) -> Option<Vec<DesignParams>> {
    let mut out = BTreeSet::new();
    if *v < BigInt::from(5) {
        return Some(Vec::new());
    }
    let n = v - BigInt::one();
    let ys: Vec<u32> = ys.iter().copied().filter(|y| (2..=10).contains(y)).collect();
    let Some(&y_max) = ys.iter().max() else {
        return Some(Vec::new());
    };
    let y_min = *ys.iter().min().expect("nonempty");
    // s*n < (k-1)^2 < (s+1)*n with s = y-1
    let lo = BigInt::from(y_min - 1) * &n;
    let hi = BigInt::from(y_max) * &n;
    let mut candidates: BTreeSet<BigInt> = BTreeSet::new();
    match r_divisor {
        Some(d) if !d.is_zero() => {
            let g = n.gcd(d);
            let divs = divisors(g.magnitude())?;
            for t in divs {
                let t = BigInt::from_biguint(Sign::Plus, t);
                // (k-1) = j * n / t and r/gcd(r,λ) = n/gcd(n,k-1) = t / gcd(j, t)
                if &t * &t * BigInt::from(y_max) <= n {
                    continue;
                }
                let step = &n / &t;
                let mut j = BigInt::one();
                loop {
                    let kk = &step * &j;
                    let sq = &kk * &kk;
                    if sq >= hi {
                        break;
                    }
                    if sq > lo {
                        candidates.insert(kk);
                    }
                    j += 1;
                }
            }
        }
        _ => {
            let mut kk: BigInt = isqrt(&lo) + 1;
            while &kk * &kk < hi {
                candidates.insert(kk.clone());
                kk += 1;
            }
        }
    }
    for kk in candidates {
        let k = &kk + 1;
        for &y in &ys {
            if let Some(p) = params_from(v, &k, y) {
                if r_divisor.is_none_or(|d| d.is_zero() || d.is_multiple_of(&p.r_reduced())) {
                    out.insert(p);
                }
            }
        }
    }
    Some(sorted(out))
}

fn sorted(set: BTreeSet<DesignParams>) -> Vec<DesignParams> {
    let mut v: Vec<DesignParams> = set.into_iter().collect();
    v.sort_by_key(|a| (a.k.clone(), a.y));
    v
}

pub const ALL_Y: [u32; 9] = [2, 3, 4, 5, 6, 7, 8, 9, 10];
