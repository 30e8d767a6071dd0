use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest power of `p` dividing `n`.
pub fn p_part<T: Integer + Clone>(n: &T, p: &T) -> Result<T> {
    if n.is_zero() {
        return Err(Error::domain("p-part of zero"));
    }
    if *p <= T::one() {
        return Err(Error::domain("p-part needs a prime p"));
    }
    let mut rest = n.clone();
    let mut part = T::one();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(part);
        }
        rest = q;
        part = part * p.clone();
    }
}

fn smallest_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `q = p^f` with `p` prime and `f >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimePower {
    pub p: u64,
    pub f: u32,
    pub q: u64,
}

impl PrimePower {
    pub fn from_q(q: u64) -> Option<Self> {
        if q < 2 {
            return None;
        }
        let p = smallest_factor(q);
        let mut rest = q;
        let mut f = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            f += 1;
        }
        (rest == 1).then_some(PrimePower { p, f, q })
    }

    pub fn new(p: u64, f: u32) -> Result<Self> {
        if !is_prime_u64(p) || f == 0 {
            return Err(Error::domain(format!("{p}^{f} is not a prime power")));
        }
        let q = p.checked_pow(f).ok_or_else(|| Error::domain("prime power overflows u64"))?;
        Ok(PrimePower { p, f, q })
    }

    pub fn q_big(&self) -> BigInt {
        BigInt::from(self.q)
    }

    pub fn p_big(&self) -> BigInt {
        BigInt::from(self.p)
    }

    /// `q^(1/r)` when it is itself a prime power.
    pub fn root(&self, r: u32) -> Option<PrimePower> {
        self.f.is_multiple_of(r).then(|| PrimePower::new(self.p, self.f / r).expect("valid root"))
    }

    pub fn pow(&self, r: u32) -> Option<PrimePower> {
        PrimePower::new(self.p, self.f * r).ok()
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

/// Which prime powers an enumeration admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerConstraint {
    All,
    Prime { p: u64 },
    OddExponent { p: u64, min_q: u64 },
}

impl PowerConstraint {
    pub fn admits(&self, pp: &PrimePower) -> bool {
        match *self {
            PowerConstraint::All => true,
            PowerConstraint::Prime { p } => pp.p == p,
            PowerConstraint::OddExponent { p, min_q } => pp.p == p && pp.f % 2 == 1 && pp.q >= min_q,
        }
    }
}

/// Strictly increasing prime powers `q <= q_max` satisfying the constraint.
pub fn prime_power_stream(constraint: PowerConstraint, q_max: u64) -> Vec<PrimePower> {
    let primes: Vec<u64> = match constraint {
        PowerConstraint::All => sieve(q_max),
        PowerConstraint::Prime { p } | PowerConstraint::OddExponent { p, .. } => {
            if is_prime_u64(p) {
                vec![p]
            } else {
                Vec::new()
            }
        }
    };
    let mut out = Vec::new();
    for p in primes {
        let mut q = p;
        let mut f = 1u32;
        while q <= q_max {
            let pp = PrimePower { p, f, q };
            if constraint.admits(&pp) {
                out.push(pp);
            }
            match q.checked_mul(p) {
                Some(next) => q = next,
                None => break,
            }
            f += 1;
        }
    }
    out.sort_by_key(|pp| pp.q);
    out
}

fn sieve(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Exact `floor(sqrt(n))` for nonnegative `n`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(n.sign() != Sign::Minus);
    n.sqrt()
}

/// `Some(r)` with `r^e = n` for a nonnegative integer `n`.
pub fn exact_root(n: &BigInt, e: u32) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.nth_root(e);
    (num_traits::pow(r.clone(), e as usize) == *n).then_some(r)
}

/// All positive divisors of `n`, ascending. `None` if factorization gave up.
pub fn divisors(n: &BigUint) -> Option<Vec<BigUint>> {
    if n.is_zero() {
        return None;
    }
    let factors: Vec<(BigUint, usize)> = if let Some(small) = n.to_u128() {
        num_prime::nt_funcs::factorize128(small).into_iter().map(|(p, e)| (BigUint::from(p), e)).collect()
    } else {
        let (found, rest) = num_prime::nt_funcs::factors(n.clone(), None);
        if rest.is_some() {
            return None;
        }
        found.into_iter().collect()
    };
    let mut divs = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e + 1));
        for d in &divs {
            let mut m = d.clone();
            next.push(m.clone());
            for _ in 0..e {
                m *= &p;
                next.push(m.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}
