use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::{cross_checked_search, entry, join_qs};
use crate::exactmath::{divisors, exact_root, prime_power_stream, PowerConstraint, PrimePower};
use crate::report::{Entry, Verdict};

/// `v = q³(q³+ε)/2`
pub fn g2_index(q: &PrimePower, eps: i8) -> BigInt {
    let q3 = num_traits::pow(q.q_big(), 3);
    &q3 * (&q3 + BigInt::from(eps)) / 2
}

/// Divisor of `r/(r,λ)` from the subdegrees.
pub fn g2_divisor(q: &PrimePower, eps: i8) -> BigInt {
    let q3 = num_traits::pow(q.q_big(), 3);
    match (q.p == 2, eps > 0) {
        (false, _) => (q3 - BigInt::from(eps)) / 2,
        (true, true) => q3 - 1,
        (true, false) => (q3 + 1) * 3,
    }
}

/// `Q = q³ >= 27` with `(Q+3) | 72`.
pub fn g2_u1_candidates() -> Vec<BigInt> {
    divisors(&72u32.into())
        .expect("72 factors")
        .into_iter()
        .map(|d| BigInt::from(d) - 3)
        .filter(|q3| *q3 >= BigInt::from(27))
        .collect()
}

/// `λ` for `k = 2Q+5`: `4(2Q+5-y) / ((9-y)Q + 15 + y)`.
pub fn g2_u2_lambda(q3: &BigInt, y: u32) -> BigRational {
    let y = BigInt::from(y);
    let num = (q3 * 2 + 5 - &y) * 4;
    let den = (BigInt::from(9) - &y) * q3 + 15 + &y;
    BigRational::new(num, den)
}

/// `λ < y` for every `Q >= 27`: the difference `y·den - num` is linear in `Q`.
fn u2_lambda_below_y(y: u32) -> bool {
    let yy = i64::from(y);
    let slope = yy * (9 - yy) - 8;
    let at27 = yy * ((9 - yy) * 27 + 15 + yy) - 4 * (2 * 27 + 5 - yy);
    slope >= 0 && at27 > 0
}

/// `9 ∤ 2q³+5` for every `q`.
fn u2_nine_never_divides() -> bool {
    (0..9i64).all(|q| (2 * q.pow(3) + 5).rem_euclid(9) != 0)
}

fn closure_entries(case_id: &str, sub: &str) -> Vec<Entry> {
    let cands = g2_u1_candidates();
    let cubes: Vec<&BigInt> = cands.iter().filter(|c| exact_root(c, 3).is_some()).collect();
    let u1 = entry(case_id, "G2", sub, if cubes.is_empty() { Verdict::Eliminated } else { Verdict::Survivor }).note(
        format!(
            "u=1: y=3, k=q^3+3 and (q^3+3) | 72 leaves q^3 in {{{}}}, none a cube",
            cands.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        ),
    );
    let mut closed = true;
    let mut parts = Vec::new();
    for y in 6..=8 {
        let ok = u2_lambda_below_y(y);
        closed &= ok;
        parts.push(format!("y={y}: λ < y"));
    }
    let nine = u2_nine_never_divides();
    closed &= nine;
    parts.push("y=9: 9 does not divide k = 2q^3+5".to_string());
    let u2 = entry(case_id, "G2", sub, if closed { Verdict::Eliminated } else { Verdict::Survivor })
        .note(format!("u=2: k=2q^3+5, {}", parts.join("; ")));
    vec![u1, u2]
}

/// (G2(q), A2^ε(q)): divisor-restricted search at every `q <= q_max`,
/// with the closed-form branches for `ε = +1`.
pub fn g2_a2_check(eps: i8, q_max: u64) -> Vec<Entry> {
    assert!(eps == 1 || eps == -1);
    let (case_id, sub) = if eps > 0 { ("G2:A2+", "SL(3,q):2") } else { ("G2:A2-", "SU(3,q):2") };
    let mut out = Vec::new();
    let mut checked = Vec::new();
    let mut scanned = 0usize;
    let mut agree_all = true;
    for q in prime_power_stream(PowerConstraint::All, q_max).into_iter().filter(|q| q.q >= 3) {
        let v = g2_index(&q, eps);
        let d = g2_divisor(&q, eps);
        debug_assert!(d.is_positive());
        let check = q.q <= 32;
        let (found, agree) = cross_checked_search(&v, &d, check);
        scanned += 1;
        if check {
            checked.push(q.q);
            agree_all &= agree;
        }
        match found {
            Some(ps) if ps.is_empty() => {}
            Some(ps) => {
                let mut e = entry(case_id, "G2", sub, Verdict::Survivor).at(q.q);
                e.a = Some(d);
                e.params = ps;
                out.push(e);
            }
            None => out.push(entry(case_id, "G2", sub, Verdict::Unresolved).at(q.q).note("factorization incomplete")),
        }
    }
    let mut scan = entry(case_id, "G2", sub, Verdict::Eliminated)
        .note(format!("scan with r/(r,λ) | D(q) at {scanned} q <= {q_max}: no parameters"))
        .note(format!("unrestricted search agrees at q in {}", join_qs(&checked)));
    if !agree_all {
        scan.verdict = Verdict::Unresolved;
        scan = scan.note("divisor-restricted and unrestricted searches disagree");
    }
    out.push(scan);
    if eps > 0 {
        out.extend(closure_entries(case_id, sub));
    }
    out
}
