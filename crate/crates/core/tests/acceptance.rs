//! One PASS/FAIL line per acceptance criterion.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qsdesign::catalog::{find_case, find_parabolic, nonparabolic_cases, parabolic_index, parabolic_nodes, WeylData};
use qsdesign::exactmath::{
    exact_root, gcd_bound_multiplier, p_part, poly_xgcd, prime_power_stream, IntPoly, PowerConstraint,
};
use qsdesign::report::{Entry, Stage, Verdict};
use qsdesign::sieve::{bound_stage, exact_stage, param_search, q_feasible, run_parabolic, DesignParams, ALL_Y};
use qsdesign::special::{g2_u1_candidates, quadratic_case_solver};
use qsdesign::{Family, PrimePower};

// Pinned tolerances: every comparison is exact, only wall-clock budgets vary.
const BUDGET_1: Duration = Duration::from_secs(5);
const BUDGET_2: Duration = Duration::from_secs(1);
const BUDGET_3: Duration = Duration::from_secs(600);
const BUDGET_6: Duration = Duration::from_secs(120);
const RANDOM_TRIPLES: usize = 1000;
const ORACLE_V_MAX: i64 = 2000;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, budget: Duration) -> Result<String, String> {
    let t = start.elapsed();
    ensure(t < budget, format!("took {t:.2?}, budget {budget:?}"))?;
    Ok(format!("{t:.2?}"))
}

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

fn q_pow(n: usize) -> IntPoly {
    IntPoly::monomial(BigInt::from(1), n)
}

fn pm(n: usize, eps: i64) -> IntPoly {
    let mut c = vec![0i64; n + 1];
    c[0] = eps;
    c[n] = 1;
    p(&c)
}

fn pp(q: u64) -> PrimePower {
    PrimePower::from_q(q).expect("prime power")
}

fn criterion_1() -> Check {
    let start = Instant::now();
    // 3(v-1) and |F4 ∩ H| for H = 3D4(q).3
    let three_v = &(&q_pow(12) * &pm(8, -1)) * &pm(4, -1);
    let f = &three_v - &p(&[3]);
    let h_expected = p(&[1, 0, 0, 0, 1, 0, 0, 0, 1]);
    let g = IntPoly::product([&p(&[3]), &q_pow(12), &h_expected, &pm(6, -1), &pm(2, -1)]);
    let cert = poly_xgcd(&f.to_rational(), &g.to_rational()).map_err(|e| e.to_string())?;
    ensure(cert.h == h_expected.to_rational(), format!("h = {}", cert.h))?;
    ensure(cert.c == BigInt::from(549), format!("c = {}", cert.c))?;
    ensure(cert.verify(&f.to_rational(), &g.to_rational()), "Bezout identity fails")?;

    let case = find_case("F4:3D4").ok_or("no F4:3D4 row")?;
    let bound = bound_stage(&case).map_err(|e| e.to_string())?.ok_or("no symbolic bound")?;
    let feas = q_feasible(&case, &bound, 100_000).map_err(|e| e.to_string())?;
    let qs: Vec<u64> = feas.qs.iter().map(|q| q.q).collect();
    ensure(qs == [2, 3, 4, 5, 7, 8, 9], format!("feasible {qs:?}"))?;
    ensure(feas.certified, "tail not certified")?;
    for q in &feas.qs {
        let e = exact_stage(&case, q).map_err(|e| e.to_string())?;
        ensure(e.verdict == Verdict::Eliminated, format!("q={} left {}", q.q, e.verdict))?;
    }
    Ok(format!("h=q^8+q^4+1 c=549 feasible {{2,3,4,5,7,8,9}} all eliminated, {}", within(start, BUDGET_1)?))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let expected = p(&[1, 1, 1, 1, 1, 1]);
    for node in [1, 2] {
        let idx = parabolic_index(Family::G2, node).map_err(|e| e.to_string())?;
        ensure(idx == expected, format!("P{node} index {idx}"))?;
    }
    for q in [3u64, 4, 5, 7, 8, 9] {
        let q = pp(q);
        let v = expected.eval(&q.q_big());
        let part = p_part(&(v - 1), &q.p_big()).map_err(|e| e.to_string())?;
        ensure(part == q.q_big(), format!("(v-1)_p = {part} at q = {}", q.q))?;
    }
    let mut survivors = Vec::new();
    for q in prime_power_stream(PowerConstraint::All, 10_000) {
        let v = expected.eval(&q.q_big());
        if v <= BigInt::from(18) * q.q_big() * q.q_big() {
            survivors.push(q.q);
        }
    }
    ensure(survivors == [2], format!("18q^2 survivors {survivors:?}"))?;
    ensure(!Family::G2.valid_q(&pp(2)), "G2(2) accepted as simple")?;
    for id in ["G2:P1", "G2:P2"] {
        let rep = run_parabolic(&find_parabolic(id).ok_or("no G2 parabolic")?, 1000).map_err(|e| e.to_string())?;
        ensure(rep.verdict() == Verdict::Eliminated, format!("{id} left {}", rep.verdict()))?;
    }
    Ok(format!("(q^6-1)/(q-1), (v-1)_p = q, survivors {{2}} excluded, {}", within(start, BUDGET_2)?))
}

fn run_all_jsonl() -> Result<(String, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qsd"))
        .args(["run-all", "--format", "jsonl"])
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    Ok((text, out.status.code().unwrap_or(-1)))
}

fn criterion_3(run: &(String, i32), elapsed: Duration) -> Check {
    let (text, code) = run;
    ensure(*code == 0, format!("exit code {code}"))?;
    let entries: Vec<Entry> =
        text.lines().map(serde_json::from_str).collect::<Result<_, _>>().map_err(|e| format!("bad jsonl: {e}"))?;
    let open: Vec<&Entry> = entries.iter().filter(|e| e.verdict.is_open()).collect();
    ensure(open.is_empty(), format!("{} open entries, first {}", open.len(), open.first().map_or("", |e| &e.case_id)))?;
    let routed: BTreeSet<&str> = entries
        .iter()
        .filter(|e| e.verdict == Verdict::RoutedToSpecial && e.stage != Stage::Special)
        .map(|e| e.case_id.as_str())
        .collect();
    let rows = nonparabolic_cases();
    for row in &rows {
        let mine: Vec<&Entry> = entries.iter().filter(|e| e.case_id == row.id).collect();
        ensure(!mine.is_empty(), format!("{} missing", row.id))?;
        let is_g2_a2 = row.id == "G2:A2+" || row.id == "G2:A2-";
        ensure(routed.contains(row.id.as_str()) == is_g2_a2, format!("{} routing", row.id))?;
        if is_g2_a2 {
            let closed = mine.iter().any(|e| e.stage == Stage::Special && e.verdict == Verdict::Eliminated);
            ensure(closed, format!("{} not closed by the special analysis", row.id))?;
        }
    }
    ensure(elapsed < BUDGET_3, format!("took {elapsed:.2?}"))?;
    Ok(format!("{} rows, zero survivors, G2:A2± routed and closed, exit 0, {elapsed:.2?}", rows.len()))
}

fn dp(v: i64, b: i64, r: i64, k: i64, l: i64, y: u32) -> DesignParams {
    DesignParams { v: v.into(), b: b.into(), r: r.into(), k: k.into(), lambda: l.into(), y }
}

fn criterion_4() -> Check {
    let s12 = param_search(&BigInt::from(12), &ALL_Y, None).ok_or("no result")?;
    let y3: Vec<&DesignParams> = s12.iter().filter(|d| d.y == 3).collect();
    ensure(y3 == [&dp(12, 22, 11, 6, 5, 3)], format!("v=12 y=3: {y3:?}"))?;
    let s22 = param_search(&BigInt::from(22), &ALL_Y, None).ok_or("no result")?;
    ensure(s22.contains(&dp(22, 77, 21, 6, 5, 2)), format!("v=22: {s22:?}"))?;
    Ok("(12,22,11,6,5) y=3 unique, (22,77,21,6,5) y=2 present".into())
}

fn criterion_5() -> Check {
    let one = |m, a, y, n| {
        let s = quadratic_case_solver(m, a, y, n);
        (s.len() == 1).then(|| (s[0].k.clone(), s[0].value.clone()))
    };
    let cases = [((2, 4, 5, 15), 15, 176), ((1, 3, 4, 16), 16, 189), ((1, 9, 10, 100), 100, 8991)];
    for ((m, a, y, n), k, val) in cases {
        let (sk, sv) = one(m, a, y, n).ok_or(format!("solver ({m},{a},{y},{n}) not unique"))?;
        ensure(sk == BigInt::from(k) && sv == BigInt::from(val).into(), format!("k={sk} value={sv}"))?;
    }
    let cands = g2_u1_candidates();
    ensure(cands.iter().all(|c| exact_root(c, 3).is_none()), format!("cube among {cands:?}"))?;
    let hits: Vec<u64> = prime_power_stream(PowerConstraint::All, 1000)
        .iter()
        .filter(|q| q.q >= 3 && (BigInt::from(72) % (q.q_big().pow(3) + 3u32)).is_zero())
        .map(|q| q.q)
        .collect();
    ensure(hits.is_empty(), format!("(q^3+3) | 72 at {hits:?}"))?;
    Ok("k=15 → 176, k=16 → 189, k=100 → 8991, (q^3+3) | 72 never for q >= 3".into())
}

/// Every quintuple by walking `k` and `λ` and testing each `y`.
fn naive_params(v: i64) -> BTreeSet<DesignParams> {
    let mut out = BTreeSet::new();
    for k in 3..v - 1 {
        for l in 1..k {
            if (l * (v - 1)) % (k - 1) != 0 {
                continue;
            }
            let r = l * (v - 1) / (k - 1);
            if (v * r) % k != 0 {
                continue;
            }
            let b = v * r / k;
            for y in 2..=10i64 {
                let ok = (y - 1) * (r - 1) == (k - 1) * (l - 1)
                    && b > v
                    && k < r
                    && k % y == 0
                    && (r - l) % y == 0
                    && y < l
                    && (y - 1) * v < k * (k - 1);
                if ok {
                    out.insert(dp(v, b, r, k, l, y as u32));
                }
            }
        }
    }
    out
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let mut total = 0usize;
    for v in 5..=ORACLE_V_MAX {
        let fast: BTreeSet<DesignParams> =
            param_search(&BigInt::from(v), &ALL_Y, None).ok_or("no result")?.into_iter().collect();
        let slow = naive_params(v);
        ensure(fast == slow, format!("v={v}: search {fast:?} vs oracle {slow:?}"))?;
        total += fast.len();
    }
    Ok(format!("v <= {ORACLE_V_MAX}, {total} quintuples agree, {}", within(start, BUDGET_6)?))
}

fn random_poly(rng: &mut StdRng, max_deg: usize) -> IntPoly {
    loop {
        let deg = rng.gen_range(0..=max_deg);
        let c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-12..=12)).collect();
        let f = p(&c);
        if !f.is_zero() {
            return f;
        }
    }
}

fn criterion_7() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let mut shared = 0usize;
    for i in 0..RANDOM_TRIPLES {
        let common = random_poly(&mut rng, 3);
        let (mut f, mut g) = (random_poly(&mut rng, 4), random_poly(&mut rng, 4));
        if i % 2 == 0 {
            f = &f * &common;
            g = &g * &common;
            shared += 1;
        }
        let q0 = BigInt::from(rng.gen_range(-60i64..=60));
        let bound = gcd_bound_multiplier(&f, &g).map_err(|e| format!("triple {i}: {e}"))?;
        let gcd = f.eval(&q0).gcd(&g.eval(&q0));
        let target = bound.bound_at(&q0);
        let divides = if gcd.is_zero() { target.is_zero() } else { (&target % &gcd).is_zero() };
        ensure(divides, format!("F={f} G={g} q0={q0}: gcd {gcd} does not divide {target}"))?;
    }
    Ok(format!("{RANDOM_TRIPLES} triples ({shared} with a planted common factor), 0 failures"))
}

fn criterion_8() -> Check {
    let num = IntPoly::product([pm(3, 1), pm(4, 1), pm(9, -1), pm(12, -1)]);
    let den = &pm(1, -1) * &pm(2, -1);
    let closed = num.div_exact(&den).map_err(|e| e.to_string())?;
    let p3 = parabolic_index(Family::E6, 3).map_err(|e| e.to_string())?;
    ensure(p3 == closed, format!("E6 P3 = {p3}"))?;

    let p1 = parabolic_index(Family::E6, 1).map_err(|e| e.to_string())?;
    for q in 2..=50i64 {
        let qb = BigInt::from(q);
        let d1 = &qb * (qb.pow(8) - 1) * (qb.pow(3) + 1) / (&qb - 1);
        let d2 = qb.pow(8) * (qb.pow(5) - 1) * (qb.pow(4) + 1) / (&qb - 1);
        ensure(d1 + d2 + 1 == p1.eval(&qb), format!("1+d1+d2 != v at q={q}"))?;
    }

    let mut checked = 0;
    for fam in Family::ALL {
        let Some(w) = WeylData::of(fam) else { continue };
        for node in parabolic_nodes(fam) {
            let idx = parabolic_index(fam, node).map_err(|e| e.to_string())?;
            ensure(idx.coeff(0) == BigInt::from(1), format!("{fam} P{node} constant term"))?;
            ensure(idx.coeffs().iter().all(|c| !c.is_negative()), format!("{fam} P{node} sign"))?;
            let levi: u128 =
                w.levi(node).map_err(|e| e.to_string())?.iter().flat_map(|t| t.degrees()).map(|d| d as u128).product();
            let at1 = idx.eval(&BigInt::from(1));
            ensure(at1 == BigInt::from(w.weyl_order() / levi), format!("{fam} P{node}: index(1) = {at1}"))?;
            checked += 1;
        }
    }
    Ok(format!("E6 P3 closed form, E6 P1 subdegrees for q <= 50, {checked} untwisted indices"))
}

fn criterion_9(first: &(String, i32), second: &(String, i32)) -> Check {
    ensure(!first.0.is_empty(), "empty output")?;
    ensure(first == second, "outputs differ")?;
    Ok(format!("{} bytes identical across two runs", first.0.len()))
}

fn report(n: u32, name: &str, r: std::thread::Result<Check>) -> bool {
    let r = r.unwrap_or_else(|e| {
        let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    match r {
        Ok(detail) => {
            println!("PASS  {n}  {name}: {detail}");
            true
        }
        Err(detail) => {
            println!("FAIL  {n}  {name}: {detail}");
            false
        }
    }
}

fn main() {
    let mut ok = true;
    ok &= report(1, "F4 vs 3D4 certificate", catch_unwind(criterion_1));
    ok &= report(2, "G2 parabolic", catch_unwind(criterion_2));

    let start = Instant::now();
    let first = run_all_jsonl();
    let elapsed = start.elapsed();
    let second = run_all_jsonl();
    ok &= report(
        3,
        "full sweep",
        catch_unwind(AssertUnwindSafe(|| criterion_3(first.as_ref().map_err(Clone::clone)?, elapsed))),
    );

    ok &= report(4, "parameter recovery", catch_unwind(criterion_4));
    ok &= report(5, "closed-form branches", catch_unwind(criterion_5));
    ok &= report(6, "brute-force oracle", catch_unwind(criterion_6));
    ok &= report(7, "gcd-bound soundness", catch_unwind(criterion_7));
    ok &= report(8, "parabolic indices", catch_unwind(criterion_8));
    ok &= report(
        9,
        "determinism",
        catch_unwind(AssertUnwindSafe(|| {
            criterion_9(first.as_ref().map_err(Clone::clone)?, second.as_ref().map_err(Clone::clone)?)
        })),
    );
    if !ok {
        std::process::exit(1);
    }
}
