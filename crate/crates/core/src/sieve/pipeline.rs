use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::catalog::{ParabolicCase, ParabolicRoute, SubgroupCase};
use crate::error::{Error, Result};
use crate::exactmath::{p_part, positive_from, prime_power_stream, IntPoly, PowerConstraint, PrimePower};
use crate::groups::Family;
use crate::report::{CaseReport, Entry, Stage, Verdict};
use crate::sieve::bound::{bound_stage, case_entry, exact_stage, q_feasible, settle, PolyBound, TailKind, Y_FACTOR};

/// Rows closed only by the dedicated analysis.
pub fn routed_to_special(case: &SubgroupCase) -> bool {
    matches!(case.id.as_str(), "G2:A2+" | "G2:A2-")
}

const LIST_CAP: usize = 24;

fn qs_text(qs: &[PrimePower]) -> String {
    let v: Vec<String> = qs.iter().take(LIST_CAP).map(|q| q.q.to_string()).collect();
    if qs.len() > LIST_CAP {
        format!("{{{},...}} ({} values)", v.join(","), qs.len())
    } else {
        format!("{{{}}}", v.join(","))
    }
}

fn tail_text(kind: TailKind, from: &BigInt) -> String {
    match kind {
        TailKind::Plain => format!("bound fails for all x >= {from}"),
        TailKind::Linear => format!("bound fails for all x >= {from} using |Out| <= x"),
        TailKind::Sublinear => format!("bound fails for all x >= {from} using |Out|^2 <= x"),
    }
}

/// Bound stage, feasible-q scan, then exact gcd and parameter search per `q`.
pub fn run_case(case: &SubgroupCase, q_max: u64) -> Result<CaseReport> {
    let mut rep = CaseReport::new(&case.id);
    let Some(cert) = bound_stage(case)? else {
        for q in case.admissible(q_max) {
            rep.push(exact_stage(case, &q)?);
        }
        if rep.entries.is_empty() {
            return Err(Error::catalog(&case.id, "no admissible q"));
        }
        return Ok(rep);
    };
    let routed = routed_to_special(case);
    let feas = q_feasible(case, &cert, q_max)?;
    let w_deg = cert.w.degree().unwrap_or(0);
    for sb in &cert.scales {
        let b = &sb.bound;
        let verdict = match (&b.tail, routed) {
            (Some(_), _) if feas.certified => Verdict::Eliminated,
            (_, true) => Verdict::RoutedToSpecial,
            _ => Verdict::Unresolved,
        };
        let mut e = case_entry(case, Stage::SymbolicBound, verdict);
        e.h = Some(b.gcd.h_int.to_string());
        e.c = Some(b.gcd.c.clone());
        if cert.scales.len() > 1 {
            e = e.note(format!("index scale {}", sb.scale));
        }
        if !b.dominance(w_deg) {
            e = e.note("deg(v) < 2 deg(h) + 3");
        }
        e = match &b.tail {
            Some(t) => e.note(tail_text(t.kind, &t.from)),
            None => e.note("no tail certificate"),
        };
        e = e.note(format!(
            "scanned {} admissible q with x <= {}; feasible q {}",
            feas.scanned,
            feas.x_limit,
            qs_text(&feas.qs)
        ));
        rep.push(e);
    }
    if !routed {
        for q in &feas.qs {
            rep.push(exact_stage(case, q)?);
        }
    }
    Ok(rep)
}

/// Prime powers with the shape of the family's `q`, simple or not.
fn shape(f: Family) -> PowerConstraint {
    match f {
        Family::B2Twisted | Family::F4Twisted => PowerConstraint::OddExponent { p: 2, min_q: 2 },
        Family::G2Twisted => PowerConstraint::OddExponent { p: 3, min_q: 3 },
        _ => PowerConstraint::All,
    }
}

fn parabolic_entry(case: &ParabolicCase, stage: Stage, verdict: Verdict) -> Entry {
    let sub = format!("maximal parabolic P{}", case.node);
    Entry::new(&case.id, case.family.tag(), &sub, stage, verdict)
}

fn limit_from(from: &BigInt, q_max: u64) -> Result<u64> {
    let last = (from - 1u32).to_u64().ok_or_else(|| Error::domain("tail start out of scan range"))?;
    Ok(last.max(q_max))
}

/// `(v-1)_p`, doubled for `p = 2`.
pub fn p_power_divisor(v: &BigInt, q: &PrimePower) -> Result<BigInt> {
    let part = p_part(&(v - BigInt::one()), &q.p_big())?;
    Ok(if q.p == 2 { part * 2 } else { part })
}

/// `v - 1 = x^a u(x)`: returns `(a, u(0))`.
fn split_valuation(index: &IntPoly) -> Result<(usize, BigInt)> {
    let vm1 = index - &IntPoly::one();
    let a = vm1.valuation().ok_or_else(|| Error::domain("index is constant one"))?;
    Ok((a, vm1.coeff(a)))
}

fn p_power_route(case: &ParabolicCase, q_max: u64) -> Result<Vec<Entry>> {
    let (a, u0) = split_valuation(&case.index)?;
    let c = BigInt::from(4 * Y_FACTOR) * &u0 * &u0;
    let tail = &case.index - &IntPoly::monomial(c.clone(), 2 * a);
    let from = positive_from(&tail, &(u0.abs() + 1));
    let mut head = parabolic_entry(case, Stage::SymbolicBound, Verdict::Eliminated);
    head.c = Some(c.clone());
    head.h = Some(IntPoly::monomial(BigInt::one(), 2 * a).to_string());
    let Some(from) = from else {
        head.verdict = Verdict::Unresolved;
        return Ok(vec![head.note("v <= 72 u0^2 q^(2a) has no certified tail")]);
    };
    let limit = limit_from(&from, q_max)?;
    let mut out = Vec::new();
    let mut scanned = 0usize;
    let mut survivors = Vec::new();
    let mut large_part = false;
    for q in prime_power_stream(shape(case.family), limit) {
        scanned += 1;
        let v = case.index.eval(&q.q_big());
        let d = p_power_divisor(&v, &q)?;
        if d > BigInt::from(2 * q.q) {
            large_part = true;
        }
        if v > BigInt::from(Y_FACTOR) * &d * &d {
            continue;
        }
        survivors.push(q);
        let base = parabolic_entry(case, Stage::ExactGcd, Verdict::Eliminated).at(q.q);
        if case.family.valid_q(&q) {
            out.push(settle(base, &v, &d));
        } else {
            let mut e = base;
            e.a = Some(d);
            out.push(e.note(format!("{}({}) is not simple", case.family.tag(), q.q)));
        }
    }
    head = head.note(format!("v > {c}*q^{} for q >= {from}", 2 * a));
    head = head.note(format!("scanned {scanned} q <= {limit}; v <= 18((v-1)_p (2,p))^2 at {}", qs_text(&survivors)));
    if large_part {
        head = head.note("(v-1)_p exceeds 2q");
    }
    let mut all = vec![head];
    all.extend(out);
    Ok(all)
}

/// Gcd bound of `v - 1` against `g`, with or without the `|Out|` factor.
fn gcd_route(
    case: &ParabolicCase,
    g: &IntPoly,
    with_out: bool,
    q_max: u64,
    order_at: impl Fn(&PrimePower) -> Result<BigInt>,
) -> Result<Vec<Entry>> {
    let bound = PolyBound::new(&case.index, &BigInt::one(), g, with_out)?;
    let mut head = parabolic_entry(case, Stage::SymbolicBound, Verdict::Eliminated);
    head.h = Some(bound.gcd.h_int.to_string());
    head.c = Some(bound.gcd.c.clone());
    let out_log = if with_out { case.family.out_per_field_degree() } else { 0 };
    let tail = bound.tail.as_ref().filter(|_| out_log <= u64::from(Y_FACTOR));
    let Some(tail) = tail else {
        head.verdict = Verdict::Unresolved;
        return Ok(vec![head.note("no tail certificate")]);
    };
    if !bound.dominance(case.index.degree().unwrap_or(0)) {
        head = head.note("deg(v) < 2 deg(h) + 3");
    }
    head = head.note(tail_text(tail.kind, &tail.from));
    let limit = limit_from(&tail.from, q_max)?;
    let mut out = Vec::new();
    let mut scanned = 0usize;
    let mut feasible = Vec::new();
    for q in prime_power_stream(shape(case.family), limit) {
        if !case.family.valid_q(&q) {
            continue;
        }
        scanned += 1;
        let qb = q.q_big();
        let v = case.index.eval(&qb);
        let out_q = if with_out { case.family.out_order(&q)? } else { 1 };
        let b = bound.value_at(&qb) * BigInt::from(out_q);
        if !b.is_zero() && v > BigInt::from(Y_FACTOR) * &b * &b {
            continue;
        }
        feasible.push(q);
        let a = (&v - BigInt::one()).gcd(&(order_at(&q)? * BigInt::from(out_q)));
        out.push(settle(parabolic_entry(case, Stage::ExactGcd, Verdict::Eliminated).at(q.q), &v, &a));
    }
    head = head.note(format!("scanned {scanned} q <= {limit}; feasible q {}", qs_text(&feasible)));
    let mut all = vec![head];
    all.extend(out);
    Ok(all)
}

fn parabolic_order_route(case: &ParabolicCase, q_max: u64) -> Result<Vec<Entry>> {
    let order = case.universal_order();
    gcd_route(case, &order, true, q_max, |q| Ok(order.eval(&q.q_big())))
}

fn closes(entries: &[Entry]) -> bool {
    entries.iter().all(|e| e.verdict == Verdict::Eliminated)
}

/// Parabolic elimination along the route recorded in the catalog.
pub fn run_parabolic(case: &ParabolicCase, q_max: u64) -> Result<CaseReport> {
    let mut rep = CaseReport::new(&case.id);
    let entries = match &case.route {
        ParabolicRoute::PPower => p_power_route(case, q_max)?,
        ParabolicRoute::PPowerGraph => {
            let mut es = p_power_route(case, q_max)?;
            let cross = parabolic_order_route(case, q_max)?;
            let note = if closes(&cross) {
                "gcd bound against |P| also eliminates every q"
            } else {
                "gcd bound against |P| alone leaves q open"
            };
            es[0] = es[0].clone().note("p-power subdegree assumes a graph automorphism in G").note(note);
            es
        }
        ParabolicRoute::RankThree { d1 } => {
            let mut es = gcd_route(case, d1, false, q_max, |q| Ok(d1.eval(&q.q_big())))?;
            es[0] = es[0]
                .clone()
                .note("subdegree d1 = q(q^8-1)(q^3+1)/(q-1)")
                .note("index denominator: 1 + d1 + d2 = v holds with (q-1), not with (q^8-1)");
            es
        }
        ParabolicRoute::GcdBound => parabolic_order_route(case, q_max)?,
        ParabolicRoute::Special => {
            vec![parabolic_entry(case, Stage::SymbolicBound, Verdict::RoutedToSpecial)]
        }
    };
    for e in entries {
        rep.push(e);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{find_case, find_parabolic};

    #[test]
    fn g2_parabolic_leaves_only_q2() {
        for id in ["G2:P1", "G2:P2"] {
            let case = find_parabolic(id).unwrap();
            let rep = run_parabolic(&case, 1000).unwrap();
            let qs: Vec<_> = rep.entries.iter().filter_map(|e| e.q.clone()).collect();
            assert_eq!(qs, vec![BigInt::from(2)]);
            assert_eq!(rep.verdict(), Verdict::Eliminated);
        }
    }

    #[test]
    fn g2_a2_is_routed() {
        let rep = run_case(&find_case("G2:A2+").unwrap(), 1000).unwrap();
        assert_eq!(rep.verdict(), Verdict::RoutedToSpecial);
    }

    #[test]
    fn f4_3d4_eliminated_at_exact_stage() {
        let rep = run_case(&find_case("F4:3D4").unwrap(), 1000).unwrap();
        assert_eq!(rep.verdict(), Verdict::Eliminated);
        let exact: Vec<_> = rep.entries.iter().filter(|e| e.stage == Stage::ExactGcd).collect();
        assert_eq!(exact.len(), 7);
    }
}
