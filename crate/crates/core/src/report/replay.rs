use rayon::prelude::*;

use super::{CaseReport, EliminationReport};
use crate::catalog::{nonparabolic_cases, parabolic_cases, ParabolicCase, SubgroupCase};
use crate::error::{Error, Result};
use crate::sieve::{run_case, run_parabolic};
use crate::special::{g2_a2_check, ree_check, suzuki_check};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReplayConfig {
    pub q_max: u64,
    pub suzuki_cap: u64,
    pub ree_cap: u64,
}

impl Default for ReplayConfig {
    fn default() -> Self {
        ReplayConfig { q_max: 100_000, suzuki_cap: 1 << 15, ree_cap: 19_683 }
    }
}

enum Job {
    Row(SubgroupCase),
    Parabolic(ParabolicCase),
}

impl Job {
    fn id(&self) -> &str {
        match self {
            Job::Row(c) => &c.id,
            Job::Parabolic(c) => &c.id,
        }
    }

    fn run(&self, cfg: &ReplayConfig) -> Result<CaseReport> {
        let mut rep = match self {
            Job::Row(c) => run_case(c, cfg.q_max)?,
            Job::Parabolic(c) => run_parabolic(c, cfg.q_max)?,
        };
        let extra = match self.id() {
            "G2:A2+" => g2_a2_check(1, cfg.q_max),
            "G2:A2-" => g2_a2_check(-1, cfg.q_max),
            "2B2:P1" => suzuki_check(cfg.suzuki_cap),
            "2G2:P1" => ree_check(cfg.ree_cap),
            _ => Vec::new(),
        };
        rep.entries.extend(extra);
        Ok(rep)
    }
}

fn jobs() -> Result<Vec<Job>> {
    let mut out: Vec<Job> = nonparabolic_cases().into_iter().map(Job::Row).collect();
    out.extend(parabolic_cases()?.into_iter().map(Job::Parabolic));
    Ok(out)
}

/// Every table row, every maximal parabolic and the dedicated analyses.
pub fn run_all(cfg: &ReplayConfig) -> Result<EliminationReport> {
    let cases = jobs()?.par_iter().map(|j| j.run(cfg)).collect::<Result<Vec<_>>>()?;
    Ok(EliminationReport::from_cases(cases))
}

/// A single case by id, table row or parabolic.
pub fn run_one(id: &str, cfg: &ReplayConfig) -> Result<EliminationReport> {
    let job = jobs()?.into_iter().find(|j| j.id() == id).ok_or_else(|| Error::UnknownCase(id.to_string()))?;
    Ok(EliminationReport::from_cases(vec![job.run(cfg)?]))
}

/// `(id, ambient, subgroup, conditions)` for every case.
pub fn case_list() -> Result<Vec<[String; 4]>> {
    let mut out: Vec<[String; 4]> = nonparabolic_cases()
        .into_iter()
        .map(|c| [c.id.clone(), c.ambient.tag(), c.subgroup.clone(), c.conditions()])
        .collect();
    for c in parabolic_cases()? {
        out.push([
            c.id.clone(),
            c.family.tag().to_string(),
            format!("maximal parabolic P{}", c.node),
            "valid q".into(),
        ]);
    }
    Ok(out)
}
