//! Elimination reports, the polynomial expression parser, and output formats.

mod emit;
mod parse;
mod replay;

use serde::{Deserialize, Serialize};

use num_bigint::BigInt;

use crate::sieve::DesignParams;

pub use emit::{emit_report, Format};
pub use parse::parse_poly;
pub use replay::{case_list, run_all, run_one, ReplayConfig};

/// Serde adapter writing integers as decimal strings.
pub mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }

    pub mod opt {
        use super::*;

        pub fn serialize<S: Serializer>(n: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
            match n {
                Some(n) => s.serialize_some(&n.to_string()),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
            Option::<String>::deserialize(d)?.map(|s| s.parse().map_err(D::Error::custom)).transpose()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    SymbolicBound,
    ExactGcd,
    ParamSearch,
    Special,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Eliminated,
    RoutedToSpecial,
    Survivor,
    Unresolved,
}

impl Verdict {
    /// True for verdicts that leave the case open.
    pub fn is_open(self) -> bool {
        matches!(self, Verdict::Survivor | Verdict::Unresolved)
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Eliminated => "eliminated",
            Verdict::RoutedToSpecial => "routed-to-special",
            Verdict::Survivor => "survivor",
            Verdict::Unresolved => "unresolved",
        })
    }
}

impl std::fmt::Display for Stage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Stage::SymbolicBound => "symbolic-bound",
            Stage::ExactGcd => "exact-gcd",
            Stage::ParamSearch => "param-search",
            Stage::Special => "special",
        })
    }
}

/// One line of a report. Field order is the jsonl key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub case_id: String,
    pub family: String,
    pub subgroup: String,
    pub stage: Stage,
    #[serde(with = "decimal::opt")]
    pub q: Option<BigInt>,
    pub h: Option<String>,
    #[serde(with = "decimal::opt")]
    pub c: Option<BigInt>,
    #[serde(with = "decimal::opt")]
    pub a: Option<BigInt>,
    pub params: Vec<DesignParams>,
    pub verdict: Verdict,
    pub annotations: Vec<String>,
}

impl Entry {
    pub fn new(case_id: &str, family: &str, subgroup: &str, stage: Stage, verdict: Verdict) -> Self {
        Entry {
            case_id: case_id.to_string(),
            family: family.to_string(),
            subgroup: subgroup.to_string(),
            stage,
            q: None,
            h: None,
            c: None,
            a: None,
            params: Vec::new(),
            verdict,
            annotations: Vec::new(),
        }
    }

    pub fn at(mut self, q: u64) -> Self {
        self.q = Some(BigInt::from(q));
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.annotations.push(text.into());
        self
    }
}

/// All entries of one case, in generation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseReport {
    pub case_id: String,
    pub entries: Vec<Entry>,
}

impl CaseReport {
    pub fn new(case_id: impl Into<String>) -> Self {
        CaseReport { case_id: case_id.into(), entries: Vec::new() }
    }

    pub fn push(&mut self, e: Entry) {
        self.entries.push(e);
    }

    /// The worst verdict over the case's entries, ignoring routing markers
    /// when a special entry closes the case.
    pub fn verdict(&self) -> Verdict {
        let closed_by_special =
            self.entries.iter().any(|e| e.stage == Stage::Special && e.verdict == Verdict::Eliminated);
        self.entries
            .iter()
            .map(|e| match e.verdict {
                Verdict::RoutedToSpecial if closed_by_special => Verdict::Eliminated,
                v => v,
            })
            .max()
            .unwrap_or(Verdict::Unresolved)
    }
}

/// Entries of many cases, sorted by `(case_id, q)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EliminationReport {
    pub cases: Vec<CaseReport>,
}

impl EliminationReport {
    pub fn from_cases(mut cases: Vec<CaseReport>) -> Self {
        cases.sort_by(|a, b| a.case_id.cmp(&b.case_id));
        EliminationReport { cases }
    }

    /// Flattened entries; within a case entries keep generation order after
    /// a stable sort on `q` (case-level entries first).
    pub fn entries(&self) -> Vec<&Entry> {
        let mut out = Vec::new();
        for c in &self.cases {
            let mut es: Vec<&Entry> = c.entries.iter().collect();
            es.sort_by(|a, b| a.q.cmp(&b.q));
            out.extend(es);
        }
        out
    }

    pub fn eliminated(&self) -> usize {
        self.cases.iter().filter(|c| c.verdict() == Verdict::Eliminated).count()
    }

    pub fn open(&self) -> usize {
        self.cases.iter().filter(|c| c.verdict().is_open()).count()
    }

    pub fn summary(&self) -> String {
        format!("cases: {}, eliminated: {}, survivors: {}", self.cases.len(), self.eliminated(), self.open())
    }
}
