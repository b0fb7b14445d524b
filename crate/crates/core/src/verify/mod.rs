//! Named, reproducible verification checks producing JSON-serialisable
//! records. Each check re-derives one statement about the Plücker ideal or
//! its combinatorics at a given `n`.

mod checks;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::RankClause;

pub use checks::{sydney_sample, SydneyTally};

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20240917;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    Oracle,
    GbQuadrics,
    GbAppendix,
    Elimination,
    Sydney,
    Gorenstein,
    AslBasis,
    StanleyReisner,
    ArcsBijection,
}

impl CheckId {
    pub const ALL: [CheckId; 9] = [
        CheckId::Oracle,
        CheckId::GbQuadrics,
        CheckId::GbAppendix,
        CheckId::Elimination,
        CheckId::Sydney,
        CheckId::Gorenstein,
        CheckId::AslBasis,
        CheckId::StanleyReisner,
        CheckId::ArcsBijection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Oracle => "oracle",
            CheckId::GbQuadrics => "gb-quadrics",
            CheckId::GbAppendix => "gb-appendix",
            CheckId::Elimination => "elimination",
            CheckId::Sydney => "sydney",
            CheckId::Gorenstein => "gorenstein",
            CheckId::AslBasis => "asl-basis",
            CheckId::StanleyReisner => "stanley-reisner",
            CheckId::ArcsBijection => "arcs-bijection",
        }
    }

    /// Values of `n` the check supports.
    pub fn supported(self) -> std::ops::RangeInclusive<usize> {
        match self {
            CheckId::Oracle => 4..=7,
            CheckId::GbQuadrics => 4..=7,
            CheckId::GbAppendix => 5..=7,
            CheckId::Elimination => 4..=7,
            CheckId::Sydney => 3..=7,
            CheckId::Gorenstein => 4..=10,
            CheckId::AslBasis => 2..=6,
            CheckId::StanleyReisner => 4..=8,
            CheckId::ArcsBijection => 2..=9,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check '{s}'")))
    }
}

/// Which order `gb-quadrics` certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadricOrder {
    /// Reverse lexicographic from linear extensions of `L_n`.
    Revlex,
    /// Lexicographic from linear extensions of `Π_n`.
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// Outcome of one check at one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub check: CheckId,
    pub n: usize,
    pub parameters: BTreeMap<String, String>,
    pub verdict: Verdict,
    /// Counterexample on failure; certificate summary on success.
    pub witness: Option<String>,
    /// Extra observations that are reported but never fail the check.
    pub notes: Vec<String>,
    pub wall_ms: u64,
}

impl CheckRecord {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Settings shared by all checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Number of pseudo-random linear extensions tried besides the canonical one.
    pub extensions: usize,
    /// Sample size for the sampled interval-graph checks.
    pub samples: usize,
    pub rank_clause: RankClause,
    pub order: QuadricOrder,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: DEFAULT_SEED,
            extensions: 5,
            samples: 10_000,
            rank_clause: RankClause::default(),
            order: QuadricOrder::Revlex,
        }
    }
}

/// A run of several checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub seed: u64,
    pub records: Vec<CheckRecord>,
    /// Set when the run stopped early, e.g. on an exhausted S-pair budget.
    pub aborted: Option<String>,
}

impl VerificationReport {
    pub fn new(seed: u64) -> Self {
        VerificationReport { schema_version: SCHEMA_VERSION, seed, records: Vec::new(), aborted: None }
    }

    pub fn all_passed(&self) -> bool {
        self.aborted.is_none() && self.records.iter().all(CheckRecord::passed)
    }

    /// Sorts by check id, then `n`, then parameters.
    pub fn sort(&mut self) {
        self.records.sort_by(|a, b| (a.check, a.n, &a.parameters).cmp(&(b.check, b.n, &b.parameters)));
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let params: Vec<String> = r.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let verdict = match r.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Skipped => "SKIP",
            };
            out.push_str(&format!("{verdict} {} n={}", r.check, r.n));
            if !params.is_empty() {
                out.push_str(&format!(" [{}]", params.join(" ")));
            }
            out.push_str(&format!(" ({} ms)\n", r.wall_ms));
            if let Some(w) = &r.witness {
                out.push_str(&format!("    {w}\n"));
            }
            for note in &r.notes {
                out.push_str(&format!("    note: {note}\n"));
            }
        }
        if let Some(a) = &self.aborted {
            out.push_str(&format!("ABORTED {a}\n"));
        }
        let failed = self.records.iter().filter(|r| !r.passed()).count();
        out.push_str(&format!("{} checks, {} failed\n", self.records.len(), failed));
        out
    }
}

/// Intermediate result produced by the check bodies.
pub(crate) struct Outcome {
    pub ok: bool,
    pub witness: Option<String>,
    pub notes: Vec<String>,
    pub parameters: BTreeMap<String, String>,
}

impl Outcome {
    pub fn pass(summary: impl Into<String>) -> Self {
        Outcome { ok: true, witness: Some(summary.into()), notes: Vec::new(), parameters: BTreeMap::new() }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Outcome { ok: false, witness: Some(witness.into()), notes: Vec::new(), parameters: BTreeMap::new() }
    }

    pub fn with_param(mut self, k: &str, v: impl ToString) -> Self {
        self.parameters.insert(k.into(), v.to_string());
        self
    }

    pub fn with_notes(mut self, notes: Vec<String>) -> Self {
        self.notes.extend(notes);
        self
    }
}

/// Runs one check at one `n`. Values of `n` outside the supported range
/// give a skipped record.
pub fn run_check(check: CheckId, n: usize, opts: &VerifyOptions) -> Result<CheckRecord> {
    let start = Instant::now();
    let outcome = if check.supported().contains(&n) {
        Some(checks::dispatch(check, n, opts)?)
    } else {
        None
    };
    let wall_ms = start.elapsed().as_millis() as u64;
    Ok(match outcome {
        Some(o) => CheckRecord {
            check,
            n,
            parameters: o.parameters,
            verdict: if o.ok { Verdict::Pass } else { Verdict::Fail },
            witness: o.witness,
            notes: o.notes,
            wall_ms,
        },
        None => {
            let r = check.supported();
            CheckRecord {
                check,
                n,
                parameters: BTreeMap::new(),
                verdict: Verdict::Skipped,
                witness: Some(format!("supported n: {}..={}", r.start(), r.end())),
                notes: Vec::new(),
                wall_ms,
            }
        }
    })
}

/// Every check at every supported `n <= max_n`; `gb-quadrics` runs for both
/// orders. Stops at the first error (for instance an exhausted budget) and
/// returns what was collected so far together with that error.
pub fn run_all(max_n: usize, opts: &VerifyOptions) -> (VerificationReport, Option<Error>) {
    let mut report = VerificationReport::new(opts.seed);
    for check in CheckId::ALL {
        let range = check.supported();
        for n in *range.start()..=max_n.min(*range.end()) {
            let orders: &[QuadricOrder] = if check == CheckId::GbQuadrics {
                &[QuadricOrder::Revlex, QuadricOrder::Lex]
            } else {
                &[opts.order]
            };
            for &order in orders {
                let o = VerifyOptions { order, ..opts.clone() };
                match run_check(check, n, &o) {
                    Ok(r) => report.records.push(r),
                    Err(e) => {
                        report.aborted = Some(format!("{check} n={n}: {e}"));
                        report.sort();
                        return (report, Some(e));
                    }
                }
            }
        }
    }
    report.sort();
    (report, None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for c in CheckId::ALL {
            assert_eq!(c.name().parse::<CheckId>().unwrap(), c);
        }
        assert!("nope".parse::<CheckId>().is_err());
    }

    #[test]
    fn out_of_range_is_skipped() {
        let r = run_check(CheckId::GbAppendix, 3, &VerifyOptions::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Skipped);
        assert!(!r.passed());
    }

    #[test]
    fn small_run_passes() {
        let opts = VerifyOptions { samples: 200, ..VerifyOptions::default() };
        let (report, err) = run_all(5, &opts);
        assert!(err.is_none());
        assert!(report.all_passed(), "{}", report.to_text());
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["schema_version"], 1);
        assert_eq!(json["records"][0]["check"], "oracle");
    }
}
