//! Theorem verification: for each family instance, compare the closed form
//! with the pair-sum polynomial of the canonical colouring.
//!
//! A disagreement is a [`Status::Mismatch`] record, never an error.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::closed_forms::{closed_form, FamilyKind, TheoremId};
use crate::error::{Error, Result};
use crate::graph::FamilySpec;
use crate::polynomial::{CoeffDiff, Polynomial};
use crate::schultz::{family_variant_polynomial, Variant};

/// Inclusive range of `n`, written `lo..hi` or just `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl NRange {
    pub fn new(lo: usize, hi: usize) -> Result<Self> {
        if lo > hi {
            return Err(Error::BadParams(format!("empty range {lo}..{hi}")));
        }
        Ok(NRange { lo, hi })
    }
}

impl FromStr for NRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("expected <lo>..<hi> or <n>, got {s:?}"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        match s.split_once("..") {
            Some((lo, hi)) => NRange::new(num(lo)?, num(hi.trim_start_matches('='))?),
            None => {
                let n = num(s)?;
                NRange::new(n, n)
            }
        }
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub theorem: TheoremId,
    pub params: FamilySpec,
    pub variant: Variant,
    pub oracle: Polynomial,
    pub closed: Polynomial,
    /// `(degree, oracle coefficient, closed-form coefficient)`.
    pub diffs: Vec<CoeffDiff>,
    pub status: Status,
}

impl VerificationRecord {
    pub fn evaluate(theorem: TheoremId, params: FamilySpec) -> Result<Self> {
        let variant = theorem.variant();
        let oracle = family_variant_polynomial(params, variant)?;
        let closed = closed_form(theorem, params)?;
        let diffs = oracle.diff_report(&closed);
        let status = if diffs.is_empty() { Status::Match } else { Status::Mismatch };
        Ok(VerificationRecord { theorem, params, variant, oracle, closed, diffs, status })
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub matched: usize,
    pub mismatched: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub theorems: BTreeMap<TheoremId, Tally>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub records: Vec<VerificationRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn from_records(mut records: Vec<VerificationRecord>) -> Self {
        records.sort_by_key(|r| (r.theorem, r.params));
        let mut summary = Summary::default();
        for r in &records {
            let tally = summary.theorems.entry(r.theorem).or_default();
            match r.status {
                Status::Match => {
                    tally.matched += 1;
                    summary.matched += 1;
                }
                Status::Mismatch => {
                    tally.mismatched += 1;
                    summary.mismatched += 1;
                }
            }
        }
        summary.total = records.len();
        VerificationReport { records, summary }
    }

    pub fn all_match(&self) -> bool {
        self.summary.mismatched == 0
    }

    /// 0 when every record matches, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_match() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedInput {
            line: e.line(),
            message: e.to_string(),
        })
    }

    /// One line per record followed by per-theorem and overall tallies.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let _ = write!(out, "{} {} ", r.theorem, r.params);
            match r.status {
                Status::Match => out.push_str("match"),
                Status::Mismatch => {
                    out.push_str("MISMATCH");
                    for d in &r.diffs {
                        let _ = write!(out, " [x^{}: oracle {} closed {}]", d.degree, d.left, d.right);
                    }
                }
            }
            out.push('\n');
        }
        for (id, t) in &self.summary.theorems {
            let _ = writeln!(out, "{id}: {} match, {} mismatch", t.matched, t.mismatched);
        }
        let _ = writeln!(
            out,
            "total: {} records, {} match, {} mismatch",
            self.summary.total, self.summary.matched, self.summary.mismatched
        );
        out
    }
}

/// Family instances a theorem is checked on: `n` across the range for
/// paths, cycles and complete graphs (skipping `n` below the theorem's
/// minimum), and `1 <= b <= a <= a_max` for complete bipartite graphs, with
/// `a_max` defaulting to the top of the range.
pub fn instances(id: TheoremId, range: NRange, a_max: Option<usize>) -> Vec<FamilySpec> {
    match id.family() {
        FamilyKind::CompleteBipartite => {
            let a_max = a_max.unwrap_or(range.hi);
            (1..=a_max)
                .flat_map(|a| (1..=a).map(move |b| FamilySpec::CompleteBipartite { a, b }))
                .collect()
        }
        kind => (range.lo.max(id.min_n())..=range.hi)
            .map(|n| match kind {
                FamilyKind::Path => FamilySpec::Path { n },
                FamilyKind::Cycle => FamilySpec::Cycle { n },
                _ => FamilySpec::Complete { n },
            })
            .collect(),
    }
}

pub fn verify(ids: &[TheoremId], range: NRange, a_max: Option<usize>) -> Result<VerificationReport> {
    let mut ids = ids.to_vec();
    ids.sort();
    ids.dedup();
    let records = ids
        .iter()
        .flat_map(|&id| instances(id, range, a_max).into_iter().map(move |spec| (id, spec)))
        .map(|(id, spec)| VerificationRecord::evaluate(id, spec))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::from_records(records))
}
