//! Registry of checked claims with per-claim verdict modes.

mod claims;
mod suite;

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use claims::{claim, Claim, Mode, CLAIMS};
pub use suite::{audit_all, AuditOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    ReportOnly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditEntry {
    pub claim_id: String,
    pub paper_anchor: String,
    /// Named integer parameters; ordered by name.
    pub inputs: BTreeMap<String, i64>,
    pub paper_value: String,
    pub computed_value: String,
    pub verdict: Verdict,
    /// Whether the claimed and computed values agree, whatever the mode.
    pub holds: bool,
    pub notes: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub report_only: usize,
    /// Report-only entries whose claim did not hold.
    pub report_only_mismatch: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.report_only
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" | "table" => Ok(Format::Text),
            _ => Err(Error::BadInput(format!("unknown report format {s:?}"))),
        }
    }
}

type Key = (String, BTreeMap<String, i64>);

#[derive(Debug, Clone, Default)]
pub struct Registry {
    entries: BTreeMap<Key, AuditEntry>,
    /// Treat report-only claims as asserted.
    promote: bool,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every claim asserted, including those registered as report-only.
    pub fn promoted() -> Self {
        Registry {
            promote: true,
            ..Self::default()
        }
    }

    /// Builds the entry for a registered claim; the verdict follows the claim's mode.
    pub fn check(
        &mut self,
        claim_id: &str,
        inputs: &[(&str, i64)],
        paper_value: impl Display,
        computed_value: impl Display,
        holds: bool,
        notes: impl Into<String>,
    ) -> Result<()> {
        let c = claim(claim_id).ok_or_else(|| Error::BadInput(format!("unregistered claim {claim_id}")))?;
        let verdict = match (c.mode, self.promote, holds) {
            (Mode::ReportOnly, false, _) => Verdict::ReportOnly,
            (_, _, true) => Verdict::Pass,
            (_, _, false) => Verdict::Fail,
        };
        self.file(AuditEntry {
            claim_id: claim_id.to_string(),
            paper_anchor: c.anchor.to_string(),
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            paper_value: paper_value.to_string(),
            computed_value: computed_value.to_string(),
            verdict,
            holds,
            notes: notes.into(),
        })
    }

    pub fn file(&mut self, entry: AuditEntry) -> Result<()> {
        if entry.paper_anchor.is_empty() {
            return Err(Error::BadInput(format!("{} has no anchor", entry.claim_id)));
        }
        let key = (entry.claim_id.clone(), entry.inputs.clone());
        if self.entries.contains_key(&key) {
            return Err(Error::DuplicateEntry(format!("{} {:?}", key.0, key.1)));
        }
        self.entries.insert(key, entry);
        Ok(())
    }

    /// Files every entry of `other`, keeping the union sorted.
    pub fn merge(&mut self, other: Registry) -> Result<()> {
        for e in other.entries.into_values() {
            self.file(e)?;
        }
        Ok(())
    }

    /// Sorted by `(claim_id, inputs)`.
    pub fn entries(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn summarize(&self) -> Summary {
        let mut s = Summary::default();
        for e in self.entries() {
            match e.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::ReportOnly => {
                    s.report_only += 1;
                    if !e.holds {
                        s.report_only_mismatch += 1;
                    }
                }
            }
        }
        s
    }

    /// No asserted claim failed.
    pub fn strict_ok(&self) -> bool {
        self.summarize().fail == 0
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Json => {
                for e in self.entries() {
                    out.push_str(&serde_json::to_string(e).expect("entry serializes"));
                    out.push('\n');
                }
            }
            Format::Text => {
                for e in self.entries() {
                    let inputs: Vec<String> = e.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let verdict = match e.verdict {
                        Verdict::Pass => "PASS",
                        Verdict::Fail => "FAIL",
                        Verdict::ReportOnly => "REPORT_ONLY",
                    };
                    out.push_str(&format!(
                        "{verdict:<12} {:<34} {:<24} claimed {} | computed {}",
                        e.claim_id,
                        inputs.join(","),
                        e.paper_value,
                        e.computed_value
                    ));
                    if !e.notes.is_empty() {
                        out.push_str(&format!("  ({})", e.notes));
                    }
                    out.push('\n');
                }
                let s = self.summarize();
                out.push_str(&format!(
                    "total {}: {} pass, {} fail, {} report-only ({} not holding)\n",
                    s.total(),
                    s.pass,
                    s.fail,
                    s.report_only,
                    s.report_only_mismatch
                ));
            }
        }
        out
    }

    /// Inverse of `render(Format::Json)`.
    pub fn parse_json(text: &str) -> Result<Vec<AuditEntry>> {
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| serde_json::from_str(l).map_err(|e| Error::BadInput(e.to_string())))
            .collect()
    }

    pub fn filter(&self, claim_prefix: &str) -> Vec<&AuditEntry> {
        self.entries().filter(|e| e.claim_id.starts_with(claim_prefix)).collect()
    }
}
