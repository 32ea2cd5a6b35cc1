//! Check records and suite reports, with JSON and TSV output.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        };
        write!(f, "{s}")
    }
}

/// Result of one check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub counts: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<String>,
    pub elapsed_ms: u64,
}

/// Incrementally built check; the first recorded failure is kept as the
/// counterexample.
pub struct Check {
    record: CheckRecord,
    started: Instant,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: &str) -> Check {
        Check {
            record: CheckRecord {
                id: id.into(),
                anchor: anchor.to_string(),
                status: Status::Pass,
                counts: BTreeMap::new(),
                detail: None,
                counterexample: None,
                elapsed_ms: 0,
            },
            started: Instant::now(),
        }
    }

    pub fn count(&mut self, key: &str, by: u64) {
        *self.record.counts.entry(key.to_string()).or_insert(0) += by;
    }

    pub fn set_count(&mut self, key: &str, value: u64) {
        self.record.counts.insert(key.to_string(), value);
    }

    /// Records one evaluated case.
    pub fn expect(&mut self, ok: bool, counterexample: impl FnOnce() -> String) {
        self.count("cases", 1);
        if !ok {
            self.count("failures", 1);
            self.fail(counterexample());
        }
    }

    pub fn fail(&mut self, counterexample: String) {
        self.record.status = Status::Fail;
        if self.record.counterexample.is_none() {
            self.record.counterexample = Some(counterexample);
        }
    }

    pub fn inconclusive(&mut self, why: String) {
        if self.record.status == Status::Pass {
            self.record.status = Status::Inconclusive;
        }
        self.record.detail = Some(why);
    }

    pub fn detail(&mut self, text: impl Into<String>) {
        self.record.detail = Some(text.into());
    }

    pub fn status(&self) -> Status {
        self.record.status
    }

    pub fn finish(mut self) -> CheckRecord {
        self.record.elapsed_ms = self.started.elapsed().as_millis() as u64;
        self.record
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub toolkit_version: String,
    pub suite: String,
    pub config: BTreeMap<String, String>,
    pub checks: Vec<CheckRecord>,
    #[serde(default)]
    pub timestamp: String,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            toolkit_version: env!("CARGO_PKG_VERSION").to_string(),
            suite: suite.to_string(),
            config: BTreeMap::new(),
            checks: Vec::new(),
            timestamp: String::new(),
        }
    }

    pub fn with_config(mut self, key: &str, value: impl ToString) -> Report {
        self.config.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.checks.push(record);
    }

    pub fn extend(&mut self, records: impl IntoIterator<Item = CheckRecord>) {
        self.checks.extend(records);
    }

    /// Orders checks by id, keeping insertion order among equal ids.
    pub fn sort(&mut self) {
        self.checks.sort_by(|a, b| a.id.cmp(&b.id));
    }

    pub fn status(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if self.checks.iter().any(|c| c.status == Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialise")
    }

    /// JSON with timing fields blanked, for reproducibility comparisons.
    pub fn canonical_json(&self) -> String {
        let mut copy = self.clone();
        copy.timestamp.clear();
        for c in &mut copy.checks {
            c.elapsed_ms = 0;
        }
        copy.to_json()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("suite\tid\tanchor\tstatus\tcases\tfailures\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                self.suite,
                c.id,
                c.anchor,
                c.status,
                c.counts.get("cases").copied().unwrap_or(0),
                c.counts.get("failures").copied().unwrap_or(0)
            ));
        }
        out
    }

    /// Short human summary, one line per check.
    pub fn summary(&self) -> String {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        let mut out = String::new();
        for c in &self.checks {
            let note = c.detail.as_deref().or(c.counterexample.as_deref()).unwrap_or("");
            out.push_str(&format!("{:<width$}  {:<12} {}\n", c.id, c.status.to_string(), note));
        }
        out
    }

    /// Concatenates reports into one, sorted by suite then id.
    pub fn merge(reports: Vec<Report>) -> Report {
        let mut merged = Report::new("merged");
        for r in reports {
            for mut c in r.checks {
                c.id = format!("{}/{}", r.suite, c.id);
                merged.checks.push(c);
            }
            for (k, v) in r.config {
                merged.config.insert(format!("{}.{}", r.suite, k), v);
            }
        }
        merged.sort();
        merged
    }
}

/// Anchor strings naming the construction each check exercises.
pub mod anchors {
    pub const COMMUTATOR_FORMULA: &str = "elementary-commutator-formula";
    pub const DIAGONAL_CONJUGATION: &str = "diagonal-elementary-conjugation";
    pub const COMMUTATOR_IDENTITIES: &str = "hall-witt-and-product-commutator";
    pub const ROOT_SUBGROUPS: &str = "root-subgroup-parametrisation";
    pub const STEINBERG_TORUS: &str = "torus-action-cartan-integer";
    pub const G2_TORUS_DISPLAY: &str = "g2-short-root-torus-conjugation";
    pub const WEYL_CONJUGATION: &str = "weyl-conjugation-sign";
    pub const INVARIANT_FORM: &str = "invariant-bilinear-form";
    pub const BOREL_ISOMORPHISM: &str = "rank-one-borel-isomorphism";
    pub const AFFINE_ISOMORPHISM: &str = "affine-group-isomorphism";
    pub const BOREL_RETRACTION: &str = "borel-retraction";
    pub const ABELS_ORDER: &str = "abels-group-pattern";
    pub const SEMIDIRECT: &str = "unipotent-torus-semidirect-product";
    pub const CENTER: &str = "abels-center";
    pub const HOROSPHERICAL: &str = "horospherical-subgroups";
    pub const CONTRACTING: &str = "contracting-subgroups";
    pub const TORUS_INVARIANCE: &str = "torus-normalises-contracting";
    pub const ABELS_RETRACTION: &str = "abels-borel-retraction";
    pub const FIBER_PRODUCT: &str = "h4-fiber-product";
    pub const CANONICAL_PRESENTATION: &str = "unipotent-canonical-presentation";
    pub const ECONOMIC_PRESENTATION: &str = "unipotent-economic-presentation";
    pub const VON_DYCK: &str = "von-dyck-assignment";
    pub const MISSING_RELATIONS: &str = "derived-corner-relations";
    pub const TITS_CONNECTED: &str = "coset-complex-connected-iff-generates";
    pub const TITS_SIMPLY_CONNECTED: &str = "coset-complex-simply-connected-iff-colimit";
    pub const NERVE: &str = "coset-complex-nerve";
    pub const HOMOGENEOUS: &str = "coset-complex-homogeneous-colorable";
    pub const ACTION: &str = "coset-complex-action";
    pub const COMPARISON: &str = "coset-complex-comparison";
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_json_ignores_timing() {
        let mut a = Report::new("s");
        let mut c = Check::new("x", anchors::NERVE);
        c.expect(true, String::new);
        a.push(c.finish());
        let mut b = a.clone();
        b.timestamp = "later".into();
        b.checks[0].elapsed_ms = 99;
        assert_eq!(a.canonical_json(), b.canonical_json());
        assert_eq!(a.status(), Status::Pass);
    }

    #[test]
    fn failure_keeps_first_counterexample() {
        let mut c = Check::new("x", anchors::NERVE);
        c.expect(false, || "first".into());
        c.expect(false, || "second".into());
        let r = c.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counterexample.as_deref(), Some("first"));
        assert_eq!(r.counts["failures"], 2);
    }
}
