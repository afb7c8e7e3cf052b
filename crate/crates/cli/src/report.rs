//! JSON-lines verification reports.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A case the theory leaves open; the witness records what was observed.
    Open,
    /// The instance exceeded a configured cap and was not checked.
    CapExceeded,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub suite: String,
    pub claim_ref: String,
    pub group: String,
    pub status: Status,
    pub witness: Value,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub records: Vec<Record>,
}

impl Report {
    pub fn push(&mut self, suite: &str, claim_ref: &str, group: &str, ok: bool, witness: Value) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push_status(suite, claim_ref, group, status, witness);
    }

    pub fn push_status(&mut self, suite: &str, claim_ref: &str, group: &str, status: Status, witness: Value) {
        self.records.push(Record {
            suite: suite.into(),
            claim_ref: claim_ref.into(),
            group: group.into(),
            status,
            witness,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&serde_json::to_string(r).expect("record serialisation"));
            out.push('\n');
        }
        out
    }
}
