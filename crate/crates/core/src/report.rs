//! Verification reports with a stable Json shape:
//! `{"claim": ..., "status": "pass"|"fail", "details": [...]}`.

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub claim: String,
    pub status: Status,
    pub details: Vec<Value>,
}

impl Report {
    pub fn new(claim: impl Into<String>) -> Self {
        Report {
            claim: claim.into(),
            status: Status::Pass,
            details: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn detail(&mut self, value: Value) -> &mut Self {
        self.details.push(value);
        self
    }

    /// Records a named check; a false `ok` marks the whole report as failed.
    pub fn check(&mut self, name: &str, ok: bool, data: Value) -> bool {
        if !ok {
            self.status = Status::Fail;
        }
        self.details.push(json!({
            "check": name,
            "ok": ok,
            "data": data,
        }));
        ok
    }

    pub fn fail(&mut self, data: Value) {
        self.status = Status::Fail;
        self.details.push(data);
    }

    /// Folds a sub-report in; any failure propagates.
    pub fn absorb(&mut self, other: Report) {
        if !other.passed() {
            self.status = Status::Fail;
        }
        self.details.push(serde_json::to_value(other).unwrap());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }
}

/// Hex SHA-256 of the newline-joined textual forms of a sample corpus.
pub fn corpus_hash<T: std::fmt::Display>(samples: &[T]) -> String {
    let mut h = Sha256::new();
    for s in samples {
        h.update(s.to_string().as_bytes());
        h.update(b"\n");
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let mut r = Report::new("demo");
        r.check("one", true, json!(1));
        assert!(r.passed());
        r.check("two", false, json!("x"));
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["claim"], "demo");
        assert_eq!(v["status"], "fail");
        assert_eq!(v["details"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn hash_is_order_sensitive() {
        assert_ne!(corpus_hash(&["a", "b"]), corpus_hash(&["b", "a"]));
        assert_eq!(corpus_hash(&["a"]).len(), 64);
    }
}
