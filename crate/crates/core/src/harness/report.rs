use std::time::Duration;

use serde::{Serialize, Serializer};

/// Stored certificates per report; the violation count keeps going.
pub const MAX_CERTIFICATES: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub graph6: String,
    pub expected: String,
    pub observed: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub corpus: String,
    /// Connected corpus graphs with at least two vertices.
    pub graphs_tested: u64,
    /// Graphs on which the checked statement was not vacuous.
    pub premise_held: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    /// KE graphs with a perfect matching whose square is not KE (necessity only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_converse_witnesses: Option<u64>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
    pub seed: u64,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

impl VerificationReport {
    pub fn new(check_name: &str, corpus: &str, seed: u64) -> Self {
        VerificationReport {
            check_name: check_name.to_string(),
            corpus: corpus.to_string(),
            graphs_tested: 0,
            premise_held: 0,
            violation_count: 0,
            violations: Vec::new(),
            non_converse_witnesses: None,
            elapsed: Duration::ZERO,
            seed,
        }
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    pub fn record(&mut self, violation: Violation) {
        self.violation_count += 1;
        if self.violations.len() < MAX_CERTIFICATES {
            self.violations.push(violation);
        }
    }

    /// Folds `other` into `self`. Associative; certificates keep their order.
    pub fn merge(&mut self, other: VerificationReport) {
        self.graphs_tested += other.graphs_tested;
        self.premise_held += other.premise_held;
        self.violation_count += other.violation_count;
        let room = MAX_CERTIFICATES.saturating_sub(self.violations.len());
        self.violations.extend(other.violations.into_iter().take(room));
        self.non_converse_witnesses = match (self.non_converse_witnesses, other.non_converse_witnesses) {
            (None, None) => None,
            (a, b) => Some(a.unwrap_or(0) + b.unwrap_or(0)),
        };
        self.elapsed += other.elapsed;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn violation(i: usize) -> Violation {
        Violation { graph6: format!("g{i}"), expected: "e".into(), observed: "o".into() }
    }

    #[test]
    fn caps_certificates() {
        let mut r = VerificationReport::new("x", "c", 0);
        for i in 0..150 {
            r.record(violation(i));
        }
        assert_eq!(r.violation_count, 150);
        assert_eq!(r.violations.len(), MAX_CERTIFICATES);
        assert!(!r.passed());
    }

    #[test]
    fn merge_is_associative() {
        let part = |k: usize, count: usize| {
            let mut r = VerificationReport::new("x", "c", 0);
            r.graphs_tested = k as u64;
            for i in 0..count {
                r.record(violation(k * 1000 + i));
            }
            r
        };
        let mut left = part(1, 60);
        let mut bc = part(2, 30);
        bc.merge(part(3, 40));
        left.merge(bc);

        let mut right = part(1, 60);
        right.merge(part(2, 30));
        right.merge(part(3, 40));

        assert_eq!(left.violations, right.violations);
        assert_eq!(left.violation_count, right.violation_count);
        assert_eq!(left.graphs_tested, 6);
    }

    #[test]
    fn json_has_stable_keys() {
        let r = VerificationReport::new("chain", "fixtures", 7);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["check_name", "graphs_tested", "violations", "elapsed_ms", "seed"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }
}
