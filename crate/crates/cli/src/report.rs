use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Recorded for information only; never fails a suite.
    Info,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Info => "info",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

impl Check {
    /// A pass/fail check comparing two renderings of the same value.
    pub fn compare(id: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        let status = if expected == actual { Status::Pass } else { Status::Fail };
        Check {
            id: id.into(),
            status,
            expected,
            actual,
        }
    }

    pub fn truth(id: impl Into<String>, ok: bool) -> Self {
        Check::compare(id, true, ok)
    }

    pub fn info(id: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Check {
            id: id.into(),
            status: Status::Info,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    /// Checks are stored sorted by id so that output does not depend on
    /// the order in which they ran.
    pub fn new(suite: impl Into<String>, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|x, y| x.id.cmp(&y.id));
        VerifyReport {
            suite: suite.into(),
            checks,
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "id": c.id,
                    "status": c.status.as_str(),
                    "expected": c.expected,
                    "actual": c.actual,
                })
            })
            .collect();
        json!({ "suite": self.suite, "checks": checks, "pass": self.pass() })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<4} {}", c.status.as_str(), c.id));
            if c.status != Status::Pass {
                out.push_str(&format!("  expected={} actual={}", c.expected, c.actual));
            }
            out.push('\n');
        }
        let passed = self.checks.iter().filter(|c| c.status == Status::Pass).count();
        out.push_str(&format!(
            "suite {}: {} checks, {} passed, {} failed: {}\n",
            self.suite,
            self.checks.len(),
            passed,
            self.failures().count(),
            if self.pass() { "PASS" } else { "FAIL" }
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn info_checks_do_not_fail() {
        let r = VerifyReport::new(
            "x",
            vec![Check::compare("b", 1, 1), Check::info("a", "-", "whatever")],
        );
        assert!(r.pass());
        assert_eq!(r.checks[0].id, "a");
        let r = VerifyReport::new("x", vec![Check::compare("b", 1, 2)]);
        assert!(!r.pass());
        assert_eq!(r.to_json()["pass"], false);
    }
}
