//! Pass/fail reports with exact witnesses, serializable to JSON for the CLI.

use serde::{Deserialize, Serialize};

use crate::exactla::{rational_to_string, Matrix, Scalar};

/// One named check. `witness` holds the offending matrix (or vector) as
/// rational strings when the check failed and a residual is meaningful.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: true,
            witness: None,
            note: None,
        }
    }

    pub fn fail(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: false,
            witness: None,
            note: None,
        }
    }

    pub fn of(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass,
            witness: None,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_witness<T: Scalar>(mut self, m: &Matrix<T>) -> Self {
        self.witness = Some(witness_of(m));
        self
    }
}

/// A titled list of checks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Plain-text rendering, one line per check.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("== {} ==\n", self.title));
        for c in &self.checks {
            out.push_str(&format!(
                "{}  {}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name
            ));
            if let Some(note) = &c.note {
                out.push_str(&format!("  ({note})"));
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                let rows: Vec<String> = w.iter().map(|r| format!("  [{}]", r.join(", "))).collect();
                out.push_str(&rows.join("\n"));
                out.push('\n');
            }
        }
        out.push_str(&format!(
            "{}: {} of {} checks passed\n",
            if self.all_pass() { "OK" } else { "FAILED" },
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        ));
        out
    }
}

/// Matrix entries rendered as exact strings, row by row.
pub fn witness_of<T: Scalar>(m: &Matrix<T>) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect())
        .collect()
}

/// Rational matrix serialized for file formats.
pub fn rational_rows(m: &crate::RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| rational_to_string(&m[(r, c)]))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("demo");
        r.push(Check::pass("a"));
        r.push(Check::fail("b").with_note("residual nonzero"));
        let parsed: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(parsed, r);
        assert!(!r.all_pass());
    }
}
