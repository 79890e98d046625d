//! Pass/fail reports shared by all verification routines.

use serde::Serialize;

/// An exact counterexample.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub point: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub property: String,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub big_n: Option<usize>,
    pub trials: usize,
    pub pass: bool,
    pub failures: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameters: Option<String>,
}

impl Report {
    pub fn new(property: impl Into<String>, big_n: Option<usize>) -> Self {
        Report {
            property: property.into(),
            big_n,
            trials: 0,
            pass: true,
            failures: Vec::new(),
            parameters: None,
        }
    }

    pub fn with_parameters(mut self, p: impl Into<String>) -> Self {
        self.parameters = Some(p.into());
        self
    }

    /// Records one comparison.
    pub fn check<T: std::fmt::Display + PartialEq>(&mut self, point: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        self.trials += 1;
        if lhs != rhs {
            self.fail(point(), lhs.to_string(), rhs.to_string());
        }
    }

    /// Records a comparison that could not be carried out.
    pub fn error(&mut self, point: impl Into<String>, err: &crate::Error) {
        self.trials += 1;
        self.fail(point.into(), format!("error: {err}"), String::new());
    }

    pub fn fail(&mut self, point: String, lhs: String, rhs: String) {
        self.pass = false;
        // keep reports readable; the count of failures is what matters beyond a few
        if self.failures.len() < 5 {
            self.failures.push(Witness { point, lhs, rhs });
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.trials += other.trials;
        self.pass &= other.pass;
        for w in other.failures {
            if self.failures.len() < 5 {
                self.failures.push(w);
            }
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}
