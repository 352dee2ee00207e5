//! Machine-readable verification reports.

use serde::{Serialize, Serializer};

use crate::{format_rational, Rational};

/// Serializes a rational as a `"num/den"` string.
pub fn serialize_rational<S: Serializer>(
    q: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub command: String,
    pub inputs: serde_json::Map<String, serde_json::Value>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
    pub overall_pass: bool,
}

impl VerificationReport {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            inputs: serde_json::Map::new(),
            checks: Vec::new(),
            runtime_ms: None,
            overall_pass: true,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.inputs.insert(
            key.to_string(),
            serde_json::to_value(value).expect("plain data serializes"),
        );
        self
    }

    /// Records a check that passes when the rendered values are equal.
    pub fn check(
        &mut self,
        name: &str,
        expected: impl ToString,
        actual: impl ToString,
    ) -> &mut Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        self.push(Check {
            name: name.to_string(),
            expected,
            actual,
            pass,
        })
    }

    /// Records a check with an explicit verdict.
    pub fn check_with(
        &mut self,
        name: &str,
        expected: impl ToString,
        actual: impl ToString,
        pass: bool,
    ) -> &mut Self {
        self.push(Check {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        })
    }

    fn push(&mut self, c: Check) -> &mut Self {
        self.overall_pass &= c.pass;
        self.checks.push(c);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// One line per check, then the verdict.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.command);
        for (k, v) in &self.inputs {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        for c in &self.checks {
            let tag = if c.pass { "ok  " } else { "FAIL" };
            out.push_str(&format!(
                "{tag} {}: expected {}, got {}\n",
                c.name, c.expected, c.actual
            ));
        }
        if let Some(ms) = self.runtime_ms {
            out.push_str(&format!("runtime {ms} ms\n"));
        }
        out.push_str(if self.overall_pass {
            "overall: pass\n"
        } else {
            "overall: FAIL\n"
        });
        out
    }
}
