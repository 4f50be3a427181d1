//! Certificates: named checks with measured deviations and tolerances.
//!
//! A check passes when its measured deviation is at most its tolerance.
//! Deviations and tolerances serialize as decimal strings with 17
//! significant digits so that JSON round-trips reproduce the exact f64.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// One named check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(
        serialize_with = "serialize_f64_string",
        deserialize_with = "deserialize_f64_string"
    )]
    pub max_deviation: f64,
    #[serde(
        serialize_with = "serialize_f64_string",
        deserialize_with = "deserialize_f64_string"
    )]
    pub tolerance: f64,
}

/// A named bundle of checks; `overall` is their conjunction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub subject: String,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl Certificate {
    pub fn new(subject: impl Into<String>) -> Self {
        Self {
            subject: subject.into(),
            checks: Vec::new(),
            overall: true,
        }
    }

    /// Record a check: passes iff `deviation` ≤ `tolerance`.
    pub fn check(&mut self, name: impl Into<String>, deviation: f64, tolerance: f64) {
        let passed = deviation <= tolerance;
        self.overall &= passed;
        self.checks.push(Check {
            name: name.into(),
            passed,
            max_deviation: deviation,
            tolerance,
        });
    }

    /// Record an exact (tolerance-free) check of a counted or boolean fact.
    /// `deviation` is 0 when the fact holds, otherwise its integer distance.
    pub fn check_exact(&mut self, name: impl Into<String>, deviation: f64) {
        self.check(name, deviation, 0.0);
    }

    pub fn check_bool(&mut self, name: impl Into<String>, ok: bool) {
        self.check_exact(name, if ok { 0.0 } else { 1.0 });
    }

    /// Absorb another certificate's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Certificate) {
        for c in other.checks {
            self.overall &= c.passed;
            self.checks.push(Check {
                name: format!("{}/{}", prefix, c.name),
                ..c
            });
        }
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serialization is infallible")
    }
}

/// 17 significant digits: enough to reproduce any finite f64 exactly.
pub fn f64_to_string(v: f64) -> String {
    format!("{:.16e}", v)
}

fn serialize_f64_string<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&f64_to_string(*v))
}

fn deserialize_f64_string<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    let s = String::deserialize(d)?;
    s.parse::<f64>().map_err(D::Error::custom)
}
