use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::Error;
use crate::quad::QuadResult;

/// One side of an identity: a float or an exact value rendered as text.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(untagged))]
pub enum Value {
    Number(f64),
    Exact(String),
}

impl Value {
    /// Non-finite floats are kept as text so that reports stay valid JSON.
    pub fn number(v: f64) -> Self {
        if v.is_finite() {
            Value::Number(v)
        } else {
            Value::Exact(alloc::format!("{v}"))
        }
    }
}

/// A report parameter.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(untagged))]
pub enum ParamValue {
    Int(i64),
    Num(f64),
    Text(String),
    List(Vec<f64>),
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<u32> for ParamValue {
    fn from(v: u32) -> Self {
        ParamValue::Int(v.into())
    }
}

impl From<f64> for ParamValue {
    fn from(v: f64) -> Self {
        ParamValue::Num(v)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(v.to_string())
    }
}

impl From<Vec<f64>> for ParamValue {
    fn from(v: Vec<f64>) -> Self {
        ParamValue::List(v)
    }
}

impl From<&[f64]> for ParamValue {
    fn from(v: &[f64]) -> Self {
        ParamValue::List(v.to_vec())
    }
}

/// Outcome of one identity check.
///
/// `passed` holds exactly when the residual is within tolerance and every
/// quadrature error estimate is within half of it.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerificationReport {
    pub identity_id: String,
    pub parameters: BTreeMap<String, ParamValue>,
    pub lhs: Value,
    pub rhs: Value,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub notes: String,
    pub quadrature_errors: Vec<f64>,
}

impl VerificationReport {
    pub fn new(identity_id: &str, tolerance: f64) -> Self {
        VerificationReport {
            identity_id: identity_id.to_string(),
            parameters: BTreeMap::new(),
            lhs: Value::Number(0.0),
            rhs: Value::Number(0.0),
            residual: 0.0,
            tolerance,
            passed: false,
            notes: String::new(),
            quadrature_errors: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<ParamValue>) -> Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn note(&mut self, text: &str) {
        if !self.notes.is_empty() {
            self.notes.push_str("; ");
        }
        self.notes.push_str(text);
    }

    pub fn quad(&mut self, r: &QuadResult) {
        self.quadrature_errors.push(r.error_estimate);
        if !r.converged {
            self.note("quadrature did not reach its tolerance");
        }
    }

    /// Records a numeric comparison, keeping the sides of the worst one.
    pub fn compare(&mut self, lhs: f64, rhs: f64) {
        let r = (lhs - rhs).abs();
        let r = if r.is_nan() { f64::MAX } else { r };
        if r > self.residual || self.residual == 0.0 {
            self.residual = r;
            self.lhs = Value::number(lhs);
            self.rhs = Value::number(rhs);
        }
    }

    /// Applies the pass rule.
    pub fn finish(mut self) -> Self {
        let quad_ok = self
            .quadrature_errors
            .iter()
            .all(|e| *e <= self.tolerance / 2.0);
        self.passed = self.residual <= self.tolerance && quad_ok;
        if !quad_ok {
            self.note("quadrature error estimate exceeds half the tolerance");
        }
        self
    }

    /// A failed report carrying the error message.
    pub fn failed(mut self, err: &Error) -> Self {
        self.residual = f64::MAX;
        self.passed = false;
        self.note(&alloc::format!("error: {err}"));
        self
    }
}
