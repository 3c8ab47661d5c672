//! Structured pass/fail reports for identity verification.
//!
//! In exact mode a report passes iff the residual is exactly zero; in
//! numeric mode iff the residual magnitude is below the stated tolerance.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::CycloElement;
use crate::rational::{format_rational, BigRational};
use crate::value::ExactValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Numeric,
}

/// Presentation form of a computed value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ValueRepr {
    Rational { value: String },
    Cyclotomic { conductor: u64, coeffs: Vec<String> },
    Complex { re: String, im: String, digits: u32 },
}

impl ValueRepr {
    pub fn rational(q: &BigRational) -> Self {
        ValueRepr::Rational {
            value: format_rational(q),
        }
    }

    pub fn cyclotomic(c: &CycloElement) -> Self {
        ValueRepr::Cyclotomic {
            conductor: c.conductor(),
            coeffs: c.coeffs().iter().map(format_rational).collect(),
        }
    }

    pub fn exact(v: &ExactValue) -> Self {
        match v {
            ExactValue::Rational(q) => ValueRepr::rational(q),
            ExactValue::Cyclotomic(c) => ValueRepr::cyclotomic(c),
        }
    }
}

impl std::fmt::Display for ValueRepr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ValueRepr::Rational { value } => write!(f, "{value}"),
            ValueRepr::Cyclotomic { conductor, coeffs } => {
                write!(f, "cyclotomic(n={conductor}; {})", coeffs.join(", "))
            }
            ValueRepr::Complex { re, im, digits } => {
                write!(f, "{re} + {im}i ({digits} digits)")
            }
        }
    }
}

pub type Params = BTreeMap<String, String>;

/// Builds a parameter echo map from label/value pairs.
pub fn params(pairs: &[(&str, String)]) -> Params {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity: String,
    pub parameters: Params,
    pub lhs: ValueRepr,
    pub rhs: ValueRepr,
    pub residual: ValueRepr,
    pub pass: bool,
    pub mode: Mode,
}

impl VerificationReport {
    /// Exact-mode report: passes iff `lhs - rhs` is exactly zero.
    pub fn exact(
        identity: &str,
        parameters: Params,
        lhs: &ExactValue,
        rhs: &ExactValue,
    ) -> Self {
        let residual = lhs.sub(rhs);
        VerificationReport {
            identity: identity.to_string(),
            parameters,
            lhs: ValueRepr::exact(lhs),
            rhs: ValueRepr::exact(rhs),
            residual: ValueRepr::exact(&residual),
            pass: residual.is_zero(),
            mode: Mode::Exact,
        }
    }

    /// Numeric-mode report from a precomputed residual magnitude.
    pub fn numeric(
        identity: &str,
        parameters: Params,
        lhs: ValueRepr,
        rhs: ValueRepr,
        residual: ValueRepr,
        pass: bool,
    ) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            parameters,
            lhs,
            rhs,
            residual,
            pass,
            mode: Mode::Numeric,
        }
    }

    pub fn one_line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!(
            "{status} {} [{}] lhs={} rhs={} residual={}",
            self.identity,
            params.join(" "),
            self.lhs,
            self.rhs,
            self.residual
        )
    }
}
