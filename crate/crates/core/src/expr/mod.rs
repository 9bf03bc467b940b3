//! Text syntax for scalars, polynomials and operator expressions.
//!
//! Parsing keeps `*` in written order; normal ordering of variables and
//! generators only happens when the tree is lowered to a value. Sugar:
//! `[m]` is the q-number, `[1/2]` the half bracket, `Q` the Q-radius,
//! `zq(m)` and `zqbar(m)` the two-variable powers.

mod lower;
mod parse;

use serde_json::json;

use crate::error::{Error, Result};
use crate::ops::OperatorExpr;
use crate::qclifford::CliffordPolynomial;
use crate::qpoly::QPolynomial;
use crate::scalars::ScalarQ;

pub use lower::lower;
pub use parse::{parse, Ast, Pos};

/// A lowered expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Scalar(ScalarQ),
    Poly(CliffordPolynomial),
    Op(OperatorExpr),
}

/// Output formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Poly(_) => "polynomial",
            Value::Op(_) => "operator",
        }
    }

    /// Polynomial view; scalars become constants.
    pub fn into_poly(self, n: usize) -> Result<CliffordPolynomial> {
        match self {
            Value::Scalar(c) => Ok(CliffordPolynomial::from_qpoly(&QPolynomial::constant(n, c))),
            Value::Poly(p) => Ok(p),
            Value::Op(_) => Err(Error::Lowering("expected a polynomial, found an operator".into())),
        }
    }

    /// Operator view; scalars become multiples of the identity.
    pub fn into_op(self) -> Result<OperatorExpr> {
        match self {
            Value::Scalar(c) => Ok(OperatorExpr::scalar(c)),
            Value::Op(o) => Ok(o),
            Value::Poly(_) => Err(Error::Lowering("expected an operator, found a polynomial".into())),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Value::Scalar(c) => c.to_text(),
            Value::Poly(p) => p.to_text(),
            Value::Op(o) => o.to_string(),
        }
    }

    pub fn to_latex(&self) -> String {
        match self {
            Value::Scalar(c) => c.to_latex(),
            Value::Poly(p) => p.to_latex(),
            Value::Op(o) => format!("\\mathtt{{{o}}}"),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Scalar(c) => serde_json::to_value(c).expect("serializable"),
            Value::Poly(p) => match p.to_qpoly() {
                Some(sp) if p.deformation().is_none() => serde_json::to_value(sp).expect("serializable"),
                _ => serde_json::to_value(p).expect("serializable"),
            },
            Value::Op(o) => json!({ "operator": o.to_string() }),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Latex => self.to_latex(),
            Format::Json => self.to_json().to_string(),
        }
    }
}

/// Parses and lowers in one step.
pub fn parse_value(input: &str, n: usize) -> Result<Value> {
    lower(&parse(input)?, n)
}

/// Parses a scalar expression.
pub fn parse_scalar(input: &str) -> Result<ScalarQ> {
    match parse_value(input, 1)? {
        Value::Scalar(c) => Ok(c),
        v => Err(Error::Lowering(format!("expected a scalar, found a {}", v.kind()))),
    }
}

/// Parses a polynomial (scalars are promoted to constants).
pub fn parse_poly(input: &str, n: usize) -> Result<CliffordPolynomial> {
    parse_value(input, n)?.into_poly(n)
}

/// Parses an operator expression (scalars are promoted).
pub fn parse_op(input: &str, n: usize) -> Result<OperatorExpr> {
    parse_value(input, n)?.into_op()
}
