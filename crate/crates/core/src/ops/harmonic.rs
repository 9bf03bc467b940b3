use super::named::{d_r, gamma, laplacian_r};
use super::OperatorExpr;
use crate::error::{Error, Result};
use crate::qclifford::CliffordPolynomial;
use crate::qpoly::{q_radius, QPolynomial};
use crate::scalars::qnum;

fn lift(p: &QPolynomial) -> CliffordPolynomial {
    CliffordPolynomial::from_qpoly(p)
}

fn lower_op(n: usize) -> OperatorExpr {
    OperatorExpr::compose([gamma(n, -1), d_r(n)])
}

fn check_harmonic(h: &QPolynomial, m: u32) -> Result<()> {
    if let Some(d) = h.homogeneous_degree() {
        if d != m {
            return Err(Error::DegreeMismatch {
                expected: m as usize,
                found: d as usize,
            });
        }
    } else if !h.is_zero() {
        return Err(Error::NotHomogeneous);
    }
    if !laplacian_r(h.dim()).apply(&lift(h))?.is_zero() {
        return Err(Error::NotHarmonic);
    }
    Ok(())
}

fn scalar_part(p: CliffordPolynomial) -> QPolynomial {
    p.to_qpoly().expect("scalar operators keep scalar values")
}

/// `h x_n - Q gamma_n^-1 d_n^R h / [n+2m-2]`, harmonic of degree `m+1`.
pub fn harmonic_raise(h: &QPolynomial, m: u32) -> Result<QPolynomial> {
    let n = h.dim();
    check_harmonic(h, m)?;
    let bracket = n as i64 + 2 * m as i64 - 2;
    if bracket == 0 {
        return Err(Error::DegenerateBracket(bracket));
    }
    let t = scalar_part(lower_op(n).apply(&lift(h))?);
    let correction = q_radius(n).mul(&t)?.scale(&qnum(bracket).inv()?);
    h.mul_right(n)?.sub(&correction)
}

/// `gamma_n^-1 d_n^R h`, harmonic of degree `m-1`.
pub fn harmonic_lower(h: &QPolynomial, m: u32) -> Result<QPolynomial> {
    check_harmonic(h, m)?;
    Ok(scalar_part(lower_op(h.dim()).apply(&lift(h))?))
}
