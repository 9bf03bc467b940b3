//! The named operators: Laplacians, radius multipliers, Dirac operators and
//! vector variables.

use super::{OperatorExpr, PrimitiveOp};
use crate::qclifford::{Blade, Deformation};
use crate::scalars::ScalarQ;

pub fn gamma(i: usize, e: i8) -> OperatorExpr {
    PrimitiveOp::Gamma(i, e).into()
}

pub fn omega(i: usize, e: i8) -> OperatorExpr {
    PrimitiveOp::Omega(i, e).into()
}

pub fn gamma_all(e: i8) -> OperatorExpr {
    PrimitiveOp::GammaAll(e).into()
}

pub fn d_r(i: usize) -> OperatorExpr {
    PrimitiveOp::DiffR(i).into()
}

pub fn d_l(i: usize) -> OperatorExpr {
    PrimitiveOp::DiffL(i).into()
}

pub fn x_l(i: usize) -> OperatorExpr {
    PrimitiveOp::MulVarL(i).into()
}

pub fn x_r(i: usize) -> OperatorExpr {
    PrimitiveOp::MulVarR(i).into()
}

/// Left multiplication by the generator `e_i` (or `e+_i`).
pub fn gen(i: usize, d: Deformation) -> OperatorExpr {
    PrimitiveOp::MulBladeLeft(Blade::generator(i), d).into()
}

pub fn scalar(c: ScalarQ) -> OperatorExpr {
    OperatorExpr::scalar(c)
}

fn weighted_sum<F: Fn(usize) -> OperatorExpr>(n: usize, weight: impl Fn(usize) -> ScalarQ, term: F) -> OperatorExpr {
    OperatorExpr::sum((1..=n).map(|i| term(i).scaled(weight(i))))
}

/// `Lap^R = sum_i q^(n-i) (d_i^R)^2`.
pub fn laplacian_r(n: usize) -> OperatorExpr {
    weighted_sum(n, |i| ScalarQ::q_pow((n - i) as i64), |i| d_r(i).pow(2))
}

/// `Lap^L = sum_i q^-(i-1) (d_i^L)^2`, the diagonal operator with
/// `D^L D^L = -Lap^L`.
pub fn laplacian_l(n: usize) -> OperatorExpr {
    weighted_sum(n, |i| ScalarQ::q_pow(1 - i as i64), |i| d_l(i).pow(2))
}

/// `Qhat^L = sum_i q^-(i-1) (x_i^L)^2`, left multiplication by `Q`.
pub fn qhat_l(n: usize) -> OperatorExpr {
    weighted_sum(n, |i| ScalarQ::q_pow(1 - i as i64), |i| x_l(i).pow(2))
}

/// `Qhat^R = sum_i q^(n-i) (x_i^R)^2`, the diagonal operator with
/// `xvec^R xvec^R = -Qhat^R`.
pub fn qhat_r(n: usize) -> OperatorExpr {
    weighted_sum(n, |i| ScalarQ::q_pow((n - i) as i64), |i| x_r(i).pow(2))
}

/// `D^R = sum_i s^(n-i) e_i d_i^R`.
pub fn dirac_r(n: usize) -> OperatorExpr {
    weighted_sum(
        n,
        |i| ScalarQ::s_pow((n - i) as i64),
        |i| OperatorExpr::compose([gen(i, Deformation::Plus), d_r(i)]),
    )
}

/// `D^L = sum_i s^-(i-1) e+_i d_i^L`.
pub fn dirac_l(n: usize) -> OperatorExpr {
    weighted_sum(
        n,
        |i| ScalarQ::s_pow(1 - i as i64),
        |i| OperatorExpr::compose([gen(i, Deformation::Minus), d_l(i)]),
    )
}

/// Which vector variable to build.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VectorSide {
    /// `xvec^L = sum_i s^-(i-1) e+_i x_i^L`.
    Left,
    /// `xvec^R = sum_i s^(n-i) e_i x_i^R`.
    Right,
    /// `^L xvec = sum_i s^-(i-1) e_i x_i^L`, in the `e` family.
    LeftInPlus,
}

pub fn vector_var(side: VectorSide, n: usize) -> OperatorExpr {
    match side {
        VectorSide::Left => weighted_sum(
            n,
            |i| ScalarQ::s_pow(1 - i as i64),
            |i| OperatorExpr::compose([gen(i, Deformation::Minus), x_l(i)]),
        ),
        VectorSide::Right => weighted_sum(
            n,
            |i| ScalarQ::s_pow((n - i) as i64),
            |i| OperatorExpr::compose([gen(i, Deformation::Plus), x_r(i)]),
        ),
        VectorSide::LeftInPlus => weighted_sum(
            n,
            |i| ScalarQ::s_pow(1 - i as i64),
            |i| OperatorExpr::compose([gen(i, Deformation::Plus), x_l(i)]),
        ),
    }
}

/// `gamma^2` and its inverse.
pub fn gamma_sq() -> (OperatorExpr, OperatorExpr) {
    (gamma_all(1).pow(2), gamma_all(-1).pow(2))
}

/// The `n = 2` operator `sqrt(q) d_1^R + e_1 d_2^R`, a tempting but wrong
/// Dirac operator: it does not annihilate `x1 + e1 x2`.
pub fn naive_dirac_n2() -> OperatorExpr {
    OperatorExpr::sum([
        d_r(1).scaled(ScalarQ::s()),
        OperatorExpr::compose([gen(1, Deformation::Plus), d_r(2)]),
    ])
}
