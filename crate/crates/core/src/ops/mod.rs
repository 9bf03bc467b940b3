//! Operators as symbolic expression trees with exact action and exact
//! matrices on graded components.

mod expr;
mod harmonic;
mod matrix;
pub mod named;

pub use expr::{OperatorExpr, PrimitiveOp};
pub use harmonic::{harmonic_lower, harmonic_raise};
pub use matrix::{coordinates, from_coordinates, graded_basis, to_matrix, to_matrix_in, GradedMatrix, ValueSpace};
pub use named::VectorSide;

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;
    use crate::qclifford::{CliffordPolynomial, Deformation};
    use crate::qpoly::{q_radius, QMonomial, QPolynomial};
    use crate::scalars::{qnum, ScalarQ};

    fn mono(exps: &[u32]) -> CliffordPolynomial {
        CliffordPolynomial::from_qpoly(&QPolynomial::monomial(QMonomial::new(exps.to_vec()), ScalarQ::one()))
    }

    #[test]
    fn monomial_actions() {
        for m in 1..6u32 {
            let out = d_r(1).apply(&mono(&[m])).unwrap();
            assert_eq!(out, mono(&[m - 1]).scale(&qnum(m as i64)));
        }
        assert_eq!(d_r(1).apply(&mono(&[1, 1])).unwrap(), mono(&[0, 1]).scale(&ScalarQ::q()));
        assert_eq!(gamma(2, 1).apply(&mono(&[1, 2])).unwrap(), mono(&[1, 2]).scale(&ScalarQ::q_pow(2)));
    }

    #[test]
    fn laplacian_examples() {
        let q2 = CliffordPolynomial::from_qpoly(&q_radius(2));
        let out = laplacian_r(2).apply(&q2).unwrap();
        assert_eq!(out, mono(&[0, 0]).scale(&(&qnum(2) * &qnum(2))));
        let h = QPolynomial::monomial(QMonomial::new(vec![0, 0, 2]), ScalarQ::one())
            .sub(&q_radius(3).scale(&qnum(3).inv().unwrap()))
            .unwrap();
        assert!(laplacian_r(3).apply(&h.into()).unwrap().is_zero());
        let x1sq = laplacian_r(2).apply(&mono(&[2, 0])).unwrap();
        assert_eq!(x1sq, mono(&[0, 0]).scale(&(&ScalarQ::q() * &qnum(2))));
    }

    #[test]
    fn harmonic_dimensions_at_n2() {
        let m = to_matrix(&laplacian_r(2), 2, 2, ValueSpace::Scalar).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel_polys().len(), 2);
    }

    #[test]
    fn dirac_kernel_at_n2_k1() {
        let m = to_matrix(&dirac_r(2), 1, 2, ValueSpace::Clifford(Deformation::Plus)).unwrap();
        assert_eq!(m.matrix.cols() - m.rank(), 4);
    }

    #[test]
    fn factorization_on_scalar_inputs() {
        for n in 1..=3 {
            for k in 0..=4 {
                let lhs = to_matrix(&OperatorExpr::compose([dirac_r(n), dirac_r(n)]), k, n, ValueSpace::Scalar).unwrap();
                let rhs = to_matrix_in(&laplacian_r(n).neg(), k, n, ValueSpace::Scalar, lhs.target_space).unwrap();
                assert_eq!(lhs.matrix, rhs.matrix, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn raise_and_lower() {
        let x3 = QPolynomial::var(3, 3).unwrap();
        assert_eq!(harmonic_raise(&QPolynomial::one(3), 0).unwrap(), x3);
        let h2 = harmonic_raise(&x3, 1).unwrap();
        let expect = x3.mul(&x3).unwrap().sub(&q_radius(3).scale(&qnum(3).inv().unwrap())).unwrap();
        assert_eq!(h2, expect);
        let low = harmonic_lower(&h2, 2).unwrap();
        assert_eq!(low.term_count(), 1);
        assert!(matches!(harmonic_raise(&QPolynomial::one(2), 0), Err(crate::Error::DegenerateBracket(0))));
        let x1sq = QPolynomial::monomial(QMonomial::new(vec![2, 0, 0]), ScalarQ::one());
        assert!(matches!(harmonic_raise(&x1sq, 2), Err(crate::Error::NotHarmonic)));
    }

    #[test]
    fn display_syntax() {
        assert_eq!(laplacian_r(2).to_string(), "q*dR(1)^2 + dR(2)^2");
        assert_eq!(dirac_r(2).to_string(), "s*e(1)*dR(1) + e(2)*dR(2)");
    }
}
