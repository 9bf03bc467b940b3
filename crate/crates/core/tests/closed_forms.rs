//! Closed-form values checked exactly, including places where a commonly
//! quoted form is off.

mod common;

use common::{lift, CL};
use qdirac::expr::{parse_poly, parse_scalar};
use qdirac::fischer::{adjoint_check, fischer_inner, fischer_orthogonality_check, harmonic_decompose};
use qdirac::ops::named::{
    d_l, d_r, naive_dirac_n2, gamma, gamma_sq, gen, laplacian_r, qhat_l, vector_var, x_r,
};
use qdirac::ops::{harmonic_raise, to_matrix, OperatorExpr, ValueSpace, VectorSide};
use qdirac::qclifford::{blade_mul, Blade, CliffordPolynomial, Deformation};
use qdirac::qpoly::{normal_order, q_radius, zq_power, QMonomial, QPolynomial};
use qdirac::verifier::check_identity;
use qdirac::{qfactorial, qnum, ScalarQ};

fn var(n: usize, i: usize) -> QPolynomial {
    QPolynomial::var(n, i).unwrap()
}

/// `z_lo ... z_(hi-1)` with `z_r = x1 + i q^r x2`.
fn z_range(lo: u32, hi: u32) -> QPolynomial {
    (lo..hi).fold(QPolynomial::one(2), |acc, r| {
        let z = var(2, 1).add(&var(2, 2).scale(&(&ScalarQ::i() * &ScalarQ::q_pow(r as i64)))).unwrap();
        acc.mul(&z).unwrap()
    })
}

fn apply(op: &OperatorExpr, p: &QPolynomial) -> QPolynomial {
    op.apply(&lift(p)).unwrap().to_qpoly().unwrap()
}

#[test]
fn q_numbers_and_commutation() {
    assert_eq!(qnum(2), &ScalarQ::q() + &ScalarQ::q_pow(-1));
    assert!(parse_poly("x1*x2 - q*x2*x1", 2).unwrap().is_zero());
    assert_eq!(normal_order(2, &[2, 1]).unwrap(), (ScalarQ::q_pow(-1), QMonomial::new(vec![1, 1])));
    assert_eq!(q_radius(2).to_text(), "x1^2 + q^-1*x2^2");
    assert_eq!(q_radius(3).to_text(), "x1^2 + q^-1*x2^2 + q^-2*x3^2");
    assert_eq!(zq_power(1, false).to_text(), "x1 + i*x2");
}

#[test]
fn clifford_generators() {
    assert_eq!(parse_poly("e[1]*e[1]", 2).unwrap().to_text(), "-1");
    let (c, b) = blade_mul(Blade::generator(2), Blade::generator(1), Deformation::Plus);
    assert_eq!((c, b), (-ScalarQ::q_pow(-1), Blade::from_indices(&[1, 2]).unwrap()));
}

#[test]
fn difference_operator_on_powers() {
    for m in 1..=6 {
        let p = var(1, 1).pow(m).unwrap();
        assert_eq!(apply(&d_r(1), &p), var(1, 1).pow(m - 1).unwrap().scale(&qnum(m as i64)));
    }
}

#[test]
fn two_variable_harmonics() {
    for m in 1..=6 {
        let z = zq_power(m, false);
        let tail = z_range(1, m);
        assert_eq!(apply(&d_r(1), &z), tail.scale(&qnum(m as i64)));
        assert_eq!(apply(&d_r(2), &z), tail.scale(&(&ScalarQ::i() * &qnum(m as i64))));
        assert!(apply(&laplacian_r(2), &z).is_zero());
    }
    // the harmonics of each degree form a two-dimensional space
    let lap = to_matrix(&laplacian_r(2), 2, 2, ValueSpace::Scalar).unwrap();
    assert_eq!((lap.rank(), lap.kernel_polys().len()), (1, 2));
}

#[test]
fn laplacian_factorizations_in_two_variables() {
    let q = ScalarQ::q;
    let complex = OperatorExpr::compose([
        d_r(1).scaled(q()).minus(d_r(2).scaled(ScalarQ::i())),
        OperatorExpr::sum([d_r(1), d_r(2).scaled(ScalarQ::i())]),
    ]);
    let e2d2 = || OperatorExpr::compose([gen(2, Deformation::Plus), d_r(2)]);
    let clifford = OperatorExpr::compose([d_r(1).scaled(q()).minus(e2d2()), OperatorExpr::sum([d_r(1), e2d2()])]);
    let degrees: Vec<u32> = (0..=5).collect();
    for op in [complex, clifford] {
        let verdicts = check_identity(&op, &laplacian_r(2), 2, &degrees, ValueSpace::Scalar).unwrap();
        assert!(verdicts.iter().all(|v| v.holds));
    }
}

#[test]
fn radius_powers_and_the_last_square() {
    assert_eq!(apply(&laplacian_r(2), &q_radius(2)), QPolynomial::constant(2, &qnum(2) * &qnum(2)));
    let inv3 = qnum(3).inv().unwrap();
    let h = var(3, 3).pow(2).unwrap().sub(&q_radius(3).scale(&inv3)).unwrap();
    assert!(apply(&laplacian_r(3), &h).is_zero());
    assert_eq!(harmonic_raise(&var(3, 3), 1).unwrap(), h);
    let d = harmonic_decompose(&var(3, 3).pow(2).unwrap(), 2).unwrap();
    assert_eq!(d.levels[0].component, lift(&h));
    assert_eq!(d.levels[1].component, lift(&QPolynomial::constant(3, inv3)));
}

#[test]
fn vector_variable_squares_to_minus_radius() {
    let one = lift(&QPolynomial::one(2));
    let x = vector_var(VectorSide::Left, 2);
    let sq = x.apply(&x.apply(&one).unwrap()).unwrap();
    assert_eq!(sq, lift(&q_radius(2).neg()).with_deformation(Deformation::Minus).unwrap());
}

#[test]
fn fischer_values_of_monomials() {
    let mono = |e: &[u32]| lift(&QPolynomial::monomial(QMonomial::new(e.to_vec()), ScalarQ::one()));
    for (a, b) in [([2u32, 1, 0], [1u32, 2, 0]), ([0, 0, 3], [1, 0, 2])] {
        assert!(fischer_inner(&mono(&a), &mono(&b), 3).unwrap().scalar_value.is_zero());
    }
    let a = [2u32, 1, 1];
    let want = &qfactorial(&a) * &ScalarQ::q_pow(2 + 2 + 1);
    assert_eq!(fischer_inner(&mono(&a), &mono(&a), 4).unwrap().scalar_value, want);
}

#[test]
fn stated_adjoints() {
    for n in 1..=3 {
        for i in 1..=n {
            assert!(adjoint_check(&d_l(i), &x_r(i), 3, n, ValueSpace::Scalar).unwrap().pass);
            assert!(adjoint_check(&gamma(i, 1), &gamma(i, 1), 3, n, ValueSpace::Scalar).unwrap().pass);
        }
    }
}

#[test]
fn stated_sl2_conjugation_factor_is_off() {
    let (g2, g2inv) = gamma_sq();
    let conj = OperatorExpr::compose([g2, qhat_l(2), g2inv]);
    let degrees = [0, 1, 2];
    let holds = |c: i64| {
        check_identity(&conj, &qhat_l(2).scaled(ScalarQ::q_pow(c)), 2, &degrees, ValueSpace::Scalar)
            .unwrap()
            .iter()
            .all(|v| v.holds)
    };
    assert!(!holds(2), "the stated factor q^2");
    assert!(holds(4));
}

#[test]
fn two_variable_monogenic_example_does_not_hold() {
    // the naive operator sends z_1 = x1 + e1 x2 to s - 1, not to zero
    let dirac = naive_dirac_n2();
    let z1 = parse_poly("x1 + e[1]*x2", 2).unwrap();
    let image = dirac.apply(&z1).unwrap();
    let want = CliffordPolynomial::from_qpoly(&QPolynomial::constant(2, parse_scalar("s - 1").unwrap()))
        .with_deformation(Deformation::Plus)
        .unwrap();
    assert_eq!(image, want);
    assert!(!image.is_zero());
}

#[test]
fn vector_variable_adjoint_constant() {
    // c = -1 only at n = 1; in general c = -s^-(n-1)
    for n in 1..=3 {
        let r = fischer_orthogonality_check(2, n).unwrap();
        assert!(r.orthogonal);
        assert_eq!(r.constant(), Some(&-ScalarQ::s_pow(-(n as i64 - 1))));
    }
    let _ = CL;
}
