#![allow(dead_code)]

pub mod classical;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use qdirac::ops::ValueSpace;
use qdirac::qclifford::{Blade, CliffordPolynomial, Deformation};
use qdirac::qpoly::{monomials_of_degree, QMonomial, QPolynomial};
use qdirac::ScalarQ;

pub const CL: ValueSpace = ValueSpace::Clifford(Deformation::Plus);

/// `+-{1,2,3} s^e` with `|e| <= 2`, optionally plus a second such term.
pub fn random_scalar(rng: &mut ChaCha8Rng) -> ScalarQ {
    let one = |rng: &mut ChaCha8Rng| {
        let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
        &ScalarQ::from_int(sign * rng.gen_range(1..=3)) * &ScalarQ::s_pow(rng.gen_range(-2..=2))
    };
    let a = one(rng);
    if rng.gen_bool(0.3) {
        &a + &one(rng)
    } else {
        a
    }
}

/// Random homogeneous scalar polynomial of degree `k` with up to `terms` terms.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, n: usize, k: u32, terms: usize) -> QPolynomial {
    let monos = monomials_of_degree(n, k);
    let mut p = QPolynomial::zero(n);
    while p.is_zero() {
        for _ in 0..rng.gen_range(1..=terms) {
            let m = monos[rng.gen_range(0..monos.len())].clone();
            p = p.add(&QPolynomial::monomial(m, random_scalar(rng))).unwrap();
        }
    }
    p
}

/// Random homogeneous `e`-valued polynomial of degree `k`.
pub fn random_clifford(rng: &mut ChaCha8Rng, n: usize, k: u32, terms: usize) -> CliffordPolynomial {
    let monos = monomials_of_degree(n, k);
    let blades = Blade::all(n);
    let mut p = CliffordPolynomial::zero(n, Some(Deformation::Plus));
    while p.is_zero() {
        for _ in 0..rng.gen_range(1..=terms) {
            let m: QMonomial = monos[rng.gen_range(0..monos.len())].clone();
            let b = blades[rng.gen_range(0..blades.len())];
            let t = CliffordPolynomial::term(m, b, random_scalar(rng), Some(Deformation::Plus)).unwrap();
            p = p.add(&t).unwrap();
        }
    }
    p
}

pub fn lift(p: &QPolynomial) -> CliffordPolynomial {
    CliffordPolynomial::from_qpoly(p)
}
