mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{lift, random_clifford, random_homogeneous, random_scalar};
use qdirac::expr::{parse_value, Value};
use qdirac::fischer::{fischer_inner, fischer_inner_operational};
use qdirac::ops::named::{d_l, d_r, dirac_r, gamma, laplacian_r, qhat_l, vector_var, x_l};
use qdirac::ops::VectorSide;
use qdirac::qclifford::{conjugation_factor, Blade, CliffordElement, CliffordPolynomial, Deformation};
use qdirac::qpoly::{normal_order, QMonomial, QPolynomial};
use qdirac::{GaussRat, LaurentPoly, ScalarQ};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Laurent polynomial with `len` small Gaussian-integer coefficients.
fn laurent(rng: &mut ChaCha8Rng, len: usize) -> LaurentPoly {
    let low = rng.gen_range(-3..=3);
    LaurentPoly::from_terms((0..len).map(|k| {
        let c = GaussRat::new(
            BigIntRatio::from_integer(rng.gen_range(-4..=4).into()),
            BigIntRatio::from_integer(rng.gen_range(-2..=2).into()),
        );
        (low + k as i64, c)
    }))
}

type BigIntRatio = num_rational::BigRational;

fn element(rng: &mut ChaCha8Rng, n: usize, d: Deformation) -> CliffordElement {
    let mut e = CliffordElement::zero(n, d);
    for b in Blade::all(n) {
        if rng.gen_bool(0.5) {
            e = e.add(&CliffordElement::blade(n, d, b, random_scalar(rng))).unwrap();
        }
    }
    e
}

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(48)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn scalar_field_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (random_scalar(&mut r), random_scalar(&mut r), random_scalar(&mut r) + ScalarQ::i());
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, ScalarQ::zero());
        if !c.is_zero() {
            prop_assert!((&c * &c.inv().unwrap()).is_one());
            prop_assert_eq!(&(&a / &c) * &c, a.clone());
        }
        prop_assert_eq!(c.conj().conj(), c);
    }

    #[test]
    fn common_factors_cancel(seed in any::<u64>()) {
        let mut r = rng(seed);
        // long factors take the modular gcd path
        let (a, b, c) = (laurent(&mut r, 10), laurent(&mut r, 11), laurent(&mut r, 12));
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let lhs = ScalarQ::ratio(&a * &c, &b * &c).unwrap();
        let rhs = ScalarQ::ratio(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(&lhs * &ScalarQ::from_laurent(b), ScalarQ::from_laurent(a));
    }

    #[test]
    fn polynomial_product_is_associative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=3);
        let (k1, k2, k3) = (r.gen_range(0..=2), r.gen_range(0..=2), r.gen_range(0..=2));
        let (a, b, c) = (random_homogeneous(&mut r, n, k1, 3), random_homogeneous(&mut r, n, k2, 3), random_homogeneous(&mut r, n, k3, 3));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn normal_ordering_matches_products(word in prop::collection::vec(1usize..=3, 0..7)) {
        let (c, m) = normal_order(3, &word).unwrap();
        let direct = word.iter().fold(QPolynomial::one(3), |acc, &i| acc.mul(&QPolynomial::var(3, i).unwrap()).unwrap());
        prop_assert_eq!(direct, QPolynomial::monomial(m.clone(), c.clone()));
        // each inversion i > j costs q^-1
        let inversions = (0..word.len()).flat_map(|a| (a + 1..word.len()).map(move |b| (a, b))).filter(|&(a, b)| word[a] > word[b]).count();
        prop_assert_eq!(c, ScalarQ::q_pow(-(inversions as i64)));
        let mut sorted = word.clone();
        sorted.sort();
        prop_assert_eq!(normal_order(3, &sorted).unwrap().1, m);
    }

    #[test]
    fn clifford_relations(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(2..=4);
        for d in [Deformation::Plus, Deformation::Minus] {
            let sign = d.sigma();
            let e = |i| CliffordElement::generator(n, d, i).unwrap();
            for i in 1..=n {
                prop_assert_eq!(e(i).mul(&e(i)).unwrap(), CliffordElement::scalar(n, d, ScalarQ::from_int(-1)));
                for j in i + 1..=n {
                    let swapped = e(j).mul(&e(i)).unwrap().scale(&(-ScalarQ::q_pow(sign)));
                    prop_assert_eq!(e(i).mul(&e(j)).unwrap(), swapped);
                }
            }
            // products associate on blades with disjoint supports
            let mut owner = [0u8; 5];
            for o in owner.iter_mut().take(n + 1).skip(1) {
                *o = r.gen_range(0..4);
            }
            let part = |k: u8| Blade::from_indices(&(1..=n).filter(|&i| owner[i] == k).collect::<Vec<_>>()).unwrap();
            let coeff = |r: &mut ChaCha8Rng| random_scalar(r) + ScalarQ::one();
            let (a, b, c) = (
                CliffordElement::blade(n, d, part(1), coeff(&mut r)),
                CliffordElement::blade(n, d, part(2), coeff(&mut r)),
                CliffordElement::blade(n, d, part(3), coeff(&mut r)),
            );
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            // conjugating twice scales a grade-r blade by the square of its factor
            let x = element(&mut r, n, d);
            let mut twice = CliffordElement::zero(n, d);
            for (b, c) in x.terms() {
                let f = conjugation_factor(b.grade(), d);
                twice = twice.add(&CliffordElement::blade(n, d, *b, &(&f * &f) * c)).unwrap();
            }
            prop_assert_eq!(x.conjugate().conjugate(), twice);
        }
    }

    #[test]
    fn fischer_product_is_hermitian_and_sesquilinear(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (n, k) = (r.gen_range(1..=3), r.gen_range(0..=3));
        let p1 = lift(&random_homogeneous(&mut r, n, k, 3)).scale(&(ScalarQ::one() + ScalarQ::i()));
        let p2 = lift(&random_homogeneous(&mut r, n, k, 3));
        let c = &random_scalar(&mut r) + &ScalarQ::i();
        let v = fischer_inner(&p1, &p2, k).unwrap().scalar_value;
        prop_assert_eq!(&v, &fischer_inner(&p2, &p1, k).unwrap().scalar_value.conj());
        prop_assert_eq!(fischer_inner(&p1.scale(&c), &p2, k).unwrap().scalar_value, &c.conj() * &v);
        prop_assert_eq!(fischer_inner(&p1, &p2.scale(&c), k).unwrap().scalar_value, &c * &v);
        let p3 = lift(&random_homogeneous(&mut r, n, k, 3));
        let sum = fischer_inner(&p1, &p2.add(&p3).unwrap(), k).unwrap().scalar_value;
        prop_assert_eq!(sum, &v + &fischer_inner(&p1, &p3, k).unwrap().scalar_value);
    }

    #[test]
    fn fischer_closed_form_equals_operational(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (n, k) = (r.gen_range(1..=3), r.gen_range(0..=3));
        let p1 = random_clifford(&mut r, n, k, 3).scale(&ScalarQ::i());
        let p2 = random_clifford(&mut r, n, k, 3);
        prop_assert_eq!(fischer_inner(&p1, &p2, k).unwrap(), fischer_inner_operational(&p1, &p2, k).unwrap());
    }

    #[test]
    fn operators_are_linear(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (n, k) = (r.gen_range(1..=3), r.gen_range(0..=3));
        let (p, q) = (random_clifford(&mut r, n, k, 3), random_clifford(&mut r, n, k, 3));
        let (a, b) = (random_scalar(&mut r), &random_scalar(&mut r) * &ScalarQ::i());
        let i = r.gen_range(1..=n);
        for op in [d_r(i), d_l(i), x_l(i), gamma(i, -1), laplacian_r(n), qhat_l(n), dirac_r(n), vector_var(VectorSide::LeftInPlus, n)] {
            let lhs = op.apply(&p.scale(&a).add(&q.scale(&b)).unwrap()).unwrap();
            let rhs = op.apply(&p).unwrap().scale(&a).add(&op.apply(&q).unwrap().scale(&b)).unwrap();
            prop_assert_eq!(lhs, rhs, "{}", op);
        }
    }

    #[test]
    fn json_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=3);
        let c = &random_scalar(&mut r) / &(&random_scalar(&mut r) + &ScalarQ::from_int(9));
        prop_assert_eq!(serde_json::from_str::<ScalarQ>(&serde_json::to_string(&c).unwrap()).unwrap(), c);
        let k = r.gen_range(0..=3);
        let p = random_homogeneous(&mut r, n, k, 4);
        prop_assert_eq!(serde_json::from_str::<QPolynomial>(&serde_json::to_string(&p).unwrap()).unwrap(), p);
        let cp = random_clifford(&mut r, n, k, 4);
        prop_assert_eq!(serde_json::from_str::<CliffordPolynomial>(&serde_json::to_string(&cp).unwrap()).unwrap(), cp);
    }

    #[test]
    fn text_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let n = r.gen_range(1..=3);
        let (k1, k2) = (r.gen_range(0..=3), r.gen_range(0..=3));
        let p = random_clifford(&mut r, n, k1, 3).add(&random_clifford(&mut r, n, k2, 3).scale(&ScalarQ::i())).unwrap();
        let v = Value::Poly(p.clone());
        let back = parse_value(&v.to_text(), n).unwrap();
        match back {
            Value::Poly(b) if p.is_scalar_valued() => prop_assert_eq!(b.to_qpoly(), p.to_qpoly()),
            other => prop_assert_eq!(other, v),
        }
        let c = &random_scalar(&mut r) / &(&random_scalar(&mut r) + &ScalarQ::from_int(9));
        prop_assert_eq!(parse_value(&c.to_text(), 1).unwrap(), Value::Scalar(c));
    }
}

#[test]
fn monomial_basis_of_two_variables() {
    let m = QMonomial::new(vec![1, 1]);
    let p = QPolynomial::var(2, 2).unwrap().mul(&QPolynomial::var(2, 1).unwrap()).unwrap();
    assert_eq!(p, QPolynomial::monomial(m, ScalarQ::q_pow(-1)));
}
