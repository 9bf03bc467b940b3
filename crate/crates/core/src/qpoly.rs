//! The q-commutative polynomial ring with `x_i x_j = q x_j x_i` for `i < j`.
//!
//! Every polynomial is stored in normal order `x_1^a1 x_2^a2 ... x_n^an`.
//! Indices in the public API are 1-based, matching the usual notation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalars::{GaussRat, ScalarQ};
use crate::text;

/// Normal-ordered monomial `x^alpha`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QMonomial {
    exps: Vec<u32>,
}

impl QMonomial {
    pub fn new(exps: Vec<u32>) -> Self {
        QMonomial { exps }
    }

    pub fn one(n: usize) -> Self {
        QMonomial { exps: vec![0; n] }
    }

    /// The single variable `x_i` (1-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.exps[i - 1] = 1;
        m
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i` (1-based).
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&a| a == 0)
    }

    /// `sum_{j<i} alpha_j` (1-based `i`).
    pub fn sum_before(&self, i: usize) -> i64 {
        self.exps[..i - 1].iter().map(|&a| a as i64).sum()
    }

    /// `sum_{j>i} alpha_j` (1-based `i`).
    pub fn sum_after(&self, i: usize) -> i64 {
        self.exps[i..].iter().map(|&a| a as i64).sum()
    }

    pub(crate) fn raised(&self, i: usize) -> Self {
        let mut m = self.clone();
        m.exps[i - 1] += 1;
        m
    }

    pub(crate) fn lowered(&self, i: usize) -> Option<Self> {
        if self.exps[i - 1] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i - 1] -= 1;
        Some(m)
    }

    /// `x^alpha x^beta = q^e x^(alpha+beta)`; returns `(e, alpha+beta)` with
    /// `e = -sum_{i>j} alpha_i beta_j`.
    pub fn mul(&self, other: &Self) -> (i64, Self) {
        let mut e = 0i64;
        let mut prefix = 0i64;
        // prefix = sum_{j<i} beta_j while scanning i
        for i in 0..self.exps.len() {
            e -= self.exps[i] as i64 * prefix;
            prefix += other.exps[i] as i64;
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        (e, QMonomial { exps })
    }

    /// `sum_{i<j} alpha_i alpha_j`.
    pub fn cross_sum(&self) -> i64 {
        let mut total = 0i64;
        let mut prefix = 0i64;
        for &a in &self.exps {
            total += prefix * a as i64;
            prefix += a as i64;
        }
        total
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(k, &a)| match a {
                1 => format!("x{}", k + 1),
                _ => format!("x{}^{}", k + 1, a),
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn to_latex(&self) -> String {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(k, &a)| match a {
                1 => format!("x_{}", k + 1),
                _ => format!("x_{}^{{{}}}", k + 1, a),
            })
            .collect()
    }
}

/// Graded lexicographic order: higher degree first, then larger exponent
/// vector first. This is the display order and the basis order.
impl Ord for QMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for QMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// All monomials of degree `k` in `n` variables, in basis order.
pub fn monomials_of_degree(n: usize, k: u32) -> Vec<QMonomial> {
    fn rec(n: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<QMonomial>) {
        if prefix.len() + 1 == n {
            prefix.push(k);
            out.push(QMonomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=k).rev() {
            prefix.push(a);
            rec(n, k - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(QMonomial::one(0));
        }
        return out;
    }
    rec(n, k, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `dim P_k = C(n+k-1, k)`; zero for negative `k`.
pub fn dim_homogeneous(n: usize, k: i64) -> usize {
    if k < 0 {
        return 0;
    }
    let (n, k) = (n as u128, k as u128);
    if n == 0 {
        return usize::from(k == 0);
    }
    let mut c: u128 = 1;
    for t in 0..k {
        c = c * (n + t) / (t + 1);
    }
    c as usize
}

pub(crate) fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

/// Bubble-sorts a word of variable indices into normal order. Each
/// transposition of an out-of-order adjacent pair contributes `q^-1`.
pub fn normal_order(n: usize, word: &[usize]) -> Result<(ScalarQ, QMonomial)> {
    for &i in word {
        check_index(i, n)?;
    }
    let mut w = word.to_vec();
    let mut swaps = 0i64;
    for end in (1..w.len()).rev() {
        for k in 0..end {
            if w[k] > w[k + 1] {
                w.swap(k, k + 1);
                swaps += 1;
            }
        }
    }
    let mut m = QMonomial::one(n);
    for i in w {
        m.exps[i - 1] += 1;
    }
    Ok((ScalarQ::q_pow(-swaps), m))
}

pub(crate) fn add_term<K: Ord>(map: &mut BTreeMap<K, ScalarQ>, key: K, c: ScalarQ) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get() + &c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// Element of the q-commutative polynomial ring in `n` variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QPolynomial {
    n: usize,
    terms: BTreeMap<QMonomial, ScalarQ>,
}

impl QPolynomial {
    pub fn zero(n: usize) -> Self {
        QPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, ScalarQ::one())
    }

    pub fn constant(n: usize, c: ScalarQ) -> Self {
        Self::monomial(QMonomial::one(n), c)
    }

    pub fn monomial(m: QMonomial, c: ScalarQ) -> Self {
        let mut p = Self::zero(m.dim());
        add_term(&mut p.terms, m, c);
        p
    }

    /// The variable `x_i`.
    pub fn var(n: usize, i: usize) -> Result<Self> {
        check_index(i, n)?;
        Ok(Self::monomial(QMonomial::var(n, i), ScalarQ::one()))
    }

    pub fn from_terms<I: IntoIterator<Item = (QMonomial, ScalarQ)>>(n: usize, terms: I) -> Result<Self> {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            if m.dim() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: m.dim(),
                });
            }
            add_term(&mut p.terms, m, c);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&QMonomial, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &QMonomial) -> ScalarQ {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The degree if every term has the same degree; zero counts as homogeneous of any degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(QMonomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Splits into homogeneous parts, ascending in degree.
    pub fn graded_parts(&self) -> Vec<(u32, QPolynomial)> {
        let mut parts: BTreeMap<u32, QPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let p = parts.entry(m.degree()).or_insert_with(|| QPolynomial::zero(self.n));
            p.terms.insert(m.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&ScalarQ::from_int(-1))
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        QPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// `x_i * self` in normal order: `x_i x^alpha = q^(-sum_{j<i} alpha_j) x^(alpha+e_i)`.
    pub fn mul_left(&self, i: usize) -> Result<Self> {
        check_index(i, self.n)?;
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.terms
                .insert(m.raised(i), c * &ScalarQ::q_pow(-m.sum_before(i)));
        }
        Ok(out)
    }

    /// `self * x_i` in normal order: `x^alpha x_i = q^(-sum_{j>i} alpha_j) x^(alpha+e_i)`.
    pub fn mul_right(&self, i: usize) -> Result<Self> {
        check_index(i, self.n)?;
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.terms
                .insert(m.raised(i), c * &ScalarQ::q_pow(-m.sum_after(i)));
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (e, m) = a.mul(b);
                add_term(&mut out.terms, m, &(ca * cb) * &ScalarQ::q_pow(e));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Coefficient-wise complex conjugation.
    pub fn conj(&self) -> Self {
        QPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect(),
        }
    }

    /// Specializes `s` numerically; the result is a classical commutative
    /// polynomial given as exponent vector to value.
    pub fn eval_at(&self, s: &GaussRat) -> Result<BTreeMap<Vec<u32>, GaussRat>> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = c.eval_at(s)?;
            if !v.is_zero() {
                out.insert(m.exps.clone(), v);
            }
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        text::join_terms(
            self.terms
                .iter()
                .map(|(m, c)| text::term_text(c, &if m.is_one() { String::new() } else { m.to_text() })),
        )
    }

    pub fn to_latex(&self) -> String {
        text::join_latex(
            self.terms
                .iter()
                .map(|(m, c)| text::term_latex(c, &m.to_latex())),
        )
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyTermWire {
    alpha: Vec<u32>,
    coeff: ScalarQ,
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    n: usize,
    terms: Vec<PolyTermWire>,
}

impl Serialize for QPolynomial {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        PolyWire {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| PolyTermWire {
                    alpha: m.exps.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let w = PolyWire::deserialize(de)?;
        QPolynomial::from_terms(
            w.n,
            w.terms.into_iter().map(|t| (QMonomial::new(t.alpha), t.coeff)),
        )
        .map_err(serde::de::Error::custom)
    }
}

/// `Q = x_1^2 + q^-1 x_2^2 + ... + q^(1-n) x_n^2`.
pub fn q_radius(n: usize) -> QPolynomial {
    let mut p = QPolynomial::zero(n);
    for i in 1..=n {
        let mut m = QMonomial::one(n);
        m.exps[i - 1] = 2;
        add_term(&mut p.terms, m, ScalarQ::q_pow(1 - i as i64));
    }
    p
}

/// `z_q^m = z_0 z_1 ... z_(m-1)` with `z_r = x_1 + i q^r x_2` in two
/// variables, or the conjugate factors `x_1 - i q^r x_2`.
pub fn zq_power(m: u32, conjugated: bool) -> QPolynomial {
    let sign = if conjugated { -1 } else { 1 };
    let mut acc = QPolynomial::one(2);
    for r in 0..m as i64 {
        let z = QPolynomial::from_terms(
            2,
            [
                (QMonomial::var(2, 1), ScalarQ::one()),
                (
                    QMonomial::var(2, 2),
                    &(&ScalarQ::i() * &ScalarQ::from_int(sign)) * &ScalarQ::q_pow(r),
                ),
            ],
        )
        .expect("two variables");
        acc = acc.mul(&z).expect("same dimension");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> QPolynomial {
        QPolynomial::var(n, i).unwrap()
    }

    #[test]
    fn normal_order_examples() {
        let (c, m) = normal_order(2, &[1, 2]).unwrap();
        assert!(c.is_one());
        assert_eq!(m.exps(), &[1, 1]);
        assert_eq!(normal_order(2, &[2, 1]).unwrap().0, ScalarQ::q_pow(-1));
        assert_eq!(normal_order(3, &[3, 2, 1]).unwrap().0, ScalarQ::q_pow(-3));
        assert!(normal_order(2, &[3]).is_err());
    }

    #[test]
    fn mul_left_right_examples() {
        assert_eq!(x(2, 2).mul_left(1).unwrap().to_text(), "x1*x2");
        assert_eq!(x(2, 1).mul_left(2).unwrap().to_text(), "q^-1*x1*x2");
        let x1x2 = x(3, 1).mul(&x(3, 2)).unwrap();
        assert_eq!(x1x2.mul_left(3).unwrap().to_text(), "q^-2*x1*x2*x3");
        assert_eq!(x(2, 1).mul_right(2).unwrap().to_text(), "x1*x2");
        assert_eq!(x(2, 2).mul_right(1).unwrap().to_text(), "q^-1*x1*x2");
        let x2x3 = x(3, 2).mul(&x(3, 3)).unwrap();
        assert_eq!(x2x3.mul_right(1).unwrap().to_text(), "q^-2*x1*x2*x3");
    }

    #[test]
    fn square_of_sum() {
        let p = x(2, 1).add(&x(2, 2)).unwrap();
        assert_eq!(p.pow(2).unwrap().to_text(), "x1^2 + (1 + q^-1)*x1*x2 + x2^2");
    }

    #[test]
    fn radius_and_zq() {
        assert_eq!(q_radius(1).to_text(), "x1^2");
        assert_eq!(q_radius(3).to_text(), "x1^2 + q^-1*x2^2 + q^-2*x3^2");
        assert!(zq_power(0, false).to_text() == "1");
        assert_eq!(zq_power(1, false).to_text(), "x1 + i*x2");
        assert_eq!(zq_power(2, false).to_text(), "x1^2 + (i*q + i*q^-1)*x1*x2 - q*x2^2");
        assert_eq!(zq_power(1, true).to_text(), "x1 - i*x2");
    }

    #[test]
    fn basis_enumeration() {
        let b = monomials_of_degree(2, 2);
        let t: Vec<String> = b.iter().map(|m| m.to_text()).collect();
        assert_eq!(t, ["x1^2", "x1*x2", "x2^2"]);
        for n in 1..5 {
            for k in 0..6 {
                let b = monomials_of_degree(n, k);
                assert_eq!(b.len(), dim_homogeneous(n, k as i64));
                assert!(b.windows(2).all(|w| w[0] < w[1]));
            }
        }
        assert_eq!(dim_homogeneous(3, -1), 0);
    }

    #[test]
    fn json_shape() {
        let j = serde_json::to_value(q_radius(2)).unwrap();
        assert_eq!(j["n"], 2);
        assert_eq!(j["terms"][1]["alpha"], serde_json::json!([0, 2]));
        let back: QPolynomial = serde_json::from_value(j).unwrap();
        assert_eq!(back, q_radius(2));
    }
}
