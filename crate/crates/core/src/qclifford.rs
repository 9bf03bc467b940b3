//! The q-deformed Clifford algebra and Clifford-valued q-polynomials.
//!
//! Generators satisfy `e_i^2 = -1` and `e_i e_j = -q^sigma e_j e_i` for
//! `i < j`, where `sigma = +1` for the `e` family and `sigma = -1` for the
//! `e+` family. Blades are normal-ordered products `e_{a1} ... e_{ar}` with
//! `a1 < ... < ar`. Products of blades are computed by bubble-sorting the
//! concatenated index word; because the defining relations are not
//! associatively consistent for `n >= 2`, this product is a bilinear map on
//! the blade basis and is not associative in general.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qpoly::{add_term, check_index, QMonomial, QPolynomial};
use crate::scalars::{GaussRat, ScalarQ};
use crate::text;

/// Which generator family a Clifford value uses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Deformation {
    /// `e_i`, with `e_i e_j = -q e_j e_i` for `i < j`.
    Plus,
    /// `e+_i`, with `e+_i e+_j = -q^-1 e+_j e+_i` for `i < j`.
    Minus,
}

impl Deformation {
    pub fn sigma(self) -> i64 {
        match self {
            Deformation::Plus => 1,
            Deformation::Minus => -1,
        }
    }

    pub fn from_sigma(sigma: i64) -> Option<Self> {
        match sigma {
            1 => Some(Deformation::Plus),
            -1 => Some(Deformation::Minus),
            _ => None,
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            Deformation::Plus => "e",
            Deformation::Minus => "ep",
        }
    }
}

/// Combines two optional deformations; `None` means "no blades yet".
pub fn join_deformation(a: Option<Deformation>, b: Option<Deformation>) -> Result<Option<Deformation>> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(Error::DeformationMismatch),
        (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
        (None, None) => Ok(None),
    }
}

/// A normal-ordered generator product, stored as a bitmask (bit `i-1` for `e_i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Blade(u32);

impl Blade {
    pub const EMPTY: Blade = Blade(0);

    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        let mut last = 0usize;
        for &i in indices {
            if i == 0 || i > 31 || i <= last {
                return Err(Error::Lowering(format!(
                    "blade indices must be strictly increasing and positive, got {indices:?}"
                )));
            }
            bits |= 1 << (i - 1);
            last = i;
        }
        Ok(Blade(bits))
    }

    pub fn generator(i: usize) -> Self {
        Blade(1 << (i - 1))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_bits(bits: u32) -> Self {
        Blade(bits)
    }

    pub fn grade(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Largest index, or 0 for the empty blade.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|k| self.0 >> k & 1 == 1).map(|k| k + 1).collect()
    }

    /// All `2^n` blades in basis order (grade, then lexicographic).
    pub fn all(n: usize) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..1u32 << n).map(Blade).collect();
        v.sort();
        v
    }

    /// `e[1,3]` or `ep[1,3]`; the empty blade prints as `1`.
    pub fn to_text(self, d: Deformation) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let idx: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        format!("{}[{}]", d.prefix(), idx.join(","))
    }

    pub fn to_latex(self, d: Deformation) -> String {
        if self.is_empty() {
            return "1".into();
        }
        let idx: String = self.indices().iter().map(|i| i.to_string()).collect();
        match d {
            Deformation::Plus => format!("e_{{{idx}}}"),
            Deformation::Minus => format!("e^{{+}}_{{{idx}}}"),
        }
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(&other.indices()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `e_A e_B = (-1)^(inv + |A n B|) q^(-sigma inv) e_(A xor B)` where
/// `inv = #{(a, b) in A x B : a > b}`; returns `(sign, q-exponent, blade)`.
pub fn blade_mul_parts(a: Blade, b: Blade, d: Deformation) -> (i64, i64, Blade) {
    let mut inv = 0i64;
    for i in b.indices() {
        // generators of A strictly above i
        inv += (a.0 >> i).count_ones() as i64;
    }
    let inter = (a.0 & b.0).count_ones() as i64;
    let sign = if (inv + inter) % 2 == 0 { 1 } else { -1 };
    (sign, -d.sigma() * inv, Blade(a.0 ^ b.0))
}

/// Product of two blades as a scalar factor and a blade.
pub fn blade_mul(a: Blade, b: Blade, d: Deformation) -> (ScalarQ, Blade) {
    let (sign, e, c) = blade_mul_parts(a, b, d);
    (&ScalarQ::from_int(sign) * &ScalarQ::q_pow(e), c)
}

/// Factor with `conj(e_A) = f * e_A` for a blade of grade `r`:
/// `(-1)^r (-q^sigma)^(r(r-1)/2)`. With this choice `[conj(e_A) e_A]_0 = 1`.
pub fn conjugation_factor(r: u32, d: Deformation) -> ScalarQ {
    let r = r as i64;
    let pairs = r * (r - 1) / 2;
    let sign = if (r + pairs) % 2 == 0 { 1 } else { -1 };
    &ScalarQ::from_int(sign) * &ScalarQ::q_pow(d.sigma() * pairs)
}

/// Element of the q-Clifford algebra over `ScalarQ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordElement {
    n: usize,
    deformation: Deformation,
    terms: BTreeMap<Blade, ScalarQ>,
}

impl CliffordElement {
    pub fn zero(n: usize, deformation: Deformation) -> Self {
        CliffordElement {
            n,
            deformation,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: usize, deformation: Deformation, c: ScalarQ) -> Self {
        Self::blade(n, deformation, Blade::EMPTY, c)
    }

    pub fn blade(n: usize, deformation: Deformation, b: Blade, c: ScalarQ) -> Self {
        let mut e = Self::zero(n, deformation);
        add_term(&mut e.terms, b, c);
        e
    }

    pub fn generator(n: usize, deformation: Deformation, i: usize) -> Result<Self> {
        check_index(i, n)?;
        Ok(Self::blade(n, deformation, Blade::generator(i), ScalarQ::one()))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn deformation(&self) -> Deformation {
        self.deformation
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &ScalarQ)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: Blade) -> ScalarQ {
        self.terms.get(&b).cloned().unwrap_or_default()
    }

    /// Coefficient of the identity blade.
    pub fn scalar_part(&self) -> ScalarQ {
        self.coeff(Blade::EMPTY)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: o.n,
            });
        }
        if self.deformation != o.deformation {
            return Err(Error::DeformationMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = self.clone();
        for (b, c) in &o.terms {
            add_term(&mut out.terms, *b, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        let mut out = Self::zero(self.n, self.deformation);
        for (b, v) in &self.terms {
            add_term(&mut out.terms, *b, v * c);
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let mut out = Self::zero(self.n, self.deformation);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let (f, blade) = blade_mul(*a, *b, self.deformation);
                add_term(&mut out.terms, blade, &(ca * cb) * &f);
            }
        }
        Ok(out)
    }

    /// Clifford conjugation, antilinear in the coefficients.
    pub fn conjugate(&self) -> Self {
        let mut out = Self::zero(self.n, self.deformation);
        for (b, c) in &self.terms {
            add_term(
                &mut out.terms,
                *b,
                &c.conj() * &conjugation_factor(b.grade(), self.deformation),
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        text::join_terms(self.terms.iter().map(|(b, c)| {
            let body = if b.is_empty() { String::new() } else { b.to_text(self.deformation) };
            text::term_text(c, &body)
        }))
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Clifford-valued q-polynomial `sum c x^alpha e_A`. Variables commute with
/// the generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordPolynomial {
    n: usize,
    deformation: Option<Deformation>,
    terms: BTreeMap<(QMonomial, Blade), ScalarQ>,
}

impl From<QPolynomial> for CliffordPolynomial {
    fn from(p: QPolynomial) -> Self {
        CliffordPolynomial::from_qpoly(&p)
    }
}

impl CliffordPolynomial {
    pub fn zero(n: usize, deformation: Option<Deformation>) -> Self {
        CliffordPolynomial {
            n,
            deformation,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_qpoly(p: &QPolynomial) -> Self {
        let mut out = Self::zero(p.dim(), None);
        for (m, c) in p.terms() {
            out.terms.insert((m.clone(), Blade::EMPTY), c.clone());
        }
        out
    }

    /// `c x^alpha e_A`; a nonempty blade requires a deformation.
    pub fn term(m: QMonomial, b: Blade, c: ScalarQ, deformation: Option<Deformation>) -> Result<Self> {
        let n = m.dim();
        if !b.is_empty() && deformation.is_none() {
            return Err(Error::Lowering("blade without a generator family".into()));
        }
        if b.max_index() > n {
            return Err(Error::IndexOutOfRange {
                index: b.max_index(),
                n,
            });
        }
        let mut out = Self::zero(n, deformation);
        add_term(&mut out.terms, (m, b), c);
        Ok(out)
    }

    pub fn from_terms<I>(n: usize, deformation: Option<Deformation>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (QMonomial, Blade, ScalarQ)>,
    {
        let mut out = Self::zero(n, deformation);
        for (m, b, c) in terms {
            out = out.add(&Self::term(m, b, c, deformation)?)?;
            if m_dim_mismatch(&out, n) {
                return Err(Error::DimensionMismatch { left: n, right: out.n });
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn deformation(&self) -> Option<Deformation> {
        self.deformation
    }

    /// Returns the same polynomial tagged with a generator family.
    pub fn with_deformation(&self, d: Deformation) -> Result<Self> {
        let joined = join_deformation(self.deformation, Some(d))?;
        let mut out = self.clone();
        out.deformation = joined;
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(QMonomial, Blade), &ScalarQ)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &QMonomial, b: Blade) -> ScalarQ {
        self.terms.get(&(m.clone(), b)).cloned().unwrap_or_default()
    }

    /// True when every blade is the identity.
    pub fn is_scalar_valued(&self) -> bool {
        self.terms.keys().all(|(_, b)| b.is_empty())
    }

    /// The underlying q-polynomial, when scalar valued.
    pub fn to_qpoly(&self) -> Option<QPolynomial> {
        if !self.is_scalar_valued() {
            return None;
        }
        Some(
            QPolynomial::from_terms(self.n, self.terms.iter().map(|((m, _), c)| (m.clone(), c.clone())))
                .expect("same dimension"),
        )
    }

    /// Component along one blade, as a q-polynomial.
    pub fn blade_component(&self, b: Blade) -> QPolynomial {
        QPolynomial::from_terms(
            self.n,
            self.terms
                .iter()
                .filter(|((_, bb), _)| *bb == b)
                .map(|((m, _), c)| (m.clone(), c.clone())),
        )
        .expect("same dimension")
    }

    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|(m, _)| m.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn graded_parts(&self) -> Vec<(u32, CliffordPolynomial)> {
        let mut parts: BTreeMap<u32, CliffordPolynomial> = BTreeMap::new();
        for ((m, b), c) in &self.terms {
            parts
                .entry(m.degree())
                .or_insert_with(|| Self::zero(self.n, self.deformation))
                .terms
                .insert((m.clone(), *b), c.clone());
        }
        parts.into_iter().collect()
    }

    /// Value at `x = 0`.
    pub fn constant_part(&self) -> CliffordElement {
        let d = self.deformation.unwrap_or(Deformation::Plus);
        let mut out = CliffordElement::zero(self.n, d);
        for ((m, b), c) in &self.terms {
            if m.is_one() {
                add_term(&mut out.terms, *b, c.clone());
            }
        }
        out
    }

    fn check(&self, o: &Self) -> Result<Option<Deformation>> {
        if self.n != o.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: o.n,
            });
        }
        join_deformation(self.deformation, o.deformation)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let d = self.check(o)?;
        let mut out = self.clone();
        out.deformation = d;
        for (k, c) in &o.terms {
            add_term(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&ScalarQ::from_int(-1))
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        let mut out = Self::zero(self.n, self.deformation);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    /// Product in the algebra generated by the variables and generators:
    /// `(x^a e_A)(x^b e_B) = (x^a x^b)(e_A e_B)`.
    pub fn mul(&self, o: &Self) -> Result<Self> {
        let d = self.check(o)?;
        let mut out = Self::zero(self.n, d);
        for ((ma, ba), ca) in &self.terms {
            for ((mb, bb), cb) in &o.terms {
                let (e, m) = ma.mul(mb);
                let (sign, eb, b) = match d {
                    Some(d) => blade_mul_parts(*ba, *bb, d),
                    None => (1, 0, Blade::EMPTY),
                };
                let f = &ScalarQ::from_int(sign) * &ScalarQ::q_pow(e + eb);
                add_term(&mut out.terms, (m, b), &(ca * cb) * &f);
            }
        }
        Ok(out)
    }

    /// `e_B * self`.
    pub fn blade_left(&self, b: Blade, d: Deformation) -> Result<Self> {
        self.blade_mul_side(b, d, true)
    }

    /// `self * e_B`.
    pub fn blade_right(&self, b: Blade, d: Deformation) -> Result<Self> {
        self.blade_mul_side(b, d, false)
    }

    fn blade_mul_side(&self, b: Blade, d: Deformation, left: bool) -> Result<Self> {
        if b.max_index() > self.n {
            return Err(Error::IndexOutOfRange {
                index: b.max_index(),
                n: self.n,
            });
        }
        let d = join_deformation(self.deformation, Some(d))?.expect("some");
        let mut out = Self::zero(self.n, Some(d));
        for ((m, a), c) in &self.terms {
            let (sign, e, r) = if left {
                blade_mul_parts(b, *a, d)
            } else {
                blade_mul_parts(*a, b, d)
            };
            let f = &ScalarQ::from_int(sign) * &ScalarQ::q_pow(e);
            add_term(&mut out.terms, (m.clone(), r), c * &f);
        }
        Ok(out)
    }

    /// Coefficient-wise complex conjugation (blades untouched).
    pub fn conj_coefficients(&self) -> Self {
        let mut out = Self::zero(self.n, self.deformation);
        for (k, c) in &self.terms {
            out.terms.insert(k.clone(), c.conj());
        }
        out
    }

    /// Complex conjugation of coefficients combined with Clifford
    /// conjugation of blades.
    pub fn clifford_conjugate(&self) -> Self {
        let d = self.deformation.unwrap_or(Deformation::Plus);
        let mut out = Self::zero(self.n, self.deformation);
        for ((m, b), c) in &self.terms {
            out.terms.insert(
                (m.clone(), *b),
                &c.conj() * &conjugation_factor(b.grade(), d),
            );
        }
        out
    }

    /// Maps every coefficient; zero results are dropped.
    pub fn map_terms<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&QMonomial, Blade, &ScalarQ) -> Result<Option<(QMonomial, Blade, ScalarQ)>>,
    {
        let mut out = Self::zero(self.n, self.deformation);
        for ((m, b), c) in &self.terms {
            if let Some((m2, b2, c2)) = f(m, *b, c)? {
                add_term(&mut out.terms, (m2, b2), c2);
            }
        }
        Ok(out)
    }

    pub(crate) fn push_term(&mut self, m: QMonomial, b: Blade, c: ScalarQ) {
        add_term(&mut self.terms, (m, b), c);
    }

    pub(crate) fn set_deformation(&mut self, d: Option<Deformation>) {
        self.deformation = d;
    }

    /// Specializes `s`; keys are (exponent vector, blade indices).
    pub fn eval_at(&self, s: &GaussRat) -> Result<BTreeMap<(Vec<u32>, Vec<usize>), GaussRat>> {
        let mut out = BTreeMap::new();
        for ((m, b), c) in &self.terms {
            let v = c.eval_at(s)?;
            if !v.is_zero() {
                out.insert((m.exps().to_vec(), b.indices()), v);
            }
        }
        Ok(out)
    }

    pub fn to_text(&self) -> String {
        let d = self.deformation.unwrap_or(Deformation::Plus);
        text::join_terms(self.terms.iter().map(|((m, b), c)| {
            let mut parts = Vec::new();
            if !m.is_one() {
                parts.push(m.to_text());
            }
            if !b.is_empty() {
                parts.push(b.to_text(d));
            }
            text::term_text(c, &parts.join("*"))
        }))
    }

    pub fn to_latex(&self) -> String {
        let d = self.deformation.unwrap_or(Deformation::Plus);
        text::join_latex(self.terms.iter().map(|((m, b), c)| {
            let mut body = m.to_latex();
            if !b.is_empty() {
                if !body.is_empty() {
                    body.push(' ');
                }
                body.push_str(&b.to_latex(d));
            }
            text::term_latex(c, &body)
        }))
    }
}

fn m_dim_mismatch(p: &CliffordPolynomial, n: usize) -> bool {
    p.n != n
}

impl fmt::Display for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Serialize, Deserialize)]
struct CTermWire {
    alpha: Vec<u32>,
    blade: Vec<usize>,
    coeff: ScalarQ,
}

#[derive(Serialize, Deserialize)]
struct CPolyWire {
    n: usize,
    sigma: Option<i64>,
    terms: Vec<CTermWire>,
}

impl Serialize for CliffordPolynomial {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        CPolyWire {
            n: self.n,
            sigma: self.deformation.map(Deformation::sigma),
            terms: self
                .terms
                .iter()
                .map(|((m, b), c)| CTermWire {
                    alpha: m.exps().to_vec(),
                    blade: b.indices(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CliffordPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = CPolyWire::deserialize(de)?;
        let d = match w.sigma {
            None => None,
            Some(s) => Some(Deformation::from_sigma(s).ok_or_else(|| D::Error::custom("sigma must be 1 or -1"))?),
        };
        let mut terms = Vec::new();
        for t in w.terms {
            if t.alpha.len() != w.n {
                return Err(D::Error::custom("exponent vector length differs from n"));
            }
            let b = Blade::from_indices(&t.blade).map_err(D::Error::custom)?;
            terms.push((QMonomial::new(t.alpha), b, t.coeff));
        }
        CliffordPolynomial::from_terms(w.n, d, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Deformation = Deformation::Plus;
    const M: Deformation = Deformation::Minus;

    fn b(ix: &[usize]) -> Blade {
        Blade::from_indices(ix).unwrap()
    }

    #[test]
    fn blade_products() {
        assert_eq!(blade_mul(b(&[1]), b(&[2]), P), (ScalarQ::one(), b(&[1, 2])));
        assert_eq!(blade_mul(b(&[2]), b(&[1]), P), (-ScalarQ::q_pow(-1), b(&[1, 2])));
        assert_eq!(blade_mul(b(&[2]), b(&[1]), M), (-ScalarQ::q(), b(&[1, 2])));
        assert_eq!(blade_mul(b(&[1, 2]), b(&[1, 2]), P), (-ScalarQ::q_pow(-1), Blade::EMPTY));
        assert_eq!(blade_mul(b(&[1]), b(&[1]), M), (ScalarQ::from_int(-1), Blade::EMPTY));
    }

    /// Signs always associate. The q-powers associate when no generator is
    /// cancelled, and otherwise differ, e.g. `(e2 e1) e1 = -q^-2 e2` while
    /// `e2 (e1 e1) = -e2`.
    #[test]
    fn blade_associativity() {
        for d in [P, M] {
            for n in 1..=4 {
                let all = Blade::all(n);
                let mut failures = 0;
                for &a in &all {
                    for &x in &all {
                        for &c in &all {
                            let (s1, e1, ax) = blade_mul_parts(a, x, d);
                            let (s2, e2, left) = blade_mul_parts(ax, c, d);
                            let (s3, e3, xc) = blade_mul_parts(x, c, d);
                            let (s4, e4, right) = blade_mul_parts(a, xc, d);
                            assert_eq!((left, s1 * s2), (right, s3 * s4));
                            let disjoint = (a.0 & x.0) | (x.0 & c.0) | (a.0 & c.0) == 0;
                            if disjoint {
                                assert_eq!(e1 + e2, e3 + e4);
                            }
                            failures += (e1 + e2 != e3 + e4) as usize;
                        }
                    }
                }
                assert_eq!(failures == 0, n == 1);
            }
        }
        let (e1, e2) = (b(&[1]), b(&[2]));
        let (c, ab) = blade_mul(e2, e1, P);
        let (c2, _) = blade_mul(ab, e1, P);
        assert_eq!(&c * &c2, -ScalarQ::q_pow(-2));
    }

    #[test]
    fn blade_order() {
        let all: Vec<Vec<usize>> = Blade::all(3).iter().map(|b| b.indices()).collect();
        assert_eq!(
            all,
            vec![vec![], vec![1], vec![2], vec![3], vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]]
        );
    }

    #[test]
    fn conjugation_normalizes_blades() {
        for n in 1..=4 {
            for d in [P, M] {
                for a in Blade::all(n) {
                    let e = CliffordElement::blade(n, d, a, ScalarQ::one());
                    let prod = e.conjugate().mul(&e).unwrap();
                    assert!(prod.scalar_part().is_one());
                }
            }
        }
        let e1 = CliffordElement::generator(2, P, 1).unwrap();
        assert_eq!(e1.conjugate(), e1.scale(&ScalarQ::from_int(-1)));
    }

    #[test]
    fn scalar_parts() {
        let e1 = CliffordElement::generator(2, P, 1).unwrap();
        assert!(e1.scalar_part().is_zero());
        assert_eq!(e1.mul(&e1).unwrap().scalar_part(), ScalarQ::from_int(-1));
    }

    #[test]
    fn text_and_json() {
        let p = CliffordPolynomial::term(QMonomial::new(vec![1, 0]), b(&[1, 2]), ScalarQ::q(), Some(P)).unwrap();
        assert_eq!(p.to_text(), "q*x1*e[1,2]");
        assert_eq!(p.to_latex(), "qx_1 e_{12}");
        let j = serde_json::to_string(&p).unwrap();
        let back: CliffordPolynomial = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
    }
}
