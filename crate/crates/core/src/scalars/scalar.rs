use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gauss::{fmt_rational, parse_rational, GaussRat};
use super::laurent::{poly_exact_quotient, poly_gcd, LaurentPoly};

/// Monic gcd of the ordinary polynomial parts (powers of `s` are units).
fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_monomial() || b.is_monomial() {
        return LaurentPoly::one();
    }
    LaurentPoly::from_dense(0, poly_gcd(a.dense(), b.dense()))
}

/// `a / g` for a divisor `g` of the ordinary polynomial part of `a`.
fn quotient(a: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    if g.is_one() {
        return a.clone();
    }
    LaurentPoly::from_dense(a.low(), poly_exact_quotient(a.dense(), g.dense()))
}
use crate::error::{Error, Result};

/// Element of the coefficient field `Q(i)(s)`, where `s` stands for the
/// square root of the deformation parameter (`q = s^2`).
///
/// Always normalized: numerator and denominator are coprime, the
/// denominator is an ordinary polynomial with nonzero constant term equal to
/// one, and any power of `s` lives in the numerator. Structural equality is
/// therefore field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ScalarQ {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for ScalarQ {
    fn default() -> Self {
        Self::zero()
    }
}

impl ScalarQ {
    pub fn zero() -> Self {
        ScalarQ {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_gauss(GaussRat::from_int(v))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_gauss(GaussRat::from_ratio(p, q))
    }

    pub fn from_gauss(c: GaussRat) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn i() -> Self {
        Self::from_gauss(GaussRat::i())
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        ScalarQ {
            num,
            den: LaurentPoly::one(),
        }
    }

    /// `s^e`.
    pub fn s_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::monomial(GaussRat::one(), e))
    }

    /// `q^e = s^(2e)`.
    pub fn q_pow(e: i64) -> Self {
        Self::s_pow(2 * e)
    }

    pub fn s() -> Self {
        Self::s_pow(1)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// Builds `num/den` and normalizes. Fails when `den` is zero.
    pub fn ratio(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_monomial() {
            let c = den.lowest_coeff().unwrap().inv().expect("nonzero");
            return ScalarQ {
                num: num.scale(&c).shift(-den.low()),
                den: LaurentPoly::one(),
            };
        }
        let g = gcd(&num, &den);
        if g.is_one() {
            return Self::from_coprime(num, den);
        }
        Self::from_coprime(quotient(&num, &g), quotient(&den, &g))
    }

    /// Normal form of `num / den` when the two share no factor besides
    /// powers of `s`.
    fn from_coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let c = den.lowest_coeff().expect("nonzero").inv().expect("nonzero");
        let num = num.scale(&c).shift(-den.low());
        let den = den.scale(&c).shift(-den.low());
        if den.is_one() {
            return ScalarQ {
                num,
                den: LaurentPoly::one(),
            };
        }
        ScalarQ { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value is a Laurent polynomial in `s`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// A value of the form `c*s^e`.
    pub fn as_monomial(&self) -> Option<(GaussRat, i64)> {
        if self.den.is_one() && self.num.is_monomial() {
            let (e, c) = self.num.terms().next().unwrap();
            Some((c.clone(), e))
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        match self.as_monomial() {
            Some((c, 0)) => Some(c),
            _ => None,
        }
    }

    /// Number of stored terms; the pivot heuristic in elimination uses it.
    pub fn term_count(&self) -> usize {
        self.num.term_count() + self.den.term_count()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Complex conjugation `i -> -i`; `s` is fixed.
    pub fn conj(&self) -> Self {
        ScalarQ {
            num: self.num.conj(),
            den: self.den.conj(),
        }
    }

    /// Numeric specialization `s = value`.
    pub fn eval_at(&self, value: &GaussRat) -> Result<GaussRat> {
        let d = self.den.eval(value)?;
        if d.is_zero() {
            return Err(Error::Pole {
                at: value.to_string(),
            });
        }
        self.num.eval(value)?.div(&d)
    }

    /// Numeric specialization `q = value`, for values that only involve
    /// even powers of `s`.
    pub fn eval_at_q(&self, value: &GaussRat) -> Result<GaussRat> {
        if !(self.num.is_even() && self.den.is_even()) {
            return Err(Error::OddPower);
        }
        let halve = |p: &LaurentPoly| LaurentPoly::from_terms(p.terms().map(|(e, c)| (e / 2, c.clone())));
        ScalarQ {
            num: halve(&self.num),
            den: halve(&self.den),
        }
        .eval_at(value)
    }

    /// Canonical text form, e.g. `q + q^-1` or `(s^2 + 1)/(s^3 + s)`.
    pub fn to_text(&self) -> String {
        let in_q = self.num.is_even() && self.den.is_even();
        if self.den.is_one() {
            return laurent_text(&self.num, in_q);
        }
        let wrap = |p: &LaurentPoly| {
            let t = laurent_text(p, in_q);
            if p.term_count() > 1 || t.starts_with('-') {
                format!("({t})")
            } else {
                t
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }

    pub fn to_latex(&self) -> String {
        let in_q = self.num.is_even() && self.den.is_even();
        if self.den.is_one() {
            return laurent_latex(&self.num, in_q);
        }
        format!(
            "\\frac{{{}}}{{{}}}",
            laurent_latex(&self.num, in_q),
            laurent_latex(&self.den, in_q)
        )
    }

    /// True when the text form is a single term needing no parentheses as a
    /// factor.
    pub fn is_atomic(&self) -> bool {
        match self.as_monomial() {
            Some((c, _)) => c.is_real() || c.re.is_zero(),
            None => false,
        }
    }
}

fn negative_like(c: &GaussRat) -> bool {
    (c.im.is_zero() && c.re.is_negative()) || (c.re.is_zero() && c.im.is_negative())
}

fn laurent_text(p: &LaurentPoly, in_q: bool) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().rev().enumerate() {
        let neg = negative_like(c);
        let c_abs = if neg { -c } else { c.clone() };
        let body = term_text(&c_abs, e, in_q);
        match (k, neg) {
            (0, true) => out.push_str(&format!("-{body}")),
            (0, false) => out.push_str(&body),
            (_, true) => out.push_str(&format!(" - {body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
        }
    }
    out
}

fn power_text(e: i64, in_q: bool) -> String {
    let (v, e) = if in_q { ("q", e / 2) } else { ("s", e) };
    match e {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{e}"),
    }
}

fn term_text(c: &GaussRat, e: i64, in_q: bool) -> String {
    let pw = power_text(e, in_q);
    if pw.is_empty() {
        c.to_string()
    } else if c.is_one() {
        pw
    } else {
        format!("{c}*{pw}")
    }
}

fn laurent_latex(p: &LaurentPoly, in_q: bool) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.terms().rev().enumerate() {
        let neg = negative_like(c);
        let c_abs = if neg { -c } else { c.clone() };
        let (v, e2) = if in_q { ("q", e / 2) } else { ("s", e) };
        let pw = match e2 {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{{{e2}}}"),
        };
        let coef = gauss_latex(&c_abs);
        let body = if pw.is_empty() {
            coef
        } else if c_abs.is_one() {
            pw
        } else {
            format!("{coef}{pw}")
        };
        if neg {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        out.push_str(&body);
    }
    out
}

pub(crate) fn rational_latex(r: &num_rational::BigRational) -> String {
    use num_traits::One;
    if r.denom().is_one() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -r.numer(), r.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn gauss_latex(c: &GaussRat) -> String {
    use num_traits::One;
    let im = |x: &num_rational::BigRational| {
        if x.is_one() {
            "i".to_string()
        } else {
            format!("{}i", rational_latex(x))
        }
    };
    if c.im.is_zero() {
        rational_latex(&c.re)
    } else if c.re.is_zero() {
        im(&c.im)
    } else if c.im.is_negative() {
        format!("({}-{})", rational_latex(&c.re), im(&-&c.im))
    } else {
        format!("({}+{})", rational_latex(&c.re), im(&c.im))
    }
}

impl fmt::Display for ScalarQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &ScalarQ {
    type Output = ScalarQ;
    fn add(self, o: &ScalarQ) -> ScalarQ {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return ScalarQ::from_laurent(&self.num + &o.num);
        }
        if self.den == o.den {
            return ScalarQ::normalize(&self.num + &o.num, self.den.clone());
        }
        // Henrici: with g = gcd(b, d), a/b + c/d = (a d' + c b') / (b' d)
        // where b = b' g, d = d' g, and only g can share factors with the
        // new numerator.
        let g = gcd(&self.den, &o.den);
        let (b1, d1) = (quotient(&self.den, &g), quotient(&o.den, &g));
        let num = &(&self.num * &d1) + &(&o.num * &b1);
        let den = &b1 * &o.den;
        if g.is_one() || num.is_zero() {
            return ScalarQ::from_coprime(num, den);
        }
        let h = gcd(&num, &g);
        if h.is_one() {
            return ScalarQ::from_coprime(num, den);
        }
        ScalarQ::from_coprime(quotient(&num, &h), quotient(&den, &h))
    }
}

impl Add for ScalarQ {
    type Output = ScalarQ;
    fn add(self, o: ScalarQ) -> ScalarQ {
        &self + &o
    }
}

impl AddAssign<&ScalarQ> for ScalarQ {
    fn add_assign(&mut self, o: &ScalarQ) {
        *self = &*self + o;
    }
}

impl Sub for &ScalarQ {
    type Output = ScalarQ;
    fn sub(self, o: &ScalarQ) -> ScalarQ {
        self + &(-o)
    }
}

impl Sub for ScalarQ {
    type Output = ScalarQ;
    fn sub(self, o: ScalarQ) -> ScalarQ {
        &self - &o
    }
}

impl Neg for &ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        ScalarQ {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for ScalarQ {
    type Output = ScalarQ;
    fn neg(self) -> ScalarQ {
        -&self
    }
}

impl Mul for &ScalarQ {
    type Output = ScalarQ;
    fn mul(self, o: &ScalarQ) -> ScalarQ {
        if self.is_zero() || o.is_zero() {
            return ScalarQ::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return ScalarQ::from_laurent(&self.num * &o.num);
        }
        if o.den.is_one() && o.num.is_monomial() {
            // monomial scaling never introduces common factors
            return ScalarQ {
                num: &self.num * &o.num,
                den: self.den.clone(),
            };
        }
        if self.den.is_one() && self.num.is_monomial() {
            return ScalarQ {
                num: &self.num * &o.num,
                den: o.den.clone(),
            };
        }
        // cross cancellation keeps both gcds small
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        ScalarQ::from_coprime(
            &quotient(&self.num, &g1) * &quotient(&o.num, &g2),
            &quotient(&self.den, &g2) * &quotient(&o.den, &g1),
        )
    }
}

impl Mul for ScalarQ {
    type Output = ScalarQ;
    fn mul(self, o: ScalarQ) -> ScalarQ {
        &self * &o
    }
}

/// Panics on division by zero, like the integer types; use
/// [`ScalarQ::checked_div`] for a fallible version.
impl Div for &ScalarQ {
    type Output = ScalarQ;
    fn div(self, o: &ScalarQ) -> ScalarQ {
        self.checked_div(o).expect("ScalarQ division by zero")
    }
}

impl Div for ScalarQ {
    type Output = ScalarQ;
    fn div(self, o: ScalarQ) -> ScalarQ {
        &self / &o
    }
}

impl From<i64> for ScalarQ {
    fn from(v: i64) -> Self {
        ScalarQ::from_int(v)
    }
}

impl From<GaussRat> for ScalarQ {
    fn from(v: GaussRat) -> Self {
        ScalarQ::from_gauss(v)
    }
}

impl std::iter::Sum for ScalarQ {
    fn sum<I: Iterator<Item = ScalarQ>>(iter: I) -> Self {
        iter.fold(ScalarQ::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for ScalarQ {
    fn product<I: Iterator<Item = ScalarQ>>(iter: I) -> Self {
        iter.fold(ScalarQ::one(), |a, b| &a * &b)
    }
}

// JSON: {"num": [[exp, re, im], ...], "den": [...]}, rationals as strings.

type WireTerm = (i64, String, String);

#[derive(Serialize, Deserialize)]
struct ScalarWire {
    num: Vec<WireTerm>,
    den: Vec<WireTerm>,
}

fn to_wire(p: &LaurentPoly) -> Vec<WireTerm> {
    p.terms()
        .rev()
        .map(|(e, c)| (e, fmt_rational(&c.re), fmt_rational(&c.im)))
        .collect()
}

fn from_wire(terms: &[WireTerm]) -> Result<LaurentPoly> {
    let mut out = Vec::with_capacity(terms.len());
    for (e, re, im) in terms {
        out.push((*e, GaussRat::new(parse_rational(re)?, parse_rational(im)?)));
    }
    Ok(LaurentPoly::from_terms(out))
}

impl Serialize for ScalarQ {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarWire {
            num: to_wire(&self.num),
            den: to_wire(&self.den),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for ScalarQ {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let w = ScalarWire::deserialize(de)?;
        let num = from_wire(&w.num).map_err(serde::de::Error::custom)?;
        let den = from_wire(&w.den).map_err(serde::de::Error::custom)?;
        ScalarQ::ratio(num, den).map_err(serde::de::Error::custom)
    }
}

// Named constants.

/// Symmetric q-number `[m]_q = (q^m - q^-m)/(q - q^-1)`, expanded as the
/// Laurent polynomial `q^(m-1) + q^(m-3) + ... + q^(1-m)`.
pub fn qnum(m: i64) -> ScalarQ {
    let k = m.abs();
    let sign = if m < 0 { -1 } else { 1 };
    let terms = (0..k).map(|t| (2 * (k - 1 - 2 * t), GaussRat::from_int(sign)));
    ScalarQ::from_laurent(LaurentPoly::from_terms(terms))
}

/// `[1/2]_q = (s - s^-1)/(s^2 - s^-2) = 1/(s + s^-1)`.
pub fn qnum_half() -> ScalarQ {
    let den = &ScalarQ::s() + &ScalarQ::s_pow(-1);
    den.inv().expect("s + 1/s is nonzero")
}

/// `[alpha]! = prod_i [alpha_i]_q!`.
pub fn qfactorial(alpha: &[u32]) -> ScalarQ {
    alpha
        .iter()
        .flat_map(|&a| (1..=a as i64).map(qnum))
        .product()
}

/// `{a}_q = (a - a^-1)/(q - q^-1)`.
pub fn qbrace(a: &ScalarQ) -> Result<ScalarQ> {
    let top = a - &a.inv()?;
    top.checked_div(&(&ScalarQ::q() - &ScalarQ::q_pow(-1)))
}
