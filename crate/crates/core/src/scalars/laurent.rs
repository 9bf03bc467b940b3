use std::ops::{Add, Mul, Neg, Sub};

use super::gauss::GaussRat;
use crate::error::{Error, Result};

/// Laurent polynomial in the formal symbol `s` with Gaussian-rational
/// coefficients.
///
/// Stored densely: `coeffs[k]` is the coefficient of `s^(low + k)`. The
/// first and last stored coefficients are nonzero; the zero polynomial has
/// no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<GaussRat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussRat::one())
    }

    pub fn constant(c: GaussRat) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: GaussRat, exp: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: exp,
            coeffs: vec![c],
        }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add.
    pub fn from_terms<I: IntoIterator<Item = (i64, GaussRat)>>(terms: I) -> Self {
        let terms: Vec<(i64, GaussRat)> = terms.into_iter().collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![GaussRat::zero(); (hi - lo + 1) as usize];
        for (e, c) in &terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    pub(crate) fn from_dense(low: i64, mut coeffs: Vec<GaussRat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly {
            low: low + lead as i64,
            coeffs,
        }
    }

    /// Quotient by a divisor known to divide exactly (`s` is a unit, so
    /// only the ordinary polynomial parts have to divide).
    pub fn exact_div(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if d.is_monomial() {
            let c = d.coeffs[0].inv()?;
            return Ok(self.scale(&c).shift(-d.low));
        }
        let q = if self.coeffs.len() > INTEGER_FROM {
            super::zpoly::quotient_rational(&self.coeffs, &d.coeffs)
        } else {
            let (q, r) = poly_divrem(&self.coeffs, &d.coeffs);
            r.is_empty().then_some(q)
        };
        let q = q.ok_or_else(|| Error::Inconsistent("inexact polynomial division".into()))?;
        Ok(Self::from_dense(self.low - d.low, q))
    }

    /// Least common multiple of two ordinary polynomials, up to a unit.
    pub(crate) fn lcm(&self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() || self == o {
            return self.clone();
        }
        let g = Self::from_dense(0, poly_gcd(&self.coeffs, &o.coeffs));
        self * &o.exact_div(&g).expect("gcd divides")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Single-term polynomial `c*s^e`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent (0 for the zero polynomial).
    pub fn high(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.low + self.coeffs.len() as i64 - 1
        }
    }

    pub(crate) fn dense(&self) -> &[GaussRat] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i64) -> GaussRat {
        if exp < self.low {
            return GaussRat::zero();
        }
        self.coeffs
            .get((exp - self.low) as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &GaussRat)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i64, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn lowest_coeff(&self) -> Option<&GaussRat> {
        self.coeffs.first()
    }

    pub fn shift(&self, by: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + by,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Complex conjugation of the coefficients; `s` is real.
    pub fn conj(&self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(GaussRat::conj).collect(),
        }
    }

    /// Every exponent is even, i.e. the value is a Laurent polynomial in `q = s^2`.
    pub fn is_even(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    /// Substitutes `s = value` (Horner). Fails on `value == 0` with negative exponents.
    pub fn eval(&self, value: &GaussRat) -> Result<GaussRat> {
        if self.is_zero() {
            return Ok(GaussRat::zero());
        }
        if value.is_zero() && self.low < 0 {
            return Err(Error::Pole {
                at: value.to_string(),
            });
        }
        let mut acc = GaussRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        Ok(&acc * &value.pow(self.low)?)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(o.low);
        let hi = self.high().max(o.high());
        let mut coeffs = vec![GaussRat::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + k] += c;
        }
        for (k, c) in o.coeffs.iter().enumerate() {
            coeffs[(o.low - lo) as usize + k] += c;
        }
        LaurentPoly::from_dense(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        self + &(-o)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || o.is_zero() {
            return LaurentPoly::zero();
        }
        if self.coeffs.len() * o.coeffs.len() > INTEGER_FROM * INTEGER_FROM {
            return LaurentPoly::from_dense(self.low + o.low, super::zpoly::mul_rational(&self.coeffs, &o.coeffs));
        }
        let mut coeffs = vec![GaussRat::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in o.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[a + b] += &(x * y);
                }
            }
        }
        LaurentPoly::from_dense(self.low + o.low, coeffs)
    }
}

// Ordinary polynomials (ascending coefficient vectors) over Q(i), used for
// gcd normalization of rational functions.

fn trim(v: &mut Vec<GaussRat>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Division with remainder; `b` must be nonzero.
pub(crate) fn poly_divrem(a: &[GaussRat], b: &[GaussRat]) -> (Vec<GaussRat>, Vec<GaussRat>) {
    let mut rem: Vec<GaussRat> = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![GaussRat::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let factor = &rem[rem.len() - 1] * &lead_inv;
        for (k, bc) in b.iter().enumerate() {
            let t = &factor * bc;
            rem[shift + k] = &rem[shift + k] - &t;
        }
        quot[shift] = factor;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Length above which products, exact quotients and gcds switch to
/// Gaussian integer arithmetic, where rational coefficients would pay a gcd
/// per operation.
pub(crate) const INTEGER_FROM: usize = 8;

/// Exact quotient `a / b`.
pub(crate) fn poly_exact_quotient(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    if a.len() > INTEGER_FROM {
        if let Some(q) = super::zpoly::quotient_rational(a, b) {
            return q;
        }
    }
    poly_divrem(a, b).0
}

/// Monic gcd of two nonzero polynomials. Long inputs go through the
/// modular algorithm, short ones through Euclid.
pub(crate) fn poly_gcd(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    if a.len().min(b.len()) > INTEGER_FROM {
        if let Some(g) = super::modgcd::gcd(a, b) {
            return g;
        }
    }
    poly_gcd_euclid(a, b)
}

pub(crate) fn poly_gcd_euclid(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
        if let Some(l) = y.last() {
            let inv = l.inv().expect("nonzero");
            y = y.iter().map(|c| c * &inv).collect();
        }
    }
    let inv = x.last().expect("nonzero gcd").inv().expect("nonzero");
    x.iter().map(|c| c * &inv).collect()
}
