//! Laurent polynomials in `s` with Gaussian integer coefficients, the
//! working ring of fraction-free elimination. Integer coefficients avoid the
//! gcd that every rational operation would pay.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalars::{GaussRat, LaurentPoly};

/// `re + im*i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct GInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GInt {
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn mul(&self, o: &GInt) -> GInt {
        GInt {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    /// `self / d` when it is a Gaussian integer.
    pub fn exact_div(&self, d: &GInt) -> Option<GInt> {
        let norm = &d.re * &d.re + &d.im * &d.im;
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        let (qr, rr) = re.div_rem(&norm);
        let (qi, ri) = im.div_rem(&norm);
        (rr.is_zero() && ri.is_zero()).then_some(GInt { re: qr, im: qi })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct ZPoly {
    pub(super) low: i64,
    /// Dense, with nonzero first and last entries (empty for zero).
    pub(super) coeffs: Vec<GInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        ZPoly {
            low: 0,
            coeffs: vec![GInt {
                re: BigInt::one(),
                im: BigInt::zero(),
            }],
        }
    }

    pub(super) fn from_dense(low: i64, mut coeffs: Vec<GInt>) -> Self {
        while coeffs.last().is_some_and(GInt::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        ZPoly {
            low: if coeffs.is_empty() { 0 } else { low + lead as i64 },
            coeffs,
        }
    }

    /// `scale * p`, which must have integral coefficients.
    pub fn from_laurent(p: &LaurentPoly, scale: &BigInt) -> Self {
        let int = |r: &num_rational::BigRational| {
            if r.is_integer() {
                return r.numer() * scale;
            }
            let v = r * scale;
            assert!(v.is_integer(), "scale clears denominators");
            v.to_integer()
        };
        let coeffs = (p.low()..=p.high())
            .map(|e| {
                let c = p.coeff(e);
                GInt {
                    re: int(&c.re),
                    im: int(&c.im),
                }
            })
            .collect();
        Self::from_dense(p.low(), coeffs)
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.coeffs.iter().enumerate().map(|(k, c)| {
            (
                self.low + k as i64,
                GaussRat::new(c.re.clone().into(), c.im.clone().into()),
            )
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].re.is_one() && self.coeffs[0].im.is_zero()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn span(&self) -> usize {
        self.coeffs.len()
    }

    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly::zero();
        }
        Self::from_dense(self.low + o.low, mul_dense(&self.coeffs, &o.coeffs))
    }

    pub fn sub(&self, o: &ZPoly) -> ZPoly {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return ZPoly::from_dense(
                o.low,
                o.coeffs.iter().map(|c| GInt { re: -&c.re, im: -&c.im }).collect(),
            );
        }
        let low = self.low.min(o.low);
        let high = (self.low + self.coeffs.len() as i64).max(o.low + o.coeffs.len() as i64);
        let mut out = vec![GInt::default(); (high - low) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[(self.low - low) as usize + k] = c.clone();
        }
        for (k, c) in o.coeffs.iter().enumerate() {
            let slot = &mut out[(o.low - low) as usize + k];
            slot.re -= &c.re;
            slot.im -= &c.im;
        }
        Self::from_dense(low, out)
    }

    /// `self / d` when the quotient is again a Gaussian integer polynomial.
    pub fn exact_div(&self, d: &ZPoly) -> Option<ZPoly> {
        assert!(!d.is_zero(), "division by zero");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        Some(Self::from_dense(self.low - d.low, div_dense(&self.coeffs, &d.coeffs)?))
    }
}

fn mul_dense(a: &[GInt], b: &[GInt]) -> Vec<GInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![GInt::default(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let slot = &mut out[i + j];
            slot.re += &x.re * &y.re - &x.im * &y.im;
            slot.im += &x.re * &y.im + &x.im * &y.re;
        }
    }
    out
}

/// Exact quotient of ascending coefficient vectors; the last entry of `d`
/// must be nonzero.
fn div_dense(a: &[GInt], d: &[GInt]) -> Option<Vec<GInt>> {
    let (la, ld) = (a.len(), d.len());
    if la < ld {
        return a.iter().all(GInt::is_zero).then(Vec::new);
    }
    let lead = d.last().expect("nonzero");
    let mut rem = a.to_vec();
    let mut quot = vec![GInt::default(); la - ld + 1];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + ld - 1];
        if top.is_zero() {
            continue;
        }
        let c = top.exact_div(lead)?;
        for (j, dj) in d.iter().enumerate() {
            if dj.is_zero() {
                continue;
            }
            let t = c.mul(dj);
            let slot = &mut rem[k + j];
            slot.re -= t.re;
            slot.im -= t.im;
        }
        quot[k] = c;
    }
    rem.iter().all(GInt::is_zero).then_some(quot)
}

/// Nearest-integer quotient.
fn round_div(x: &BigInt, n: &BigInt) -> BigInt {
    let twice: BigInt = x * 2 + n;
    twice.div_floor(&(n * 2))
}

pub(crate) fn gint_gcd(mut a: GInt, mut b: GInt) -> GInt {
    while !b.is_zero() {
        let norm = &b.re * &b.re + &b.im * &b.im;
        let q = GInt {
            re: round_div(&(&a.re * &b.re + &a.im * &b.im), &norm),
            im: round_div(&(&a.im * &b.re - &a.re * &b.im), &norm),
        };
        let qb = q.mul(&b);
        let r = GInt {
            re: &a.re - &qb.re,
            im: &a.im - &qb.im,
        };
        a = b;
        b = r;
    }
    a
}

/// Gcd of all coefficients.
pub(crate) fn content(v: &[GInt]) -> GInt {
    v.iter().cloned().fold(GInt::default(), gint_gcd)
}

/// `(scale * a, scale)` with the least scale making every entry integral.
pub(crate) fn integral(a: &[GaussRat]) -> (Vec<GInt>, BigInt) {
    let scale = a
        .iter()
        .flat_map(|c| [c.re.denom(), c.im.denom()])
        .fold(BigInt::one(), |acc, d| acc.lcm(d));
    let lift = |r: &num_rational::BigRational| {
        if scale.is_one() {
            r.numer().clone()
        } else {
            r.numer() * (&scale / r.denom())
        }
    };
    let v = a.iter().map(|c| GInt { re: lift(&c.re), im: lift(&c.im) }).collect();
    (v, scale)
}

fn to_gauss(c: &GInt) -> GaussRat {
    GaussRat::new(
        num_rational::BigRational::from_integer(c.re.clone()),
        num_rational::BigRational::from_integer(c.im.clone()),
    )
}

/// `factor * v` as rational coefficients.
fn rational(v: &[GInt], factor: &GaussRat) -> Vec<GaussRat> {
    if factor.is_one() {
        return v.iter().map(to_gauss).collect();
    }
    if factor.im.is_zero() {
        let (p, q) = (factor.re.numer(), factor.re.denom());
        let part = |x: &BigInt| num_rational::BigRational::new(x * p, q.clone());
        return v.iter().map(|c| GaussRat::new(part(&c.re), part(&c.im))).collect();
    }
    v.iter().map(|c| &to_gauss(c) * factor).collect()
}

/// Product of dense rational polynomials, computed on integer forms.
pub(crate) fn mul_rational(a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
    let (x, sx) = integral(a);
    let (y, sy) = integral(b);
    let factor = GaussRat::real(num_rational::BigRational::new(BigInt::one(), sx * sy));
    rational(&mul_dense(&x, &y), &factor)
}

/// `a / g` for dense rational polynomials when `g` divides `a` exactly.
pub(crate) fn quotient_rational(a: &[GaussRat], g: &[GaussRat]) -> Option<Vec<GaussRat>> {
    let (x, sx) = integral(a);
    let (y, sy) = integral(g);
    let c = content(&y);
    let prim: Vec<GInt> = y.iter().map(|v| v.exact_div(&c).expect("content divides")).collect();
    // a / g = (x / prim) * sy / (sx * c)
    let factor = &GaussRat::real(num_rational::BigRational::new(sy, sx)) * &to_gauss(&c).inv().expect("nonzero");
    Some(rational(&div_dense(&x, &prim)?, &factor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ScalarQ;

    fn z(text: &ScalarQ) -> ZPoly {
        ZPoly::from_laurent(text.numerator(), &BigInt::one())
    }

    #[test]
    fn ring_operations() {
        let a = z(&(&ScalarQ::s() + &(&ScalarQ::i() * &ScalarQ::q())));
        let b = z(&(&ScalarQ::from_int(3) - &ScalarQ::s().pow(-2).unwrap()));
        let ab = a.mul(&b);
        assert_eq!(ab.exact_div(&b), Some(a.clone()));
        assert_eq!(ab.exact_div(&a), Some(b.clone()));
        assert_eq!(ab.sub(&ab), ZPoly::zero());
        assert_eq!(a.to_laurent(), *(&ScalarQ::s() + &(&ScalarQ::i() * &ScalarQ::q())).numerator());
        assert!(ZPoly::one().is_one());
        let two = z(&ScalarQ::from_int(2));
        assert_eq!(ZPoly::one().exact_div(&two), None);
        assert_eq!(a.mul(&two).sub(&a).sub(&a), ZPoly::zero());
    }
}
