//! Classical (q = 1) Clifford analysis over Q(i), written without the
//! library's algebra so that specializations can be checked against it.
//!
//! Polynomials commute, generators anticommute and square to -1.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};

use qdirac::ops::{OperatorExpr, PrimitiveOp};
use qdirac::qclifford::CliffordPolynomial;
use qdirac::scalars::{GaussRat, ScalarQ};

pub type C = Complex<BigRational>;

/// Exponent vector and sorted blade indices.
pub type Key = (Vec<u32>, Vec<usize>);

#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    pub n: usize,
    pub terms: BTreeMap<Key, C>,
}

pub fn int(v: i64) -> C {
    Complex::new(BigRational::from_integer(v.into()), BigRational::zero())
}

pub fn ratio(p: i64, q: i64) -> C {
    Complex::new(BigRational::new(p.into(), q.into()), BigRational::zero())
}

pub fn imag_unit() -> C {
    Complex::new(BigRational::zero(), BigRational::one())
}

/// Reduces a generator word: swaps of distinct neighbours flip the sign,
/// equal neighbours cancel to -1.
fn reduce_word(mut w: Vec<usize>) -> (i64, Vec<usize>) {
    let mut sign = 1;
    loop {
        let mut changed = false;
        let mut k = 0;
        while k + 1 < w.len() {
            if w[k] > w[k + 1] {
                w.swap(k, k + 1);
                sign = -sign;
                changed = true;
            } else if w[k] == w[k + 1] {
                w.drain(k..k + 2);
                sign = -sign;
                changed = true;
                continue;
            }
            k += 1;
        }
        if !changed {
            return (sign, w);
        }
    }
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: C) -> Self {
        let mut p = Self::zero(n);
        p.add_term((vec![0; n], vec![]), c);
        p
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i - 1] = 1;
        let mut p = Self::zero(n);
        p.add_term((e, vec![]), C::one());
        p
    }

    pub fn gen(n: usize, i: usize) -> Self {
        let mut p = Self::zero(n);
        p.add_term((vec![0; n], vec![i]), C::one());
        p
    }

    fn add_term(&mut self, key: Key, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(key.clone()).or_insert_with(C::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &C) -> Poly {
        let mut out = Poly::zero(self.n);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * c);
        }
        out
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(&int(-1)))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero(self.n);
        for ((m1, b1), c1) in &self.terms {
            for ((m2, b2), c2) in &o.terms {
                let m: Vec<u32> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                let (sign, b) = reduce_word(b1.iter().chain(b2).copied().collect());
                out.add_term((m, b), &(c1 * c2) * &int(sign));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(self.n, C::one()), |acc, _| acc.mul(self))
    }

    /// Partial derivative in `x_i`.
    pub fn d(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.n);
        for ((m, b), c) in &self.terms {
            let a = m[i - 1];
            if a > 0 {
                let mut m2 = m.clone();
                m2[i - 1] -= 1;
                out.add_term((m2, b.clone()), c * &int(a as i64));
            }
        }
        out
    }

    pub fn laplacian(&self) -> Poly {
        (1..=self.n).fold(Poly::zero(self.n), |acc, i| acc.add(&self.d(i).d(i)))
    }

    /// `sum e_i d_i`, generators acting from the left.
    pub fn dirac(&self) -> Poly {
        (1..=self.n).fold(Poly::zero(self.n), |acc, i| acc.add(&Poly::gen(self.n, i).mul(&self.d(i))))
    }

    /// `sum e_i x_i`.
    pub fn vector_var(&self) -> Poly {
        vector(self.n).mul(self)
    }

    /// Euler operator `sum x_i d_i`.
    pub fn euler(&self) -> Poly {
        (1..=self.n).fold(Poly::zero(self.n), |acc, i| acc.add(&Poly::var(self.n, i).mul(&self.d(i))))
    }
}

pub fn radius_sq(n: usize) -> Poly {
    (1..=n).fold(Poly::zero(n), |acc, i| acc.add(&Poly::var(n, i).pow(2)))
}

pub fn vector(n: usize) -> Poly {
    (1..=n).fold(Poly::zero(n), |acc, i| acc.add(&Poly::gen(n, i).mul(&Poly::var(n, i))))
}

fn gauss(c: &GaussRat) -> C {
    Complex::new(c.re.clone(), c.im.clone())
}

/// Library scalar at `s = 1`; `None` at a pole.
pub fn at_one(c: &ScalarQ) -> Option<C> {
    c.eval_at(&GaussRat::one()).ok().map(|g| gauss(&g))
}

/// Library polynomial specialized at `s = 1`.
pub fn specialize(p: &CliffordPolynomial) -> Option<Poly> {
    let map = p.eval_at(&GaussRat::one()).ok()?;
    let mut out = Poly::zero(p.dim());
    for ((m, b), c) in map {
        out.add_term((m, b), gauss(&c));
    }
    Some(out)
}

/// Classical reading of a library operator: `gamma` and `omega` become the
/// identity, left and right variables and both generator families merge.
/// `None` when a coefficient has a pole at `s = 1`.
pub fn apply(op: &OperatorExpr, p: &Poly) -> Option<Poly> {
    let n = p.n;
    Some(match op {
        OperatorExpr::Prim(prim) => match prim {
            PrimitiveOp::Gamma(..) | PrimitiveOp::Omega(..) | PrimitiveOp::GammaAll(_) => p.clone(),
            PrimitiveOp::DiffR(i) | PrimitiveOp::DiffL(i) => p.d(*i),
            PrimitiveOp::MulVarL(i) => Poly::var(n, *i).mul(p),
            PrimitiveOp::MulVarR(i) => p.mul(&Poly::var(n, *i)),
            PrimitiveOp::MulBladeLeft(b, _) => blade(n, &b.indices()).mul(p),
            PrimitiveOp::MulBladeRight(b, _) => p.mul(&blade(n, &b.indices())),
            PrimitiveOp::ScalarMul(c) => p.scale(&at_one(c)?),
        },
        OperatorExpr::Sum(terms) => {
            let mut acc = Poly::zero(n);
            for t in terms {
                acc = acc.add(&apply(t, p)?);
            }
            acc
        }
        OperatorExpr::Compose(factors) => {
            let mut acc = p.clone();
            for f in factors.iter().rev() {
                acc = apply(f, &acc)?;
            }
            acc
        }
        OperatorExpr::Power(base, k) => {
            let mut acc = p.clone();
            for _ in 0..*k {
                acc = apply(base, &acc)?;
            }
            acc
        }
    })
}

/// Product of generators in the written order.
pub fn blade(n: usize, indices: &[usize]) -> Poly {
    indices.iter().fold(Poly::constant(n, C::one()), |acc, &i| acc.mul(&Poly::gen(n, i)))
}

/// Monomials of degree `k` with every blade, as classical polynomials.
pub fn basis(n: usize, k: u32, clifford: bool) -> Vec<Poly> {
    let mut exps = vec![vec![]];
    for _ in 0..n {
        exps = exps
            .into_iter()
            .flat_map(|e: Vec<u32>| (0..=k).map(move |a| [e.clone(), vec![a]].concat()))
            .collect();
    }
    let blades: Vec<Vec<usize>> = if clifford {
        (0u32..1 << n).map(|bits| (1..=n).filter(|i| bits >> (i - 1) & 1 == 1).collect()).collect()
    } else {
        vec![vec![]]
    };
    let mut out = Vec::new();
    for e in exps.into_iter().filter(|e| e.iter().sum::<u32>() == k) {
        for b in &blades {
            let mut p = Poly::zero(n);
            p.add_term((e.clone(), b.clone()), C::one());
            out.push(p);
        }
    }
    out
}
