use std::fmt;

use crate::error::{Error, Result};
use crate::qclifford::{join_deformation, Blade, CliffordPolynomial, Deformation};
use crate::qpoly::check_index;
use crate::scalars::{qnum, ScalarQ};

/// A single operator acting on (Clifford-valued) q-polynomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PrimitiveOp {
    /// `gamma_i^(+-1)`: `x_i -> q^(+-1) x_i`.
    Gamma(usize, i8),
    /// `omega_i^(+-1) = (gamma_1 ... gamma_(i-1))^(-+1) (gamma_(i+1) ... gamma_n)^(+-1)`.
    Omega(usize, i8),
    /// `gamma^(+-1) = (gamma_1 ... gamma_n)^(+-1)`.
    GammaAll(i8),
    /// Right partial q-difference `d_i^R`.
    DiffR(usize),
    /// Left partial q-difference `d_i^L`.
    DiffL(usize),
    /// Left multiplication by `x_i`.
    MulVarL(usize),
    /// Right multiplication by `x_i`.
    MulVarR(usize),
    /// Left multiplication by a blade.
    MulBladeLeft(Blade, Deformation),
    /// Right multiplication by a blade.
    MulBladeRight(Blade, Deformation),
    ScalarMul(ScalarQ),
}

impl PrimitiveOp {
    pub fn degree_shift(&self) -> i64 {
        match self {
            PrimitiveOp::DiffR(_) | PrimitiveOp::DiffL(_) => -1,
            PrimitiveOp::MulVarL(_) | PrimitiveOp::MulVarR(_) => 1,
            _ => 0,
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        match self {
            PrimitiveOp::Gamma(i, e) | PrimitiveOp::Omega(i, e) => {
                check_index(*i, n)?;
                check_exp(*e)
            }
            PrimitiveOp::GammaAll(e) => check_exp(*e),
            PrimitiveOp::DiffR(i)
            | PrimitiveOp::DiffL(i)
            | PrimitiveOp::MulVarL(i)
            | PrimitiveOp::MulVarR(i) => check_index(*i, n),
            PrimitiveOp::MulBladeLeft(b, _) | PrimitiveOp::MulBladeRight(b, _) => {
                if b.max_index() > n {
                    Err(Error::IndexOutOfRange {
                        index: b.max_index(),
                        n,
                    })
                } else {
                    Ok(())
                }
            }
            PrimitiveOp::ScalarMul(_) => Ok(()),
        }
    }

    fn apply(&self, p: &CliffordPolynomial) -> Result<CliffordPolynomial> {
        let qp = ScalarQ::q_pow;
        match self {
            PrimitiveOp::Gamma(i, e) => {
                let (i, e) = (*i, *e as i64);
                p.map_terms(|m, b, c| Ok(Some((m.clone(), b, c * &qp(e * m.exp(i) as i64)))))
            }
            PrimitiveOp::Omega(i, e) => {
                let (i, e) = (*i, *e as i64);
                p.map_terms(|m, b, c| {
                    let k = m.sum_after(i) - m.sum_before(i);
                    Ok(Some((m.clone(), b, c * &qp(e * k))))
                })
            }
            PrimitiveOp::GammaAll(e) => {
                let e = *e as i64;
                p.map_terms(|m, b, c| Ok(Some((m.clone(), b, c * &qp(e * m.degree() as i64)))))
            }
            PrimitiveOp::DiffR(i) => {
                let i = *i;
                p.map_terms(|m, b, c| {
                    Ok(m.lowered(i).map(|low| {
                        let f = &qnum(m.exp(i) as i64) * &qp(m.sum_after(i));
                        (low, b, c * &f)
                    }))
                })
            }
            PrimitiveOp::DiffL(i) => {
                let i = *i;
                p.map_terms(|m, b, c| {
                    Ok(m.lowered(i).map(|low| {
                        let f = &qnum(m.exp(i) as i64) * &qp(m.sum_before(i));
                        (low, b, c * &f)
                    }))
                })
            }
            PrimitiveOp::MulVarL(i) => {
                let i = *i;
                p.map_terms(|m, b, c| Ok(Some((m.raised(i), b, c * &qp(-m.sum_before(i))))))
            }
            PrimitiveOp::MulVarR(i) => {
                let i = *i;
                p.map_terms(|m, b, c| Ok(Some((m.raised(i), b, c * &qp(-m.sum_after(i))))))
            }
            PrimitiveOp::MulBladeLeft(bl, d) => p.blade_left(*bl, *d),
            PrimitiveOp::MulBladeRight(bl, d) => p.blade_right(*bl, *d),
            PrimitiveOp::ScalarMul(c) => Ok(p.scale(c)),
        }
    }
}

fn check_exp(e: i8) -> Result<()> {
    if e == 1 || e == -1 {
        Ok(())
    } else {
        Err(Error::Lowering(format!("exponent must be +1 or -1, got {e}")))
    }
}

/// Symbolic operator: primitives combined by sums, compositions and powers.
///
/// `Compose(vec![a, b, c])` is `a b c`, so `c` acts first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OperatorExpr {
    Prim(PrimitiveOp),
    Sum(Vec<OperatorExpr>),
    Compose(Vec<OperatorExpr>),
    Power(Box<OperatorExpr>, u32),
}

impl From<PrimitiveOp> for OperatorExpr {
    fn from(p: PrimitiveOp) -> Self {
        OperatorExpr::Prim(p)
    }
}

impl OperatorExpr {
    pub fn identity() -> Self {
        Self::scalar(ScalarQ::one())
    }

    pub fn zero() -> Self {
        OperatorExpr::Sum(Vec::new())
    }

    pub fn scalar(c: ScalarQ) -> Self {
        OperatorExpr::Prim(PrimitiveOp::ScalarMul(c))
    }

    pub fn compose<I: IntoIterator<Item = OperatorExpr>>(factors: I) -> Self {
        let mut out = Vec::new();
        for f in factors {
            match f {
                OperatorExpr::Compose(inner) => out.extend(inner),
                other => out.push(other),
            }
        }
        if out.len() == 1 {
            return out.pop().unwrap();
        }
        OperatorExpr::Compose(out)
    }

    pub fn sum<I: IntoIterator<Item = OperatorExpr>>(terms: I) -> Self {
        let mut out = Vec::new();
        for t in terms {
            match t {
                OperatorExpr::Sum(inner) => out.extend(inner),
                other => out.push(other),
            }
        }
        if out.len() == 1 {
            return out.pop().unwrap();
        }
        OperatorExpr::Sum(out)
    }

    pub fn scaled(self, c: ScalarQ) -> Self {
        if c.is_one() {
            return self;
        }
        Self::compose([Self::scalar(c), self])
    }

    pub fn neg(self) -> Self {
        self.scaled(ScalarQ::from_int(-1))
    }

    pub fn minus(self, other: OperatorExpr) -> Self {
        Self::sum([self, other.neg()])
    }

    pub fn pow(self, k: u32) -> Self {
        match k {
            0 => Self::identity(),
            1 => self,
            _ => OperatorExpr::Power(Box::new(self), k),
        }
    }

    /// Degree shift on homogeneous inputs; every summand must agree.
    pub fn degree_shift(&self) -> Result<i64> {
        match self {
            OperatorExpr::Prim(p) => Ok(p.degree_shift()),
            OperatorExpr::Sum(ts) => {
                let mut shift: Option<i64> = None;
                for t in ts {
                    let s = t.degree_shift()?;
                    match shift {
                        Some(prev) if prev != s => {
                            return Err(Error::DegreeShiftMismatch { left: prev, right: s })
                        }
                        _ => shift = Some(s),
                    }
                }
                Ok(shift.unwrap_or(0))
            }
            OperatorExpr::Compose(fs) => fs.iter().map(|f| f.degree_shift()).sum(),
            OperatorExpr::Power(a, k) => Ok(a.degree_shift()? * *k as i64),
        }
    }

    /// Checks every index against the dimension.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self {
            OperatorExpr::Prim(p) => p.validate(n),
            OperatorExpr::Sum(v) | OperatorExpr::Compose(v) => v.iter().try_for_each(|t| t.validate(n)),
            OperatorExpr::Power(a, _) => a.validate(n),
        }
    }

    /// The generator family used by blade factors, if any.
    pub fn deformation(&self) -> Result<Option<Deformation>> {
        match self {
            OperatorExpr::Prim(PrimitiveOp::MulBladeLeft(b, d))
            | OperatorExpr::Prim(PrimitiveOp::MulBladeRight(b, d)) => {
                Ok(if b.is_empty() { None } else { Some(*d) })
            }
            OperatorExpr::Prim(_) => Ok(None),
            OperatorExpr::Sum(v) | OperatorExpr::Compose(v) => {
                let mut acc = None;
                for t in v {
                    acc = join_deformation(acc, t.deformation()?)?;
                }
                Ok(acc)
            }
            OperatorExpr::Power(a, _) => a.deformation(),
        }
    }

    /// Exact action; `Compose` applies its rightmost factor first.
    pub fn apply(&self, p: &CliffordPolynomial) -> Result<CliffordPolynomial> {
        self.validate(p.dim())?;
        self.apply_unchecked(p)
    }

    fn apply_unchecked(&self, p: &CliffordPolynomial) -> Result<CliffordPolynomial> {
        match self {
            OperatorExpr::Prim(op) => op.apply(p),
            OperatorExpr::Sum(ts) => {
                let mut acc = CliffordPolynomial::zero(p.dim(), p.deformation());
                for t in ts {
                    acc = acc.add(&t.apply_unchecked(p)?)?;
                }
                Ok(acc)
            }
            OperatorExpr::Compose(fs) => {
                let mut cur = p.clone();
                for f in fs.iter().rev() {
                    if cur.is_zero() {
                        // keep the family information flowing
                        let d = join_deformation(cur.deformation(), f.deformation()?)?;
                        cur.set_deformation(d);
                        continue;
                    }
                    cur = f.apply_unchecked(&cur)?;
                }
                Ok(cur)
            }
            OperatorExpr::Power(a, k) => {
                let mut cur = p.clone();
                for _ in 0..*k {
                    cur = a.apply_unchecked(&cur)?;
                }
                Ok(cur)
            }
        }
    }

    /// `a b - b a`.
    pub fn commutator(a: &OperatorExpr, b: &OperatorExpr) -> OperatorExpr {
        Self::compose([a.clone(), b.clone()]).minus(Self::compose([b.clone(), a.clone()]))
    }

    /// `a b + b a`.
    pub fn anticommutator(a: &OperatorExpr, b: &OperatorExpr) -> OperatorExpr {
        Self::sum([Self::compose([a.clone(), b.clone()]), Self::compose([b.clone(), a.clone()])])
    }

    /// `{c a}_q = (c a - c^-1 a_inv)/(q - q^-1)` for an invertible operator
    /// `a` with inverse `a_inv`.
    pub fn q_brace(c: &ScalarQ, a: OperatorExpr, a_inv: OperatorExpr) -> Result<OperatorExpr> {
        let denom = (&ScalarQ::q() - &ScalarQ::q_pow(-1)).inv()?;
        let ci = c.inv()?;
        Ok(Self::sum([a.scaled(c * &denom), a_inv.scaled(-&(&ci * &denom))]))
    }

    fn precedence(&self) -> u8 {
        match self {
            OperatorExpr::Sum(v) if v.len() != 1 => 0,
            OperatorExpr::Compose(_) => 1,
            OperatorExpr::Prim(PrimitiveOp::ScalarMul(c)) if !c.is_atomic() => 0,
            OperatorExpr::Prim(PrimitiveOp::ScalarMul(_)) | OperatorExpr::Power(..) => 2,
            _ => 3,
        }
    }

    fn fmt_at(&self, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = self.precedence() < min;
        if wrap {
            f.write_str("(")?;
        }
        match self {
            OperatorExpr::Prim(p) => write!(f, "{p}")?,
            OperatorExpr::Sum(v) if v.is_empty() => f.write_str("0")?,
            OperatorExpr::Sum(v) => {
                for (k, t) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" + ")?;
                    }
                    t.fmt_at(1, f)?;
                }
            }
            OperatorExpr::Compose(v) => {
                for (k, t) in v.iter().enumerate() {
                    if k > 0 {
                        f.write_str("*")?;
                    }
                    t.fmt_at(2, f)?;
                }
            }
            OperatorExpr::Power(a, k) => {
                a.fmt_at(3, f)?;
                write!(f, "^{k}")?;
            }
        }
        if wrap {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for PrimitiveOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blade = |b: &Blade| {
            b.indices()
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            PrimitiveOp::Gamma(i, 1) => write!(f, "g({i})"),
            PrimitiveOp::Gamma(i, e) => write!(f, "g({i},{e})"),
            PrimitiveOp::Omega(i, 1) => write!(f, "w({i})"),
            PrimitiveOp::Omega(i, e) => write!(f, "w({i},{e})"),
            PrimitiveOp::GammaAll(1) => f.write_str("gamma"),
            PrimitiveOp::GammaAll(e) => write!(f, "gamma({e})"),
            PrimitiveOp::DiffR(i) => write!(f, "dR({i})"),
            PrimitiveOp::DiffL(i) => write!(f, "dL({i})"),
            PrimitiveOp::MulVarL(i) => write!(f, "xL({i})"),
            PrimitiveOp::MulVarR(i) => write!(f, "xR({i})"),
            PrimitiveOp::MulBladeLeft(b, Deformation::Plus) => write!(f, "e({})", blade(b)),
            PrimitiveOp::MulBladeLeft(b, Deformation::Minus) => write!(f, "ep({})", blade(b)),
            PrimitiveOp::MulBladeRight(b, Deformation::Plus) => write!(f, "eR({})", blade(b)),
            PrimitiveOp::MulBladeRight(b, Deformation::Minus) => write!(f, "epR({})", blade(b)),
            PrimitiveOp::ScalarMul(c) if c.is_one() => f.write_str("id"),
            PrimitiveOp::ScalarMul(c) => write!(f, "{}", c.to_text()),
        }
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(0, f)
    }
}
