//! The q-Fischer inner product and the harmonic and monogenic Fischer
//! decompositions.
//!
//! The inner product of two homogeneous degree-`k` polynomials is
//! `sum_alpha [alpha]! q^(sum_{i<j} alpha_i alpha_j) conj(a1_alpha) a2_alpha`
//! where `a_alpha` is the Clifford coefficient of `x^alpha`. It is antilinear
//! in the first argument. Decompositions solve exact linear systems on the
//! image side, so they only rely on the direct-sum property.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Solver;
use crate::ops::named::{d_r, dirac_r, laplacian_r, qhat_l, vector_var};
use crate::ops::{coordinates, from_coordinates, graded_basis, to_matrix, GradedMatrix, OperatorExpr, ValueSpace, VectorSide};
use crate::qclifford::{Blade, CliffordElement, CliffordPolynomial, Deformation};
use crate::qpoly::{dim_homogeneous, QMonomial, QPolynomial};
use crate::scalars::{qfactorial, ScalarQ};

const CL: ValueSpace = ValueSpace::Clifford(Deformation::Plus);

/// Full Clifford value of the pairing together with its scalar part.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FischerValue {
    pub clifford_value: CliffordElement,
    pub scalar_value: ScalarQ,
}

fn check_inputs(p1: &CliffordPolynomial, p2: &CliffordPolynomial, k: u32) -> Result<()> {
    if p1.dim() != p2.dim() {
        return Err(Error::DimensionMismatch {
            left: p1.dim(),
            right: p2.dim(),
        });
    }
    for p in [p1, p2] {
        if p.deformation() == Some(Deformation::Minus) {
            return Err(Error::DeformationMismatch);
        }
        match p.homogeneous_degree() {
            None if !p.is_zero() => return Err(Error::NotHomogeneous),
            Some(d) if d != k => {
                return Err(Error::DegreeMismatch {
                    expected: k as usize,
                    found: d as usize,
                })
            }
            _ => {}
        }
    }
    Ok(())
}

/// Clifford coefficient of every monomial.
fn coefficients(p: &CliffordPolynomial) -> HashMap<QMonomial, CliffordElement> {
    let mut out: HashMap<QMonomial, CliffordElement> = HashMap::new();
    for ((m, b), c) in p.terms() {
        let e = CliffordElement::blade(p.dim(), Deformation::Plus, *b, c.clone());
        let slot = out
            .entry(m.clone())
            .or_insert_with(|| CliffordElement::zero(p.dim(), Deformation::Plus));
        *slot = slot.add(&e).expect("same algebra");
    }
    out
}

fn value(e: CliffordElement) -> FischerValue {
    let scalar_value = e.scalar_part();
    FischerValue {
        clifford_value: e,
        scalar_value,
    }
}

/// Closed form of the Fischer product.
pub fn fischer_inner(p1: &CliffordPolynomial, p2: &CliffordPolynomial, k: u32) -> Result<FischerValue> {
    check_inputs(p1, p2, k)?;
    let n = p1.dim();
    let a2 = coefficients(p2);
    let mut total = CliffordElement::zero(n, Deformation::Plus);
    for (m, a1) in coefficients(p1) {
        if let Some(b) = a2.get(&m) {
            let w = &qfactorial(m.exps()) * &ScalarQ::q_pow(m.cross_sum());
            total = total.add(&a1.conjugate().mul(b)?.scale(&w))?;
        }
    }
    Ok(value(total))
}

/// Operational form: for each term `c x^alpha e_A` of `p1`, apply
/// `(d_n^R)^alpha_n ... (d_1^R)^alpha_1` to `p2`, evaluate at `x = 0` and
/// multiply on the left by `conj(c e_A)`.
pub fn fischer_inner_operational(p1: &CliffordPolynomial, p2: &CliffordPolynomial, k: u32) -> Result<FischerValue> {
    check_inputs(p1, p2, k)?;
    let n = p1.dim();
    let p2 = p2.with_deformation(Deformation::Plus)?;
    let mut total = CliffordElement::zero(n, Deformation::Plus);
    let mut cache: HashMap<QMonomial, CliffordElement> = HashMap::new();
    for ((m, b), c) in p1.terms() {
        if !cache.contains_key(m) {
            let op = OperatorExpr::compose((1..=n).rev().map(|i| d_r(i).pow(m.exp(i))));
            cache.insert(m.clone(), op.apply(&p2)?.constant_part());
        }
        let left = CliffordElement::blade(n, Deformation::Plus, *b, c.clone()).conjugate();
        total = total.add(&left.mul(&cache[m])?)?;
    }
    Ok(value(total))
}

/// Outcome of an adjointness check.
#[derive(Clone, Debug, Serialize)]
pub struct AdjointReport {
    pub pass: bool,
    pub pairs_checked: usize,
    /// First failing pair `(P1, P2)` in text form.
    pub counterexample: Option<(String, String)>,
}

/// Checks `<candidate P1, P2> = <P1, op P2>` for all basis pairs with `P2`
/// of degree `k` and `P1` of degree `k + shift(op)`.
pub fn adjoint_check(op: &OperatorExpr, candidate: &OperatorExpr, k: u32, n: usize, space: ValueSpace) -> Result<AdjointReport> {
    let d = op.degree_shift()?;
    let dc = candidate.degree_shift()?;
    if d != -dc {
        return Err(Error::DegreeShiftMismatch { left: d, right: -dc });
    }
    let k1 = k as i64 + d;
    let b1 = graded_basis(n, k1, space);
    let b2 = graded_basis(n, k as i64, space);
    let poly = |(m, b): &(QMonomial, Blade)| CliffordPolynomial::term(m.clone(), *b, ScalarQ::one(), space.deformation());
    let op_images: Vec<CliffordPolynomial> = b2.iter().map(|e| op.apply(&poly(e)?)).collect::<Result<_>>()?;
    let mut pairs = 0;
    for e1 in &b1 {
        let p1 = poly(e1)?;
        let c1 = candidate.apply(&p1)?;
        for (e2, img) in b2.iter().zip(&op_images) {
            let p2 = poly(e2)?;
            let lhs = fischer_inner(&c1, &p2, k)?.scalar_value;
            let rhs = fischer_inner(&p1, img, k1.max(0) as u32)?.scalar_value;
            pairs += 1;
            if lhs != rhs {
                return Ok(AdjointReport {
                    pass: false,
                    pairs_checked: pairs,
                    counterexample: Some((p1.to_text(), p2.to_text())),
                });
            }
        }
    }
    Ok(AdjointReport {
        pass: true,
        pairs_checked: pairs,
        counterexample: None,
    })
}

/// One summand of a Fischer tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    /// Power of `Q` (harmonic) or of the vector variable (monogenic).
    pub level: usize,
    pub component: CliffordPolynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionKind {
    Harmonic,
    Monogenic,
}

#[derive(Clone, Debug)]
pub struct DecompositionResult {
    pub kind: DecompositionKind,
    pub degree: u32,
    pub levels: Vec<Level>,
    pub reconstruction: CliffordPolynomial,
    pub verified: bool,
}

impl Serialize for DecompositionResult {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct L<'a> {
            #[serde(rename = "s")]
            level: usize,
            poly: &'a CliffordPolynomial,
        }
        #[derive(Serialize)]
        struct H<'a> {
            j: usize,
            poly: &'a CliffordPolynomial,
        }
        let mut st = ser.serialize_struct("DecompositionResult", 4)?;
        match self.kind {
            DecompositionKind::Harmonic => {
                st.serialize_field("type", "harmonic")?;
                st.serialize_field("m", &self.degree)?;
                let v: Vec<H> = self.levels.iter().map(|l| H { j: l.level, poly: &l.component }).collect();
                st.serialize_field("levels", &v)?;
            }
            DecompositionKind::Monogenic => {
                st.serialize_field("type", "monogenic")?;
                st.serialize_field("k", &self.degree)?;
                let v: Vec<L> = self.levels.iter().map(|l| L { level: l.level, poly: &l.component }).collect();
                st.serialize_field("levels", &v)?;
            }
        }
        st.serialize_field("verified", &self.verified)?;
        st.end()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum SystemKind {
    Harmonic,
    Monogenic,
}

type Key = (SystemKind, usize, i64);

/// A system matrix with its eliminations.
struct System {
    matrix: GradedMatrix,
    solver: Solver,
}

/// Matrices of `Lap Qhat` and `D ^Lxvec`, shared across calls.
fn system_matrix(kind: SystemKind, n: usize, k: i64) -> Result<Arc<System>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<System>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.lock().expect("cache lock").get(&(kind, n, k)) {
        return Ok(m.clone());
    }
    let m = match kind {
        SystemKind::Harmonic => to_matrix(&OperatorExpr::compose([laplacian_r(n), qhat_l(n)]), k, n, ValueSpace::Scalar)?,
        SystemKind::Monogenic => to_matrix(
            &OperatorExpr::compose([dirac_r(n), vector_var(VectorSide::LeftInPlus, n)]),
            k,
            n,
            CL,
        )?,
    };
    let solver = m.matrix.solver();
    let m = Arc::new(System { matrix: m, solver });
    cache.lock().expect("cache lock").insert((kind, n, k), m.clone());
    Ok(m)
}

fn homogeneous(p: &CliffordPolynomial, k: u32) -> Result<()> {
    match p.homogeneous_degree() {
        None if !p.is_zero() => Err(Error::NotHomogeneous),
        Some(d) if d != k => Err(Error::DegreeMismatch {
            expected: k as usize,
            found: d as usize,
        }),
        _ => Ok(()),
    }
}

/// `P_m = sum_j Q^j H_(m-2j)`: splits `p = h + Q r` with `h` harmonic and
/// recurses on `r`.
pub fn harmonic_decompose(p: &QPolynomial, m: u32) -> Result<DecompositionResult> {
    let n = p.dim();
    let input = CliffordPolynomial::from_qpoly(p);
    homogeneous(&input, m)?;
    let lap = laplacian_r(n);
    let qop = qhat_l(n);
    let mut levels = Vec::new();
    let mut cur = input.clone();
    let mut deg = m as i64;
    let mut j = 0;
    while deg >= 0 {
        if deg < 2 {
            levels.push(Level { level: j, component: cur });
            break;
        }
        let sys = system_matrix(SystemKind::Harmonic, n, deg - 2)?;
        let rhs = coordinates(&lap.apply(&cur)?, &sys.matrix.target)?;
        let r = from_coordinates(n, ValueSpace::Scalar, &sys.matrix.source, &sys.solver.solve(&rhs)?);
        let h = cur.sub(&qop.apply(&r)?)?;
        levels.push(Level { level: j, component: h });
        cur = r;
        deg -= 2;
        j += 1;
    }
    finish(DecompositionKind::Harmonic, m, levels, &input, &lap, &qop)
}

/// `P_k = sum_s (^Lxvec)^s M_(k-s)`: splits `P = M + ^Lxvec R` with `M`
/// right monogenic and recurses on `R`.
pub fn monogenic_decompose(p: &CliffordPolynomial, k: u32) -> Result<DecompositionResult> {
    let n = p.dim();
    let input = p.with_deformation(Deformation::Plus)?;
    homogeneous(&input, k)?;
    let dirac = dirac_r(n);
    let xvec = vector_var(VectorSide::LeftInPlus, n);
    let mut levels = Vec::new();
    let mut cur = input.clone();
    let mut deg = k as i64;
    let mut s = 0;
    loop {
        if deg == 0 {
            levels.push(Level { level: s, component: cur });
            break;
        }
        let sys = system_matrix(SystemKind::Monogenic, n, deg - 1)?;
        let rhs = coordinates(&dirac.apply(&cur)?, &sys.matrix.target)?;
        let r = from_coordinates(n, CL, &sys.matrix.source, &sys.solver.solve(&rhs)?);
        let mono = cur.sub(&xvec.apply(&r)?)?;
        levels.push(Level { level: s, component: mono });
        cur = r;
        deg -= 1;
        s += 1;
    }
    finish(DecompositionKind::Monogenic, k, levels, &input, &dirac, &xvec)
}

/// Rebuilds `sum_l raise^l(component_l)` and checks every component is in
/// the kernel of `null`.
fn finish(
    kind: DecompositionKind,
    degree: u32,
    levels: Vec<Level>,
    input: &CliffordPolynomial,
    null: &OperatorExpr,
    raise: &OperatorExpr,
) -> Result<DecompositionResult> {
    let mut reconstruction = CliffordPolynomial::zero(input.dim(), input.deformation());
    let mut in_kernel = true;
    for l in &levels {
        in_kernel &= null.apply(&l.component)?.is_zero();
        let lifted = raise.clone().pow(l.level as u32).apply(&l.component)?;
        reconstruction = reconstruction.add(&lifted)?;
    }
    let verified = in_kernel && reconstruction.sub(input)?.is_zero();
    if !verified {
        return Err(Error::Inconsistent(format!(
            "{kind:?} decomposition failed verification (kernel membership {in_kernel})"
        )));
    }
    Ok(DecompositionResult {
        kind,
        degree,
        levels,
        reconstruction,
        verified,
    })
}

/// Orthogonality of `ker D^R` against `^Lxvec P_(k-1)`, and the measured
/// constant in `<^Lxvec R, P> = c <R, D^R P>`.
#[derive(Clone, Debug)]
pub struct OrthogonalityReport {
    pub n: usize,
    pub k: u32,
    pub orthogonal: bool,
    pub pairs_checked: usize,
    /// Distinct ratios `<^Lxvec R, P> / <R, D^R P>` over basis pairs with
    /// a nonzero denominator.
    pub constants: Vec<ScalarQ>,
    /// Basis pairs where the left side is nonzero but the right side vanishes.
    pub unmatched: usize,
}

impl OrthogonalityReport {
    /// The constant when every basis pair gives the same ratio.
    pub fn constant(&self) -> Option<&ScalarQ> {
        match (self.constants.as_slice(), self.unmatched) {
            ([c], 0) => Some(c),
            _ => None,
        }
    }
}

pub fn fischer_orthogonality_check(k: u32, n: usize) -> Result<OrthogonalityReport> {
    if k == 0 {
        return Err(Error::DegreeMismatch { expected: 1, found: 0 });
    }
    let dirac = dirac_r(n);
    let xvec = vector_var(VectorSide::LeftInPlus, n);
    let kernel = to_matrix(&dirac, k as i64, n, CL)?.kernel_polys();
    let lower = graded_basis(n, k as i64 - 1, CL);
    let upper = graded_basis(n, k as i64, CL);
    let term = |(m, b): &(QMonomial, Blade)| CliffordPolynomial::term(m.clone(), *b, ScalarQ::one(), Some(Deformation::Plus));
    let images: Vec<CliffordPolynomial> = lower.iter().map(|e| xvec.apply(&term(e)?)).collect::<Result<_>>()?;
    let bad = kernel
        .par_iter()
        .map(|mono| -> Result<usize> {
            let mut bad = 0;
            for img in &images {
                if !fischer_inner(img, mono, k)?.scalar_value.is_zero() {
                    bad += 1;
                }
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum::<usize>();
    let dirac_images: Vec<CliffordPolynomial> = upper.iter().map(|e| dirac.apply(&term(e)?)).collect::<Result<_>>()?;
    let mut constants: Vec<ScalarQ> = Vec::new();
    let mut unmatched = 0;
    for (e_r, img_r) in lower.iter().zip(&images) {
        let r = term(e_r)?;
        for (e_p, dp) in upper.iter().zip(&dirac_images) {
            let a = fischer_inner(img_r, &term(e_p)?, k)?.scalar_value;
            let b = fischer_inner(&r, dp, k - 1)?.scalar_value;
            if b.is_zero() {
                unmatched += usize::from(!a.is_zero());
            } else {
                let c = a.checked_div(&b)?;
                if !constants.contains(&c) {
                    constants.push(c);
                }
            }
        }
    }
    Ok(OrthogonalityReport {
        n,
        k,
        orthogonal: bad == 0,
        pairs_checked: kernel.len() * images.len(),
        constants,
        unmatched,
    })
}

/// Dimension bookkeeping for one degree.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Dims {
    pub n: usize,
    pub k: u32,
    pub dim_p: usize,
    /// Kernel dimension of the Laplacian on `P_k`.
    pub dim_h: usize,
    /// `dim P_k - dim P_(k-2)`.
    pub dim_h_expected: usize,
    /// Kernel dimension of the Dirac operator on `P_k(Cl)`, if computed.
    pub dim_m: Option<usize>,
    /// `(dim P_k - dim P_(k-1)) 2^n`.
    pub dim_m_expected: usize,
}

pub fn dims(n: usize, k: u32, with_clifford: bool) -> Result<Dims> {
    let dp = dim_homogeneous(n, k as i64);
    let lap = to_matrix(&laplacian_r(n), k as i64, n, ValueSpace::Scalar)?;
    let dim_h = lap.matrix.cols() - lap.rank();
    let dim_m = if with_clifford {
        let d = to_matrix(&dirac_r(n), k as i64, n, CL)?;
        Some(d.matrix.cols() - d.rank())
    } else {
        None
    };
    Ok(Dims {
        n,
        k,
        dim_p: dp,
        dim_h,
        dim_h_expected: dp - dim_homogeneous(n, k as i64 - 2),
        dim_m,
        dim_m_expected: (dp - dim_homogeneous(n, k as i64 - 1)) << n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::named::{d_l, gamma, x_r};
    use crate::qpoly::{monomials_of_degree, q_radius};
    use crate::scalars::qnum;

    fn mono(exps: &[u32]) -> CliffordPolynomial {
        CliffordPolynomial::term(QMonomial::new(exps.to_vec()), Blade::EMPTY, ScalarQ::one(), None).unwrap()
    }

    #[test]
    fn monomial_pairing() {
        assert_eq!(fischer_inner(&mono(&[1, 1]), &mono(&[1, 1]), 2).unwrap().scalar_value, ScalarQ::q());
        for n in 1..=3 {
            for k in 0..=3 {
                let ms = monomials_of_degree(n, k);
                for a in &ms {
                    for b in &ms {
                        let (pa, pb) = (mono(a.exps()), mono(b.exps()));
                        let closed = fischer_inner(&pa, &pb, k).unwrap();
                        let oper = fischer_inner_operational(&pa, &pb, k).unwrap();
                        assert_eq!(closed, oper);
                        let expected = if a == b {
                            &qfactorial(a.exps()) * &ScalarQ::q_pow(a.cross_sum())
                        } else {
                            ScalarQ::zero()
                        };
                        assert_eq!(closed.scalar_value, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn clifford_basis_pairs_agree() {
        let basis = graded_basis(2, 2, CL);
        for (m1, b1) in &basis {
            let p1 = CliffordPolynomial::term(m1.clone(), *b1, ScalarQ::i() + ScalarQ::s(), Some(Deformation::Plus)).unwrap();
            for (m2, b2) in &basis {
                let p2 = CliffordPolynomial::term(m2.clone(), *b2, ScalarQ::q(), Some(Deformation::Plus)).unwrap();
                assert_eq!(fischer_inner(&p1, &p2, 2).unwrap(), fischer_inner_operational(&p1, &p2, 2).unwrap());
            }
        }
    }

    #[test]
    fn degree_errors() {
        assert!(matches!(
            fischer_inner(&mono(&[1, 0]), &mono(&[1, 1]), 1),
            Err(Error::DegreeMismatch { .. })
        ));
        let mixed = mono(&[1, 0]).add(&mono(&[0, 0])).unwrap();
        assert!(matches!(fischer_inner(&mixed, &mixed, 1), Err(Error::NotHomogeneous)));
    }

    #[test]
    fn adjoints() {
        for i in 1..=2 {
            let r = adjoint_check(&d_l(i), &x_r(i), 2, 2, ValueSpace::Scalar).unwrap();
            assert!(r.pass, "{r:?}");
            assert!(adjoint_check(&gamma(i, 1), &gamma(i, 1), 2, 2, ValueSpace::Scalar).unwrap().pass);
        }
        let n = 3;
        let cand = qhat_l(n).scaled(ScalarQ::q_pow(n as i64 - 1));
        assert!(adjoint_check(&laplacian_r(n), &cand, 3, n, ValueSpace::Scalar).unwrap().pass);
        let wrong = qhat_l(n);
        let r = adjoint_check(&laplacian_r(n), &wrong, 3, n, ValueSpace::Scalar).unwrap();
        assert!(!r.pass && r.counterexample.is_some());
    }

    #[test]
    fn harmonic_tower_of_last_square() {
        let p = QPolynomial::monomial(QMonomial::new(vec![0, 0, 2]), ScalarQ::one());
        let d = harmonic_decompose(&p, 2).unwrap();
        assert_eq!(d.levels.len(), 2);
        let inv3 = qnum(3).inv().unwrap();
        let h = CliffordPolynomial::from_qpoly(&p.sub(&q_radius(3).scale(&inv3)).unwrap());
        assert_eq!(d.levels[0].component, h);
        assert_eq!(d.levels[1].component, CliffordPolynomial::from_qpoly(&QPolynomial::constant(3, inv3)));

        let d = harmonic_decompose(&q_radius(2), 2).unwrap();
        assert!(d.levels[0].component.is_zero());
        assert_eq!(d.levels[1].component, CliffordPolynomial::from_qpoly(&QPolynomial::one(2)));
    }

    #[test]
    fn monogenic_tower_of_vector_variable() {
        let one = CliffordPolynomial::from_qpoly(&QPolynomial::one(2));
        let p = vector_var(VectorSide::LeftInPlus, 2).apply(&one).unwrap();
        let d = monogenic_decompose(&p, 1).unwrap();
        assert!(d.levels[0].component.is_zero());
        assert_eq!(d.levels[1].component.to_text(), "1");
        assert!(d.verified);
    }

    #[test]
    fn orthogonality_and_constant() {
        for n in 2..=3 {
            let r = fischer_orthogonality_check(2, n).unwrap();
            assert!(r.orthogonal);
            let expected = -ScalarQ::s_pow(-(n as i64 - 1));
            assert_eq!(r.constant(), Some(&expected));
        }
    }

    #[test]
    fn dimension_counts() {
        let d = dims(2, 1, true).unwrap();
        assert_eq!(d.dim_m, Some(4));
        assert_eq!(d.dim_m_expected, 4);
        for m in 1..=4 {
            assert_eq!(dims(2, m, false).unwrap().dim_h, 2);
        }
    }
}
