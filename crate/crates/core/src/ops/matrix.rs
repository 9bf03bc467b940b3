use std::collections::HashMap;

use rayon::prelude::*;

use super::OperatorExpr;
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::qclifford::{Blade, CliffordPolynomial, Deformation};
use crate::qpoly::{monomials_of_degree, QMonomial};
use crate::scalars::ScalarQ;

/// Whether a graded component holds scalar or Clifford-valued polynomials.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum ValueSpace {
    Scalar,
    Clifford(Deformation),
}

impl ValueSpace {
    pub fn deformation(self) -> Option<Deformation> {
        match self {
            ValueSpace::Scalar => None,
            ValueSpace::Clifford(d) => Some(d),
        }
    }

    pub fn from_deformation(d: Option<Deformation>) -> Self {
        d.map_or(ValueSpace::Scalar, ValueSpace::Clifford)
    }

    /// The smaller space containing both, if they are compatible.
    pub fn join(self, other: ValueSpace) -> Result<ValueSpace> {
        match (self, other) {
            (ValueSpace::Clifford(a), ValueSpace::Clifford(b)) if a != b => Err(Error::DeformationMismatch),
            (ValueSpace::Clifford(a), _) | (_, ValueSpace::Clifford(a)) => Ok(ValueSpace::Clifford(a)),
            _ => Ok(ValueSpace::Scalar),
        }
    }

    pub fn blades(self, n: usize) -> Vec<Blade> {
        match self {
            ValueSpace::Scalar => vec![Blade::EMPTY],
            ValueSpace::Clifford(_) => Blade::all(n),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ValueSpace::Scalar => "scalar",
            ValueSpace::Clifford(Deformation::Plus) => "clifford(e)",
            ValueSpace::Clifford(Deformation::Minus) => "clifford(ep)",
        }
    }
}

/// Ordered monomial-blade basis of a graded component, monomial-major.
pub fn graded_basis(n: usize, k: i64, space: ValueSpace) -> Vec<(QMonomial, Blade)> {
    if k < 0 {
        return Vec::new();
    }
    let blades = space.blades(n);
    monomials_of_degree(n, k as u32)
        .into_iter()
        .flat_map(|m| blades.iter().map(move |b| (m.clone(), *b)))
        .collect()
}

/// Coordinates of a polynomial in a basis; fails if a term lies outside it.
pub fn coordinates(p: &CliffordPolynomial, basis: &[(QMonomial, Blade)]) -> Result<Vec<ScalarQ>> {
    let index: HashMap<&(QMonomial, Blade), usize> = basis.iter().enumerate().map(|(k, b)| (b, k)).collect();
    let mut v = vec![ScalarQ::zero(); basis.len()];
    for (key, c) in p.terms() {
        let k = index
            .get(key)
            .ok_or_else(|| Error::Inconsistent(format!("term {} outside the target basis", key.0)))?;
        v[*k] = c.clone();
    }
    Ok(v)
}

/// Polynomial with the given coordinates.
pub fn from_coordinates(
    n: usize,
    space: ValueSpace,
    basis: &[(QMonomial, Blade)],
    v: &[ScalarQ],
) -> CliffordPolynomial {
    let mut p = CliffordPolynomial::zero(n, space.deformation());
    for ((m, b), c) in basis.iter().zip(v) {
        p.push_term(m.clone(), *b, c.clone());
    }
    p
}

/// Exact matrix of an operator between two graded components.
#[derive(Clone, Debug)]
pub struct GradedMatrix {
    pub n: usize,
    pub source_degree: i64,
    pub target_degree: i64,
    pub source_space: ValueSpace,
    pub target_space: ValueSpace,
    pub source: Vec<(QMonomial, Blade)>,
    pub target: Vec<(QMonomial, Blade)>,
    pub matrix: ExactMatrix,
}

impl GradedMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Kernel basis as polynomials of the source component.
    pub fn kernel_polys(&self) -> Vec<CliffordPolynomial> {
        self.matrix
            .kernel()
            .iter()
            .map(|v| from_coordinates(self.n, self.source_space, &self.source, v))
            .collect()
    }
}

/// Matrix of `op` on the degree-`k` component of `source_space`; the target
/// space is the smallest one holding every image.
pub fn to_matrix(op: &OperatorExpr, k: i64, n: usize, source_space: ValueSpace) -> Result<GradedMatrix> {
    let target_space = source_space.join(ValueSpace::from_deformation(op.deformation()?))?;
    to_matrix_in(op, k, n, source_space, target_space)
}

/// As [`to_matrix`] with an explicit target space.
pub fn to_matrix_in(
    op: &OperatorExpr,
    k: i64,
    n: usize,
    source_space: ValueSpace,
    target_space: ValueSpace,
) -> Result<GradedMatrix> {
    op.validate(n)?;
    let shift = op.degree_shift()?;
    let source = graded_basis(n, k, source_space);
    let target = graded_basis(n, k + shift, target_space);
    let columns: Result<Vec<Vec<ScalarQ>>> = source
        .par_iter()
        .map(|(m, b)| {
            let p = CliffordPolynomial::term(m.clone(), *b, ScalarQ::one(), source_space.deformation())?;
            let image = op.apply(&p)?;
            coordinates(&image, &target)
        })
        .collect();
    let matrix = ExactMatrix::from_columns(target.len(), columns?);
    Ok(GradedMatrix {
        n,
        source_degree: k,
        target_degree: k + shift,
        source_space,
        target_space,
        source,
        target,
        matrix,
    })
}
