//! Dense exact matrices over `ScalarQ` with rank, kernel and solve.
//!
//! Operator matrices in the monomial basis are very sparse and usually split
//! into many independent blocks (each operator preserves a multi-degree
//! pattern), so elimination first separates the connected components of the
//! row/column incidence graph and reduces each block on its own, fraction
//! free over Gaussian integer Laurent polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalars::{GaussRat, LaurentPoly, ScalarQ, ZPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ScalarQ>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![ScalarQ::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ScalarQ::one());
        }
        m
    }

    /// Builds from columns of equal length.
    pub fn from_columns(rows: usize, columns: Vec<Vec<ScalarQ>>) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.into_iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (r, v) in col.into_iter().enumerate() {
                m.data[r * m.cols + c] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &ScalarQ {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ScalarQ) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<ScalarQ> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(ScalarQ::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|v| !v.is_zero()).count()
    }

    fn same_shape(&self, o: &Self) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::DimensionMismatch {
                left: self.rows * self.cols,
                right: o.rows * o.cols,
            });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.same_shape(o)?;
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &ScalarQ) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: o.rows,
            });
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + &(a * b);
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[ScalarQ]) -> Result<Vec<ScalarQ>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| !self.get(r, c).is_zero() && !v[c].is_zero())
                    .map(|c| self.get(r, c) * &v[c])
                    .sum()
            })
            .collect())
    }

    /// First entry where the two matrices differ.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, usize)> {
        if self.rows != o.rows || self.cols != o.cols {
            return Some((0, 0));
        }
        (0..self.rows * self.cols)
            .find(|&k| self.data[k] != o.data[k])
            .map(|k| (k / self.cols, k % self.cols))
    }

    pub fn eval_at(&self, s: &GaussRat) -> Result<Vec<Vec<GaussRat>>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c).eval_at(s)).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.blocks().iter().map(|b| self.reduce_block(b, &[]).pivots.len()).sum()
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<ScalarQ>> {
        let mut basis = Vec::new();
        for b in self.blocks() {
            let red = self.reduce_block(&b, &[]);
            let pivot_cols: Vec<usize> = red.pivots.iter().map(|p| p.1).collect();
            for (lc, &gc) in b.cols.iter().enumerate() {
                if pivot_cols.contains(&lc) {
                    continue;
                }
                let mut v = vec![ScalarQ::zero(); self.cols];
                v[gc] = ScalarQ::one();
                for &(pr, pc) in &red.pivots {
                    let entry = &red.m[pr][lc];
                    if !entry.is_zero() {
                        v[b.cols[pc]] = -ScalarQ::ratio(entry.to_laurent(), red.det.to_laurent()).expect("nonzero pivot");
                    }
                }
                basis.push(v);
            }
        }
        basis
    }

    /// One solution of `A x = rhs` (free variables set to zero).
    pub fn solve(&self, rhs: &[ScalarQ]) -> Result<Vec<ScalarQ>> {
        self.check_rhs(rhs)?;
        let mut x = vec![ScalarQ::zero(); self.cols];
        for b in self.blocks() {
            let aug: Vec<ScalarQ> = b.rows.iter().map(|&r| rhs[r].clone()).collect();
            if aug.iter().all(ScalarQ::is_zero) {
                continue;
            }
            if b.cols.is_empty() {
                return Err(outside_image());
            }
            let red = self.reduce_block(&b, &[aug]);
            let used: Vec<usize> = red.pivots.iter().map(|p| p.0).collect();
            for (r, v) in red.aug.iter().enumerate() {
                if !used.contains(&r) && !v[0].is_zero() {
                    return Err(outside_image());
                }
            }
            for &(pr, pc) in &red.pivots {
                x[b.cols[pc]] = ScalarQ::ratio(red.aug[pr][0].to_laurent(), red.det.to_laurent())?;
            }
        }
        Ok(x)
    }

    /// Eliminates every block once so that many right-hand sides can be
    /// solved cheaply.
    pub fn solver(&self) -> Solver {
        let blocks = self
            .blocks()
            .into_iter()
            .map(|b| {
                let k = b.rows.len();
                let identity: Vec<Vec<ScalarQ>> = (0..k)
                    .map(|j| (0..k).map(|r| if r == j { ScalarQ::one() } else { ScalarQ::zero() }).collect())
                    .collect();
                let red = self.reduce_block(&b, &identity);
                let det = ScalarQ::from_laurent(red.det.to_laurent()).inv().expect("nonzero determinant");
                let transform = red
                    .aug
                    .iter()
                    .map(|row| row.iter().map(|v| ScalarQ::from_laurent(v.to_laurent())).collect())
                    .collect();
                SolverBlock {
                    rows: b.rows,
                    cols: b.cols,
                    transform,
                    pivots: red.pivots,
                    det_inv: det,
                }
            })
            .collect();
        Solver {
            rows: self.rows,
            cols: self.cols,
            blocks,
        }
    }

    fn check_rhs(&self, rhs: &[ScalarQ]) -> Result<()> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                left: self.rows,
                right: rhs.len(),
            });
        }
        Ok(())
    }

    /// Connected components of the bipartite row/column incidence graph.
    fn blocks(&self) -> Vec<Block> {
        let total = self.rows + self.cols;
        let mut parent: Vec<usize> = (0..total).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.get(r, c).is_zero() {
                    let (a, b) = (find(&mut parent, r), find(&mut parent, self.rows + c));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let mut index = vec![usize::MAX; total];
        let mut blocks: Vec<Block> = Vec::new();
        for v in 0..total {
            let root = find(&mut parent, v);
            if index[root] == usize::MAX {
                index[root] = blocks.len();
                blocks.push(Block::default());
            }
            let b = &mut blocks[index[root]];
            if v < self.rows {
                b.rows.push(v);
            } else {
                b.cols.push(v - self.rows);
            }
        }
        blocks
    }

    /// Fraction-free Gauss-Jordan (Bareiss) elimination of one block.
    ///
    /// Rows are first scaled to polynomials with Gaussian integer
    /// coefficients. Every update `a <- (p a - f a_pivot) / p_prev` divides
    /// exactly, so no gcd is ever taken; at the end every pivot entry equals
    /// `det`. Extra columns follow the same row operations.
    fn reduce_block(&self, b: &Block, extra: &[Vec<ScalarQ>]) -> Reduced {
        let width = b.cols.len() + extra.len();
        let mut m: Vec<Vec<ZPoly>> = Vec::with_capacity(b.rows.len());
        for (lr, &r) in b.rows.iter().enumerate() {
            let mut entries: Vec<&ScalarQ> = b.cols.iter().map(|&c| self.get(r, c)).collect();
            entries.extend(extra.iter().map(|col| &col[lr]));
            let den = entries
                .iter()
                .filter(|v| !v.is_zero())
                .fold(LaurentPoly::one(), |acc, v| acc.lcm(v.denominator()));
            let lifted: Vec<LaurentPoly> = entries
                .iter()
                .map(|v| {
                    if v.is_zero() {
                        LaurentPoly::zero()
                    } else {
                        v.numerator() * &den.exact_div(v.denominator()).expect("lcm divides")
                    }
                })
                .collect();
            let scale = lifted
                .iter()
                .flat_map(|p| p.terms().flat_map(|(_, c)| [c.re.denom().clone(), c.im.denom().clone()]))
                .fold(BigInt::one(), |acc, d| acc.lcm(&d));
            m.push(lifted.iter().map(|p| ZPoly::from_laurent(p, &scale)).collect());
        }
        let mut prev = ZPoly::one();
        let mut pivots = Vec::new();
        let mut done = vec![false; m.len()];
        for c in 0..b.cols.len() {
            let pick = (0..m.len())
                .filter(|&r| !done[r] && !m[r][c].is_zero())
                .min_by_key(|&r| (m[r][c].term_count(), m[r][c].span()));
            let Some(pr) = pick else { continue };
            done[pr] = true;
            let pivot_row = m[pr].clone();
            let p = &pivot_row[c];
            for r in 0..m.len() {
                if r == pr {
                    continue;
                }
                let f = m[r][c].clone();
                for k in 0..width {
                    let mut v = p.mul(&m[r][k]);
                    if !f.is_zero() && !pivot_row[k].is_zero() {
                        v = v.sub(&f.mul(&pivot_row[k]));
                    }
                    m[r][k] = if prev.is_one() {
                        v
                    } else {
                        v.exact_div(&prev).expect("Bareiss division is exact")
                    };
                }
            }
            prev = p.clone();
            pivots.push((pr, c));
        }
        let aug = m.iter_mut().map(|row| row.split_off(b.cols.len())).collect();
        Reduced { m, aug, pivots, det: prev }
    }
}

fn outside_image() -> Error {
    Error::SingularSystem("right-hand side outside the image".into())
}

/// Precomputed block eliminations of one matrix.
#[derive(Clone, Debug)]
pub struct Solver {
    rows: usize,
    cols: usize,
    blocks: Vec<SolverBlock>,
}

#[derive(Clone, Debug)]
struct SolverBlock {
    rows: Vec<usize>,
    cols: Vec<usize>,
    /// Row operations `T` with `T A = det R`, `R` reduced.
    transform: Vec<Vec<ScalarQ>>,
    pivots: Vec<(usize, usize)>,
    det_inv: ScalarQ,
}

impl Solver {
    /// One solution of `A x = rhs` (free variables set to zero).
    pub fn solve(&self, rhs: &[ScalarQ]) -> Result<Vec<ScalarQ>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch {
                left: self.rows,
                right: rhs.len(),
            });
        }
        let mut x = vec![ScalarQ::zero(); self.cols];
        for b in &self.blocks {
            let local: Vec<&ScalarQ> = b.rows.iter().map(|&r| &rhs[r]).collect();
            if local.iter().all(|v| v.is_zero()) {
                continue;
            }
            let image: Vec<ScalarQ> = b
                .transform
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&local)
                        .filter(|(t, v)| !t.is_zero() && !v.is_zero())
                        .map(|(t, v)| t * *v)
                        .sum()
                })
                .collect();
            let used: Vec<usize> = b.pivots.iter().map(|p| p.0).collect();
            if image.iter().enumerate().any(|(r, v)| !used.contains(&r) && !v.is_zero()) {
                return Err(outside_image());
            }
            for &(pr, pc) in &b.pivots {
                x[b.cols[pc]] = &image[pr] * &b.det_inv;
            }
        }
        Ok(x)
    }
}

#[derive(Default)]
struct Block {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

struct Reduced {
    m: Vec<Vec<ZPoly>>,
    /// Extra columns after elimination, row by row.
    aug: Vec<Vec<ZPoly>>,
    /// (local row, local column)
    pivots: Vec<(usize, usize)>,
    /// Common value of all pivot entries after elimination.
    det: ZPoly,
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_text()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ScalarQ {
        ScalarQ::from_int(v)
    }

    #[test]
    fn rank_and_kernel() {
        // [[1, q], [q^-1, 1]] has rank 1
        let m = ExactMatrix::from_columns(2, vec![vec![int(1), ScalarQ::q_pow(-1)], vec![ScalarQ::q(), int(1)]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).unwrap().iter().all(ScalarQ::is_zero));
    }

    #[test]
    fn solve_with_blocks() {
        let mut m = ExactMatrix::zeros(3, 3);
        m.set(0, 0, ScalarQ::s());
        m.set(1, 1, int(2));
        m.set(1, 2, int(1));
        m.set(2, 2, ScalarQ::q());
        let rhs = vec![int(1), int(3), ScalarQ::q()];
        let x = m.solve(&rhs).unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), rhs);
        let mut z = ExactMatrix::zeros(2, 1);
        z.set(0, 0, int(1));
        assert!(z.solve(&[int(0), int(1)]).is_err());
        assert!(z.solver().solve(&[int(0), int(1)]).is_err());
    }

    #[test]
    fn solver_matches_solve() {
        // rank 2 with rational entries and a dependent row
        let mut m = ExactMatrix::zeros(3, 3);
        let half = ScalarQ::ratio(LaurentPoly::one(), (&ScalarQ::q() + &int(1)).numerator().clone()).unwrap();
        m.set(0, 0, half.clone());
        m.set(0, 1, ScalarQ::s());
        m.set(1, 1, int(3));
        m.set(1, 2, ScalarQ::q());
        m.set(2, 0, &half * &int(2));
        m.set(2, 1, &(&ScalarQ::s() * &int(2)) + &int(3));
        m.set(2, 2, ScalarQ::q());
        let solver = m.solver();
        for x in [vec![int(1), int(0), int(2)], vec![ScalarQ::s(), half.clone(), ScalarQ::i()]] {
            let rhs = m.mul_vec(&x).unwrap();
            let a = m.solve(&rhs).unwrap();
            assert_eq!(m.mul_vec(&a).unwrap(), rhs);
            assert_eq!(solver.solve(&rhs).unwrap(), a);
        }
        assert!(solver.solve(&[int(1), int(0), int(0)]).is_err());
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel().len(), 1);
        assert!(m.mul_vec(&m.kernel()[0]).unwrap().iter().all(ScalarQ::is_zero));
    }

    #[test]
    fn identity_product() {
        let i = ExactMatrix::identity(3);
        assert_eq!(i.mul(&i).unwrap(), i);
        assert_eq!(i.rank(), 3);
        assert!(i.kernel().is_empty());
    }
}
