//! The Dirac operator squares to minus the Laplacian; the vector variable
//! squares to minus the multiplication by Q.

use qdirac::ops::named::{dirac_r, laplacian_r, qhat_l, vector_var};
use qdirac::ops::{to_matrix, OperatorExpr, ValueSpace, VectorSide};
use qdirac::qclifford::Deformation;
use qdirac::Result;

fn main() -> Result<()> {
    let cl = ValueSpace::Clifford(Deformation::Plus);
    for n in 1..=3 {
        let d = dirac_r(n);
        let lhs = OperatorExpr::sum([OperatorExpr::compose([d.clone(), d]), laplacian_r(n)]);
        let x = vector_var(VectorSide::Left, n);
        let rhs = OperatorExpr::sum([OperatorExpr::compose([x.clone(), x]), qhat_l(n)]);
        for k in 0..=3 {
            let a = to_matrix(&lhs, k, n, ValueSpace::Scalar)?;
            let b = to_matrix(&rhs, k, n, ValueSpace::Scalar)?;
            println!(
                "n={n} k={k}: D^2 + Lap = 0: {}, x^2 + Qhat = 0: {}",
                a.matrix.is_zero(),
                b.matrix.is_zero()
            );
        }
    }
    let ker = to_matrix(&dirac_r(2), 1, 2, cl)?;
    println!("dim ker D on P_1(Cl), n=2: {}", ker.matrix.cols() - ker.rank());
    Ok(())
}
