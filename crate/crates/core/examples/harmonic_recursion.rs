//! Raising and lowering harmonic polynomials by one degree.

use qdirac::ops::named::laplacian_r;
use qdirac::ops::{harmonic_lower, harmonic_raise, to_matrix, ValueSpace};
use qdirac::qclifford::CliffordPolynomial;
use qdirac::Result;

fn main() -> Result<()> {
    let n = 3;
    let m = 2;
    let kernel = to_matrix(&laplacian_r(n), m, n, ValueSpace::Scalar)?.kernel_polys();
    println!("dim H_{m} (n = {n}) = {}", kernel.len());
    // a harmonic polynomial that involves the last variable
    let h = kernel
        .iter()
        .filter_map(|p| p.to_qpoly())
        .find(|p| p.terms().any(|(m, _)| m.exp(n) > 0))
        .expect("kernel reaches x3");
    let up = harmonic_raise(&h, m as u32)?;
    let down = harmonic_lower(&h, m as u32)?;
    let lap = laplacian_r(n);
    println!("h = {h}");
    println!("raised = {up}");
    println!("Lap raised = {}", lap.apply(&CliffordPolynomial::from_qpoly(&up))?);
    println!("lowered = {down}");
    println!("Lap lowered = {}", lap.apply(&CliffordPolynomial::from_qpoly(&down))?);
    Ok(())
}
