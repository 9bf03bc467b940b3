//! q-commuting variables: normal ordering, the Q-radius and the powers z_q^m.

use qdirac::qpoly::{normal_order, q_radius, zq_power, QPolynomial};
use qdirac::Result;

fn main() -> Result<()> {
    // x2 x1 = q^-1 x1 x2
    let (c, m) = normal_order(2, &[2, 1])?;
    println!("x2*x1 = ({c})*{m}");

    let x1 = QPolynomial::var(3, 1)?;
    let x3 = QPolynomial::var(3, 3)?;
    println!("x3*x1 = {}", x3.mul(&x1)?);
    println!("(x1 + x3)^2 = {}", x1.add(&x3)?.pow(2)?);

    println!("Q (n = 3) = {}", q_radius(3));
    println!("z_q^3 = {}", zq_power(3, false));
    println!("conj z_q^3 = {}", zq_power(3, true));
    Ok(())
}
