//! The Fischer inner product, its two evaluations and operator adjoints.

use qdirac::expr::parse_poly;
use qdirac::fischer::{adjoint_check, fischer_inner, fischer_inner_operational, fischer_orthogonality_check};
use qdirac::ops::named::{d_l, d_r, laplacian_r, qhat_l, x_l, x_r};
use qdirac::ops::ValueSpace;
use qdirac::{Result, ScalarQ};

fn main() -> Result<()> {
    let a = parse_poly("x1^2*x2 + s*x2^3", 2)?;
    let b = parse_poly("x1^2*x2 - i*x1*x2^2", 2)?;
    let closed = fischer_inner(&a, &b, 3)?;
    let oper = fischer_inner_operational(&a, &b, 3)?;
    println!("<a, b> = {}", closed.scalar_value);
    println!("closed form = operational form: {}", closed == oper);
    println!("<a, a> = {}", fischer_inner(&a, &a, 3)?.scalar_value);

    let n = 2;
    let checks = [
        ("(x1^R)+ = d1^L", x_r(1), d_l(1)),
        ("(x1^L)+ = d1^R", x_l(1), d_r(1)),
        ("Lap^R+ = q^(n-1) Qhat^L", laplacian_r(n), qhat_l(n).scaled(ScalarQ::q_pow(n as i64 - 1))),
    ];
    for (label, op, adj) in checks {
        let r = adjoint_check(&op, &adj, 2, n, ValueSpace::Scalar)?;
        println!("{label}: {} ({} pairs)", r.pass, r.pairs_checked);
    }

    let o = fischer_orthogonality_check(2, 2)?;
    println!("M_2 orthogonal to LxQ P_1: {}", o.orthogonal);
    if let Some(c) = o.constant() {
        println!("<LxQ R, P> = c <R, D P> with c = {c}");
    }
    Ok(())
}
