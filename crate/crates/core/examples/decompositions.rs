//! Harmonic and monogenic Fischer decompositions and dimension counts.

use qdirac::expr::parse_poly;
use qdirac::fischer::{dims, harmonic_decompose, monogenic_decompose};
use qdirac::Result;

fn main() -> Result<()> {
    let p = parse_poly("x3^2", 3)?.to_qpoly().expect("scalar");
    let h = harmonic_decompose(&p, 2)?;
    for l in &h.levels {
        println!("Q^{} * ({})", l.level, l.component);
    }

    let c = parse_poly("x1*x2*e[1] + x2^2*e[1,2]", 2)?;
    let m = monogenic_decompose(&c, 2)?;
    println!("monogenic levels: {}, verified: {}", m.levels.len(), m.verified);
    println!("{}", serde_json::to_string_pretty(&m).expect("serializable"));

    for k in 0..=3 {
        let d = dims(2, k, true)?;
        println!(
            "n=2 k={k}: dim H = {} (expected {}), dim M = {:?} (expected {})",
            d.dim_h, d.dim_h_expected, d.dim_m, d.dim_m_expected
        );
    }
    Ok(())
}
