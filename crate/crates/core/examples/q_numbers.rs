//! q-numbers, q-factorials and numeric specialization.

use qdirac::{qbrace, qfactorial, qnum, qnum_half, GaussRat, Result, ScalarQ};

fn main() -> Result<()> {
    for m in 0..=4 {
        println!("[{m}]_q = {}", qnum(m));
    }
    println!("[1/2]_q = {}", qnum_half());
    println!("[(2,1)]! = {}", qfactorial(&[2, 1]));
    println!("{{q^2}}_q = {}", qbrace(&ScalarQ::q_pow(2))?);

    let three = qnum(3);
    println!("[3] at s = 2: {}", three.eval_at(&GaussRat::from_int(2))?);
    println!("[3] at q = 2: {}", three.eval_at_q(&GaussRat::from_int(2))?);
    println!("latex: {}", three.to_latex());
    Ok(())
}
