//! Parsing, lowering and rendering in text, LaTeX and JSON.

use qdirac::expr::{parse_value, Format};
use qdirac::Result;

fn main() -> Result<()> {
    for (src, n) in [
        ("x1*x2 - q*x2*x1", 2),
        ("x2*x1", 2),
        ("e[1]*e[1]", 2),
        ("[3]*x1^2 + (1/[2])*x1*e[1,2]", 2),
        ("Lap_R", 2),
        ("s*e(1)*dR(1) + e(2)*dR(2)", 2),
    ] {
        let v = parse_value(src, n)?;
        println!("{src}");
        for f in [Format::Text, Format::Latex, Format::Json] {
            println!("  {}", v.render(f));
        }
    }
    match parse_value("x1*(", 2) {
        Err(e) => println!("x1*( -> {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
