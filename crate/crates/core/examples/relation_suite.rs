//! Runs part of the relation suite and prints the report table.

use qdirac::verifier::{run_suite, SuiteConfig};
use qdirac::Result;

fn main() -> Result<()> {
    let config = SuiteConfig {
        n_max: 3,
        k_max: 3,
        pairs: 50,
        seed: 7,
        ..SuiteConfig::default()
    };
    let names: Vec<String> = ["weyl-L", "weyl-R", "product-rule-1", "dirac-square-R"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let report = run_suite(&names, &config)?;
    print!("{}", report.to_text());
    println!("all as expected: {}", report.all_ok());
    Ok(())
}
