//! Z4 x Z2 and Z4 x Z2 x Z2 sit outside the mixed-product formula: evaluated
//! anyway it overshoots the true dimension by one.

use pisdim::constructions::{formula_metric_dim, mixed_formula_unchecked};
use pisdim::verify::{emit_report, run_counterexamples, ReportFormat, VerifyOptions};

fn main() -> pisdim::Result<()> {
    for text in ["Z4 x Z2", "Z4 x Z2 x Z2"] {
        let spec = text.parse()?;
        let refused = formula_metric_dim(&spec).unwrap_err();
        println!(
            "{text}: {} / unchecked formula {}",
            refused.name(),
            mixed_formula_unchecked(&spec)
        );
    }
    let rows = run_counterexamples(&VerifyOptions::default());
    print!("{}", emit_report(&rows, ReportFormat::Csv)?);
    Ok(())
}
