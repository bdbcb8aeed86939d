//! Sweep a ring family and compare formula, construction and exact solver.
//!
//! cargo run --release --example verify_families -- chain "values=4,5;max=40"

use pisdim::verify::{emit_report, run_family, Family, ReportFormat, VerifyOptions};

fn main() -> pisdim::Result<()> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "three".into());
    let params = args.next();
    let family = Family::parse(&name, params.as_deref())?;
    let rows = run_family(&family, &VerifyOptions::default());
    print!("{}", emit_report(&rows, ReportFormat::Markdown)?);
    let bad = rows.iter().filter(|r| !r.all_agree).count();
    println!("{} rings, {bad} disagreements", rows.len());
    Ok(())
}
