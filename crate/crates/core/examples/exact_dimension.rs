//! Exact metric dimension with the branch and bound, next to its lower bounds.
//!
//! cargo run --release --example exact_dimension -- "[3,3,3,3]" 60

use std::time::Duration;

use pisdim::metric::{metric_dimension_exact, SolverConfig, TwinPartition};
use pisdim::pis::PisGraph;

fn main() -> pisdim::Result<()> {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "[3,3,3]".into());
    let budget = args.next().and_then(|s| s.parse().ok()).unwrap_or(60);
    let pis = PisGraph::build(&text.parse()?)?;
    let graph = pis.graph();

    let twins = TwinPartition::compute(graph);
    println!(
        "{} twin classes over {} vertices",
        twins.class_count(),
        graph.len()
    );

    let config = SolverConfig::with_budget(Duration::from_secs(budget));
    let report = metric_dimension_exact(graph, &config)?;
    println!(
        "dim = {} ({}), twin bound {}, info bound {}, {} nodes in {:?}",
        report.size(),
        report.status.as_str(),
        report.bounds.twin,
        report.bounds.info,
        report.nodes,
        report.elapsed
    );
    println!("{}", report.to_json(graph));
    Ok(())
}
