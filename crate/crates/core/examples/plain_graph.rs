//! Solve an arbitrary graph given in the JSON exchange format (no ring).
//!
//! cargo run --example plain_graph -- graph.json

use pisdim::metric::{metric_dimension_bruteforce, metric_dimension_exact, SolverConfig};
use pisdim::pis::import_graph_json;

// the Petersen graph
const PETERSEN: &str = r#"{
  "vertices": ["o0","o1","o2","o3","o4","i0","i1","i2","i3","i4"],
  "edges": [[0,1],[1,2],[2,3],[3,4],[4,0],[0,5],[1,6],[2,7],[3,8],[4,9],
            [5,7],[7,9],[9,6],[6,8],[8,5]]
}"#;

fn main() -> pisdim::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => PETERSEN.to_string(),
    };
    let imported = import_graph_json(&text)?;
    let graph = imported.graph;
    let report = metric_dimension_exact(&graph, &SolverConfig::default())?;
    println!("{}", report.to_json(&graph));
    if let Ok((size, set)) = metric_dimension_bruteforce(&graph.distances()) {
        println!(
            "brute force agrees: {} (first basis {set:?})",
            size == report.size()
        );
    }
    Ok(())
}
