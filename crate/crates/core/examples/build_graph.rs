//! Build the graph of a ring and print it as DOT and as JSON.
//!
//! cargo run --example build_graph -- "GF(2) x GF(2) x GF(2)"

use pisdim::pis::PisGraph;

fn main() -> pisdim::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "GF(2) x GF(2) x GF(2)".into());
    let pis = PisGraph::build(&text.parse()?)?;
    let graph = pis.graph();
    let dist = graph.distances();
    println!(
        "{} vertices, {} edges, diameter {:?}",
        graph.len(),
        graph.edge_count(),
        dist.diameter()
    );
    print!("{}", pis.to_dot());
    println!("{}", pis.to_json());

    // two fields give a disconnected graph, which is refused
    match PisGraph::build(&"GF(2) x GF(3)".parse()?) {
        Err(e) => println!("GF(2) x GF(3): {}", e.name()),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
