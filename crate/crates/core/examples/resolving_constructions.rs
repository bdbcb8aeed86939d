//! Closed forms and constructed resolving sets, with the representation
//! table `D(v|W)` of every vertex.
//!
//! cargo run --example resolving_constructions -- "Z4 x Z4 x Z4"

use pisdim::constructions::{construct_resolving, formula_metric_dim};
use pisdim::metric::is_resolving;
use pisdim::pis::PisGraph;
use pisdim::ring::RingSpec;

fn main() -> pisdim::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "Z4 x Z4 x Z4".into());
    let spec: RingSpec = text.parse()?;
    let formula = formula_metric_dim(&spec)?;
    println!(
        "{spec}: dim = {} by {} ({})",
        formula.value, formula.theorem, formula.hypothesis
    );

    let construction = construct_resolving(&spec)?;
    let pis = PisGraph::build(&spec)?;
    let landmarks = pis.indices_of(&construction.set)?;
    let dist = pis.graph().distances();
    let names: Vec<String> = construction.set.iter().map(|a| spec.label(a)).collect();
    println!("W = {{{}}}", names.join(", "));
    for (v, ideal) in pis.vertices().iter().enumerate() {
        println!(
            "  D({}|W) = {:?}",
            spec.label(ideal),
            dist.representation(v, &landmarks)
        );
    }
    println!("resolving: {}", is_resolving(&dist, &landmarks));
    Ok(())
}
