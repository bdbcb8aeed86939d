//! Small mixed products (every group below size four): the mixed construction
//! still resolves, but is not always minimum.

use pisdim::constructions::{construct_mixed_unchecked, mixed_formula_unchecked};
use pisdim::metric::{is_resolving, metric_dimension_exact, SolverConfig};
use pisdim::pis::PisGraph;
use pisdim::verify::Family;

fn main() -> pisdim::Result<()> {
    println!(
        "{:<16} {:>5} {:>7} {:>6} {:>9}",
        "ring", "V", "naive", "exact", "resolves"
    );
    let family = Family::Mixed { max_group: 2 };
    for spec in family.specs() {
        if spec.vertex_count() > 200 {
            continue;
        }
        let pis = PisGraph::build(&spec)?;
        let set = pis.indices_of(&construct_mixed_unchecked(&spec))?;
        let resolves = is_resolving(&pis.graph().distances(), &set);
        let exact = metric_dimension_exact(pis.graph(), &SolverConfig::default())?;
        println!(
            "{:<16} {:>5} {:>7} {:>6} {:>9}",
            spec.to_string(),
            spec.vertex_count(),
            mixed_formula_unchecked(&spec),
            exact.size(),
            resolves
        );
    }
    Ok(())
}
