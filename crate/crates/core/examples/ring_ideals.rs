//! Parse a ring, list its ideals and pick out the primes.
//!
//! cargo run --example ring_ideals -- "Z8 x Z3"

use pisdim::ring::RingSpec;

fn main() -> pisdim::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "Z8 x Z3".into());
    let spec: RingSpec = text.parse()?;
    println!("{text} -> ideal counts {spec}");
    println!(
        "{} ideals, {} of them nontrivial",
        spec.total_ideals(),
        spec.vertex_count()
    );
    for ideal in spec.ideals(false) {
        let mut tags = Vec::new();
        if !spec.is_vertex(&ideal) {
            tags.push("trivial");
        }
        if spec.is_prime(&ideal) {
            tags.push("maximal");
        }
        if spec.in_jacobson(&ideal) {
            tags.push("in J(R)");
        }
        println!(
            "  {:?} {:<14} {}",
            ideal.indices(),
            spec.label(&ideal),
            tags.join(", ")
        );
    }
    let a = spec.unit_except(0, 0);
    let b = spec.jacobson();
    println!(
        "{} + {} = {}",
        spec.label(&a),
        spec.label(&b),
        spec.label(&a.sum(&b)?)
    );
    Ok(())
}
