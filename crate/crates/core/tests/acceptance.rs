//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
//!
//! cargo test --release --test acceptance

use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pisdim::constructions::{
    construct_resolving, formula_metric_dim, mixed_formula_unchecked, TheoremId,
};
use pisdim::metric::{
    info_lower_bound, is_resolving, metric_dimension_bruteforce, metric_dimension_exact,
    SolveStatus, SolverConfig, TwinPartition,
};
use pisdim::pis::{Graph, PisGraph};
use pisdim::ring::{IdealVec, RingSpec};
use pisdim::verify::{run_counterexamples, run_family, Family, VerifyOptions};
use pisdim::Error;

type Outcome = Result<String, String>;
type Check = fn() -> Outcome;

fn spec(counts: &[u32]) -> RingSpec {
    RingSpec::from_counts(counts).unwrap()
}

/// `"m,R,0"` with `0` the zero ideal, `m` the maximal ideal, `R`/`F` the whole component.
fn ideal(spec: &RingSpec, text: &str) -> IdealVec {
    let slots = text
        .split(',')
        .zip(spec.components())
        .map(|(s, c)| match s {
            "0" => 0,
            "m" => c.maximal(),
            "R" | "F" => c.unit(),
            other => panic!("bad slot {other}"),
        })
        .collect();
    IdealVec(slots)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exact(graph: &Graph) -> pisdim::metric::ResolvingReport {
    let report = metric_dimension_exact(graph, &SolverConfig::default()).unwrap();
    assert_eq!(report.status, SolveStatus::Exact);
    report
}

/// Checks `D(v|W)` for the listed vertices against the expected vectors.
fn check_table(
    counts: &[u32],
    landmarks: &[&str],
    table: &[(&str, [u8; 5])],
    width: usize,
) -> Result<usize, String> {
    let s = spec(counts);
    let pis = PisGraph::build(&s).map_err(|e| e.to_string())?;
    let w: Vec<IdealVec> = landmarks.iter().map(|t| ideal(&s, t)).collect();
    let w = pis.indices_of(&w).map_err(|e| e.to_string())?;
    let dist = pis.graph().distances();
    for (v, want) in table {
        let i = pis
            .index_of(&ideal(&s, v))
            .ok_or(format!("{v} is not a vertex"))?;
        let got = dist.representation(i, &w);
        ensure(got == want[..width], || {
            format!("{s}: D({v}|W) = {got:?}, want {:?}", &want[..width])
        })?;
    }
    ensure(is_resolving(&dist, &w), || {
        format!("{s}: W does not resolve")
    })?;
    ensure(
        table.len() + landmarks.len() == pis.vertices().len(),
        || format!("{s}: table does not cover every vertex"),
    )?;
    Ok(table.len())
}

fn three_field_fixture() -> Outcome {
    let s = spec(&[2, 2, 2]);
    let pis = PisGraph::build(&s).map_err(|e| e.to_string())?;
    let named = |t: &str| pis.index_of(&ideal(&s, t)).unwrap();
    let mut want: Vec<(usize, usize)> = [
        ("0,F,F", "0,F,0"),
        ("F,0,0", "0,F,0"),
        ("F,0,0", "0,0,F"),
        ("0,0,F", "0,F,0"),
        ("0,0,F", "0,F,F"),
        ("F,F,0", "F,0,0"),
        ("F,F,0", "0,F,0"),
        ("F,0,F", "0,0,F"),
        ("F,0,F", "F,0,0"),
    ]
    .iter()
    .map(|&(a, b)| {
        let (a, b) = (named(a), named(b));
        (a.min(b), a.max(b))
    })
    .collect();
    want.sort_unstable();
    let got: Vec<_> = pis.graph().edges().collect();
    ensure(got == want, || format!("edges {got:?}, want {want:?}"))?;
    let table = [
        ("0,F,0", [1, 2, 0, 0, 0]),
        ("F,0,0", [2, 1, 0, 0, 0]),
        ("0,0,F", [1, 1, 0, 0, 0]),
        ("F,F,0", [2, 2, 0, 0, 0]),
    ];
    check_table(&[2, 2, 2], &["0,F,F", "F,0,F"], &table, 2)?;
    Ok("9 edges and 4 representation vectors match".into())
}

fn representation_tables() -> Outcome {
    let w = ["0,R,R", "R,0,R", "R,R,0", "R,m,m", "m,m,R"];
    let table = [
        ("m,m,m", [1, 1, 1, 2, 2]),
        ("m,m,0", [1, 1, 2, 2, 2]),
        ("m,0,m", [1, 2, 1, 2, 2]),
        ("0,m,m", [2, 1, 1, 2, 2]),
        ("m,0,0", [1, 2, 2, 2, 2]),
        ("0,m,0", [2, 1, 2, 2, 2]),
        ("0,0,m", [2, 2, 1, 2, 2]),
        ("R,0,0", [2, 2, 2, 2, 1]),
        ("0,R,0", [2, 2, 2, 1, 1]),
        ("0,0,R", [2, 2, 2, 1, 2]),
        ("m,R,R", [1, 2, 2, 2, 1]),
        ("R,m,R", [2, 1, 2, 1, 1]),
        ("R,R,m", [2, 2, 1, 1, 2]),
        ("m,R,m", [1, 2, 1, 1, 1]),
        ("R,m,0", [2, 1, 2, 2, 1]),
        ("R,0,m", [2, 2, 1, 2, 1]),
        ("m,R,0", [1, 2, 2, 1, 1]),
        ("0,R,m", [2, 2, 1, 1, 1]),
        ("0,m,R", [2, 1, 2, 1, 2]),
        ("m,0,R", [1, 2, 2, 1, 2]),
    ];
    let big = check_table(&[3, 3, 3], &w, &table, 5)?;
    let w = ["0,F,F", "R,0,F", "R,F,0"];
    let table = [
        ("m,F,F", [1, 2, 2, 0, 0]),
        ("m,0,F", [1, 1, 2, 0, 0]),
        ("m,F,0", [1, 2, 1, 0, 0]),
        ("m,0,0", [1, 1, 1, 0, 0]),
        ("0,0,F", [2, 1, 2, 0, 0]),
        ("0,F,0", [2, 2, 1, 0, 0]),
        ("R,0,0", [2, 1, 1, 0, 0]),
    ];
    let small = check_table(&[3, 2, 2], &w, &table, 3)?;
    Ok(format!("{big} vectors for [3,3,3], {small} for [3,2,2]"))
}

const REFERENCE_DIMENSIONS: [(&[u32], usize); 10] = [
    (&[2, 2, 2], 2),
    (&[2, 2, 2, 2], 4),
    (&[2, 2, 2, 2, 2], 5),
    (&[3, 3], 3),
    (&[3, 3, 3], 5),
    (&[3, 3, 3, 3], 8),
    (&[4], 1),
    (&[4, 4], 6),
    (&[3, 2], 2),
    (&[3, 2, 2], 3),
];

fn exact_dimensions() -> Outcome {
    let mut slowest = Duration::ZERO;
    for &(counts, want) in &REFERENCE_DIMENSIONS {
        let s = spec(counts);
        let pis = PisGraph::build(&s).map_err(|e| e.to_string())?;
        let report = exact(pis.graph());
        ensure(report.size() == want, || {
            format!("{s}: {} != {want}", report.size())
        })?;
        let limit = if counts == [3, 3, 3, 3] { 600 } else { 10 };
        ensure(report.elapsed < Duration::from_secs(limit), || {
            format!("{s} took {:?}", report.elapsed)
        })?;
        slowest = slowest.max(report.elapsed);
    }
    Ok(format!("10 rings, slowest {slowest:?}"))
}

/// Every covered ring with at most 80 vertices, ideal counts up to 82.
fn covered_specs() -> Vec<RingSpec> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = (2..=82).map(|c| vec![c]).collect();
    while let Some(counts) = stack.pop() {
        let s = spec(&counts);
        if s.vertex_count() > 80 {
            continue;
        }
        if formula_metric_dim(&s).is_ok() {
            out.push(s);
        }
        let last = *counts.last().unwrap();
        for c in last..=82 {
            let mut next = counts.clone();
            next.push(c);
            if next.iter().map(|&x| u64::from(x)).product::<u64>() <= 82 {
                stack.push(next);
            }
        }
    }
    out.sort_by_key(|s| (s.vertex_count(), s.ideal_counts()));
    out
}

fn formula_consistency() -> Outcome {
    let specs = covered_specs();
    let rows = run_family(&Family::Custom(specs.clone()), &VerifyOptions::default());
    for row in &rows {
        let ok = row.all_agree
            && row.exact_status == "exact"
            && row.constructed_resolving == Some(true)
            && row.formula.is_some()
            && row.formula == row.exact.map(|e| e as u64)
            && row.constructed == row.exact;
        ensure(ok, || format!("mismatch on {}: {row:?}", row.spec))?;
    }
    let families: std::collections::HashSet<_> = rows.iter().filter_map(|r| r.theorem).collect();
    ensure(families.len() == 8, || {
        format!("only {} families exercised", families.len())
    })?;
    Ok(format!("{} covered rings, 0 mismatches", rows.len()))
}

fn counterexamples() -> Outcome {
    let rows = run_counterexamples(&VerifyOptions::default());
    let want = [(vec![3, 2], 2, 3), (vec![3, 2, 2], 3, 4)];
    for (row, (counts, dim, naive)) in rows.iter().zip(want) {
        let s = spec(&counts);
        let refused = matches!(formula_metric_dim(&s), Err(Error::NotCovered(_)));
        ensure(refused && row.formula.is_none(), || {
            format!("{s} was not refused")
        })?;
        ensure(row.exact == Some(dim), || {
            format!("{s}: exact {:?}", row.exact)
        })?;
        ensure(
            row.naive_mixed == Some(naive) && mixed_formula_unchecked(&s) == naive as i128,
            || format!("{s}: naive {:?}", row.naive_mixed),
        )?;
    }
    Ok("refused; exact 2 and 3; unchecked mixed formula 3 and 4".into())
}

fn bounds() -> Outcome {
    let mut solved = 0;
    for &(counts, _) in &REFERENCE_DIMENSIONS {
        let pis = PisGraph::build(&spec(counts)).unwrap();
        let r = exact(pis.graph());
        ensure(
            r.bounds.twin <= r.size() && r.bounds.info <= r.size(),
            || format!("{counts:?}: bounds {:?} above {}", r.bounds, r.size()),
        )?;
        solved += 1;
    }
    for s in covered_specs() {
        let r = exact(PisGraph::build(&s).unwrap().graph());
        ensure(
            r.bounds.twin <= r.size() && r.bounds.info <= r.size(),
            || format!("{s}: bounds {:?} above {}", r.bounds, r.size()),
        )?;
        solved += 1;
    }
    let of = |c: &[u32]| exact(PisGraph::build(&spec(c)).unwrap().graph());
    let r = of(&[4, 4]);
    ensure(r.bounds.twin == 6 && r.size() == 6, || {
        format!("[4,4]: {:?}", r.bounds)
    })?;
    for (c, v) in [(&[3u32, 3][..], 3), (&[3, 3, 3][..], 5)] {
        let r = of(c);
        ensure(r.bounds.info == v && r.size() == v, || {
            format!("{c:?}: {:?}", r.bounds)
        })?;
    }
    Ok(format!(
        "{solved} instances; twin([4,4]) = 6, info([3,3]) = 3, info([3,3,3]) = 5"
    ))
}

fn random_connected_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(1..=12);
    let p = rng.gen_range(0.15..0.85);
    // a random spanning tree keeps the graph connected
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    for (u, v) in (0..n).tuple_combinations() {
        if !edges.contains(&(u, v)) && rng.gen_bool(p) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn chain_specs_up_to(max_product: u32) -> Vec<RingSpec> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = (2..=max_product).map(|c| vec![c]).collect();
    while let Some(counts) = stack.pop() {
        if PisGraph::build(&spec(&counts)).is_ok() {
            out.push(spec(&counts));
        }
        for c in *counts.last().unwrap()..=max_product {
            let mut next = counts.clone();
            next.push(c);
            if next.iter().product::<u32>() <= max_product {
                stack.push(next);
            }
        }
    }
    out
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let agree = |g: &Graph| -> Result<(), String> {
        let bb = exact(g);
        let (size, _) = metric_dimension_bruteforce(&g.distances()).map_err(|e| e.to_string())?;
        ensure(
            bb.size() == size && is_resolving(&g.distances(), &bb.set),
            || {
                format!(
                    "branch and bound {} vs brute force {size} on {:?}",
                    bb.size(),
                    g.edges().collect_vec()
                )
            },
        )
    };
    let specs = chain_specs_up_to(14);
    for s in &specs {
        agree(PisGraph::build(s).unwrap().graph())?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..200 {
        agree(&random_connected_graph(&mut rng))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} ring graphs and 200 random graphs, {elapsed:?}",
        specs.len()
    ))
}

fn structural_claims() -> Outcome {
    let mut checked = 0;
    for len in 1..=5 {
        // component order only permutes coordinates, so multisets suffice
        for counts in (2..=5u32).combinations_with_replacement(len) {
            let s = spec(&counts);
            match PisGraph::build(&s) {
                Ok(pis) => {
                    let d = pis.graph().distances().diameter();
                    // a single vertex (one component with c = 3) has diameter 0
                    let ok = match pis.graph().len() {
                        1 => d == Some(0),
                        _ => matches!(d, Some(1 | 2)),
                    };
                    ensure(ok, || format!("{s}: diameter {d:?}"))?;
                    checked += 1;
                }
                Err(Error::DisconnectedRing) if counts == [2, 2] => {}
                Err(Error::EmptyGraph) if counts == [2] => {}
                Err(e) => return Err(format!("{s}: {e}")),
            }
        }
    }
    let refused = matches!(
        PisGraph::build(&spec(&[2, 2])),
        Err(Error::DisconnectedRing)
    );
    ensure(refused, || "[2,2] was not refused".into())?;
    Ok(format!(
        "{checked} rings connected with diameter 1 or 2; [2,2] refused"
    ))
}

fn mixed_out_of_scope() -> Outcome {
    // smallest product meeting the mixed side condition
    let s = spec(&[3, 3, 3, 3, 2, 2, 2, 2]);
    let f = formula_metric_dim(&s).map_err(|e| e.to_string())?;
    ensure(f.theorem == TheoremId::MixedCorollary, || {
        format!("dispatched to {}", f.theorem)
    })?;
    let c = construct_resolving(&s).map_err(|e| e.to_string())?;
    ensure(c.set.len() as u64 == f.value, || {
        "construction size differs".into()
    })?;
    let pis = PisGraph::build(&s).map_err(|e| e.to_string())?;
    let landmarks = pis.indices_of(&c.set).map_err(|e| e.to_string())?;
    let dist = pis.graph().distances();
    ensure(is_resolving(&dist, &landmarks), || {
        "construction does not resolve".into()
    })?;
    let twins = TwinPartition::compute(pis.graph()).lower_bound();
    let info = info_lower_bound(pis.graph().len(), dist.diameter().unwrap_or(0));
    Ok(format!(
        "minimality not checked; {s}: {} vertices, formula {}, construction resolves, lower bounds {twins}/{info}",
        s.vertex_count(),
        f.value
    ))
}

fn main() {
    let criteria: [(&str, Check); 9] = [
        ("three-field graph fixture", three_field_fixture),
        ("representation tables", representation_tables),
        ("exact dimensions", exact_dimensions),
        (
            "formula, construction and solver agree",
            formula_consistency,
        ),
        ("counterexamples to the mixed formula", counterexamples),
        ("lower bounds", bounds),
        ("branch and bound matches brute force", oracle_equivalence),
        ("connectivity and diameter", structural_claims),
        (
            "mixed products at admissible sizes (out of scope)",
            mixed_out_of_scope,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {}: {name} ({detail}) [{ms} ms]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name}: {why} [{ms} ms]", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
