//! Sweeps over ring families comparing closed forms, constructed sets and the exact solver.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{
    construct_mixed_unchecked, construct_resolving, formula_metric_dim, mixed_formula_unchecked,
    TheoremId,
};
use crate::error::{Error, Result};
use crate::metric::{
    info_lower_bound, is_resolving, metric_dimension_exact, LowerBounds, SolveStatus, SolverConfig,
    TwinPartition,
};
use crate::pis::PisGraph;
use crate::ring::RingSpec;

/// One ring's worth of results. Absent values are `None`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyRow {
    pub spec: RingSpec,
    pub vertices: u64,
    pub diameter: Option<u8>,
    pub formula: Option<u64>,
    pub theorem: Option<TheoremId>,
    pub constructed: Option<usize>,
    pub constructed_resolving: Option<bool>,
    pub exact: Option<usize>,
    /// `exact`, `upper_bound`, `infeasible_budget`, `skipped` or an error name.
    pub exact_status: String,
    pub bounds: Option<LowerBounds>,
    /// Mixed-product formula with its side condition ignored, where it was evaluated.
    pub naive_mixed: Option<i64>,
    pub all_agree: bool,
    pub millis: u64,
    pub note: String,
}

impl VerifyRow {
    fn agree(&self) -> bool {
        let values: Vec<u64> = [
            self.formula,
            self.constructed.map(|c| c as u64),
            self.exact.map(|e| e as u64),
        ]
        .into_iter()
        .flatten()
        .collect();
        values.windows(2).all(|w| w[0] == w[1])
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub solver: SolverConfig,
    /// Rings with more vertices than this skip the exact solver.
    pub exact_cap: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            solver: SolverConfig::default(),
            exact_cap: 100,
        }
    }
}

/// A finite list of rings to sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// Products of `n` fields for each `n` in the range.
    Reduced {
        min: usize,
        max: usize,
    },
    /// Products of `n` rings with a unique nontrivial ideal.
    Three {
        min: usize,
        max: usize,
    },
    /// Every multiset of the given ideal counts with product at most `max_product`.
    Chain {
        values: Vec<u32>,
        max_product: u64,
    },
    /// Products with groups of `c = 4`, `c = 3` and `c = 2` components, each
    /// group of size at most `max_group` and at least two groups present.
    /// These sizes violate the mixed-product side condition; rows are informational.
    Mixed {
        max_group: usize,
    },
    Custom(Vec<RingSpec>),
}

fn parse_range(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::BadParams(format!("expected a range like 3..6, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b
        .trim()
        .trim_start_matches('=')
        .parse()
        .map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn key_values(params: &str) -> Vec<(&str, &str)> {
    params
        .split([';', ' '])
        .filter(|p| !p.is_empty())
        .map(|p| p.split_once('=').unwrap_or(("", p)))
        .collect()
}

impl Family {
    /// Family by name with its default parameters, or parameters parsed from `params`.
    ///
    /// * `reduced`, `three`: `n=3..6` (or just `3..6`)
    /// * `chain`: `values=4,5;max=80`
    /// * `mixed`: `max=2`
    /// * `custom`: ring texts separated by `;`, e.g. `Z4 x Z2; [3,2,2]`
    pub fn parse(name: &str, params: Option<&str>) -> Result<Family> {
        let range = |default: (usize, usize)| -> Result<(usize, usize)> {
            match params {
                None => Ok(default),
                Some(p) => parse_range(p.trim().trim_start_matches("n=")),
            }
        };
        match name {
            "reduced" => {
                let (min, max) = range((3, 6))?;
                Ok(Family::Reduced { min, max })
            }
            "three" => {
                let (min, max) = range((1, 4))?;
                Ok(Family::Three { min, max })
            }
            "chain" => {
                let mut values = vec![4, 5];
                let mut max_product = 80;
                for (k, v) in key_values(params.unwrap_or("")) {
                    match k {
                        "values" => {
                            values = v
                                .split(',')
                                .map(|x| x.trim().parse::<u32>())
                                .collect::<std::result::Result<_, _>>()
                                .map_err(|_| Error::BadParams(format!("bad values `{v}`")))?;
                        }
                        "max" => {
                            max_product = v
                                .parse()
                                .map_err(|_| Error::BadParams(format!("bad max `{v}`")))?;
                        }
                        _ => {
                            return Err(Error::BadParams(format!("unknown chain parameter `{k}`")))
                        }
                    }
                }
                if values.iter().any(|&c| c < 4) {
                    return Err(Error::BadParams("chain values must be at least 4".into()));
                }
                Ok(Family::Chain {
                    values,
                    max_product,
                })
            }
            "mixed" => {
                let mut max_group = 2;
                for (k, v) in key_values(params.unwrap_or("")) {
                    match k {
                        "max" => {
                            max_group = v
                                .parse()
                                .map_err(|_| Error::BadParams(format!("bad max `{v}`")))?
                        }
                        _ => {
                            return Err(Error::BadParams(format!("unknown mixed parameter `{k}`")))
                        }
                    }
                }
                Ok(Family::Mixed { max_group })
            }
            "custom" => {
                let rings = params
                    .ok_or_else(|| Error::BadParams("custom family needs a ring list".into()))?
                    .split(';')
                    .filter(|s| !s.trim().is_empty())
                    .map(RingSpec::from_str)
                    .collect::<Result<Vec<_>>>()?;
                Ok(Family::Custom(rings))
            }
            other => Err(Error::BadParams(format!(
                "unknown family `{other}` (reduced, three, chain, mixed, custom)"
            ))),
        }
    }

    pub fn specs(&self) -> Vec<RingSpec> {
        let uniform = |c: u32, n: usize| RingSpec::from_counts(&vec![c; n]).expect("valid counts");
        match self {
            Family::Reduced { min, max } => (*min..=*max).map(|n| uniform(2, n)).collect(),
            Family::Three { min, max } => (*min..=*max).map(|n| uniform(3, n)).collect(),
            Family::Chain {
                values,
                max_product,
            } => {
                let mut values = values.clone();
                values.sort_unstable();
                values.dedup();
                let mut out = Vec::new();
                let mut stack = vec![(Vec::<u32>::new(), 1u64)];
                while let Some((prefix, product)) = stack.pop() {
                    if !prefix.is_empty() {
                        out.push(prefix.clone());
                    }
                    let start = prefix.last().copied().unwrap_or(0);
                    for &c in values.iter().rev().filter(|&&c| c >= start) {
                        let p = product * u64::from(c);
                        if p <= *max_product {
                            let mut next = prefix.clone();
                            next.push(c);
                            stack.push((next, p));
                        }
                    }
                }
                out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
                out.iter()
                    .map(|c| RingSpec::from_counts(c).expect("valid counts"))
                    .collect()
            }
            Family::Mixed { max_group } => {
                let mut out = Vec::new();
                for big in 0..=*max_group {
                    for three in 0..=*max_group {
                        for field in 0..=*max_group {
                            let present = [big, three, field].iter().filter(|&&s| s > 0).count();
                            if present < 2 {
                                continue;
                            }
                            let mut counts = vec![4; big];
                            counts.extend(std::iter::repeat_n(3, three));
                            counts.extend(std::iter::repeat_n(2, field));
                            out.push(RingSpec::from_counts(&counts).expect("valid counts"));
                        }
                    }
                }
                out
            }
            Family::Custom(specs) => specs.clone(),
        }
    }
}

fn row_for(spec: &RingSpec, opts: &VerifyOptions, unchecked_mixed: bool) -> VerifyRow {
    let start = Instant::now();
    let mut row = VerifyRow {
        spec: spec.clone(),
        vertices: spec.vertex_count(),
        diameter: None,
        formula: None,
        theorem: None,
        constructed: None,
        constructed_resolving: None,
        exact: None,
        exact_status: "skipped".into(),
        bounds: None,
        naive_mixed: None,
        all_agree: false,
        millis: 0,
        note: String::new(),
    };
    let mut notes = Vec::new();
    let finish = |mut row: VerifyRow, notes: Vec<String>| {
        row.all_agree = row.agree();
        row.note = notes.join("; ");
        row.millis = start.elapsed().as_millis() as u64;
        row
    };

    let graph = match PisGraph::build(spec) {
        Ok(g) => g,
        Err(e) => {
            row.exact_status = e.name().into();
            notes.push(e.to_string());
            return finish(row, notes);
        }
    };
    let dist = graph.graph().distances();
    row.diameter = dist.diameter();

    match formula_metric_dim(spec) {
        Ok(f) => {
            row.formula = Some(f.value);
            row.theorem = Some(f.theorem);
        }
        Err(e) => notes.push(e.name().into()),
    }

    let landmarks = if unchecked_mixed {
        let naive = mixed_formula_unchecked(spec) as i64;
        row.naive_mixed = Some(naive);
        notes.push(format!(
            "mixed formula without its side condition gives {naive}"
        ));
        Some(construct_mixed_unchecked(spec))
    } else {
        construct_resolving(spec).ok().map(|c| c.set)
    };
    if let Some(set) = landmarks {
        match graph.indices_of(&set) {
            Ok(idx) => {
                row.constructed = Some(idx.len());
                row.constructed_resolving = Some(is_resolving(&dist, &idx));
            }
            Err(e) => notes.push(e.to_string()),
        }
    }

    if row.vertices <= opts.exact_cap {
        match metric_dimension_exact(graph.graph(), &opts.solver) {
            Ok(r) => {
                row.bounds = Some(r.bounds);
                row.exact_status = r.status.as_str().into();
                if r.status == SolveStatus::Exact {
                    row.exact = Some(r.size());
                } else {
                    notes.push(format!("best found {}", r.size()));
                }
            }
            Err(e) => row.exact_status = e.name().into(),
        }
    } else {
        notes.push(format!("exact solve skipped: |V| > {}", opts.exact_cap));
        if let Some(d) = row.diameter {
            row.bounds = Some(LowerBounds {
                twin: TwinPartition::compute(graph.graph()).lower_bound(),
                info: info_lower_bound(graph.graph().len(), d),
            });
        }
    }
    finish(row, notes)
}

/// One row per ring of the family, in family order.
pub fn run_family(family: &Family, opts: &VerifyOptions) -> Vec<VerifyRow> {
    let unchecked = matches!(family, Family::Mixed { .. });
    family
        .specs()
        .par_iter()
        .map(|s| row_for(s, opts, unchecked))
        .collect()
}

/// `Z4 x Z2` and `Z4 x Z2 x Z2`: outside every closed form, with the mixed
/// formula evaluated anyway for comparison.
pub fn run_counterexamples(opts: &VerifyOptions) -> Vec<VerifyRow> {
    [vec![3, 2], vec![3, 2, 2]]
        .par_iter()
        .map(|c| {
            let spec = RingSpec::from_counts(c).expect("valid counts");
            let mut row = row_for(&spec, opts, false);
            let naive = mixed_formula_unchecked(&spec) as i64;
            row.naive_mixed = Some(naive);
            let extra = format!("mixed formula without its side condition gives {naive}");
            row.note = if row.note.is_empty() {
                extra
            } else {
                format!("{}; {extra}", row.note)
            };
            row
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            other => Err(Error::UnknownFormat(other.into())),
        }
    }
}

pub const CSV_COLUMNS: [&str; 11] = [
    "spec",
    "V",
    "diam",
    "formula",
    "constructed",
    "resolving",
    "exact",
    "twin",
    "info",
    "agree",
    "millis",
];

fn cells(row: &VerifyRow) -> [String; 11] {
    fn opt<T: ToString>(v: Option<T>) -> String {
        v.map(|x| x.to_string()).unwrap_or_default()
    }
    [
        row.spec.to_string(),
        row.vertices.to_string(),
        opt(row.diameter),
        opt(row.formula),
        opt(row.constructed),
        opt(row.constructed_resolving),
        opt(row.exact),
        opt(row.bounds.map(|b| b.twin)),
        opt(row.bounds.map(|b| b.info)),
        row.all_agree.to_string(),
        row.millis.to_string(),
    ]
}

pub fn emit_report(rows: &[VerifyRow], format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_COLUMNS)?;
            for row in rows {
                w.write_record(cells(row))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        ReportFormat::Json => Ok(serde_json::to_string_pretty(rows)? + "\n"),
        ReportFormat::Markdown => {
            let mut out = format!("| {} | note |\n", CSV_COLUMNS.join(" | "));
            out.push_str(&"|---".repeat(CSV_COLUMNS.len() + 1));
            out.push_str("|\n");
            for row in rows {
                let _ = writeln!(out, "| {} | {} |", cells(row).join(" | "), row.note);
            }
            Ok(out)
        }
    }
}

/// Reads rows back from [`ReportFormat::Json`] output.
pub fn parse_json_report(text: &str) -> Result<Vec<VerifyRow>> {
    Ok(serde_json::from_str(text)?)
}
