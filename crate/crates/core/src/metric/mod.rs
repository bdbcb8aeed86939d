//! Metric dimension: lower bounds, resolving-set checks and exact solvers.

mod brute;
mod solver;
mod twins;

use std::collections::HashMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};

pub use brute::{metric_dimension_bruteforce, BRUTE_FORCE_LIMIT};
pub use solver::{metric_dimension_exact, SolverConfig};
pub use twins::{TwinKind, TwinPartition};

use crate::pis::{DistanceMatrix, Graph};

/// Smallest `k` with `k + D^k >= n`.
///
/// Outside a landmark set of size `k`, every representation lies in
/// `{1..D}^k`, so a resolving set needs at least this many vertices.
pub fn info_lower_bound(vertex_count: usize, diameter: u8) -> usize {
    let base = u128::from(diameter.max(1));
    let n = vertex_count as u128;
    (0..)
        .find(|&k: &usize| {
            let reach = base.checked_pow(k as u32).unwrap_or(u128::MAX);
            (k as u128).saturating_add(reach) >= n
        })
        .expect("k = n always satisfies the bound")
}

/// Returns one pair of vertices that `landmarks` fails to tell apart, if any.
///
/// Landmarks themselves are always resolved by their zero coordinate, so only
/// non-landmark vertices are compared.
pub fn unresolved_pair(dist: &DistanceMatrix, landmarks: &[usize]) -> Option<(usize, usize)> {
    let mut is_landmark = vec![false; dist.len()];
    for &w in landmarks {
        is_landmark[w] = true;
    }
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
    for v in (0..dist.len()).filter(|&v| !is_landmark[v]) {
        if let Some(&u) = seen.get(&dist.representation(v, landmarks)) {
            return Some((u, v));
        }
        seen.insert(dist.representation(v, landmarks), v);
    }
    None
}

pub fn is_resolving(dist: &DistanceMatrix, landmarks: &[usize]) -> bool {
    unresolved_pair(dist, landmarks).is_none()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    /// The search finished: the set is a metric basis.
    Exact,
    /// The budget ran out; the set resolves but may not be minimum.
    UpperBound,
    /// The budget ran out before any resolving set was certified.
    InfeasibleBudget,
}

impl SolveStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SolveStatus::Exact => "exact",
            SolveStatus::UpperBound => "upper_bound",
            SolveStatus::InfeasibleBudget => "infeasible_budget",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBounds {
    pub twin: usize,
    pub info: usize,
}

/// Outcome of an exact metric dimension run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvingReport {
    /// Vertex indices in ascending order. Empty for `InfeasibleBudget`.
    pub set: Vec<usize>,
    pub status: SolveStatus,
    pub bounds: LowerBounds,
    pub elapsed: Duration,
    /// Search nodes visited by the branch and bound.
    pub nodes: u64,
}

impl ResolvingReport {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    /// `{"set":[labels],"size":…,"status":…,"bounds":{"twin":…,"info":…},"millis":…}`
    pub fn to_json(&self, graph: &Graph) -> serde_json::Value {
        serde_json::json!({
            "set": self.set.iter().map(|&v| graph.label(v)).collect::<Vec<_>>(),
            "size": self.size(),
            "status": self.status,
            "bounds": self.bounds,
            "millis": self.elapsed.as_millis() as u64,
        })
    }
}
