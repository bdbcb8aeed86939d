use itertools::Itertools;

use super::is_resolving;
use crate::error::{Error, Result};
use crate::pis::DistanceMatrix;

pub const BRUTE_FORCE_LIMIT: usize = 14;

/// Minimum resolving set by plain subset enumeration in size order.
///
/// Test oracle only; refuses graphs with more than [`BRUTE_FORCE_LIMIT`] vertices.
pub fn metric_dimension_bruteforce(dist: &DistanceMatrix) -> Result<(usize, Vec<usize>)> {
    let n = dist.len();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge(n, BRUTE_FORCE_LIMIT));
    }
    for k in 0..=n {
        if let Some(set) = (0..n).combinations(k).find(|s| is_resolving(dist, s)) {
            return Ok((k, set));
        }
    }
    unreachable!("the full vertex set always resolves")
}
