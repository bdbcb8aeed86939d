//! Closed-form metric dimensions and explicit resolving sets.
//!
//! Rings fall into the families below, decided by the ideal counts `c` of
//! their components:
//!
//! | family | condition | dimension |
//! |---|---|---|
//! | `reduced_n3` | three fields | 2 |
//! | `reduced_general` | `n >= 4` fields | `n` |
//! | `three_n1` | one `c = 3` component | 0 |
//! | `three_small` | two or three `c = 3` components | `2n - 1` |
//! | `three_general` | `n >= 4` components with `c = 3` | `2n` |
//! | `chain_n1_small` | a single `c = 4` component | 1 |
//! | `chain_c4` | `n >= 2` components with `c = 4` | `4^n - 3^n - 1` |
//! | `chain_general` | every `c >= 4`, otherwise | `|V| - 3^n + 1` |
//! | `mixed_corollary` | groups of sizes `n, m, k` with `c >= 4`, `c = 3`, `c = 2`, each 0 or at least 4, at least two nonzero | `|V| - 3^(n+m) 2^k + 2m + k + 2` |
//!
//! `|V|` is the number of nontrivial ideals. Anything else is not covered.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{IdealVec, RingSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    ReducedN3,
    ReducedGeneral,
    ThreeN1,
    ThreeSmall,
    ThreeGeneral,
    ChainGeneral,
    ChainC4,
    ChainN1Small,
    MixedCorollary,
}

impl TheoremId {
    /// Stable identifier used in reports and on the command line.
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::ReducedN3 => "reduced_n3",
            TheoremId::ReducedGeneral => "reduced_general",
            TheoremId::ThreeN1 => "three_n1",
            TheoremId::ThreeSmall => "three_small",
            TheoremId::ThreeGeneral => "three_general",
            TheoremId::ChainGeneral => "chain_general",
            TheoremId::ChainC4 => "chain_c4",
            TheoremId::ChainN1Small => "chain_n1_small",
            TheoremId::MixedCorollary => "mixed_corollary",
        }
    }

    fn hypothesis(self) -> &'static str {
        match self {
            TheoremId::ReducedN3 => "product of three fields",
            TheoremId::ReducedGeneral => "product of n >= 4 fields",
            TheoremId::ThreeN1 => "local ring with a unique nontrivial ideal",
            TheoremId::ThreeSmall => "product of 2 or 3 rings, each with a unique nontrivial ideal",
            TheoremId::ThreeGeneral => {
                "product of n >= 4 rings, each with a unique nontrivial ideal"
            }
            TheoremId::ChainGeneral => {
                "product of chain rings, each with at least two nontrivial ideals"
            }
            TheoremId::ChainC4 => {
                "product of n >= 2 chain rings with exactly two nontrivial ideals"
            }
            TheoremId::ChainN1Small => "chain ring with exactly two nontrivial ideals",
            TheoremId::MixedCorollary => {
                "groups of chain rings, unique-ideal rings and fields, each of size 0 or >= 4"
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: u64,
    pub theorem: TheoremId,
    pub hypothesis: &'static str,
}

fn family(spec: &RingSpec) -> Option<TheoremId> {
    let g = spec.group_sizes();
    let n = spec.len();
    let groups = [g.big, g.three, g.field];
    let nonzero = groups.iter().filter(|&&s| s > 0).count();
    if nonzero >= 2 {
        return groups
            .iter()
            .all(|&s| s == 0 || s >= 4)
            .then_some(TheoremId::MixedCorollary);
    }
    if g.field == n {
        return match n {
            3 => Some(TheoremId::ReducedN3),
            4.. => Some(TheoremId::ReducedGeneral),
            _ => None,
        };
    }
    if g.three == n {
        return Some(match n {
            1 => TheoremId::ThreeN1,
            2 | 3 => TheoremId::ThreeSmall,
            _ => TheoremId::ThreeGeneral,
        });
    }
    let all_four = spec.components().iter().all(|c| c.ideal_count() == 4);
    Some(match (n, all_four) {
        (1, true) => TheoremId::ChainN1Small,
        (_, true) => TheoremId::ChainC4,
        _ => TheoremId::ChainGeneral,
    })
}

fn pow(base: i128, exp: usize) -> i128 {
    (0..exp).fold(1, |acc, _| acc * base)
}

/// Mixed-product formula evaluated without checking its side condition.
///
/// For products that violate the condition this is just a number; e.g.
/// `Z4 x Z2` gives 3 while the true dimension is 2.
pub fn mixed_formula_unchecked(spec: &RingSpec) -> i128 {
    let g = spec.group_sizes();
    let vertices = i128::from(spec.vertex_count());
    vertices - pow(3, g.big + g.three) * pow(2, g.field) + 2 * g.three as i128 + g.field as i128 + 2
}

/// Closed-form metric dimension, when one of the covered families applies.
pub fn formula_metric_dim(spec: &RingSpec) -> Result<FormulaResult> {
    let theorem = family(spec).ok_or_else(|| Error::NotCovered(spec.to_string()))?;
    let n = spec.len() as i128;
    let vertices = i128::from(spec.vertex_count());
    let value = match theorem {
        TheoremId::ReducedN3 => 2,
        TheoremId::ReducedGeneral => n,
        TheoremId::ThreeN1 => 0,
        TheoremId::ThreeSmall => 2 * n - 1,
        TheoremId::ThreeGeneral => 2 * n,
        TheoremId::ChainN1Small => 1,
        TheoremId::ChainC4 => pow(4, spec.len()) - pow(3, spec.len()) - 1,
        TheoremId::ChainGeneral => vertices - pow(3, spec.len()) + 1,
        TheoremId::MixedCorollary => mixed_formula_unchecked(spec),
    };
    Ok(FormulaResult {
        value: u64::try_from(value).expect("covered families have nonnegative dimension"),
        theorem,
        hypothesis: theorem.hypothesis(),
    })
}

/// A resolving set built from the structure of the ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub theorem: TheoremId,
    /// Landmarks in their natural listing order (this fixes the coordinate
    /// order of representation vectors).
    pub set: Vec<IdealVec>,
}

/// Slot classes used by the chain-ring constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlotKind {
    /// Strictly inside the maximal ideal (the zero ideal included).
    Below,
    Maximal,
    Full,
}

fn slot_kind(spec: &RingSpec, slot: usize, index: u32) -> SlotKind {
    let c = spec.components()[slot];
    if index == c.unit() {
        SlotKind::Full
    } else if index == c.maximal() {
        SlotKind::Maximal
    } else {
        SlotKind::Below
    }
}

/// Vertices grouped by the slotwise kind (below maximal, maximal, full).
///
/// For products of chain rings with at least two nontrivial ideals each,
/// every group is a set of open twins and there are `3^n - 1` groups.
pub fn chain_classes(spec: &RingSpec) -> Vec<Vec<IdealVec>> {
    let mut groups: BTreeMap<Vec<SlotKind>, Vec<IdealVec>> = BTreeMap::new();
    for v in spec.vertices() {
        let key = v
            .indices()
            .iter()
            .enumerate()
            .map(|(i, &j)| slot_kind(spec, i, j))
            .collect();
        groups.entry(key).or_default().push(v);
    }
    let mut out: Vec<_> = groups.into_values().collect();
    out.sort();
    out
}

/// True when every slot is the zero ideal, the maximal ideal or the full component.
fn is_skeletal(spec: &RingSpec, v: &IdealVec) -> bool {
    v.indices()
        .iter()
        .zip(spec.components())
        .all(|(&j, c)| j == 0 || j == c.maximal() || j == c.unit())
}

fn chain_construction(spec: &RingSpec) -> Vec<IdealVec> {
    let k = IdealVec(vec![1; spec.len()]);
    spec.vertices()
        .into_iter()
        .filter(|v| !is_skeletal(spec, v) && *v != k)
        .collect()
}

/// The mixed-product landmark set, built whether or not the side condition holds.
///
/// Non-skeletal vertices first, then for every `c = 3` slot the vector with
/// that slot zero and then with that slot maximal (all else full), then for
/// every field slot the vector with that slot zero.
pub fn construct_mixed_unchecked(spec: &RingSpec) -> Vec<IdealVec> {
    let mut set: Vec<IdealVec> = spec
        .vertices()
        .into_iter()
        .filter(|v| !is_skeletal(spec, v))
        .collect();
    let three_slots: Vec<usize> = (0..spec.len())
        .filter(|&i| spec.components()[i].ideal_count() == 3)
        .collect();
    set.extend(three_slots.iter().map(|&i| spec.unit_except(i, 0)));
    set.extend(three_slots.iter().map(|&i| spec.unit_except(i, 1)));
    set.extend(
        (0..spec.len())
            .filter(|&i| spec.components()[i].is_field())
            .map(|i| spec.unit_except(i, 0)),
    );
    set
}

/// Explicit resolving set of the size given by [`formula_metric_dim`].
pub fn construct_resolving(spec: &RingSpec) -> Result<Construction> {
    let theorem = family(spec).ok_or_else(|| Error::NotCovered(spec.to_string()))?;
    let v = |x: &[u32]| IdealVec(x.to_vec());
    let set = match theorem {
        TheoremId::ReducedN3 => vec![v(&[0, 1, 1]), v(&[1, 0, 1])],
        TheoremId::ReducedGeneral => spec.maximal_ideals(),
        TheoremId::ThreeN1 => Vec::new(),
        TheoremId::ThreeSmall if spec.len() == 2 => vec![v(&[2, 0]), v(&[0, 2]), v(&[2, 1])],
        TheoremId::ThreeSmall => vec![
            v(&[0, 2, 2]),
            v(&[2, 0, 2]),
            v(&[2, 2, 0]),
            v(&[2, 1, 1]),
            v(&[1, 1, 2]),
        ],
        TheoremId::ThreeGeneral => {
            let mut set: Vec<IdealVec> = (0..spec.len()).map(|i| spec.unit_except(i, 0)).collect();
            set.extend(spec.maximal_ideals());
            set
        }
        TheoremId::ChainN1Small => vec![v(&[1])],
        TheoremId::ChainC4 | TheoremId::ChainGeneral => chain_construction(spec),
        TheoremId::MixedCorollary => construct_mixed_unchecked(spec),
    };
    Ok(Construction { theorem, set })
}
