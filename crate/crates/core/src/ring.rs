//! Finite commutative rings modeled as products of local chain rings.
//!
//! A chain ring is described only by its number of ideals `c`: the ideals form
//! a single chain `0 = m^(c-1) ⊂ … ⊂ m^2 ⊂ m ⊂ R`, so an ideal is just an
//! index into that chain. Index `0` is the zero ideal, `c - 2` the maximal
//! ideal and `c - 1` the whole ring. An ideal of a product ring is then a
//! vector of such indices, one per component.

use std::fmt;
use std::str::FromStr;
use std::sync::LazyLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A local chain ring, identified by its total ideal count (zero and unit ideal included).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct ChainComponent(u32);

impl ChainComponent {
    pub fn new(ideal_count: u32) -> Result<Self> {
        if ideal_count < 2 {
            return Err(Error::Syntax(format!(
                "a chain ring has at least two ideals, got {ideal_count}"
            )));
        }
        Ok(ChainComponent(ideal_count))
    }

    pub fn ideal_count(self) -> u32 {
        self.0
    }

    /// Index of the maximal ideal.
    pub fn maximal(self) -> u32 {
        self.0 - 2
    }

    /// Index of the unit ideal.
    pub fn unit(self) -> u32 {
        self.0 - 1
    }

    pub fn is_field(self) -> bool {
        self.0 == 2
    }
}

impl TryFrom<u32> for ChainComponent {
    type Error = Error;

    fn try_from(c: u32) -> Result<Self> {
        ChainComponent::new(c)
    }
}

impl From<ChainComponent> for u32 {
    fn from(c: ChainComponent) -> u32 {
        c.0
    }
}

/// Number of components in each of the three families the closed forms distinguish.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GroupSizes {
    /// Components with at least two nontrivial ideals (`c >= 4`).
    pub big: usize,
    /// Components with a unique nontrivial ideal (`c == 3`).
    pub three: usize,
    /// Fields (`c == 2`).
    pub field: usize,
}

/// An ordered product of chain rings.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct RingSpec {
    components: Vec<ChainComponent>,
}

impl RingSpec {
    pub fn new(components: Vec<ChainComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Syntax("a ring needs at least one component".into()));
        }
        Ok(RingSpec { components })
    }

    /// Builds a spec from raw ideal counts, e.g. `[3, 2, 2]` for `Z4 x Z2 x Z2`.
    pub fn from_counts(counts: &[u32]) -> Result<Self> {
        let components = counts
            .iter()
            .map(|&c| ChainComponent::new(c))
            .collect::<Result<Vec<_>>>()?;
        RingSpec::new(components)
    }

    pub fn components(&self) -> &[ChainComponent] {
        &self.components
    }

    pub fn ideal_counts(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.0).collect()
    }

    /// Number of components (the number of maximal ideals of the ring).
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn total_ideals(&self) -> u64 {
        self.components.iter().map(|c| u64::from(c.0)).product()
    }

    /// Number of nonzero proper ideals, i.e. vertices of the prime ideal sum graph.
    pub fn vertex_count(&self) -> u64 {
        self.total_ideals() - 2
    }

    pub fn is_reduced(&self) -> bool {
        self.components.iter().all(|c| c.is_field())
    }

    pub fn group_sizes(&self) -> GroupSizes {
        let mut g = GroupSizes::default();
        for c in &self.components {
            match c.0 {
                2 => g.field += 1,
                3 => g.three += 1,
                _ => g.big += 1,
            }
        }
        g
    }

    pub fn zero(&self) -> IdealVec {
        IdealVec(vec![0; self.len()])
    }

    pub fn unit(&self) -> IdealVec {
        IdealVec(self.components.iter().map(|c| c.unit()).collect())
    }

    /// The Jacobson radical: every slot at its maximal ideal.
    pub fn jacobson(&self) -> IdealVec {
        IdealVec(self.components.iter().map(|c| c.maximal()).collect())
    }

    /// The unit ideal with slot `slot` replaced by `index`.
    pub fn unit_except(&self, slot: usize, index: u32) -> IdealVec {
        let mut v = self.unit();
        v.0[slot] = index;
        v
    }

    /// `Max(R)`: one maximal slot, every other slot full. Ordered by slot.
    pub fn maximal_ideals(&self) -> Vec<IdealVec> {
        (0..self.len())
            .map(|i| self.unit_except(i, self.components[i].maximal()))
            .collect()
    }

    /// Checks that `a` is an ideal of this ring.
    pub fn check(&self, a: &IdealVec) -> Result<()> {
        if a.len() != self.len() {
            return Err(Error::LengthMismatch(a.len(), self.len()));
        }
        for (&j, c) in a.0.iter().zip(&self.components) {
            if j >= c.0 {
                return Err(Error::Syntax(format!(
                    "ideal index {j} out of range for a component with {} ideals",
                    c.0
                )));
            }
        }
        Ok(())
    }

    /// Nonzero and proper.
    pub fn is_vertex(&self, a: &IdealVec) -> bool {
        a.0.iter().any(|&j| j != 0)
            && a.0
                .iter()
                .zip(&self.components)
                .any(|(&j, c)| j != c.unit())
    }

    /// Primes of a product of local rings: exactly one slot maximal, all others full.
    pub fn is_prime(&self, a: &IdealVec) -> bool {
        let mut maximal_slots = 0;
        for (&j, c) in a.0.iter().zip(&self.components) {
            if j == c.maximal() {
                maximal_slots += 1;
            } else if j != c.unit() {
                return false;
            }
        }
        maximal_slots == 1
    }

    pub fn in_jacobson(&self, a: &IdealVec) -> bool {
        a.0.iter()
            .zip(&self.components)
            .all(|(&j, c)| j <= c.maximal())
    }

    /// Every ideal in lexicographic order of the index vector.
    ///
    /// With `vertices_only` the zero and unit ideals are skipped.
    pub fn ideals(&self, vertices_only: bool) -> Vec<IdealVec> {
        let mut out = Vec::with_capacity(self.total_ideals() as usize);
        let mut cur = vec![0u32; self.len()];
        loop {
            let v = IdealVec(cur.clone());
            if !vertices_only || self.is_vertex(&v) {
                out.push(v);
            }
            // mixed-radix increment, last slot fastest
            let mut i = self.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < self.components[i].0 {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    pub fn vertices(&self) -> Vec<IdealVec> {
        self.ideals(true)
    }

    /// Human-readable name such as `(m1,R2,0)` or `(0,F2,F3)`.
    ///
    /// `m1^2` denotes the square of the maximal ideal of the first component.
    pub fn label(&self, a: &IdealVec) -> String {
        let parts: Vec<String> =
            a.0.iter()
                .zip(&self.components)
                .enumerate()
                .map(|(i, (&j, c))| {
                    let slot = i + 1;
                    if j == 0 {
                        "0".to_string()
                    } else if j == c.unit() {
                        if c.is_field() {
                            format!("F{slot}")
                        } else {
                            format!("R{slot}")
                        }
                    } else if j == c.maximal() {
                        format!("m{slot}")
                    } else {
                        format!("m{slot}^{}", c.unit() - j)
                    }
                })
                .collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c.0)?;
        }
        write!(f, "]")
    }
}

impl TryFrom<Vec<u32>> for RingSpec {
    type Error = Error;

    fn try_from(counts: Vec<u32>) -> Result<Self> {
        RingSpec::from_counts(&counts)
    }
}

impl From<RingSpec> for Vec<u32> {
    fn from(spec: RingSpec) -> Vec<u32> {
        spec.ideal_counts()
    }
}

static TOKEN: LazyLock<Regex> =
    LazyLock::new(|| Regex::new(r"^(?:GF\((\d+)\)|F_?(\d+)|Z_?(\d+)|chain\((\d+)\))$").unwrap());

/// Returns `Some(k)` when `n = p^k` for a prime `p` and `k >= 1`.
fn prime_power_exponent(n: u64) -> Option<u32> {
    if n < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            break;
        }
        p += 1;
    }
    if p * p > n {
        return Some(1);
    }
    let (mut m, mut k) = (n, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some(k)
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Parses products such as `GF(2) x GF(3)`, `Z4 x Z2` or `chain(4) x chain(4)`.
    ///
    /// `x` and `×` both separate factors. The canonical list form `[3,2,2]`
    /// is accepted too.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.starts_with('[') {
            let counts: Vec<u32> = serde_json::from_str(text)
                .map_err(|e| Error::Syntax(format!("bad ideal-count list `{text}`: {e}")))?;
            return RingSpec::from_counts(&counts);
        }
        if text.is_empty() {
            return Err(Error::Syntax("empty ring specification".into()));
        }
        let mut components = Vec::new();
        for raw in text.split(['x', '×']) {
            let token = raw.trim();
            let caps = TOKEN
                .captures(token)
                .ok_or_else(|| Error::Syntax(format!("unrecognized factor `{token}`")))?;
            let number = |i: usize| -> Result<u64> {
                caps[i]
                    .parse::<u64>()
                    .map_err(|_| Error::Syntax(format!("number too large in `{token}`")))
            };
            let c = if let Some(q) = caps.get(1).or(caps.get(2)) {
                let q = q
                    .as_str()
                    .parse::<u64>()
                    .map_err(|_| Error::Syntax(format!("number too large in `{token}`")))?;
                if prime_power_exponent(q).is_none() {
                    return Err(Error::NotChainRing(format!(
                        "{token}: no field has {q} elements"
                    )));
                }
                2
            } else if caps.get(3).is_some() {
                let n = number(3)?;
                let k = prime_power_exponent(n).ok_or_else(|| {
                    Error::NotChainRing(format!("{token}: {n} is not a prime power"))
                })?;
                k + 1
            } else {
                u32::try_from(number(4)?)
                    .map_err(|_| Error::Syntax(format!("number too large in `{token}`")))?
            };
            components.push(ChainComponent::new(c)?);
        }
        RingSpec::new(components)
    }
}

/// An ideal of a product ring: one chain index per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IdealVec(pub Vec<u32>);

impl IdealVec {
    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `I + J`. Chain ideals are totally ordered, so the sum is the slotwise maximum.
    pub fn sum(&self, other: &IdealVec) -> Result<IdealVec> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(IdealVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        ))
    }
}

impl From<Vec<u32>> for IdealVec {
    fn from(v: Vec<u32>) -> Self {
        IdealVec(v)
    }
}

impl<const N: usize> From<[u32; N]> for IdealVec {
    fn from(v: [u32; N]) -> Self {
        IdealVec(v.to_vec())
    }
}
