//! Prime ideal sum graphs, plain graphs and hop distances.

use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{IdealVec, RingSpec};

/// Distance value meaning "unreachable".
pub const INFINITY: u8 = u8::MAX;

/// A simple undirected graph with one adjacency bit row per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph on `n` vertices labelled `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Graph::with_labels((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn with_labels(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::MalformedGraph(format!(
                    "edge ({u},{v}) refers to a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::MalformedGraph(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, labels })
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, u: usize) -> &FixedBitSet {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Breadth-first search over word-sized blocks: the next level is the
    /// union of the frontier's adjacency rows minus everything already seen.
    fn bfs(&self, source: usize, out: &mut [u8]) {
        out.fill(INFINITY);
        out[source] = 0;
        let blocks = self.len().div_ceil(usize::BITS as usize);
        let mut seen = vec![0usize; blocks];
        let mut next = vec![0usize; blocks];
        seen[source / usize::BITS as usize] |= 1 << (source % usize::BITS as usize);
        let mut frontier = vec![source];
        let mut level = 0u8;
        let mut reached = 1;
        while !frontier.is_empty() && reached < self.len() {
            level = level.saturating_add(1).min(INFINITY - 1);
            next.fill(0);
            for &u in &frontier {
                for (n, &a) in next.iter_mut().zip(self.adj[u].as_slice()) {
                    *n |= a;
                }
            }
            frontier.clear();
            for (i, (n, s)) in next.iter_mut().zip(seen.iter_mut()).enumerate() {
                let mut fresh = *n & !*s;
                *s |= fresh;
                while fresh != 0 {
                    let v = i * usize::BITS as usize + fresh.trailing_zeros() as usize;
                    out[v] = level;
                    frontier.push(v);
                    reached += 1;
                    fresh &= fresh - 1;
                }
            }
        }
    }

    /// All-pairs hop distances, one breadth-first search per source.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.len();
        let mut d = vec![INFINITY; n * n];
        if n > 0 {
            d.par_chunks_mut(n)
                .enumerate()
                .for_each(|(s, row)| self.bfs(s, row));
        }
        DistanceMatrix { n, d }
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let mut row = vec![INFINITY; self.len()];
        self.bfs(0, &mut row);
        row.iter().all(|&x| x != INFINITY)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{}\"];", l.replace('"', "\\\""));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Hop counts between every pair of vertices, [`INFINITY`] when unreachable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u8>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u8] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite distance, `None` when some pair is unreachable.
    pub fn diameter(&self) -> Option<u8> {
        if self.d.contains(&INFINITY) {
            None
        } else {
            Some(self.d.iter().copied().max().unwrap_or(0))
        }
    }

    /// Representation `D(v|W)`: distances from `v` to each landmark, in order.
    pub fn representation(&self, v: usize, landmarks: &[usize]) -> Vec<u8> {
        landmarks.iter().map(|&w| self.get(v, w)).collect()
    }
}

/// The prime ideal sum graph of a product of chain rings.
///
/// Vertices are the nonzero proper ideals in lexicographic order; two are
/// adjacent when their sum is prime.
#[derive(Clone, Debug)]
pub struct PisGraph {
    spec: RingSpec,
    vertices: Vec<IdealVec>,
    graph: Graph,
}

impl PisGraph {
    pub fn build(spec: &RingSpec) -> Result<Self> {
        if spec.len() == 1 && spec.is_reduced() {
            return Err(Error::EmptyGraph);
        }
        if spec.len() == 2 && spec.is_reduced() {
            return Err(Error::DisconnectedRing);
        }
        let vertices = spec.vertices();
        let labels = vertices.iter().map(|v| spec.label(v)).collect();
        let n = vertices.len();
        let edges = if spec.len() <= 64 {
            prime_sum_edges_masked(spec, &vertices)
        } else {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if spec.is_prime(&vertices[u].sum(&vertices[v])?) {
                        edges.push((u, v));
                    }
                }
            }
            edges
        };
        let graph = Graph::with_labels(labels, &edges)?;
        Ok(PisGraph {
            spec: spec.clone(),
            vertices,
            graph,
        })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn vertices(&self) -> &[IdealVec] {
        &self.vertices
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Position of an ideal in the vertex list.
    pub fn index_of(&self, ideal: &IdealVec) -> Option<usize> {
        self.vertices.binary_search(ideal).ok()
    }

    /// Maps a set of ideals to vertex indices, failing on non-vertices.
    pub fn indices_of(&self, ideals: &[IdealVec]) -> Result<Vec<usize>> {
        ideals
            .iter()
            .map(|a| {
                self.index_of(a).ok_or_else(|| {
                    Error::MalformedGraph(format!("{:?} is not a vertex of {}", a.0, self.spec))
                })
            })
            .collect()
    }

    pub fn to_dot(&self) -> String {
        self.graph.to_dot()
    }

    pub fn to_json(&self) -> String {
        let doc = GraphDocument {
            ring: Some(self.spec.ideal_counts()),
            vertices: self
                .vertices
                .iter()
                .map(|v| serde_json::to_value(v).expect("index vectors serialize"))
                .collect(),
            edges: self.graph.edges().map(|(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&doc).expect("graph document serializes")
    }
}

/// Pairs whose sum is prime, using one bit per slot.
///
/// A sum is prime when exactly one slot is not the whole component and that
/// slot is the maximal ideal. Slotwise, the sum is full where either side is
/// full and maximal where neither is full and either is maximal.
fn prime_sum_edges_masked(spec: &RingSpec, vertices: &[IdealVec]) -> Vec<(usize, usize)> {
    let masks: Vec<(u64, u64)> = vertices
        .iter()
        .map(|v| {
            let (mut full, mut maximal) = (0u64, 0u64);
            for (slot, (&j, c)) in v.indices().iter().zip(spec.components()).enumerate() {
                if j == c.unit() {
                    full |= 1 << slot;
                } else if j == c.maximal() {
                    maximal |= 1 << slot;
                }
            }
            (full, maximal)
        })
        .collect();
    let all = if spec.len() == 64 {
        !0
    } else {
        (1u64 << spec.len()) - 1
    };
    let mut edges = Vec::new();
    for (u, &(fu, mu)) in masks.iter().enumerate() {
        for (v, &(fv, mv)) in masks.iter().enumerate().skip(u + 1) {
            let rest = all & !(fu | fv);
            if rest.count_ones() == 1 && (mu | mv) & rest == rest {
                edges.push((u, v));
            }
        }
    }
    edges
}

#[derive(Serialize, Deserialize)]
struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ring: Option<Vec<u32>>,
    vertices: Vec<serde_json::Value>,
    edges: Vec<[usize; 2]>,
}

/// A graph read from the JSON exchange format.
#[derive(Clone, Debug)]
pub struct ImportedGraph {
    /// Present when the document names a ring; the vertices are then ideal vectors.
    pub ring: Option<RingSpec>,
    pub graph: Graph,
}

/// Reads `{"ring":[c…],"vertices":[…],"edges":[[u,v]…]}`.
///
/// `ring` is optional. Without it the vertices may be arbitrary JSON values
/// and are only used as labels.
pub fn import_graph_json(text: &str) -> Result<ImportedGraph> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::MalformedGraph(e.to_string()))?;
    let ring = doc.ring.map(|c| RingSpec::from_counts(&c)).transpose()?;
    let labels = doc
        .vertices
        .iter()
        .map(|v| -> Result<String> {
            match &ring {
                Some(spec) => {
                    let ideal: IdealVec = serde_json::from_value(v.clone())
                        .map_err(|e| Error::MalformedGraph(format!("vertex {v}: {e}")))?;
                    spec.check(&ideal)
                        .map_err(|e| Error::MalformedGraph(format!("vertex {v}: {e}")))?;
                    if !spec.is_vertex(&ideal) {
                        return Err(Error::MalformedGraph(format!(
                            "vertex {v} is the zero or unit ideal"
                        )));
                    }
                    Ok(spec.label(&ideal))
                }
                None => Ok(match v {
                    serde_json::Value::String(s) => s.clone(),
                    other => other.to_string(),
                }),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
    let graph = Graph::with_labels(labels, &edges)?;
    Ok(ImportedGraph { ring, graph })
}
