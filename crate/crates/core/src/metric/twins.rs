use std::collections::HashMap;

use serde::Serialize;

use crate::pis::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwinKind {
    /// Members share the same open neighborhood `N(x)` (an independent set).
    Open,
    /// Members share the same closed neighborhood `N[x]` (a clique).
    Closed,
    Singleton,
}

/// Partition of the vertices into twin classes.
///
/// Two vertices are twins when `N(x) \ {y} = N(y) \ {x}`. This is an
/// equivalence relation, and every class with two or more members is either
/// an independent set of open twins or a clique of closed twins. No third
/// vertex can tell twins apart, so every resolving set contains all but at
/// most one member of each class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<Vec<usize>>,
    kinds: Vec<TwinKind>,
    vertex_count: usize,
}

/// `N(u) \ {v} == N(v) \ {u}`, compared one word at a time.
#[cfg(test)]
fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let (a, b) = (g.neighbors(u).as_slice(), g.neighbors(v).as_slice());
    let bits = usize::BITS as usize;
    a.iter().zip(b).enumerate().all(|(w, (&x, &y))| {
        let mut mask = !0;
        if u / bits == w {
            mask &= !(1 << (u % bits));
        }
        if v / bits == w {
            mask &= !(1 << (v % bits));
        }
        x & mask == y & mask
    })
}

impl TwinPartition {
    pub fn compute(g: &Graph) -> Self {
        // Nontrivial open-twin and closed-twin classes never overlap, so the
        // classes are just the groups of equal N(x) or equal N[x].
        let n = g.len();
        let mut open: HashMap<&[usize], Vec<usize>> = HashMap::new();
        let mut closed: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for u in 0..n {
            open.entry(g.neighbors(u).as_slice()).or_default().push(u);
            let mut nb = g.neighbors(u).clone();
            nb.insert(u);
            closed.entry(nb.as_slice().to_vec()).or_default().push(u);
        }
        let mut kind = vec![TwinKind::Singleton; n];
        let mut first = (0..n).collect::<Vec<_>>();
        let groups = open
            .into_values()
            .map(|c| (c, TwinKind::Open))
            .chain(closed.into_values().map(|c| (c, TwinKind::Closed)));
        for (members, k) in groups.filter(|(c, _)| c.len() > 1) {
            for &v in &members {
                kind[v] = k;
                first[v] = members[0];
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut kinds = Vec::new();
        let mut slot = vec![usize::MAX; n];
        for u in 0..n {
            let head = first[u];
            if slot[head] == usize::MAX {
                slot[head] = classes.len();
                classes.push(Vec::new());
                kinds.push(kind[u]);
            }
            classes[slot[head]].push(u);
        }
        TwinPartition {
            classes,
            kinds,
            vertex_count: n,
        }
    }

    /// Classes ordered by smallest member, members ascending.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn kinds(&self) -> &[TwinKind] {
        &self.kinds
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// `|V| - k` for `k` classes.
    pub fn lower_bound(&self) -> usize {
        self.vertex_count - self.classes.len()
    }

    /// All but the last member of every class; a minimum resolving set can
    /// always be chosen to contain these.
    pub fn forced(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .classes
            .iter()
            .flat_map(|c| c[..c.len() - 1].iter().copied())
            .collect();
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_leaves_are_open_twins() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let tp = TwinPartition::compute(&g);
        assert_eq!(tp.classes(), [vec![0], vec![1, 2, 3]]);
        assert_eq!(tp.kinds(), [TwinKind::Singleton, TwinKind::Open]);
        assert_eq!(tp.lower_bound(), 2);
        assert_eq!(tp.forced(), vec![1, 2]);
    }

    #[test]
    fn complete_graph_is_one_closed_class() {
        let edges: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let tp = TwinPartition::compute(&Graph::from_edges(4, &edges).unwrap());
        assert_eq!(tp.class_count(), 1);
        assert_eq!(tp.kinds(), [TwinKind::Closed]);
        assert_eq!(tp.lower_bound(), 3);
    }

    #[test]
    fn path_has_no_twins() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(TwinPartition::compute(&g).lower_bound(), 0);
    }

    #[test]
    fn matches_pairwise_definition() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=12);
            let p = rng.gen_range(0.1..0.9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            let tp = TwinPartition::compute(&g);
            let mut covered = vec![0; n];
            for class in tp.classes() {
                for &u in class {
                    covered[u] += 1;
                    assert!(class.iter().all(|&v| u == v || are_twins(&g, u, v)));
                }
            }
            assert!(covered.iter().all(|&c| c == 1));
            for u in 0..n {
                for v in u + 1..n {
                    if are_twins(&g, u, v) {
                        assert!(tp
                            .classes()
                            .iter()
                            .any(|c| c.contains(&u) && c.contains(&v)));
                    }
                }
            }
        }
    }

    #[test]
    fn twins_across_word_boundaries() {
        // two leaves hanging off vertex 0, placed in different 64-bit words
        let n = 130;
        let mut edges: Vec<_> = (1..n - 1).map(|v| (v, v + 1)).collect();
        edges.push((0, 1));
        edges.push((0, 70));
        let g = Graph::from_edges(n + 1, &{
            let mut e = edges.clone();
            e.push((0, n));
            e
        })
        .unwrap();
        let tp = TwinPartition::compute(&g);
        assert_eq!(tp.lower_bound(), 0);
        let g = Graph::from_edges(n + 2, &{
            let mut e = edges;
            e.push((0, n));
            e.push((0, n + 1));
            e
        })
        .unwrap();
        let tp = TwinPartition::compute(&g);
        assert!(tp.classes().contains(&vec![n, n + 1]));
    }
}
