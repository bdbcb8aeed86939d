//! Exact metric dimension as a minimum hitting set over vertex pairs.
//!
//! Every unordered pair `{u, v}` must be hit by some landmark `w` with
//! `d(u, w) != d(v, w)`. Pair sets and landmark sets are kept as `u64` words
//! so that covering, candidate counting and disjointness tests are
//! word-parallel.
//!
//! The search branches on the unresolved pair with the fewest remaining
//! candidate landmarks. Child `i` takes candidate `c_i` and forbids
//! `c_1..c_{i-1}`, so subtrees are disjoint. Twins are fixed up front, a
//! greedy cover supplies the first incumbent, and nodes are pruned with the
//! larger of a class-size counting bound and a disjoint-pair packing bound.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::{info_lower_bound, LowerBounds, ResolvingReport, SolveStatus, TwinPartition};
use crate::error::{Error, Result};
use crate::pis::{DistanceMatrix, Graph};

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Wall-clock budget for the whole run.
    pub budget: Duration,
    /// Worker threads for the branch and bound. The result does not depend on it.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: Duration::from_secs(600),
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl SolverConfig {
    pub fn with_budget(budget: Duration) -> Self {
        SolverConfig {
            budget,
            ..Self::default()
        }
    }
}

fn words(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[inline]
fn set_bit(w: &mut [u64], i: usize) {
    w[i / 64] |= 1 << (i % 64);
}

fn ones(w: &[u64]) -> impl Iterator<Item = usize> + '_ {
    w.iter().enumerate().flat_map(|(i, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i * 64 + b)
        })
    })
}

struct Instance {
    n: usize,
    vertex_words: usize,
    pair_words: usize,
    pair_ends: Vec<(u32, u32)>,
    /// Per landmark: the pairs it distinguishes.
    cover: Vec<u64>,
    /// Per pair: the landmarks distinguishing it.
    cands: Vec<u64>,
    diameter: u8,
}

impl Instance {
    fn new(dist: &DistanceMatrix, diameter: u8) -> Self {
        let n = dist.len();
        let pairs = n * n.saturating_sub(1) / 2;
        let (vertex_words, pair_words) = (words(n), words(pairs));
        let mut cover = vec![0u64; n * pair_words];
        let mut cands = vec![0u64; pairs * vertex_words];
        let mut pair_ends = Vec::with_capacity(pairs);
        for u in 0..n {
            for v in u + 1..n {
                let p = pair_ends.len();
                pair_ends.push((u as u32, v as u32));
                let (du, dv) = (dist.row(u), dist.row(v));
                for w in 0..n {
                    if du[w] != dv[w] {
                        set_bit(&mut cover[w * pair_words..(w + 1) * pair_words], p);
                        set_bit(&mut cands[p * vertex_words..(p + 1) * vertex_words], w);
                    }
                }
            }
        }
        Instance {
            n,
            vertex_words,
            pair_words,
            pair_ends,
            cover,
            cands,
            diameter,
        }
    }

    fn cover(&self, w: usize) -> &[u64] {
        &self.cover[w * self.pair_words..(w + 1) * self.pair_words]
    }

    fn cands(&self, p: usize) -> &[u64] {
        &self.cands[p * self.vertex_words..(p + 1) * self.vertex_words]
    }

    fn root(&self, chosen: &[usize]) -> Node {
        let pairs = self.pair_ends.len();
        let mut unresolved = vec![!0u64; self.pair_words];
        if !pairs.is_multiple_of(64) {
            if let Some(last) = unresolved.last_mut() {
                *last = (1u64 << (pairs % 64)) - 1;
            }
        }
        for &w in chosen {
            for (u, c) in unresolved.iter_mut().zip(self.cover(w)) {
                *u &= !c;
            }
        }
        Node {
            chosen: chosen.to_vec(),
            forbidden: vec![0; self.vertex_words],
            unresolved,
        }
    }

    fn child(&self, parent: &Node, forbidden: &[u64], landmark: usize) -> Node {
        let mut chosen = parent.chosen.clone();
        chosen.push(landmark);
        Node {
            chosen,
            forbidden: forbidden.to_vec(),
            unresolved: parent
                .unresolved
                .iter()
                .zip(self.cover(landmark))
                .map(|(u, c)| u & !c)
                .collect(),
        }
    }

    /// Children of `node` when branching on `pair`, in ascending landmark order.
    fn children(&self, node: &Node, pair: usize) -> impl Iterator<Item = Node> + '_ {
        let node = node.clone();
        let available: Vec<u64> = self
            .cands(pair)
            .iter()
            .zip(&node.forbidden)
            .map(|(c, f)| c & !f)
            .collect();
        let list: Vec<usize> = ones(&available).collect();
        let mut forbidden = node.forbidden.clone();
        list.into_iter().map(move |c| {
            let child = self.child(&node, &forbidden, c);
            set_bit(&mut forbidden, c);
            child
        })
    }

    fn evaluate(&self, node: &Node, scratch: &mut Scratch) -> Eval {
        scratch.pairs.clear();
        let mut best: Option<(u32, usize)> = None;
        for p in ones(&node.unresolved) {
            let count: u32 = self
                .cands(p)
                .iter()
                .zip(&node.forbidden)
                .map(|(c, f)| (c & !f).count_ones())
                .sum();
            if count == 0 {
                for &(_, q) in &scratch.pairs {
                    let (u, v) = self.pair_ends[q];
                    scratch.degree[u as usize] = 0;
                    scratch.degree[v as usize] = 0;
                }
                return Eval::Infeasible;
            }
            if best.is_none_or(|(c, _)| count < c) {
                best = Some((count, p));
            }
            let (u, v) = self.pair_ends[p];
            scratch.degree[u as usize] += 1;
            scratch.degree[v as usize] += 1;
            scratch.pairs.push((count, p));
        }
        let Some((_, pair)) = best else {
            return Eval::Done;
        };

        // Unresolved pairs form disjoint cliques (one per shared
        // representation); a clique of t vertices needs r landmarks with
        // r + D^r >= t.
        let mut largest = 0;
        for &(_, p) in &scratch.pairs {
            let (u, v) = self.pair_ends[p];
            largest = largest
                .max(scratch.degree[u as usize])
                .max(scratch.degree[v as usize]);
        }
        for &(_, p) in &scratch.pairs {
            let (u, v) = self.pair_ends[p];
            scratch.degree[u as usize] = 0;
            scratch.degree[v as usize] = 0;
        }
        let counting = info_lower_bound(largest as usize + 1, self.diameter);

        // Pairs with pairwise disjoint candidate sets each need their own landmark.
        scratch.pairs.sort_unstable();
        scratch.used.clear();
        scratch.used.resize(self.vertex_words, 0);
        let mut packing = 0;
        for &(_, p) in &scratch.pairs {
            let disjoint = self
                .cands(p)
                .iter()
                .zip(&node.forbidden)
                .zip(&scratch.used)
                .all(|((c, f), u)| c & !f & u == 0);
            if disjoint {
                for ((u, c), f) in scratch
                    .used
                    .iter_mut()
                    .zip(self.cands(p))
                    .zip(&node.forbidden)
                {
                    *u |= c & !f;
                }
                packing += 1;
            }
        }
        Eval::Open {
            bound: counting.max(packing).max(1),
            pair,
        }
    }

    /// Repeatedly adds the landmark resolving the most pairs, lowest index on ties.
    fn greedy(&self, forced: &[usize], deadline: Instant) -> Option<Vec<usize>> {
        let mut node = self.root(forced);
        let mut taken = vec![false; self.n];
        for &w in forced {
            taken[w] = true;
        }
        while node.unresolved.iter().any(|&w| w != 0) {
            if Instant::now() > deadline {
                return None;
            }
            let (w, _) = (0..self.n)
                .filter(|&w| !taken[w])
                .map(|w| {
                    let gain: u32 = node
                        .unresolved
                        .iter()
                        .zip(self.cover(w))
                        .map(|(u, c)| (u & c).count_ones())
                        .sum();
                    (w, gain)
                })
                .fold((usize::MAX, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
            taken[w] = true;
            let forbidden = node.forbidden.clone();
            node = self.child(&node, &forbidden, w);
        }
        let mut set = node.chosen;
        set.sort_unstable();
        Some(set)
    }
}

#[derive(Clone)]
struct Node {
    chosen: Vec<usize>,
    forbidden: Vec<u64>,
    unresolved: Vec<u64>,
}

enum Eval {
    Done,
    Infeasible,
    Open { bound: usize, pair: usize },
}

struct Scratch {
    degree: Vec<u32>,
    pairs: Vec<(u32, usize)>,
    used: Vec<u64>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            degree: vec![0; n],
            pairs: Vec::new(),
            used: Vec::new(),
        }
    }
}

/// One depth-first search over a subtree, with its own incumbent.
struct Search<'a> {
    inst: &'a Instance,
    global_best: &'a AtomicUsize,
    aborted: &'a AtomicBool,
    deadline: Instant,
    scratch: Scratch,
    nodes: u64,
    best_size: usize,
    best: Option<Vec<usize>>,
}

impl Search<'_> {
    fn run(&mut self, node: Node) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(512) && Instant::now() > self.deadline {
            self.aborted.store(true, Ordering::Relaxed);
        }
        if self.aborted.load(Ordering::Relaxed) {
            return;
        }
        let size = node.chosen.len();
        match self.inst.evaluate(&node, &mut self.scratch) {
            Eval::Infeasible => {}
            Eval::Done => {
                if size < self.best_size {
                    self.best_size = size;
                    let mut set = node.chosen;
                    set.sort_unstable();
                    self.best = Some(set);
                    self.global_best.fetch_min(size, Ordering::Relaxed);
                }
            }
            Eval::Open { bound, pair } => {
                // Ties with the global incumbent are still explored so that each
                // subtree reports its own first optimum regardless of timing.
                if size + bound >= self.best_size
                    || size + bound > self.global_best.load(Ordering::Relaxed)
                {
                    return;
                }
                for child in self.inst.children(&node, pair) {
                    self.run(child);
                }
            }
        }
    }
}

/// Minimum resolving set of a connected graph.
///
/// Returns `Exact` when the search completes within the budget, otherwise
/// `UpperBound` with the best set found. Output is independent of
/// `config.threads`; ties are broken towards lower vertex indices.
pub fn metric_dimension_exact(graph: &Graph, config: &SolverConfig) -> Result<ResolvingReport> {
    let start = Instant::now();
    let deadline = start + config.budget;
    if graph.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let dist = graph.distances();
    let diameter = dist.diameter().ok_or(Error::NotConnected)?;
    let n = graph.len();

    let twins = TwinPartition::compute(graph);
    let bounds = LowerBounds {
        twin: twins.lower_bound(),
        info: info_lower_bound(n, diameter),
    };
    let forced = twins.forced();
    let inst = Instance::new(&dist, diameter);

    let report = |set: Vec<usize>, status, nodes| ResolvingReport {
        set,
        status,
        bounds,
        elapsed: start.elapsed(),
        nodes,
    };

    let Some(greedy) = inst.greedy(&forced, deadline) else {
        return Ok(report(Vec::new(), SolveStatus::InfeasibleBudget, 0));
    };
    let upper = greedy.len();

    let root = inst.root(&forced);
    let mut scratch = Scratch::new(n);
    let root_bound = match inst.evaluate(&root, &mut scratch) {
        Eval::Open { bound, .. } => forced.len() + bound,
        Eval::Done | Eval::Infeasible => forced.len(),
    };
    if upper <= root_bound.max(bounds.twin).max(bounds.info) {
        return Ok(report(greedy, SolveStatus::Exact, 1));
    }

    // Split the top of the tree into tasks, keeping depth-first order.
    let threads = config.threads.max(1);
    let mut tasks = vec![root];
    for _ in 0..3 {
        if tasks.len() >= 4 * threads {
            break;
        }
        let mut next = Vec::new();
        for node in tasks {
            match inst.evaluate(&node, &mut scratch) {
                Eval::Open { bound, pair } if node.chosen.len() + bound < upper => {
                    next.extend(inst.children(&node, pair));
                }
                Eval::Open { .. } | Eval::Infeasible => {}
                Eval::Done => next.push(node),
            }
        }
        tasks = next;
    }

    let global_best = AtomicUsize::new(upper);
    let aborted = AtomicBool::new(false);
    let run_task = |node: Node| {
        let mut search = Search {
            inst: &inst,
            global_best: &global_best,
            aborted: &aborted,
            deadline,
            scratch: Scratch::new(n),
            nodes: 0,
            best_size: upper,
            best: None,
        };
        search.run(node);
        (search.best, search.nodes)
    };
    let results: Vec<(Option<Vec<usize>>, u64)> = if threads == 1 {
        tasks.into_iter().map(run_task).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| tasks.into_par_iter().map(run_task).collect())
    };

    let nodes = results.iter().map(|r| r.1).sum::<u64>() + 1;
    let best = results
        .into_iter()
        .filter_map(|r| r.0)
        .fold(greedy, |acc, s| if s.len() < acc.len() { s } else { acc });
    let status = if aborted.load(Ordering::Relaxed) {
        SolveStatus::UpperBound
    } else {
        SolveStatus::Exact
    };
    Ok(report(best, status, nodes))
}
