//! Depth-first enumeration of two-colorings of `K_n` with forbidden-copy
//! pruning.
//!
//! Edges are colored one at a time. After each assignment the only copies
//! that can have appeared are those through the new edge, so the pruning
//! test embeds the pattern with one of its edges pinned to it. Prefixes that
//! complete the coloring of the first `m ≤ 6` vertices are deduplicated up
//! to isomorphism.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::canon::{IsoFilter, MAX_PREFIX};
use super::{EdgeOrder, SearchBudget, SearchOutcome};
use crate::graph::EdgeColoredCompleteGraph;
use crate::pattern::{PatternGraph, PatternKind};

/// A pattern with, for every orientation of every edge, a vertex order in
/// which each later vertex has a neighbor earlier in the order.
pub(crate) struct PinnedPattern {
    order: usize,
    neighbors: Vec<u32>,
    plans: Vec<Vec<usize>>,
}

impl PinnedPattern {
    pub(crate) fn new(kind: PatternKind) -> Self {
        let p: PatternGraph = kind.graph();
        let mut neighbors = vec![0u32; p.order];
        for &(a, b) in &p.edges {
            neighbors[a] |= 1 << b;
            neighbors[b] |= 1 << a;
        }
        let mut plans = Vec::new();
        for &(a, b) in &p.edges {
            for (x, y) in [(a, b), (b, a)] {
                let mut plan = vec![x, y];
                let mut placed = (1u32 << x) | (1 << y);
                while plan.len() < p.order {
                    let next = (0..p.order)
                        .find(|&v| placed >> v & 1 == 0 && neighbors[v] & placed != 0)
                        .expect("catalog patterns are connected");
                    placed |= 1 << next;
                    plan.push(next);
                }
                plans.push(plan);
            }
        }
        PinnedPattern {
            order: p.order,
            neighbors,
            plans,
        }
    }

    /// Whether the graph given by `rows` has a copy using the edge `uv`.
    pub(crate) fn through_edge(&self, rows: &[u64], u: usize, v: usize) -> bool {
        let mut host = [usize::MAX; 8];
        self.plans.iter().any(|plan| {
            host[plan[0]] = u;
            host[plan[1]] = v;
            self.extend(rows, plan, 2, &mut host, (1u64 << u) | (1 << v))
        })
    }

    fn extend(&self, rows: &[u64], plan: &[usize], depth: usize, host: &mut [usize; 8], used: u64) -> bool {
        if depth == self.order {
            return true;
        }
        let x = plan[depth];
        let mut cand = !used;
        for &y in &plan[..depth] {
            if self.neighbors[x] >> y & 1 == 1 {
                cand &= rows[host[y]];
            }
        }
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            host[x] = w;
            if self.extend(rows, plan, depth + 1, host, used | 1 << w) {
                return true;
            }
        }
        false
    }
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Dfs {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// Index of the vertex prefix completed by each edge, for colex order.
    completes: Vec<Option<usize>>,
    patterns: [PinnedPattern; 2],
    rows: [Vec<u64>; 2],
    color_first: Vec<usize>,
    iso: Option<IsoFilter>,
    nodes: u64,
    max_nodes: u64,
    deadline: Instant,
}

impl Dfs {
    fn run(&mut self, e: usize) -> Step {
        if e == self.edges.len() {
            return Step::Found;
        }
        let (u, v) = self.edges[e];
        let first = self.color_first[e];
        for c in [first, 1 - first] {
            self.nodes += 1;
            if self.nodes > self.max_nodes || (self.nodes & 0xfff == 0 && Instant::now() >= self.deadline) {
                return Step::OutOfBudget;
            }
            self.rows[c][u] |= 1 << v;
            self.rows[c][v] |= 1 << u;
            let mut admissible = !self.patterns[c].through_edge(&self.rows[c], u, v);
            if admissible {
                if let (Some(iso), Some(m)) = (self.iso.as_mut(), self.completes[e]) {
                    admissible = iso.insert(&self.rows[0], m);
                }
            }
            if admissible {
                match self.run(e + 1) {
                    Step::Exhausted => {}
                    done => return done,
                }
            }
            self.rows[c][u] &= !(1 << v);
            self.rows[c][v] &= !(1 << u);
        }
        Step::Exhausted
    }
}

pub(crate) fn dfs_search(
    a: PatternKind,
    b: PatternKind,
    n: usize,
    budget: &SearchBudget,
    order: EdgeOrder,
) -> SearchOutcome {
    let start = Instant::now();
    let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    let mut completes = Vec::new();
    match order {
        EdgeOrder::Colex => {
            for j in 1..n {
                for i in 0..j {
                    edges.push((i, j));
                    let m = j + 1;
                    completes.push((i + 1 == j && m <= MAX_PREFIX).then_some(m));
                }
            }
        }
        EdgeOrder::Lex => {
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j));
                    completes.push(None);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let color_first = if budget.seed == 0 {
        vec![0; edges.len()]
    } else {
        (0..edges.len()).map(|_| rng.gen_range(0..2)).collect()
    };
    let mut dfs = Dfs {
        n,
        completes,
        color_first,
        patterns: [PinnedPattern::new(a), PinnedPattern::new(b)],
        rows: [vec![0; n], vec![0; n]],
        iso: (order == EdgeOrder::Colex).then(IsoFilter::new),
        nodes: 0,
        max_nodes: budget.max_nodes,
        deadline: start + budget.time_limit,
        edges,
    };
    let step = dfs.run(0);
    let nodes = dfs.nodes;
    match step {
        Step::Found => {
            let rows = &dfs.rows[0];
            let g = EdgeColoredCompleteGraph::from_fn(dfs.n, 2, |i, j| if rows[i] >> j & 1 == 1 { 1 } else { 2 })
                .expect("complete two-coloring");
            SearchOutcome::Witness { graph: g, nodes }
        }
        Step::Exhausted => SearchOutcome::ExhaustiveNone { nodes },
        Step::OutOfBudget => SearchOutcome::BudgetExhausted { nodes },
    }
}
