//! Min-conflicts local search over two-colorings of `K_n`, `n ≤ 64`.
//!
//! The objective counts forbidden substructures with multiplicity (for B3+,
//! every spine edge contributes `e(W) · (|W| - 2)` where `W` is the common
//! neighborhood), so it is zero exactly on witnesses. Each step recolors the
//! conflicted edge with the best resulting objective, subject to a tabu
//! tenure; a random conflicted edge is taken with small probability.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{LocalOutcome, SearchBudget};
use crate::graph::EdgeColoredCompleteGraph;
use crate::pattern::PatternKind;

const NOISE: f64 = 0.05;
const RESTART_AFTER: u64 = 20_000;

fn choose3(x: u64) -> u64 {
    if x < 3 {
        0
    } else {
        x * (x - 1) * (x - 2) / 6
    }
}

fn edges_within(rows: &[u64], set: u64) -> u64 {
    let mut twice = 0;
    let mut s = set;
    while s != 0 {
        let x = s.trailing_zeros() as usize;
        s &= s - 1;
        twice += (rows[x] & set).count_ones() as u64;
    }
    twice / 2
}

/// Weighted count of copies of `kind` in the graph given by `rows`.
pub(crate) fn violation_score(rows: &[u64], kind: PatternKind) -> u64 {
    let n = rows.len();
    let mut total = 0;
    match kind {
        PatternKind::S3 => {
            for row in rows {
                total += choose3(row.count_ones() as u64);
            }
        }
        PatternKind::S3Plus => {
            for row in rows {
                let d = row.count_ones() as u64;
                if d >= 3 {
                    total += edges_within(rows, *row) * (d - 2);
                }
            }
        }
        _ => {
            for u in 0..n {
                let mut higher = rows[u] & u64::MAX.checked_shl(u as u32 + 1).unwrap_or(0);
                while higher != 0 {
                    let v = higher.trailing_zeros() as usize;
                    higher &= higher - 1;
                    let w = rows[u] & rows[v];
                    let size = w.count_ones() as u64;
                    total += match kind {
                        PatternKind::K3 => size,
                        PatternKind::B3 => choose3(size),
                        PatternKind::K4 => edges_within(rows, w),
                        PatternKind::B3Plus if size >= 3 => edges_within(rows, w) * (size - 2),
                        _ => 0,
                    };
                }
            }
        }
    }
    total
}

struct State {
    n: usize,
    rows: [Vec<u64>; 2],
    kinds: [PatternKind; 2],
    score: [u64; 2],
}

impl State {
    fn from_color1(n: usize, kinds: [PatternKind; 2], color1: Vec<u64>) -> Self {
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let color2 = (0..n).map(|v| !color1[v] & mask & !(1 << v)).collect();
        let rows = [color1, color2];
        let score = [violation_score(&rows[0], kinds[0]), violation_score(&rows[1], kinds[1])];
        State { n, rows, kinds, score }
    }

    fn total(&self) -> u64 {
        self.score[0] + self.score[1]
    }

    fn color_of(&self, u: usize, v: usize) -> usize {
        if self.rows[0][u] >> v & 1 == 1 {
            0
        } else {
            1
        }
    }

    fn toggle(rows: &mut [u64], u: usize, v: usize) {
        rows[u] ^= 1 << v;
        rows[v] ^= 1 << u;
    }

    /// Scores of both classes after recoloring `uv`, and whether `uv` takes
    /// part in a violation of its current color.
    fn probe(&mut self, u: usize, v: usize) -> ([u64; 2], bool) {
        let from = self.color_of(u, v);
        let to = 1 - from;
        Self::toggle(&mut self.rows[from], u, v);
        Self::toggle(&mut self.rows[to], u, v);
        let mut next = [0; 2];
        next[from] = violation_score(&self.rows[from], self.kinds[from]);
        next[to] = violation_score(&self.rows[to], self.kinds[to]);
        Self::toggle(&mut self.rows[from], u, v);
        Self::toggle(&mut self.rows[to], u, v);
        let conflicted = next[from] < self.score[from];
        (next, conflicted)
    }

    fn flip(&mut self, u: usize, v: usize, next: [u64; 2]) {
        let from = self.color_of(u, v);
        Self::toggle(&mut self.rows[from], u, v);
        Self::toggle(&mut self.rows[1 - from], u, v);
        self.score = next;
    }

    fn graph(&self) -> EdgeColoredCompleteGraph {
        EdgeColoredCompleteGraph::from_fn(self.n, 2, |i, j| (self.color_of(i, j) + 1) as u8).expect("two-coloring")
    }
}

fn random_color1(n: usize, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
    }
    rows
}

fn color1_rows(g: &EdgeColoredCompleteGraph) -> Vec<u64> {
    let n = g.order();
    let mut rows = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if g.color(u, v) == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
        }
    }
    rows
}

pub(crate) fn min_conflicts(
    a: PatternKind,
    b: PatternKind,
    n: usize,
    budget: &SearchBudget,
    start: Option<&EdgeColoredCompleteGraph>,
) -> LocalOutcome {
    let began = Instant::now();
    let deadline = began + budget.time_limit;
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let kinds = [a, b];
    let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let index = |u: usize, v: usize| u * (2 * n - u - 1) / 2 + (v - u - 1);

    let initial = match start {
        Some(g) => color1_rows(g),
        None => random_color1(n, &mut rng),
    };
    let mut state = State::from_color1(n, kinds, initial);
    let mut tabu_until = vec![0u64; edges.len()];
    let mut best = state.total();
    let mut since_best = 0u64;
    let mut steps = 0u64;
    let mut candidates = Vec::with_capacity(edges.len());

    loop {
        if state.total() == 0 {
            let g = state.graph();
            if super::certify_two_coloring(&g, a, b) {
                return LocalOutcome::Witness { graph: g, steps };
            }
            unreachable!("zero objective implies no forbidden copy");
        }
        if steps >= budget.max_nodes || Instant::now() >= deadline {
            return LocalOutcome::Timeout { steps };
        }
        steps += 1;

        candidates.clear();
        for &(u, v) in &edges {
            let (next, conflicted) = state.probe(u, v);
            if conflicted {
                candidates.push((u, v, next));
            }
        }
        let pick = if rng.gen_bool(NOISE) {
            candidates.choose(&mut rng).copied()
        } else {
            let mut best_move: Option<(usize, usize, [u64; 2])> = None;
            let mut ties = 0u32;
            for &(u, v, next) in &candidates {
                let total = next[0] + next[1];
                let aspired = total < best;
                if tabu_until[index(u, v)] > steps && !aspired {
                    continue;
                }
                match best_move {
                    Some((_, _, cur)) if cur[0] + cur[1] < total => {}
                    Some((_, _, cur)) if cur[0] + cur[1] == total => {
                        ties += 1;
                        if rng.gen_range(0..=ties) == 0 {
                            best_move = Some((u, v, next));
                        }
                    }
                    _ => {
                        ties = 0;
                        best_move = Some((u, v, next));
                    }
                }
            }
            best_move.or_else(|| candidates.choose(&mut rng).copied())
        };
        let Some((u, v, next)) = pick else {
            unreachable!("positive objective implies a conflicted edge");
        };
        state.flip(u, v, next);
        tabu_until[index(u, v)] = steps + 5 + rng.gen_range(0..10);

        if state.total() < best {
            best = state.total();
            since_best = 0;
        } else {
            since_best += 1;
            if since_best > RESTART_AFTER {
                state = State::from_color1(n, kinds, random_color1(n, &mut rng));
                best = state.total();
                since_best = 0;
                tabu_until.fill(0);
            }
        }
    }
}
