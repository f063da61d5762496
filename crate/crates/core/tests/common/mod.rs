//! Brute-force oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use gallai_ramsey::{EdgeColoredCompleteGraph, PatternKind};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Tries every injective placement of the pattern's vertices.
pub fn brute_has_copy(g: &EdgeColoredCompleteGraph, kind: PatternKind, c: u8) -> bool {
    let p = kind.graph();
    let mut map = Vec::with_capacity(p.order);
    fn extend(g: &EdgeColoredCompleteGraph, edges: &[(usize, usize)], order: usize, c: u8, map: &mut Vec<usize>) -> bool {
        let m = map.len();
        if m == order {
            return true;
        }
        for v in 0..g.order() {
            if map.contains(&v) {
                continue;
            }
            let fits = edges
                .iter()
                .filter(|&&(a, b)| a.max(b) == m && a.min(b) < m)
                .all(|&(a, b)| g.color(map[a.min(b)], v) == c);
            if fits {
                map.push(v);
                if extend(g, edges, order, c, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(g, &p.edges, p.order, c, &mut map)
}

pub fn brute_rainbow(g: &EdgeColoredCompleteGraph) -> bool {
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let (x, y, z) = (g.color(a, b), g.color(a, c), g.color(b, c));
                if x != y && y != z && x != z {
                    return true;
                }
            }
        }
    }
    false
}

pub fn random_coloring(rng: &mut ChaCha8Rng, n: usize, k: u8) -> EdgeColoredCompleteGraph {
    EdgeColoredCompleteGraph::from_fn(n, k, |_, _| rng.gen_range(1..=k)).unwrap()
}

/// Colors of a random Gallai coloring on `n` vertices, built by nesting
/// substitutions of random two-colored graphs.
fn nested(rng: &mut ChaCha8Rng, n: usize, k: u8, out: &mut Vec<Vec<u8>>, offset: usize) {
    if n == 1 {
        return;
    }
    let q = rng.gen_range(2..=n.min(5));
    // random cut points split n into q nonempty blocks
    let mut cuts: Vec<usize> = (1..n).collect();
    for i in 0..q - 1 {
        let j = rng.gen_range(i..cuts.len());
        cuts.swap(i, j);
    }
    let mut cuts: Vec<usize> = cuts[..q - 1].to_vec();
    cuts.sort_unstable();
    let bounds: Vec<usize> = std::iter::once(0).chain(cuts).chain([n]).collect();
    let (c1, c2) = (rng.gen_range(1..=k), rng.gen_range(1..=k));
    let reduced: Vec<Vec<u8>> = (0..q)
        .map(|_| (0..q).map(|_| if rng.gen_bool(0.5) { c1 } else { c2 }).collect())
        .collect();
    for a in 0..q {
        for b in a + 1..q {
            for x in bounds[a]..bounds[a + 1] {
                for y in bounds[b]..bounds[b + 1] {
                    out[offset + x][offset + y] = reduced[a][b];
                }
            }
        }
        nested(rng, bounds[a + 1] - bounds[a], k, out, offset + bounds[a]);
    }
}

pub fn random_gallai(rng: &mut ChaCha8Rng, n: usize, k: u8) -> EdgeColoredCompleteGraph {
    let mut m = vec![vec![0u8; n]; n];
    nested(rng, n, k, &mut m, 0);
    EdgeColoredCompleteGraph::from_fn(n, k, |i, j| m[i][j]).unwrap()
}

/// Independent check of the Gallai partition conditions.
pub fn is_gallai_partition(g: &EdgeColoredCompleteGraph, parts: &[Vec<usize>]) -> bool {
    if parts.len() < 2 {
        return false;
    }
    let mut cross = std::collections::BTreeSet::new();
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            let first = g.color(a[0], b[0]);
            if a.iter().any(|&x| b.iter().any(|&y| g.color(x, y) != first)) {
                return false;
            }
            cross.insert(first);
        }
    }
    cross.len() <= 2
}

/// Calls `f` on every set partition of `0..n` (restricted growth strings).
pub fn for_each_set_partition(n: usize, f: &mut dyn FnMut(&[Vec<usize>])) {
    fn go(v: usize, n: usize, parts: &mut Vec<Vec<usize>>, f: &mut dyn FnMut(&[Vec<usize>])) {
        if v == n {
            f(parts);
            return;
        }
        for i in 0..=parts.len() {
            if i == parts.len() {
                parts.push(vec![v]);
            } else {
                parts[i].push(v);
            }
            go(v + 1, n, parts, f);
            if parts[i].len() == 1 {
                parts.pop();
            } else {
                parts[i].pop();
            }
        }
    }
    go(0, n, &mut Vec::new(), f);
}

/// Fewest parts of any Gallai partition, by enumeration (`n ≤ 8`).
pub fn brute_min_partition(g: &EdgeColoredCompleteGraph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for_each_set_partition(g.order(), &mut |parts| {
        if best.is_none_or(|b| parts.len() < b) && is_gallai_partition(g, parts) {
            best = Some(parts.len());
        }
    });
    best
}

/// Every Gallai coloring of `K_n` with at most `k` colors, one per class
/// under permuting the colors (colors first appear in increasing order
/// along the edge sequence). The palette of each graph is `k`.
pub fn all_gallai_colorings(n: usize, k: u8, f: &mut dyn FnMut(&EdgeColoredCompleteGraph)) {
    let edges: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let mut m = vec![vec![0u8; n]; n];
    fn go(
        i: usize,
        used: u8,
        n: usize,
        k: u8,
        edges: &[(usize, usize)],
        m: &mut Vec<Vec<u8>>,
        f: &mut dyn FnMut(&EdgeColoredCompleteGraph),
    ) {
        if i == edges.len() {
            let g = EdgeColoredCompleteGraph::from_fn(n, k, |a, b| m[a][b]).unwrap();
            f(&g);
            return;
        }
        let (u, v) = edges[i];
        for c in 1..=(used + 1).min(k) {
            let rainbow = (0..u).any(|w| {
                let (x, y) = (m[w][u], m[w][v]);
                x != y && x != c && y != c
            });
            if rainbow {
                continue;
            }
            m[u][v] = c;
            m[v][u] = c;
            go(i + 1, used.max(c), n, k, edges, m, f);
        }
    }
    go(0, 0, n, k, &edges, &mut m, f);
}
