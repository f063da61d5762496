//! Gallai partitions: vertex partitions with at least two parts where each
//! pair of parts is joined in a single color and at most two colors occur
//! between parts. Every coloring without a rainbow triangle has one.
//!
//! Search: for each color set `S` (a single color, then pairs, in
//! lexicographic order) the edges colored outside `S` must lie inside
//! parts, so their connected components seed the partition. Any pair of
//! parts joined in two colors is merged, lowest pair first, until every
//! cross pair is monochromatic. Each merge stays inside one part of any
//! Gallai partition whose cross colors lie in `S`, so the first `S` that
//! admits one ends with at least two parts.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Color, EdgeColoredCompleteGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GallaiPartition {
    /// Sorted parts, ordered by smallest vertex.
    pub parts: Vec<Vec<usize>>,
    pub cross_colors: Vec<Color>,
    /// Vertex `i` stands for `parts[i]`.
    pub reduced: EdgeColoredCompleteGraph,
}

impl GallaiPartition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Validates `parts` against `g` and builds the reduced graph.
    pub fn from_parts(g: &EdgeColoredCompleteGraph, parts: Vec<Vec<usize>>) -> Result<Self> {
        let report = verify_partition(g, &parts)?;
        if let Some(v) = report.violation {
            return Err(Error::MalformedPartition(v.to_string()));
        }
        Ok(assemble(g, parts))
    }
}

/// Why a candidate partition is not a Gallai partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    TooFewParts { parts: usize },
    MixedPair { i: usize, j: usize, colors: [Color; 2] },
    TooManyCrossColors { colors: Vec<Color> },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::TooFewParts { parts } => write!(f, "{parts} part(s), need at least 2"),
            Violation::MixedPair { i, j, colors } => {
                write!(f, "parts {i} and {j} are joined in colors {} and {}", colors[0], colors[1])
            }
            Violation::TooManyCrossColors { colors } => write!(f, "{} colors between parts: {colors:?}", colors.len()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub valid: bool,
    pub violation: Option<Violation>,
}

fn membership(n: usize, parts: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut owner = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::MalformedPartition(format!("part {i} is empty")));
        }
        for &v in part {
            if v >= n {
                return Err(Error::MalformedPartition(format!("vertex {v} is out of range")));
            }
            if owner[v] != usize::MAX {
                return Err(Error::MalformedPartition(format!("vertex {v} is in parts {} and {i}", owner[v])));
            }
            owner[v] = i;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::MalformedPartition(format!("vertex {v} is in no part")));
    }
    Ok(owner)
}

/// Checks the Gallai partition conditions, reporting the first failure
/// (mixed pairs are reported lowest pair first).
pub fn verify_partition(g: &EdgeColoredCompleteGraph, parts: &[Vec<usize>]) -> Result<PartitionReport> {
    let owner = membership(g.order(), parts)?;
    let fail = |v| Ok(PartitionReport {
        valid: false,
        violation: Some(v),
    });
    if parts.len() < 2 {
        return fail(Violation::TooFewParts { parts: parts.len() });
    }
    let q = parts.len();
    let mut cross = vec![0 as Color; q * q];
    let mut first_mixed: Option<(usize, usize, [Color; 2])> = None;
    let n = g.order();
    for x in 0..n {
        for y in x + 1..n {
            let (px, py) = (owner[x], owner[y]);
            if px == py {
                continue;
            }
            let (i, j) = (px.min(py), px.max(py));
            let c = g.color(x, y);
            let slot = &mut cross[i * q + j];
            if *slot == 0 {
                *slot = c;
            } else if *slot != c && first_mixed.is_none_or(|(a, b, _)| (i, j) < (a, b)) {
                first_mixed = Some((i, j, [*slot, c]));
            }
        }
    }
    if let Some((i, j, colors)) = first_mixed {
        return fail(Violation::MixedPair { i, j, colors });
    }
    let colors: BTreeSet<Color> = cross.iter().copied().filter(|&c| c != 0).collect();
    if colors.len() > 2 {
        return fail(Violation::TooManyCrossColors {
            colors: colors.into_iter().collect(),
        });
    }
    Ok(PartitionReport {
        valid: true,
        violation: None,
    })
}

fn canonical(mut parts: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for p in &mut parts {
        p.sort_unstable();
    }
    parts.sort_unstable_by_key(|p| p[0]);
    parts
}

/// Builds the partition object for parts already known to be valid.
fn assemble(g: &EdgeColoredCompleteGraph, parts: Vec<Vec<usize>>) -> GallaiPartition {
    let parts = canonical(parts);
    let reduced = EdgeColoredCompleteGraph::from_fn(parts.len(), g.palette_size(), |i, j| g.color(parts[i][0], parts[j][0]))
        .expect("cross colors come from the palette");
    let cross_colors = reduced.used_colors().into_iter().collect();
    GallaiPartition {
        parts,
        cross_colors,
        reduced,
    }
}

const MIXED: Color = 0;

fn union_find_root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Seeds with the components outside `{a, b}` and merges mixed pairs.
fn try_color_set(g: &EdgeColoredCompleteGraph, a: Color, b: Color) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    for x in 0..n {
        for y in x + 1..n {
            let c = g.color(x, y);
            if c != a && c != b {
                let (rx, ry) = (union_find_root(&mut parent, x), union_find_root(&mut parent, y));
                if rx != ry {
                    parent[rx.max(ry)] = rx.min(ry);
                }
            }
        }
    }
    // roots are component minima, so part order follows smallest vertex
    let mut index = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let r = union_find_root(&mut parent, v);
        if index[r] == usize::MAX {
            index[r] = parts.len();
            parts.push(Vec::new());
        }
        parts[index[r]].push(v);
    }
    let q = parts.len();
    if q < 2 {
        return None;
    }
    let owner: Vec<usize> = (0..n).map(|v| index[union_find_root(&mut parent, v)]).collect();

    // status[i * q + j] for i < j: the single cross color, or MIXED
    let mut status: Vec<Option<Color>> = vec![None; q * q];
    for x in 0..n {
        for y in x + 1..n {
            let (i, j) = (owner[x], owner[y]);
            if i == j {
                continue;
            }
            let (i, j) = (i.min(j), i.max(j));
            let c = g.color(x, y);
            let s = &mut status[i * q + j];
            *s = match *s {
                None => Some(c),
                Some(prev) if prev == c => Some(c),
                _ => Some(MIXED),
            };
        }
    }
    let at = |status: &[Option<Color>], i: usize, j: usize| status[i.min(j) * q + i.max(j)];
    let mut alive = vec![true; q];
    let mut live = q;
    let mut row = 0;
    'scan: while row < q {
        if !alive[row] {
            row += 1;
            continue;
        }
        for col in row + 1..q {
            if !alive[col] || at(&status, row, col) != Some(MIXED) {
                continue;
            }
            // merge `col` into `row`
            alive[col] = false;
            live -= 1;
            if live < 2 {
                return None;
            }
            let moved = std::mem::take(&mut parts[col]);
            parts[row].extend(moved);
            for l in (0..q).filter(|&l| alive[l] && l != row) {
                let merged = match (at(&status, row, l), at(&status, col, l)) {
                    (Some(x), Some(y)) if x == y => Some(x),
                    _ => Some(MIXED),
                };
                status[row.min(l) * q + row.max(l)] = merged;
            }
            let earlier = (0..row).find(|&l| alive[l] && at(&status, l, row) == Some(MIXED));
            row = earlier.unwrap_or(row);
            continue 'scan;
        }
        row += 1;
    }
    let parts: Vec<Vec<usize>> = parts.into_iter().filter(|p| !p.is_empty()).collect();
    Some(parts)
}

/// A Gallai partition of `g`, canonicalized.
pub fn find_gallai_partition(g: &EdgeColoredCompleteGraph) -> Result<GallaiPartition> {
    if g.order() < 2 {
        return Err(Error::InvalidArgument("a partition needs at least two vertices".into()));
    }
    let used: Vec<Color> = g.used_colors().into_iter().collect();
    for (ia, &a) in used.iter().enumerate() {
        for &b in &used[ia..] {
            if let Some(parts) = try_color_set(g, a, b) {
                return Ok(assemble(g, parts));
            }
        }
    }
    Err(Error::NoPartition)
}

/// Merges pairs of parts whose reduced rows agree, lowest pair first, while
/// at least three parts remain. The result admits no further single merge
/// but need not have the fewest parts possible.
pub fn coarsen_to_minimal(g: &EdgeColoredCompleteGraph, p: &GallaiPartition) -> GallaiPartition {
    let q = p.parts.len();
    let mut alive = vec![true; q];
    let mut live = q;
    let mut parts = p.parts.clone();
    let red = &p.reduced;
    'outer: while live > 2 {
        for i in (0..q).filter(|&i| alive[i]) {
            for j in (i + 1..q).filter(|&j| alive[j]) {
                let agree = (0..q)
                    .filter(|&l| alive[l] && l != i && l != j)
                    .all(|l| red.color(i, l) == red.color(j, l));
                if agree {
                    let moved = std::mem::take(&mut parts[j]);
                    parts[i].extend(moved);
                    alive[j] = false;
                    live -= 1;
                    continue 'outer;
                }
            }
        }
        break;
    }
    assemble(g, parts.into_iter().filter(|p| !p.is_empty()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> EdgeColoredCompleteGraph {
        EdgeColoredCompleteGraph::from_fn(5, 2, |i, j| if matches!(j - i, 1 | 4) { 1 } else { 2 }).unwrap()
    }

    #[test]
    fn monochromatic_gives_singletons_then_two_parts() {
        let g = EdgeColoredCompleteGraph::monochromatic(6, 1, 1).unwrap();
        let p = find_gallai_partition(&g).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.cross_colors, vec![1]);
        let c = coarsen_to_minimal(&g, &p);
        assert_eq!(c.len(), 2);
        assert!(verify_partition(&g, &c.parts).unwrap().valid);
    }

    #[test]
    fn pentagon_stays_at_five() {
        let g = pentagon();
        let p = find_gallai_partition(&g).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(coarsen_to_minimal(&g, &p).len(), 5);
    }

    #[test]
    fn rainbow_triangle_has_none() {
        let g = EdgeColoredCompleteGraph::new(3, 3, vec![1, 2, 3]).unwrap();
        assert!(matches!(find_gallai_partition(&g), Err(Error::NoPartition)));
        let r = verify_partition(&g, &[vec![0], vec![1], vec![2]]).unwrap();
        assert!(!r.valid);
        assert!(matches!(r.violation, Some(Violation::TooManyCrossColors { .. })));
    }

    #[test]
    fn verify_examples_and_malformed() {
        let g = EdgeColoredCompleteGraph::monochromatic(4, 1, 1).unwrap();
        assert!(verify_partition(&g, &[vec![0, 1], vec![2, 3]]).unwrap().valid);
        assert!(verify_partition(&g, &[vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(verify_partition(&g, &[vec![0, 1], vec![2]]).is_err());
        assert!(verify_partition(&g, &[vec![0, 1], vec![]]).is_err());
        let r = verify_partition(&g, &[vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(r.violation, Some(Violation::TooFewParts { parts: 1 }));
        let r = verify_partition(&pentagon(), &[vec![0, 1], vec![2, 3, 4]]).unwrap();
        assert!(matches!(r.violation, Some(Violation::MixedPair { i: 0, j: 1, .. })));
    }

    #[test]
    fn two_colored_split_is_found() {
        // blocks {0,1,2} and {3,4} joined in color 3, each block internally mixed
        let g = EdgeColoredCompleteGraph::from_fn(5, 3, |i, j| match (i < 3, j < 3) {
            (true, true) => if i == 0 { 1 } else { 2 },
            (false, false) => 1,
            _ => 3,
        })
        .unwrap();
        let p = find_gallai_partition(&g).unwrap();
        assert!(verify_partition(&g, &p.parts).unwrap().valid);
        assert!(p.len() >= 2);
    }
}
