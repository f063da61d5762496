//! Rainbow-triangle and monochromatic-copy detection.
//!
//! Every pattern in the catalog has a closed-neighborhood kernel over one
//! color class: triangles are edges with a common neighbor, B3+ is a spine
//! edge whose common neighborhood has at least three vertices and an
//! internal edge, and so on. All kernels run on bitset rows, so the cost of
//! a common-neighborhood query is `O(n / 64)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset;
use crate::error::{Error, Result};
use crate::formula::Parameters;
use crate::graph::{Color, ColorAdjacency, EdgeColoredCompleteGraph};
use crate::pattern::{Embedding, PatternGraph, PatternKind};

/// Read access to a single color class as bitset rows.
pub trait ColorClass {
    fn order(&self) -> usize;
    fn words(&self) -> usize;
    fn row(&self, v: usize) -> &[u64];
}

/// One color class of an [`EdgeColoredCompleteGraph`].
pub struct ClassView<'a> {
    adj: &'a ColorAdjacency,
    color: Color,
    n: usize,
}

impl<'a> ClassView<'a> {
    pub fn new(g: &'a EdgeColoredCompleteGraph, color: Color) -> Self {
        ClassView {
            adj: g.adjacency(),
            color,
            n: g.order(),
        }
    }
}

impl ColorClass for ClassView<'_> {
    fn order(&self) -> usize {
        self.n
    }
    fn words(&self) -> usize {
        self.adj.words()
    }
    fn row(&self, v: usize) -> &[u64] {
        self.adj.row(self.color, v)
    }
}

/// A graph on at most 64 vertices with one word per row.
pub struct SmallClass<'a> {
    pub rows: &'a [u64],
}

impl ColorClass for SmallClass<'_> {
    fn order(&self) -> usize {
        self.rows.len()
    }
    fn words(&self) -> usize {
        1
    }
    fn row(&self, v: usize) -> &[u64] {
        std::slice::from_ref(&self.rows[v])
    }
}

/// Finds a copy of `kind` in the class, returning host vertices in
/// pattern-vertex order (see [`PatternKind::graph`] for the numbering).
pub fn find_in_class<C: ColorClass + ?Sized>(class: &C, kind: PatternKind) -> Option<Vec<usize>> {
    if kind.order() > class.order() {
        return None;
    }
    match kind {
        PatternKind::S3 => find_star(class),
        PatternKind::K3 => find_triangle(class),
        PatternKind::S3Plus => find_star_plus(class),
        PatternKind::B3 => find_book(class),
        PatternKind::B3Plus | PatternKind::K4 => find_clique_extension(class, kind),
    }
}

fn find_star<C: ColorClass + ?Sized>(class: &C) -> Option<Vec<usize>> {
    (0..class.order()).find_map(|v| {
        let row = class.row(v);
        (bitset::count(row) >= 3).then(|| {
            let mut map = vec![v];
            map.extend(bitset::ones(row).take(3));
            map
        })
    })
}

fn find_triangle<C: ColorClass + ?Sized>(class: &C) -> Option<Vec<usize>> {
    for u in 0..class.order() {
        let ru = class.row(u);
        for v in bitset::ones(ru).filter(|&v| v > u) {
            if let Some(w) = bitset::first_common(ru, class.row(v)) {
                return Some(vec![u, v, w]);
            }
        }
    }
    None
}

/// A triangle `a x y` plus a pendant at `a`: some vertex of degree three or
/// more whose neighborhood contains an edge.
fn find_star_plus<C: ColorClass + ?Sized>(class: &C) -> Option<Vec<usize>> {
    for a in 0..class.order() {
        let ra = class.row(a);
        if bitset::count(ra) < 3 {
            continue;
        }
        for x in bitset::ones(ra) {
            if let Some(y) = bitset::first_common(class.row(x), ra) {
                let d = bitset::ones(ra).find(|&d| d != x && d != y)?;
                return Some(vec![a, x, y, d]);
            }
        }
    }
    None
}

fn find_book<C: ColorClass + ?Sized>(class: &C) -> Option<Vec<usize>> {
    let mut common = vec![0u64; class.words()];
    for u in 0..class.order() {
        let ru = class.row(u);
        for v in bitset::ones(ru).filter(|&v| v > u) {
            if bitset::intersect_into(ru, class.row(v), &mut common) >= 3 {
                let mut map = vec![u, v];
                map.extend(bitset::ones(&common).take(3));
                return Some(map);
            }
        }
    }
    None
}

/// K4 and B3+: scan spine edges `uv`, intersect their neighborhoods into
/// `W`, and look for an edge inside `W` (plus a third vertex of `W` for B3+).
fn find_clique_extension<C: ColorClass + ?Sized>(class: &C, kind: PatternKind) -> Option<Vec<usize>> {
    let need = if kind == PatternKind::B3Plus { 3 } else { 2 };
    let mut common = vec![0u64; class.words()];
    for u in 0..class.order() {
        let ru = class.row(u);
        if bitset::count(ru) < need + 1 {
            continue;
        }
        for v in bitset::ones(ru).filter(|&v| v > u) {
            if bitset::intersect_into(ru, class.row(v), &mut common) < need {
                continue;
            }
            for x in bitset::ones(&common) {
                if let Some(y) = bitset::first_common(class.row(x), &common) {
                    let mut map = vec![u, v, x, y];
                    if kind == PatternKind::B3Plus {
                        map.push(bitset::ones(&common).find(|&z| z != x && z != y)?);
                    }
                    return Some(map);
                }
            }
        }
    }
    None
}

/// Finds an embedding of `p` whose edges all carry color `c`. Copies are
/// subgraph copies: non-edges of the pattern are unconstrained.
pub fn find_mono_copy(g: &EdgeColoredCompleteGraph, p: &PatternGraph, c: Color) -> Result<Option<Embedding>> {
    if c == 0 || c > g.palette_size() {
        return Err(Error::ColorOutOfRange {
            color: c,
            k: g.palette_size(),
        });
    }
    if p.order > g.order() {
        return Ok(None);
    }
    let class = ClassView::new(g, c);
    Ok(find_in_class(&class, p.kind).map(|map| Embedding { map }))
}

/// Three vertices whose edges carry three distinct colors.
pub fn rainbow_triangle(g: &EdgeColoredCompleteGraph) -> Option<[usize; 3]> {
    let used: Vec<Color> = g.used_colors().into_iter().collect();
    if used.len() < 3 {
        return None;
    }
    let n = g.order();
    let adj = g.adjacency();
    let words = adj.words();
    let mut valid = vec![u64::MAX; words];
    if !n.is_multiple_of(64) {
        valid[words - 1] = (1u64 << (n % 64)) - 1;
    }
    let mut same = vec![0u64; words];
    for u in 0..n {
        for v in u + 1..n {
            let a = g.color(u, v);
            same.fill(0);
            for &b in &used {
                for ((s, x), y) in same.iter_mut().zip(adj.row(b, u)).zip(adj.row(b, v)) {
                    *s |= x & y;
                }
            }
            let (ra_u, ra_v) = (adj.row(a, u), adj.row(a, v));
            for i in 0..words {
                // neither edge to w has color a and the two differ
                let cand = valid[i] & !same[i] & !ra_u[i] & !ra_v[i];
                if cand != 0 {
                    let w = i * 64 + cand.trailing_zeros() as usize;
                    return Some([u, v, w]);
                }
            }
        }
    }
    None
}

pub fn is_gallai(g: &EdgeColoredCompleteGraph) -> bool {
    rainbow_triangle(g).is_none()
}

/// A monochromatic copy of a pattern in a color whose role forbids it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenCopy {
    pub color: Color,
    pub pattern: PatternKind,
    pub embedding: Embedding,
}

/// Searches for a B3+ in one of the first `r` colors, an S3+ in one of the
/// middle `s` colors, or a K3 in one of the last `t` colors. Colors are
/// checked in parallel; the reported witness is the one with the lowest color.
pub fn forbidden_copy(g: &EdgeColoredCompleteGraph, params: &Parameters) -> Result<Option<ForbiddenCopy>> {
    if params.k() != g.palette_size() as u32 {
        return Err(Error::PaletteMismatch {
            graph: g.palette_size(),
            params: params.k(),
        });
    }
    g.adjacency();
    let found = (1..=g.palette_size())
        .into_par_iter()
        .find_map_first(|c| {
            let pattern = params.role_of(c).pattern();
            find_in_class(&ClassView::new(g, c), pattern).map(|map| ForbiddenCopy {
                color: c,
                pattern,
                embedding: Embedding { map },
            })
        });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> EdgeColoredCompleteGraph {
        // color 1: {0,1,2} and {3,4,5}; color 2: the bipartite complement
        EdgeColoredCompleteGraph::from_fn(6, 2, |i, j| if (i < 3) == (j < 3) { 1 } else { 2 }).unwrap()
    }

    #[test]
    fn rainbow_in_three_colored_triangle() {
        let g = EdgeColoredCompleteGraph::new(3, 3, vec![1, 2, 3]).unwrap();
        let t = rainbow_triangle(&g).unwrap();
        assert_eq!(t, [0, 1, 2]);
        let mono = EdgeColoredCompleteGraph::monochromatic(7, 1, 3).unwrap();
        assert!(rainbow_triangle(&mono).is_none());
    }

    #[test]
    fn two_colors_never_rainbow() {
        assert!(rainbow_triangle(&two_triangles()).is_none());
    }

    #[test]
    fn mono_k5_contains_everything() {
        let g = EdgeColoredCompleteGraph::monochromatic(5, 1, 1).unwrap();
        for p in crate::pattern::pattern_catalog() {
            let e = find_mono_copy(&g, &p, 1).unwrap().expect("copy");
            assert!(e.validates(&g, &p, 1));
        }
    }

    #[test]
    fn k4_too_small_for_book() {
        let g = EdgeColoredCompleteGraph::monochromatic(4, 1, 1).unwrap();
        assert!(find_mono_copy(&g, &PatternKind::B3Plus.graph(), 1).unwrap().is_none());
        assert!(find_mono_copy(&g, &PatternKind::K4.graph(), 1).unwrap().is_some());
    }

    #[test]
    fn two_triangles_avoid_star_plus() {
        let g = two_triangles();
        for c in 1..=2 {
            assert!(find_mono_copy(&g, &PatternKind::S3Plus.graph(), c).unwrap().is_none());
        }
        assert!(find_mono_copy(&g, &PatternKind::K3.graph(), 1).unwrap().is_some());
        assert!(find_mono_copy(&g, &PatternKind::K3.graph(), 2).unwrap().is_none());
    }

    #[test]
    fn rejects_color_outside_palette() {
        let g = two_triangles();
        assert!(matches!(
            find_mono_copy(&g, &PatternKind::K3.graph(), 3),
            Err(Error::ColorOutOfRange { color: 3, k: 2 })
        ));
        assert!(find_mono_copy(&g, &PatternKind::K3.graph(), 0).is_err());
    }

    #[test]
    fn forbidden_copy_by_role() {
        let k5 = EdgeColoredCompleteGraph::monochromatic(5, 1, 1).unwrap();
        let hit = forbidden_copy(&k5, &Parameters::new(0, 0, 1)).unwrap().unwrap();
        assert_eq!((hit.color, hit.pattern), (1, PatternKind::K3));
        let k4 = EdgeColoredCompleteGraph::monochromatic(4, 1, 1).unwrap();
        assert!(forbidden_copy(&k4, &Parameters::new(1, 0, 0)).unwrap().is_none());
        assert!(matches!(
            forbidden_copy(&k4, &Parameters::new(1, 1, 0)),
            Err(Error::PaletteMismatch { .. })
        ));
    }

    #[test]
    fn rainbow_found_across_word_boundary() {
        // all edges color 1 except a rainbow triangle {0, 64, 100}
        let g = EdgeColoredCompleteGraph::from_fn(130, 3, |i, j| match (i, j) {
            (0, 64) => 2,
            (64, 100) => 3,
            _ => 1,
        })
        .unwrap();
        let t = rainbow_triangle(&g).unwrap();
        let mut t = t.to_vec();
        t.sort();
        assert_eq!(t, vec![0, 64, 100]);
    }
}
