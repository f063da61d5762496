//! Edge-colored complete graphs.
//!
//! Colors are stored once per unordered pair in a flat row-major upper
//! triangle: pair `(i, j)` with `i < j` lives at `i*(2n-i-1)/2 + (j-i-1)`.
//! Per-color adjacency bitsets are materialized lazily on first query and
//! shared by every detection kernel.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use crate::bitset;
use crate::error::{Error, Result};

/// A 1-based color index.
pub type Color = u8;

/// One bitset row per vertex per color.
#[derive(Clone, Debug)]
pub struct ColorAdjacency {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl ColorAdjacency {
    fn build(n: usize, k: u8, colors: &[Color]) -> Self {
        let words = bitset::words_for(n);
        let mut rows = vec![0u64; k as usize * n * words];
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                let c = colors[idx] as usize - 1;
                idx += 1;
                let base = c * n * words;
                bitset::insert(&mut rows[base + i * words..base + (i + 1) * words], j);
                bitset::insert(&mut rows[base + j * words..base + (j + 1) * words], i);
            }
        }
        ColorAdjacency { n, words, rows }
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    /// Neighbors of `v` in color `c` (1-based).
    #[inline]
    pub fn row(&self, c: Color, v: usize) -> &[u64] {
        let base = (c as usize - 1) * self.n * self.words + v * self.words;
        &self.rows[base..base + self.words]
    }
}

/// A complete graph on `n` vertices with exactly one color from `1..=k` on
/// every edge. Immutable once built.
#[derive(Clone)]
pub struct EdgeColoredCompleteGraph {
    n: usize,
    k: u8,
    colors: Vec<Color>,
    adjacency: OnceLock<ColorAdjacency>,
}

#[inline]
fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl EdgeColoredCompleteGraph {
    /// Builds a graph from the row-major upper triangle of colors.
    pub fn new(n: usize, k: u8, colors: Vec<Color>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        if colors.len() != pair_count(n) {
            return Err(Error::InvalidGraph(format!(
                "expected {} edge colors for n = {n}, got {}",
                pair_count(n),
                colors.len()
            )));
        }
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange { color: c, k });
        }
        Ok(EdgeColoredCompleteGraph {
            n,
            k,
            colors,
            adjacency: OnceLock::new(),
        })
    }

    /// Builds a graph by evaluating `color(i, j)` for every `i < j`.
    pub fn from_fn(n: usize, k: u8, mut color: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        let mut colors = Vec::with_capacity(pair_count(n));
        for i in 0..n {
            for j in i + 1..n {
                colors.push(color(i, j));
            }
        }
        Self::new(n, k, colors)
    }

    pub fn single_vertex(k: u8) -> Self {
        EdgeColoredCompleteGraph {
            n: 1,
            k,
            colors: Vec::new(),
            adjacency: OnceLock::new(),
        }
    }

    /// `K_n` with every edge in color `c`, palette `1..=k`.
    pub fn monochromatic(n: usize, c: Color, k: u8) -> Result<Self> {
        Self::from_fn(n, k, |_, _| c)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn palette_size(&self) -> u8 {
        self.k
    }

    /// Upper-triangle colors, row-major.
    #[inline]
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    #[inline]
    fn index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    /// Color of the edge `{i, j}`; panics if `i == j` or either is out of range.
    #[inline]
    pub fn color(&self, i: usize, j: usize) -> Color {
        assert!(i != j, "no loop at vertex {i}");
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        assert!(b < self.n, "vertex {b} out of range for order {}", self.n);
        self.colors[self.index(a, b)]
    }

    pub fn adjacency(&self) -> &ColorAdjacency {
        self.adjacency
            .get_or_init(|| ColorAdjacency::build(self.n, self.k, &self.colors))
    }

    /// Colors that actually occur on some edge.
    pub fn used_colors(&self) -> BTreeSet<Color> {
        let mut seen = [false; 256];
        for &c in &self.colors {
            seen[c as usize] = true;
        }
        (1..=255u8).filter(|&c| seen[c as usize]).collect()
    }

    /// Same coloring over a larger palette `1..=k`.
    pub fn with_palette(&self, k: u8) -> Result<Self> {
        Self::new(self.n, k, self.colors.clone())
    }

    /// The sub-coloring induced on `vertices`, relabeled `0..vertices.len()`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        if vertices.iter().any(|&v| v >= self.n) {
            return Err(Error::InvalidArgument("vertex out of range".into()));
        }
        let distinct: BTreeSet<_> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::InvalidArgument("repeated vertex".into()));
        }
        Self::from_fn(vertices.len(), self.k, |i, j| self.color(vertices[i], vertices[j]))
    }
}

impl PartialEq for EdgeColoredCompleteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.colors == other.colors
    }
}

impl Eq for EdgeColoredCompleteGraph {}

impl fmt::Debug for EdgeColoredCompleteGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgeColoredCompleteGraph")
            .field("n", &self.n)
            .field("k", &self.k)
            .finish_non_exhaustive()
    }
}
