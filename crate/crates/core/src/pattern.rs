//! The fixed catalog of small target graphs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Color, EdgeColoredCompleteGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    K3,
    S3,
    S3Plus,
    B3,
    B3Plus,
    K4,
}

impl PatternKind {
    pub const ALL: [PatternKind; 6] = [
        PatternKind::K3,
        PatternKind::S3,
        PatternKind::S3Plus,
        PatternKind::B3,
        PatternKind::B3Plus,
        PatternKind::K4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::K3 => "K3",
            PatternKind::S3 => "S3",
            PatternKind::S3Plus => "S3plus",
            PatternKind::B3 => "B3",
            PatternKind::B3Plus => "B3plus",
            PatternKind::K4 => "K4",
        }
    }

    pub fn graph(self) -> PatternGraph {
        let edges: &[(usize, usize)] = match self {
            PatternKind::K3 => &[(0, 1), (0, 2), (1, 2)],
            // center 0, leaves 1..=3
            PatternKind::S3 => &[(0, 1), (0, 2), (0, 3)],
            PatternKind::S3Plus => &[(0, 1), (0, 2), (0, 3), (1, 2)],
            // spine 0-1, pages 2, 3, 4
            PatternKind::B3 => &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
            PatternKind::B3Plus => &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
            ],
            PatternKind::K4 => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        };
        PatternGraph {
            kind: self,
            order: self.order(),
            edges: edges.to_vec(),
        }
    }

    #[inline]
    pub fn order(self) -> usize {
        match self {
            PatternKind::K3 => 3,
            PatternKind::S3 | PatternKind::S3Plus | PatternKind::K4 => 4,
            PatternKind::B3 | PatternKind::B3Plus => 5,
        }
    }

    /// The smallest pattern whose absence survives blowing every vertex up
    /// into an independent set of two or more vertices.
    ///
    /// A copy of the pattern inside such a blow-up is a homomorphic image in
    /// the original color class, and identifying non-adjacent pattern
    /// vertices collapses S3+ and B3 onto K3, and B3+ onto K4.
    pub fn blow_up_kernel(self) -> PatternKind {
        match self {
            PatternKind::K3 | PatternKind::S3Plus | PatternKind::B3 => PatternKind::K3,
            PatternKind::B3Plus | PatternKind::K4 => PatternKind::K4,
            PatternKind::S3 => PatternKind::S3,
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PatternKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "k3" => Ok(PatternKind::K3),
            "s3" => Ok(PatternKind::S3),
            "s3plus" | "s3+" => Ok(PatternKind::S3Plus),
            "b3" => Ok(PatternKind::B3),
            "b3plus" | "b3+" => Ok(PatternKind::B3Plus),
            "k4" => Ok(PatternKind::K4),
            _ => Err(Error::InvalidArgument(format!("unknown pattern {s:?}"))),
        }
    }
}

/// A small simple graph given by an edge list over `0..order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    pub kind: PatternKind,
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
}

impl PatternGraph {
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.edges
            .iter()
            .any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b))
    }
}

/// All six patterns, in [`PatternKind::ALL`] order.
pub fn pattern_catalog() -> Vec<PatternGraph> {
    PatternKind::ALL.iter().map(|k| k.graph()).collect()
}

/// Host vertices listed in pattern-vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    /// True when the map is injective, in range, and every pattern edge lands
    /// on a host edge of color `c`.
    pub fn validates(&self, g: &EdgeColoredCompleteGraph, p: &PatternGraph, c: Color) -> bool {
        if self.map.len() != p.order || self.map.iter().any(|&v| v >= g.order()) {
            return false;
        }
        for (i, &a) in self.map.iter().enumerate() {
            if self.map[i + 1..].contains(&a) {
                return false;
            }
        }
        p.edges
            .iter()
            .all(|&(a, b)| g.color(self.map[a], self.map[b]) == c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_shapes() {
        let expect = [
            (PatternKind::K3, 3, 3),
            (PatternKind::S3, 4, 3),
            (PatternKind::S3Plus, 4, 4),
            (PatternKind::B3, 5, 7),
            (PatternKind::B3Plus, 5, 8),
            (PatternKind::K4, 4, 6),
        ];
        let cat = pattern_catalog();
        assert_eq!(cat.len(), 6);
        for (p, (kind, order, edges)) in cat.iter().zip(expect) {
            assert_eq!(p.kind, kind);
            assert_eq!(p.order, order);
            assert_eq!(p.order, kind.order());
            assert_eq!(p.edges.len(), edges);
            for (i, &(a, b)) in p.edges.iter().enumerate() {
                assert!(a != b && a < order && b < order);
                assert!(!p.edges[i + 1..].iter().any(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b)));
            }
        }
    }

    #[test]
    fn plus_variants_add_one_edge() {
        let s3 = PatternKind::S3.graph();
        let s3p = PatternKind::S3Plus.graph();
        assert!(s3.edges.iter().all(|e| s3p.edges.contains(e)));
        // the extra edge joins two leaves
        assert!(s3p.adjacent(1, 2));
        let b3 = PatternKind::B3.graph();
        let b3p = PatternKind::B3Plus.graph();
        assert!(b3.edges.iter().all(|e| b3p.edges.contains(e)));
        // pages 2 and 3 have degree two in B3
        let deg = |v| b3.edges.iter().filter(|&&(a, b)| a == v || b == v).count();
        assert_eq!((deg(2), deg(3)), (2, 2));
        assert!(b3p.adjacent(2, 3));
    }

    #[test]
    fn parse_names() {
        for k in PatternKind::ALL {
            assert_eq!(k.name().parse::<PatternKind>().unwrap(), k);
        }
        assert_eq!("B3+".parse::<PatternKind>().unwrap(), PatternKind::B3Plus);
        assert!("K5".parse::<PatternKind>().is_err());
    }
}
