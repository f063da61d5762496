//! Lower-bound colorings by iterated blow-ups of sharpness examples.
//!
//! The construction starts from a small base graph chosen by the condition
//! label, then spends the remaining colors two at a time: each pair of
//! first-r colors wraps the current graph in a blow-up of Q6, each pair of
//! middle-s colors or last-t colors in a blow-up of Q1. Pairs are consumed
//! in the order r, s, t, and inside each role by ascending color index; the
//! base takes the lowest-index colors of each role it needs.

pub mod sharpness;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::detect::{forbidden_copy, rainbow_triangle, ForbiddenCopy};
use crate::error::{Error, Result};
use crate::formula::{condition_label, f, ColorRole, ConditionLabel, Parameters};
use crate::graph::{Color, EdgeColoredCompleteGraph};

pub use sharpness::{
    find_sharpness, search_sharpness, SharpnessExample, SharpnessId, SharpnessLibrary, WitnessCache,
};

/// Constructions larger than this are refused.
pub const MAX_CONSTRUCT_ORDER: u64 = 20_000;

/// Where the colors of an outer graph land in the global palette.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorRouting {
    /// `map[c - 1]` is the global color of outer color `c`.
    pub map: Vec<Color>,
    pub roles: Vec<ColorRole>,
}

impl ColorRouting {
    pub fn new(map: Vec<Color>, roles: Vec<ColorRole>) -> Result<Self> {
        if map.len() != roles.len() {
            return Err(Error::InvalidRouting("one role per mapped color".into()));
        }
        if map.contains(&0) {
            return Err(Error::InvalidRouting("colors are 1-based".into()));
        }
        for (i, c) in map.iter().enumerate() {
            if map[i + 1..].contains(c) {
                return Err(Error::InvalidRouting(format!("color {c} mapped twice")));
            }
        }
        Ok(ColorRouting { map, roles })
    }

    /// Routing onto `colors`, with roles read off the parameters.
    pub fn for_params(p: &Parameters, colors: &[Color]) -> Result<Self> {
        Self::new(colors.to_vec(), colors.iter().map(|&c| p.role_of(c)).collect())
    }
}

/// Replaces every vertex of `outer` by a copy of `inner` and every outer
/// edge `{u, v}` by a complete bipartite graph between the two copies,
/// colored `routing.map[color(u, v) - 1]`.
///
/// Vertex `b * |inner| + i` of the result is vertex `i` of block `b`.
pub fn blow_up(
    outer: &EdgeColoredCompleteGraph,
    inner: &EdgeColoredCompleteGraph,
    routing: &ColorRouting,
) -> Result<EdgeColoredCompleteGraph> {
    if routing.map.len() != outer.palette_size() as usize {
        return Err(Error::InvalidRouting(format!(
            "outer graph has {} colors but routing maps {}",
            outer.palette_size(),
            routing.map.len()
        )));
    }
    let used = inner.used_colors();
    if let Some(&c) = routing.map.iter().find(|c| used.contains(c)) {
        return Err(Error::RoutingCollision(c));
    }
    let m = inner.order();
    let k = routing.map.iter().copied().chain([inner.palette_size()]).max().unwrap_or(0);
    EdgeColoredCompleteGraph::from_fn(outer.order() * m, k, |x, y| {
        let (bx, by) = (x / m, y / m);
        if bx == by {
            inner.color(x % m, y % m)
        } else {
            routing.map[outer.color(bx, by) as usize - 1]
        }
    })
}

/// Hands out colors of each role in ascending order.
#[derive(Debug, Clone)]
struct ColorAllocator {
    params: Parameters,
    taken: [u32; 3],
}

impl ColorAllocator {
    fn new(params: Parameters) -> Self {
        ColorAllocator { params, taken: [0; 3] }
    }

    fn slot(role: ColorRole) -> usize {
        match role {
            ColorRole::FirstR => 0,
            ColorRole::MiddleS => 1,
            ColorRole::LastT => 2,
        }
    }

    fn remaining(&self, role: ColorRole) -> u32 {
        let range = self.params.colors_with_role(role);
        let total = range.end() + 1 - range.start();
        total - self.taken[Self::slot(role)]
    }

    fn take(&mut self, role: ColorRole) -> Result<Color> {
        if self.remaining(role) == 0 {
            return Err(Error::Construction(format!("no {role:?} color left for {}", self.params)));
        }
        let c = self.params.colors_with_role(role).start() + self.taken[Self::slot(role)];
        self.taken[Self::slot(role)] += 1;
        Ok(c as Color)
    }
}

struct Builder<'a> {
    params: Parameters,
    k: u8,
    lib: &'a SharpnessLibrary,
    colors: ColorAllocator,
}

impl Builder<'_> {
    fn mono(&self, n: usize, c: Color) -> Result<EdgeColoredCompleteGraph> {
        EdgeColoredCompleteGraph::monochromatic(n, c, self.k)
    }

    fn point(&self) -> EdgeColoredCompleteGraph {
        EdgeColoredCompleteGraph::single_vertex(self.k)
    }

    /// Blows `q` up on `inner`, routing color 1 of `q` to a fresh color of
    /// `role1` and color 2 to one of `role2`.
    fn wrap(
        &mut self,
        q: SharpnessId,
        roles: [ColorRole; 2],
        inner: &EdgeColoredCompleteGraph,
    ) -> Result<EdgeColoredCompleteGraph> {
        let ex = if inner.order() > 1 {
            self.lib.get_safe(q)?
        } else {
            self.lib.get(q)?
        };
        let colors = [self.colors.take(roles[0])?, self.colors.take(roles[1])?];
        let routing = ColorRouting::for_params(&self.params, &colors)?;
        blow_up(&ex.graph, inner, &routing)
    }

    fn base(&mut self) -> Result<EdgeColoredCompleteGraph> {
        use ColorRole::*;
        use ConditionLabel::*;
        use SharpnessId::*;
        let Parameters { s, t, .. } = self.params;
        let (s_odd, t_odd) = (s % 2 == 1, t % 2 == 1);
        let point = self.point();
        match condition_label(&self.params)? {
            C1 => Ok(point),
            C2 => {
                let c = self.colors.take(LastT)?;
                self.mono(2, c)
            }
            C3 => self.wrap(Q3, [LastT, FirstR], &point),
            C4 => {
                let c = self.colors.take(FirstR)?;
                self.mono(4, c)
            }
            C5 if !s_odd => self.wrap(Q4, [MiddleS, MiddleS], &point),
            C5 => self.wrap(Q2, [LastT, MiddleS], &point),
            C6 if s_odd => {
                let c = self.colors.take(MiddleS)?;
                self.mono(3, c)
            }
            C6 => {
                let c = self.colors.take(MiddleS)?;
                let k3 = self.mono(3, c)?;
                self.wrap(Q1, [MiddleS, LastT], &k3)
            }
            C7 if !s_odd => {
                let q4 = self.wrap(Q4, [MiddleS, MiddleS], &point)?;
                self.wrap(Q3, [LastT, FirstR], &q4)
            }
            C7 => {
                let c = self.colors.take(MiddleS)?;
                let k3 = self.mono(3, c)?;
                let g3 = self.wrap(Q3, [LastT, FirstR], &k3)?;
                // outer K2 in one fresh last-t color
                let edge = self.colors.take(LastT)?;
                let k2 = EdgeColoredCompleteGraph::monochromatic(2, 1, 1)?;
                blow_up(&k2, &g3, &ColorRouting::for_params(&self.params, &[edge])?)
            }
            C8 => {
                let q4 = self.wrap(Q4, [MiddleS, MiddleS], &point)?;
                self.wrap(Q3, [MiddleS, FirstR], &q4)
            }
            C9 => self.wrap(Q5, [MiddleS, FirstR], &point),
            C10 => {
                let c = self.colors.take(MiddleS)?;
                let k3 = self.mono(3, c)?;
                let outer_k3_color = if s_odd && t_odd { LastT } else { MiddleS };
                self.wrap(Q3, [outer_k3_color, FirstR], &k3)
            }
        }
    }
}

fn palette_size(p: &Parameters) -> Result<u8> {
    match p.k() {
        0 => Err(Error::EmptyPalette),
        k if k > 255 => Err(Error::PaletteTooLarge(k)),
        k => Ok(k as u8),
    }
}

/// The first graph of the recursion for `p`, over the palette `1..=k`.
pub fn base_graph(p: &Parameters, lib: &SharpnessLibrary) -> Result<EdgeColoredCompleteGraph> {
    let k = if p.k() == 0 { 0 } else { palette_size(p)? };
    if k == 0 {
        return Ok(EdgeColoredCompleteGraph::single_vertex(0));
    }
    let mut b = Builder {
        params: *p,
        k,
        lib,
        colors: ColorAllocator::new(*p),
    };
    b.base()?.with_palette(k)
}

/// A Gallai coloring of order `f(p)` with no B3+ in the first `r` colors,
/// no S3+ in the middle `s` and no K3 in the last `t`. The result is
/// verified before it is returned.
pub fn construct_lower_bound(p: &Parameters, lib: &SharpnessLibrary) -> Result<EdgeColoredCompleteGraph> {
    use ColorRole::*;
    let k = palette_size(p)?;
    let target = f(p);
    match target.to_u64() {
        Some(n) if n <= MAX_CONSTRUCT_ORDER => {}
        _ => return Err(Error::TooLarge(target.to_string(), MAX_CONSTRUCT_ORDER)),
    }
    let mut b = Builder {
        params: *p,
        k,
        lib,
        colors: ColorAllocator::new(*p),
    };
    let mut g = b.base()?;
    while b.colors.remaining(FirstR) >= 2 {
        g = b.wrap(SharpnessId::Q6, [FirstR, FirstR], &g)?;
    }
    while b.colors.remaining(MiddleS) >= 2 {
        if g.used_colors().is_empty() {
            return Err(Error::Construction(format!(
                "middle-s pair reached an uncolored inner graph for {p}"
            )));
        }
        g = b.wrap(SharpnessId::Q1, [MiddleS, MiddleS], &g)?;
    }
    while b.colors.remaining(LastT) >= 2 {
        g = b.wrap(SharpnessId::Q1, [LastT, LastT], &g)?;
    }
    if [FirstR, MiddleS, LastT].iter().any(|&r| b.colors.remaining(r) != 0) {
        return Err(Error::Construction(format!("unspent colors after construction for {p}")));
    }
    let g = g.with_palette(k)?;
    let cert = verify_construction(&g, p);
    if !cert.is_valid() {
        return Err(Error::Construction(format!("{p}: {cert:?}")));
    }
    Ok(g)
}

/// Outcome of checking a coloring against the lower-bound claim for `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub order: usize,
    pub expected_order: String,
    pub order_ok: bool,
    pub gallai_ok: bool,
    pub avoid_ok: bool,
    pub rainbow: Option<[usize; 3]>,
    pub forbidden: Option<ForbiddenCopy>,
    pub palette_mismatch: bool,
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        self.order_ok && self.gallai_ok && self.avoid_ok
    }
}

/// Order, Gallai property and avoidance of every role's pattern.
pub fn verify_construction(g: &EdgeColoredCompleteGraph, p: &Parameters) -> Certificate {
    let expected: BigUint = f(p);
    let rainbow = rainbow_triangle(g);
    let (forbidden, palette_mismatch) = match forbidden_copy(g, p) {
        Ok(found) => (found, false),
        Err(_) => (None, true),
    };
    Certificate {
        order: g.order(),
        order_ok: BigUint::from(g.order()) == expected,
        expected_order: expected.to_string(),
        gallai_ok: rainbow.is_none(),
        avoid_ok: !palette_mismatch && forbidden.is_none(),
        rainbow,
        forbidden,
        palette_mismatch,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::f_u64;

    fn c5() -> EdgeColoredCompleteGraph {
        EdgeColoredCompleteGraph::from_fn(5, 2, |i, j| if (j - i) % 5 == 1 || (j - i) % 5 == 4 { 1 } else { 2 })
            .unwrap()
    }

    #[test]
    fn blow_up_on_a_point_relabels() {
        let g = blow_up(
            &c5(),
            &EdgeColoredCompleteGraph::single_vertex(0),
            &ColorRouting::new(vec![4, 7], vec![ColorRole::LastT; 2]).unwrap(),
        )
        .unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.palette_size(), 7);
        assert_eq!(g.color(0, 1), 4);
        assert_eq!(g.color(0, 2), 7);
    }

    #[test]
    fn blow_up_orders_and_blocks() {
        let inner = EdgeColoredCompleteGraph::monochromatic(3, 1, 1).unwrap();
        let routing = ColorRouting::new(vec![2, 3], vec![ColorRole::LastT; 2]).unwrap();
        let g = blow_up(&c5(), &inner, &routing).unwrap();
        assert_eq!(g.order(), 15);
        assert_eq!(g.palette_size(), 3);
        for x in 0..15 {
            for y in x + 1..15 {
                let expect = if x / 3 == y / 3 { 1 } else { c5().color(x / 3, y / 3) + 1 };
                assert_eq!(g.color(x, y), expect);
            }
        }
        assert!(rainbow_triangle(&g).is_none());
    }

    #[test]
    fn blow_up_rejects_collisions() {
        let inner = EdgeColoredCompleteGraph::monochromatic(3, 2, 2).unwrap();
        let routing = ColorRouting::new(vec![2, 3], vec![ColorRole::LastT; 2]).unwrap();
        assert!(matches!(blow_up(&c5(), &inner, &routing), Err(Error::RoutingCollision(2))));
        // color 1 is in the palette of `inner` but unused, so it is fresh
        let routing = ColorRouting::new(vec![1, 3], vec![ColorRole::LastT; 2]).unwrap();
        assert!(blow_up(&c5(), &inner, &routing).is_ok());
        assert!(ColorRouting::new(vec![3, 3], vec![ColorRole::LastT; 2]).is_err());
        let short = ColorRouting::new(vec![3], vec![ColorRole::LastT]).unwrap();
        assert!(blow_up(&c5(), &inner, &short).is_err());
    }

    #[test]
    fn allocator_hands_out_lowest_first() {
        let mut a = ColorAllocator::new(Parameters::new(2, 3, 1));
        assert_eq!(a.take(ColorRole::MiddleS).unwrap(), 3);
        assert_eq!(a.take(ColorRole::MiddleS).unwrap(), 4);
        assert_eq!(a.remaining(ColorRole::MiddleS), 1);
        assert_eq!(a.take(ColorRole::LastT).unwrap(), 6);
        assert!(a.take(ColorRole::LastT).is_err());
    }

    #[test]
    fn base_orders_match_f_at_minimal_triples() {
        let lib = SharpnessLibrary::new();
        // one minimal triple per base sub-case
        let cases = [
            ((0, 0, 0), 1),
            ((0, 0, 1), 2),
            ((1, 0, 1), 8),
            ((1, 0, 0), 4),
            ((0, 2, 0), 6),
            ((0, 1, 1), 6),
            ((0, 1, 0), 3),
            ((0, 2, 1), 15),
            ((1, 2, 1), 48),
            ((1, 1, 2), 48),
            ((1, 3, 0), 48),
            ((1, 1, 0), 9),
            ((1, 1, 1), 24),
            ((1, 2, 0), 24),
        ];
        for ((r, s, t), order) in cases {
            let p = Parameters::new(r, s, t);
            let base = base_graph(&p, &lib).unwrap();
            assert_eq!(base.order(), order, "{p}");
            if p.k() > 0 {
                assert_eq!(f_u64(&p).unwrap(), order as u64, "{p}");
            }
        }
    }

    #[test]
    fn certificate_fields() {
        let k6 = EdgeColoredCompleteGraph::monochromatic(6, 1, 1).unwrap();
        let cert = verify_construction(&k6, &Parameters::new(1, 0, 0));
        assert!(!cert.avoid_ok);
        assert!(!cert.order_ok);
        assert!(cert.gallai_ok);
        let k4 = EdgeColoredCompleteGraph::monochromatic(4, 1, 1).unwrap();
        assert!(verify_construction(&k4, &Parameters::new(1, 0, 0)).is_valid());
        let cert = verify_construction(&k4, &Parameters::new(1, 1, 0));
        assert!(cert.palette_mismatch && !cert.avoid_ok);
    }

    #[test]
    fn small_constructions() {
        let lib = SharpnessLibrary::new();
        for ((r, s, t), n) in [((0, 0, 2), 5), ((2, 0, 0), 17), ((2, 1, 1), 102), ((1, 0, 0), 4)] {
            let g = construct_lower_bound(&Parameters::new(r, s, t), &lib).unwrap();
            assert_eq!(g.order(), n);
        }
        assert!(matches!(
            construct_lower_bound(&Parameters::new(0, 0, 0), &lib),
            Err(Error::EmptyPalette)
        ));
        assert!(matches!(
            construct_lower_bound(&Parameters::new(8, 0, 0), &lib),
            Err(Error::TooLarge(..))
        ));
    }
}
