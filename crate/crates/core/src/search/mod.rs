//! Search engines for two-color Ramsey witnesses.
//!
//! Color 1 must avoid the first pattern and color 2 the second. The
//! exhaustive engine distinguishes a completed search (a proof that no
//! witness exists) from a search that ran out of budget; the local search
//! can only ever report a witness or a timeout.

mod canon;
mod exhaustive;
mod local;

use std::time::{Duration, Instant};

use crate::detect::find_mono_copy;
use crate::error::{Error, Result};
use crate::graph::EdgeColoredCompleteGraph;
use crate::pattern::PatternKind;

pub use canon::IsoFilter;

/// Largest order the bitset search engines accept.
pub const MAX_SEARCH_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Cap on DFS nodes, or on local-search steps.
    pub max_nodes: u64,
    pub time_limit: Duration,
    pub seed: u64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, time_limit: Duration, seed: u64) -> Result<Self> {
        if max_nodes == 0 || time_limit.is_zero() {
            return Err(Error::InvalidArgument("search budget caps must be positive".into()));
        }
        Ok(SearchBudget {
            max_nodes,
            time_limit,
            seed,
        })
    }

    pub fn with_time(time_limit: Duration) -> Self {
        SearchBudget {
            max_nodes: u64::MAX,
            time_limit,
            seed: 0,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::with_time(Duration::from_secs(600))
    }
}

/// Edge visiting order of the exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeOrder {
    /// By larger endpoint, then smaller: each new vertex enters as late as
    /// possible, and completed vertex prefixes feed isomorph rejection.
    Colex,
    /// By smaller endpoint, then larger. No isomorph rejection.
    Lex,
}

#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Witness { graph: EdgeColoredCompleteGraph, nodes: u64 },
    /// The search completed: no witness of this order exists.
    ExhaustiveNone { nodes: u64 },
    BudgetExhausted { nodes: u64 },
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&EdgeColoredCompleteGraph> {
        match self {
            SearchOutcome::Witness { graph, .. } => Some(graph),
            _ => None,
        }
    }

    pub fn nodes(&self) -> u64 {
        match *self {
            SearchOutcome::Witness { nodes, .. }
            | SearchOutcome::ExhaustiveNone { nodes }
            | SearchOutcome::BudgetExhausted { nodes } => nodes,
        }
    }
}

#[derive(Debug, Clone)]
pub enum LocalOutcome {
    Witness { graph: EdgeColoredCompleteGraph, steps: u64 },
    /// No witness found; says nothing about existence.
    Timeout { steps: u64 },
}

impl LocalOutcome {
    pub fn into_witness(self) -> Option<EdgeColoredCompleteGraph> {
        match self {
            LocalOutcome::Witness { graph, .. } => Some(graph),
            LocalOutcome::Timeout { .. } => None,
        }
    }
}

/// True when color 1 has no copy of `a` and color 2 no copy of `b`,
/// according to the detectors.
pub fn certify_two_coloring(g: &EdgeColoredCompleteGraph, a: PatternKind, b: PatternKind) -> bool {
    g.palette_size() == 2
        && matches!(find_mono_copy(g, &a.graph(), 1), Ok(None))
        && matches!(find_mono_copy(g, &b.graph(), 2), Ok(None))
}

fn check_order(a: PatternKind, b: PatternKind, n: usize) -> Result<()> {
    if n < a.order().max(b.order()) {
        return Err(Error::InvalidArgument(format!(
            "order {n} is below the pattern sizes of ({a}, {b})"
        )));
    }
    if n > MAX_SEARCH_ORDER {
        return Err(Error::InvalidArgument(format!(
            "search supports orders up to {MAX_SEARCH_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// Exhaustive search for a two-coloring of `K_n` with no copy of `a` in
/// color 1 and no copy of `b` in color 2.
pub fn witness_search(a: PatternKind, b: PatternKind, n: usize, budget: &SearchBudget) -> Result<SearchOutcome> {
    witness_search_ordered(a, b, n, budget, EdgeOrder::Colex)
}

pub fn witness_search_ordered(
    a: PatternKind,
    b: PatternKind,
    n: usize,
    budget: &SearchBudget,
    order: EdgeOrder,
) -> Result<SearchOutcome> {
    check_order(a, b, n)?;
    let outcome = exhaustive::dfs_search(a, b, n, budget, order);
    if let Some(g) = outcome.witness() {
        if !certify_two_coloring(g, a, b) {
            return Err(Error::Certification {
                a,
                b,
                reason: "exhaustive search returned an uncertified coloring".into(),
            });
        }
    }
    Ok(outcome)
}

/// Min-conflicts search, from a random coloring drawn with `budget.seed`.
pub fn local_search_witness(a: PatternKind, b: PatternKind, n: usize, budget: &SearchBudget) -> Result<LocalOutcome> {
    check_order(a, b, n)?;
    Ok(local::min_conflicts(a, b, n, budget, None))
}

/// Min-conflicts search starting from a given two-coloring.
pub fn local_search_from(
    a: PatternKind,
    b: PatternKind,
    start: &EdgeColoredCompleteGraph,
    budget: &SearchBudget,
) -> Result<LocalOutcome> {
    check_order(a, b, start.order())?;
    if start.palette_size() != 2 {
        return Err(Error::InvalidArgument("start coloring must use two colors".into()));
    }
    Ok(local::min_conflicts(a, b, start.order(), budget, Some(start)))
}

/// A certified classical Ramsey value together with its lower-bound witness.
#[derive(Debug, Clone)]
pub struct RamseyValue {
    pub value: usize,
    /// A coloring of order `value - 1` avoiding both patterns.
    pub witness: EdgeColoredCompleteGraph,
    pub nodes: u64,
}

/// Smallest `n ≤ n_max` at which the exhaustive search proves that every
/// two-coloring of `K_n` has a copy of `a` in color 1 or `b` in color 2.
/// The time limit covers the whole scan.
pub fn compute_ramsey(a: PatternKind, b: PatternKind, n_max: usize, budget: &SearchBudget) -> Result<RamseyValue> {
    if n_max < 3 {
        return Err(Error::InvalidArgument("n_max must be at least 3".into()));
    }
    let deadline = Instant::now() + budget.time_limit;
    let first = a.order().max(b.order());
    // below `first` the larger pattern cannot fit, so give it every edge
    let trivial_color = if b.order() == first { 2 } else { 1 };
    let mut witness = EdgeColoredCompleteGraph::monochromatic(first - 1, trivial_color, 2)?;
    let mut nodes = 0;
    for n in first..=n_max.min(MAX_SEARCH_ORDER) {
        let remaining = deadline.saturating_duration_since(Instant::now());
        if remaining.is_zero() {
            return Err(Error::Inconclusive);
        }
        let step = SearchBudget {
            time_limit: remaining,
            ..*budget
        };
        match witness_search(a, b, n, &step)? {
            SearchOutcome::Witness { graph, nodes: used } => {
                nodes += used;
                witness = graph;
            }
            SearchOutcome::ExhaustiveNone { nodes: used } => {
                if !certify_two_coloring(&witness, a, b) {
                    return Err(Error::Certification {
                        a,
                        b,
                        reason: format!("witness of order {} failed re-verification", n - 1),
                    });
                }
                return Ok(RamseyValue {
                    value: n,
                    witness,
                    nodes: nodes + used,
                });
            }
            SearchOutcome::BudgetExhausted { .. } => return Err(Error::Inconclusive),
        }
    }
    Err(Error::Inconclusive)
}

/// The quadratic-residue two-coloring of `K_p`: `{i, j}` gets color 1 when
/// `j - i` is a nonzero square mod `p`. Self-complementary for `p ≡ 1 mod 4`.
pub fn paley_coloring(p: usize) -> Result<EdgeColoredCompleteGraph> {
    let prime = (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    if p < 5 || p % 4 != 1 || !prime {
        return Err(Error::InvalidArgument(format!("{p} is not a prime congruent to 1 mod 4")));
    }
    let residues: Vec<bool> = {
        let mut r = vec![false; p];
        for x in 1..p {
            r[x * x % p] = true;
        }
        r
    };
    EdgeColoredCompleteGraph::from_fn(p, 2, |i, j| if residues[(j - i) % p] { 1 } else { 2 })
}
