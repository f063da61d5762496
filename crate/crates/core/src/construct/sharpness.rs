//! Extremal two-colorings for the classical Ramsey pairs, and the on-disk
//! witness cache.
//!
//! A sharpness example for `(a, b)` colors `K_{R(a,b)-1}` so that color 1
//! has no copy of `a` and color 2 no copy of `b`. When such a coloring also
//! avoids the blow-up kernels (K4 in place of B3+, K3 in place of S3+) it
//! stays valid after every vertex is replaced by an independent set, which
//! the recursive constructor needs for its outer graphs. The searches try
//! for a kernel-avoiding witness first and fall back to the plain pair.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;
use std::time::Duration;

use sha2::{Digest, Sha256};

use crate::detect::find_mono_copy;
use crate::error::{Error, Result};
use crate::formula::classical_ramsey;
use crate::graph::EdgeColoredCompleteGraph;
use crate::io;
use crate::pattern::PatternKind;
use crate::search::{
    certify_two_coloring, local_search_from, local_search_witness, paley_coloring, witness_search, LocalOutcome,
    SearchBudget, SearchOutcome,
};

/// Orders up to this size are searched exhaustively.
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 9;

/// The six sharpness examples used by the lower-bound construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SharpnessId {
    Q1,
    Q2,
    Q3,
    Q4,
    Q5,
    Q6,
}

impl SharpnessId {
    pub const ALL: [SharpnessId; 6] = [
        SharpnessId::Q1,
        SharpnessId::Q2,
        SharpnessId::Q3,
        SharpnessId::Q4,
        SharpnessId::Q5,
        SharpnessId::Q6,
    ];

    /// Patterns avoided by color 1 and color 2.
    pub fn pair(self) -> (PatternKind, PatternKind) {
        use PatternKind::*;
        match self {
            SharpnessId::Q1 => (K3, K3),
            SharpnessId::Q2 => (K3, S3Plus),
            SharpnessId::Q3 => (K3, B3Plus),
            SharpnessId::Q4 => (S3Plus, S3Plus),
            SharpnessId::Q5 => (S3Plus, B3Plus),
            SharpnessId::Q6 => (B3Plus, B3Plus),
        }
    }

    pub fn order(self) -> usize {
        let (a, b) = self.pair();
        classical_ramsey(a, b).expect("tabulated pair") as usize - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpnessExample {
    pub graph: EdgeColoredCompleteGraph,
    pub avoid_color1: PatternKind,
    pub avoid_color2: PatternKind,
    /// Also avoids the blow-up kernels of both patterns.
    pub blow_up_safe: bool,
}

impl SharpnessExample {
    /// Checks order and both avoidance conditions.
    pub fn certify(graph: EdgeColoredCompleteGraph, a: PatternKind, b: PatternKind) -> Result<Self> {
        let fail = |reason: String| Error::Certification { a, b, reason };
        let expected = classical_ramsey(a, b)? as usize - 1;
        if graph.order() != expected {
            return Err(fail(format!("order {} but R - 1 = {expected}", graph.order())));
        }
        if graph.palette_size() != 2 {
            return Err(fail(format!("palette has {} colors, expected 2", graph.palette_size())));
        }
        if let Some(e) = find_mono_copy(&graph, &a.graph(), 1)? {
            return Err(fail(format!("color 1 contains {a} at {:?}", e.map)));
        }
        if let Some(e) = find_mono_copy(&graph, &b.graph(), 2)? {
            return Err(fail(format!("color 2 contains {b} at {:?}", e.map)));
        }
        let blow_up_safe = certify_two_coloring(&graph, a.blow_up_kernel(), b.blow_up_kernel());
        Ok(SharpnessExample {
            graph,
            avoid_color1: a,
            avoid_color2: b,
            blow_up_safe,
        })
    }
}

/// Searches for a sharpness example of `(a, b)` without consulting a cache.
///
/// Orders up to [`EXHAUSTIVE_ORDER_LIMIT`] use the exhaustive search, so a
/// miss there is a proof of non-existence. Larger orders run the seeded
/// min-conflicts search, starting from the quadratic-residue coloring when
/// the order is a prime `≡ 1 mod 4`.
pub fn search_sharpness(a: PatternKind, b: PatternKind, budget: &SearchBudget) -> Result<SharpnessExample> {
    let n = classical_ramsey(a, b)? as usize - 1;
    let kernels = (a.blow_up_kernel(), b.blow_up_kernel());
    let mut attempts = vec![kernels];
    if kernels != (a, b) {
        attempts.push((a, b));
    }

    if n <= EXHAUSTIVE_ORDER_LIMIT {
        let mut last = Error::Inconclusive;
        for (x, y) in attempts {
            match witness_search(x, y, n, budget)? {
                SearchOutcome::Witness { graph, .. } => return SharpnessExample::certify(graph, a, b),
                SearchOutcome::ExhaustiveNone { .. } => last = Error::SearchExhausted { a: x, b: y, n },
                SearchOutcome::BudgetExhausted { .. } => last = Error::Inconclusive,
            }
        }
        return Err(last);
    }

    let start = paley_coloring(n).ok();
    for (x, y) in attempts {
        let outcome = match &start {
            Some(g) => local_search_from(x, y, g, budget)?,
            None => local_search_witness(x, y, n, budget)?,
        };
        if let LocalOutcome::Witness { graph, .. } = outcome {
            return SharpnessExample::certify(graph, a, b);
        }
    }
    Err(Error::Inconclusive)
}

/// Content-addressed `.gcol` files named `<a>_<b>_<sha256 prefix>.gcol`.
#[derive(Debug, Clone)]
pub struct WitnessCache {
    dir: PathBuf,
}

fn content_hash(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .take(8)
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl WitnessCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        WitnessCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn prefix(a: PatternKind, b: PatternKind) -> String {
        format!("{a}_{b}_")
    }

    /// All certified entries for the pair, sorted by file name. A file whose
    /// content does not match its name, or that fails certification, is an
    /// error.
    pub fn load_all(&self, a: PatternKind, b: PatternKind) -> Result<Vec<(PathBuf, SharpnessExample)>> {
        let entries = match fs::read_dir(&self.dir) {
            Ok(e) => e,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(e.into()),
        };
        let prefix = Self::prefix(a, b);
        let mut paths: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| {
                p.file_name()
                    .and_then(|n| n.to_str())
                    .is_some_and(|n| n.starts_with(&prefix) && n.ends_with(".gcol"))
            })
            .collect();
        paths.sort();
        let mut out = Vec::new();
        for path in paths {
            let text = fs::read_to_string(&path)?;
            let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default();
            if name.strip_prefix(&prefix) != Some(content_hash(&text).as_str()) {
                return Err(Error::Certification {
                    a,
                    b,
                    reason: format!("{} does not match its content hash", path.display()),
                });
            }
            let ex = SharpnessExample::certify(io::from_gcol(&text)?, a, b)?;
            out.push((path, ex));
        }
        Ok(out)
    }

    /// The first certified entry, preferring blow-up-safe ones.
    pub fn load(&self, a: PatternKind, b: PatternKind) -> Result<Option<SharpnessExample>> {
        let mut all = self.load_all(a, b)?;
        let pos = all.iter().position(|(_, ex)| ex.blow_up_safe).unwrap_or(0);
        Ok((!all.is_empty()).then(|| all.swap_remove(pos).1))
    }

    pub fn store(&self, ex: &SharpnessExample) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)?;
        let text = io::to_gcol(&ex.graph);
        let path = self.dir.join(format!(
            "{}{}.gcol",
            Self::prefix(ex.avoid_color1, ex.avoid_color2),
            content_hash(&text)
        ));
        if !path.exists() {
            let tmp = path.with_extension("tmp");
            fs::write(&tmp, &text)?;
            fs::rename(&tmp, &path)?;
        }
        Ok(path)
    }
}

impl SharpnessExample {
    /// The same coloring with colors 1 and 2 exchanged.
    pub fn swapped(&self) -> Self {
        let graph = EdgeColoredCompleteGraph::from_fn(self.graph.order(), 2, |i, j| 3 - self.graph.color(i, j))
            .expect("two-coloring");
        SharpnessExample {
            graph,
            avoid_color1: self.avoid_color2,
            avoid_color2: self.avoid_color1,
            blow_up_safe: self.blow_up_safe,
        }
    }
}

/// A certified sharpness example from the cache, else from search (stored
/// back into the cache on success). Pairs are cached in one orientation,
/// smaller pattern first; the other orientation swaps the two colors.
pub fn find_sharpness(
    a: PatternKind,
    b: PatternKind,
    cache: Option<&WitnessCache>,
    budget: &SearchBudget,
) -> Result<SharpnessExample> {
    if b < a {
        return find_sharpness(b, a, cache, budget).map(|ex| ex.swapped());
    }
    if let Some(cache) = cache {
        if let Some(ex) = cache.load(a, b)? {
            return Ok(ex);
        }
    }
    let ex = search_sharpness(a, b, budget)?;
    if let Some(cache) = cache {
        cache.store(&ex)?;
    }
    Ok(ex)
}

/// Lazily resolved Q1..Q6, shared by every construction in a process.
pub struct SharpnessLibrary {
    cache: Option<WitnessCache>,
    budget: SearchBudget,
    slots: [OnceLock<SharpnessExample>; 6],
}

impl SharpnessLibrary {
    /// In-memory only: every example comes from search.
    pub fn new() -> Self {
        Self::with_cache(None)
    }

    pub fn with_cache(cache: Option<WitnessCache>) -> Self {
        SharpnessLibrary {
            cache,
            budget: SearchBudget::with_time(Duration::from_secs(1800)).with_seed(0x5eed),
            slots: Default::default(),
        }
    }

    pub fn with_budget(mut self, budget: SearchBudget) -> Self {
        self.budget = budget;
        self
    }

    pub fn cache(&self) -> Option<&WitnessCache> {
        self.cache.as_ref()
    }

    pub fn get(&self, id: SharpnessId) -> Result<&SharpnessExample> {
        let slot = &self.slots[id as usize];
        if let Some(ex) = slot.get() {
            return Ok(ex);
        }
        let (a, b) = id.pair();
        let ex = find_sharpness(a, b, self.cache.as_ref(), &self.budget)?;
        Ok(slot.get_or_init(|| ex))
    }

    /// Like [`get`](Self::get), but the example must survive blow-ups.
    pub fn get_safe(&self, id: SharpnessId) -> Result<&SharpnessExample> {
        let ex = self.get(id)?;
        if ex.blow_up_safe {
            return Ok(ex);
        }
        Err(Error::Construction(format!(
            "{id:?} is not blow-up safe: color 1 or 2 contains {} or {}",
            ex.avoid_color1.blow_up_kernel(),
            ex.avoid_color2.blow_up_kernel()
        )))
    }
}

impl Default for SharpnessLibrary {
    fn default() -> Self {
        Self::new()
    }
}
