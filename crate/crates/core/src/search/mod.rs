//! Searches over d-leveled graphs and batch checks of instance files.
//!
//! Summaries carry the searched range verbatim; nothing is claimed about
//! orders outside it.

mod corpus;
mod exhaustive;
mod random;

pub use corpus::{corpus_summary, load_instance, run_corpus_checks, CorpusEntry, CorpusError, CorpusSummary, Instance};
pub use exhaustive::{enumerate_classes, exhaustive_search};
pub use random::random_search;

use serde::{Deserialize, Serialize};

use crate::bounds::{edge_bound_even_conjecture, edge_bound_odd, verify_theorem_instance, BoundReport};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{serde_str, Rational};

/// Largest order the canonical form supports.
pub const HARD_CAP: usize = crate::graph::MAX_CANONICAL_ORDER;

/// Default exhaustive cap: 10 for `d = 1`, otherwise 8.
pub fn default_cap(d: usize) -> usize {
    if d == 1 {
        10
    } else {
        8
    }
}

/// Default ceiling on isomorphism classes held at one order.
pub const DEFAULT_CLASS_BUDGET: u64 = 5_000_000;
/// Default number of proposals per order in random mode.
pub const DEFAULT_RANDOM_STEPS: u64 = 2_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub n_min: usize,
    pub n_max: usize,
    pub d: usize,
    pub seed: Option<u64>,
    /// `None` uses the global rayon pool.
    pub workers: Option<usize>,
    /// Count distinct isomorphism classes among random samples.
    pub dedup: bool,
    /// Class ceiling (exhaustive) or proposals per order (random).
    pub budget: u64,
    /// Replaces [`default_cap`].
    pub cap_override: Option<usize>,
    /// Lifts the cap to [`HARD_CAP`].
    pub allow_huge: bool,
}

impl SearchConfig {
    pub fn exhaustive(d: usize, n_min: usize, n_max: usize) -> Self {
        SearchConfig {
            mode: SearchMode::Exhaustive,
            n_min,
            n_max,
            d,
            seed: None,
            workers: None,
            dedup: true,
            budget: DEFAULT_CLASS_BUDGET,
            cap_override: None,
            allow_huge: false,
        }
    }

    pub fn random(d: usize, n_min: usize, n_max: usize, seed: u64) -> Self {
        SearchConfig {
            mode: SearchMode::Random,
            seed: Some(seed),
            budget: DEFAULT_RANDOM_STEPS,
            ..Self::exhaustive(d, n_min, n_max)
        }
    }

    /// Effective exhaustive cap.
    pub fn cap(&self) -> usize {
        if self.allow_huge {
            HARD_CAP
        } else {
            self.cap_override.unwrap_or_else(|| default_cap(self.d)).min(HARD_CAP)
        }
    }

    pub fn range_label(&self) -> String {
        format!("{}..{}", self.n_min, self.n_max)
    }

    fn validate(&self) -> Result<()> {
        if self.n_min > self.n_max {
            return Err(Error::InvalidParameter(format!("empty range {}", self.range_label())));
        }
        Ok(())
    }

    fn run_in_pool<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.workers {
            None => Ok(f()),
            Some(w) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(w.max(1))
                    .build()
                    .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
                Ok(pool.install(f))
            }
        }
    }
}

/// A graph as stored in results: `n` and the sorted edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListInstance {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeListInstance {
    pub fn of(g: &Graph) -> Self {
        EdgeListInstance {
            n: g.n(),
            edges: g.edges(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub n: usize,
    /// Isomorphism classes (exhaustive) or proposals (random) examined.
    pub examined: u64,
    pub leveled: u64,
    /// Distinct classes among leveled samples (random mode with dedup).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distinct_leveled: Option<u64>,
    pub max_edges: Option<usize>,
    pub argmax: Option<EdgeListInstance>,
    pub bound_name: Option<String>,
    #[serde(serialize_with = "serialize_opt")]
    pub bound: Option<Rational>,
    /// `max_edges <= bound`.
    pub verdict: Option<bool>,
    pub equality: Option<bool>,
}

fn serialize_opt<S: serde::Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => serde_str::serialize(r, s),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub mode: SearchMode,
    pub d: usize,
    /// The searched range exactly as requested, `min..max` inclusive.
    pub range: String,
    pub seed: Option<u64>,
    pub summaries: Vec<OrderSummary>,
    /// Reports for the argmax instances.
    pub reports: Vec<BoundReport>,
    pub note: String,
}

impl SearchResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("search results serialize")
    }
}

/// Bound compared against the maximum at order `n`: the odd edge bound for
/// `d = 2s-1`, the even conjecture for `d = 2s`, none for `d = 0`.
pub(crate) fn bound_for(d: usize, n: usize) -> Option<(&'static str, Rational)> {
    match d {
        0 => None,
        d if d % 2 == 1 => Some(("thm_odd", edge_bound_odd(n as u64, d.div_ceil(2) as u64))),
        d => Some(("even_conjecture", edge_bound_even_conjecture(n as u64, (d / 2) as u64))),
    }
}

pub(crate) fn summarise(
    d: usize,
    n: usize,
    examined: u64,
    leveled: u64,
    distinct_leveled: Option<u64>,
    best: Option<&Graph>,
) -> OrderSummary {
    let bound = bound_for(d, n);
    let max_edges = best.map(Graph::edge_count);
    let cmp = |f: fn(&Rational, &Rational) -> bool| match (&bound, max_edges) {
        (Some((_, b)), Some(m)) => Some(f(&crate::rational::int(m), b)),
        _ => None,
    };
    OrderSummary {
        n,
        examined,
        leveled,
        distinct_leveled,
        max_edges,
        argmax: best.map(EdgeListInstance::of),
        bound_name: bound.as_ref().map(|(name, _)| name.to_string()),
        verdict: cmp(|m, b| m <= b),
        equality: cmp(|m, b| m == b),
        bound: bound.map(|(_, b)| b),
    }
}

pub(crate) fn argmax_reports(d: usize, summaries: &[OrderSummary]) -> Vec<BoundReport> {
    if d == 0 {
        return Vec::new();
    }
    summaries
        .iter()
        .filter_map(|s| {
            let g = s.argmax.as_ref()?.to_graph().ok()?;
            let r = verify_theorem_instance(&g, d.div_ceil(2), None).ok()?;
            Some(r.named(format!("argmax_n{}", s.n)))
        })
        .collect()
}

pub(crate) const RANGE_NOTE: &str = "no claim is made about orders outside the searched range";
