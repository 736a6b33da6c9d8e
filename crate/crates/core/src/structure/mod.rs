//! Structural predicates: flagness, weak pseudomanifolds, d-leveled graphs
//! and almost-join partitions.

mod extremal;
mod partition;

pub use extremal::{
    bollobas_linear_constant, bollobas_lower_bound, check_lemma_independent_bound, default_schedule,
    BollobasBound, IndependentBound, Schedule,
};
pub use partition::{
    extract_partition, link_witness, restrict_witness, transversal_clique, verify_type_partition, ExtractedPartition,
    PartitionWitness, TypeDiagnostics,
};

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::graph::{cliques_of_size, link, maximal_cliques, Clique, Graph};

/// `None` when `k` is flag; otherwise a minimal non-face with at least
/// three vertices (every proper subset is a face).
pub fn flag_violation(k: &SimplicialComplex) -> Option<Vec<usize>> {
    let g = k.skeleton();
    let top = g.n();
    for size in 3..=top {
        let cliques = cliques_of_size(&g, size);
        if cliques.is_empty() {
            break;
        }
        // Cliques of this size that are faces; smaller cliques are all faces
        // by the time we get here.
        if let Some(c) = cliques.into_iter().find(|c| !k.contains_face(c.vertices())) {
            return Some(c.into_vec());
        }
    }
    None
}

pub fn is_flag(k: &SimplicialComplex) -> bool {
    flag_violation(k).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PseudomanifoldViolation {
    /// A facet whose dimension differs from `d`.
    NotPure { facet: Vec<usize> },
    /// A `(d-1)`-face lying in `count != 2` facets.
    Ridge { ridge: Vec<usize>, count: usize },
}

/// Checks purity in dimension `d` and that every `(d-1)`-face lies in
/// exactly two facets. Returns the first violation.
pub fn pseudomanifold_violation(k: &SimplicialComplex, d: usize) -> Option<PseudomanifoldViolation> {
    if let Some(f) = k.facets().iter().find(|f| f.len() != d + 1) {
        return Some(PseudomanifoldViolation::NotPure { facet: f.clone() });
    }
    let mut counts: std::collections::BTreeMap<Vec<usize>, usize> = std::collections::BTreeMap::new();
    for f in k.facets() {
        for skip in 0..f.len() {
            let mut ridge = f.clone();
            ridge.remove(skip);
            *counts.entry(ridge).or_default() += 1;
        }
    }
    counts
        .into_iter()
        .find(|(_, c)| *c != 2)
        .map(|(ridge, count)| PseudomanifoldViolation::Ridge { ridge, count })
}

pub fn is_weak_pseudomanifold(k: &SimplicialComplex, d: usize) -> bool {
    pseudomanifold_violation(k, d).is_none()
}

/// Why a graph fails to be d-leveled.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LeveledWitness {
    /// A maximal clique whose size is not `d + 1`.
    MaximalClique { clique: Clique },
    /// A `d`-clique whose link is not two isolated vertices; `link` lists
    /// the common neighbours in host labels.
    RidgeLink { clique: Clique, link: Vec<usize> },
}

impl LeveledWitness {
    /// Re-checks the witness against `g`.
    pub fn confirms(&self, g: &Graph, d: usize) -> bool {
        match self {
            LeveledWitness::MaximalClique { clique } => {
                crate::graph::is_maximal_clique(g, clique.vertices()) && clique.len() != d + 1
            }
            LeveledWitness::RidgeLink { clique, link: lk } => {
                clique.len() == d
                    && g.is_clique(clique.vertices())
                    && link(g, clique.vertices()).is_ok_and(|l| {
                        l.host == *lk && !(l.graph.n() == 2 && l.graph.edge_count() == 0)
                    })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeveledVerdict {
    pub is_leveled: bool,
    pub d: usize,
    pub witness: Option<LeveledWitness>,
}

/// Whether `g` is d-leveled: every maximal clique has `d + 1` vertices and
/// the link of every `d`-clique is two non-adjacent vertices. Stops at the
/// first violation.
pub fn is_d_leveled(g: &Graph, d: usize) -> LeveledVerdict {
    let witness = leveled_violations_impl(g, d, true).into_iter().next();
    LeveledVerdict {
        is_leveled: witness.is_none(),
        d,
        witness,
    }
}

/// Every violation of d-leveledness, maximal-clique violations first.
pub fn leveled_violations(g: &Graph, d: usize) -> Vec<LeveledWitness> {
    leveled_violations_impl(g, d, false)
}

fn leveled_violations_impl(g: &Graph, d: usize, first_only: bool) -> Vec<LeveledWitness> {
    let mut out = Vec::new();
    for c in maximal_cliques(g) {
        if c.len() != d + 1 {
            out.push(LeveledWitness::MaximalClique { clique: c });
            if first_only {
                return out;
            }
        }
    }
    for sigma in cliques_of_size(g, d) {
        let mut common = g.all_vertices();
        for &v in sigma.vertices() {
            common.intersect_with(g.neighbors(v));
        }
        let members = common.to_vec();
        let ok = members.len() == 2 && !g.has_edge(members[0], members[1]);
        if !ok {
            out.push(LeveledWitness::RidgeLink {
                clique: sigma,
                link: members,
            });
            if first_only {
                return out;
            }
        }
    }
    out
}

/// Second route to the same predicate: `Cl(g)` is a d-dimensional weak
/// pseudomanifold. Used to cross-check [`is_d_leveled`].
pub fn is_d_leveled_via_complex(g: &Graph, d: usize) -> bool {
    is_weak_pseudomanifold(&crate::complex::clique_complex(g), d)
}

/// `lk_G σ` is `(d - |σ|)`-leveled. The link of a `(d+1)`-clique must be
/// the graph on no vertices.
pub fn link_leveled_property(g: &Graph, sigma: &[usize], d: usize) -> Result<bool> {
    let lk = link(g, sigma)?;
    let k = sigma.iter().collect::<std::collections::BTreeSet<_>>().len();
    Ok(match d.checked_sub(k) {
        Some(level) => is_d_leveled(&lk.graph, level).is_leveled,
        None => k == d + 1 && lk.graph.n() == 0,
    })
}
