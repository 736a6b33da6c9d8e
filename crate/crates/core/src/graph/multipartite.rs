use serde::{Deserialize, Serialize};

use super::Graph;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Part sizes of a complete multipartite pattern `K^s(r_1, .., r_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartitePattern {
    parts: Vec<usize>,
}

impl MultipartitePattern {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidParameter(format!(
                "pattern parts must be non-empty and positive, got {parts:?}"
            )));
        }
        Ok(MultipartitePattern { parts })
    }

    /// `K^{s+1}(1, 3, .., 3)`.
    pub fn one_three(s: usize) -> Self {
        let mut parts = vec![1];
        parts.extend(std::iter::repeat_n(3, s));
        MultipartitePattern { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }
}

/// Vertex sets realising a pattern as a (not necessarily induced) subgraph.
/// `parts[i]` corresponds to `pattern.parts()[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteEmbedding {
    pub parts: Vec<Vec<usize>>,
}

impl MultipartiteEmbedding {
    /// Disjointness, part sizes and every cross-part adjacency.
    pub fn verify(&self, g: &Graph, pattern: &MultipartitePattern) -> bool {
        if self.parts.len() != pattern.parts.len()
            || self.parts.iter().zip(&pattern.parts).any(|(p, &r)| p.len() != r)
        {
            return false;
        }
        let mut seen = VertexSet::new(g.n());
        for &v in self.parts.iter().flatten() {
            if v >= g.n() || seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        self.parts.iter().enumerate().all(|(i, a)| {
            self.parts[i + 1..]
                .iter()
                .all(|b| a.iter().all(|&u| b.iter().all(|&v| g.has_edge(u, v))))
        })
    }
}

/// Searches for `pattern` as a subgraph of `g`; only cross-part pairs need to
/// be adjacent. Returns a verified embedding when one exists.
///
/// Parts are placed largest first. A vertex placed in part `i` must have
/// degree at least `order - r_i`, and every later vertex must lie in the
/// common neighbourhood of everything placed in earlier parts.
pub fn contains_multipartite_subgraph(g: &Graph, pattern: &MultipartitePattern) -> Option<MultipartiteEmbedding> {
    let mut order: Vec<usize> = (0..pattern.parts.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(pattern.parts[i]), i));
    let sizes: Vec<usize> = order.iter().map(|&i| pattern.parts[i]).collect();
    let total = pattern.order();
    if total > g.n() {
        return None;
    }

    let mut search = Search {
        g,
        sizes: &sizes,
        total,
        chosen: vec![Vec::new(); sizes.len()],
    };
    let cand = g.all_vertices();
    if !search.place(0, &cand, &cand) {
        return None;
    }
    let mut parts = vec![Vec::new(); sizes.len()];
    for (slot, &orig) in order.iter().enumerate() {
        let mut p = std::mem::take(&mut search.chosen[slot]);
        p.sort_unstable();
        parts[orig] = p;
    }
    let emb = MultipartiteEmbedding { parts };
    debug_assert!(emb.verify(g, pattern));
    Some(emb)
}

struct Search<'a> {
    g: &'a Graph,
    sizes: &'a [usize],
    total: usize,
    chosen: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// `cross` holds vertices adjacent to everything in completed parts;
    /// `pool` is the subset still eligible for the part being filled.
    fn place(&mut self, part: usize, cross: &VertexSet, pool: &VertexSet) -> bool {
        if part == self.sizes.len() {
            return true;
        }
        let need_here = self.sizes[part] - self.chosen[part].len();
        if need_here == 0 {
            // Part complete: later parts must be adjacent to all of it.
            let mut next = cross.clone();
            for &v in &self.chosen[part] {
                next.intersect_with(self.g.neighbors(v));
            }
            let remaining: usize = self.sizes[part + 1..].iter().sum();
            if next.len() < remaining {
                return false;
            }
            return self.place(part + 1, &next, &next);
        }
        let min_degree = self.total - self.sizes[part];
        let remaining_after: usize = self.sizes[part + 1..].iter().sum();
        let mut rest = pool.clone();
        while let Some(v) = rest.first() {
            rest.remove(v);
            if self.g.degree(v) < min_degree {
                continue;
            }
            // Later parts live in cross ∩ N(v), minus this part's vertices.
            let mut later = cross.intersection(self.g.neighbors(v));
            for &u in &self.chosen[part] {
                later.intersect_with(self.g.neighbors(u));
            }
            if later.len() < remaining_after {
                continue;
            }
            if rest.len() + 1 < need_here {
                return false;
            }
            self.chosen[part].push(v);
            let mut cross_next = cross.clone();
            cross_next.remove(v);
            if self.place(part, &cross_next, &rest) {
                return true;
            }
            self.chosen[part].pop();
        }
        false
    }
}
