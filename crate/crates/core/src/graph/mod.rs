//! Simple undirected graphs on vertices `0..n`, stored as bitset rows.

mod canonical;
mod cliques;
pub mod generators;
mod multipartite;
mod ops;

pub use canonical::{canonical_code, canonical_code_bruteforce, CanonicalCode, MAX_CANONICAL_ORDER};
pub use cliques::{cliques_of_size, clique_count, is_maximal_clique, maximal_cliques};
pub use multipartite::{contains_multipartite_subgraph, MultipartiteEmbedding, MultipartitePattern};
pub use ops::{disjoint_union, join, link, Link};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A finite simple graph. Adjacency rows are the canonical representation;
/// edge lists are derived on demand.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![VertexSet::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Number of vertices.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Panics if `u == v` or either endpoint is out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// `deg(v, S)`: neighbours of `v` inside `set`.
    pub fn degree_into(&self, v: usize, set: &VertexSet) -> usize {
        self.rows[v].intersection_len(set)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.rows[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn vertex_set(&self, vertices: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_iter_with_capacity(self.n, vertices)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// First non-adjacent pair in `vertices`, if any.
    pub fn non_adjacent_pair(&self, vertices: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                if u != v && !self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        self.non_adjacent_pair(vertices).is_none()
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Induced subgraph on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut h = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    /// Copy of `self` with vertex `v` relabeled to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut h = Graph::empty(self.n);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// A clique: a sorted, duplicate-free vertex list whose members are pairwise
/// adjacent in the host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct Clique(Vec<usize>);

impl Clique {
    /// Validates `vertices` against `g`.
    pub fn new(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut vs: Vec<usize> = vertices.into_iter().collect();
        vs.sort_unstable();
        vs.dedup();
        if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
            return Err(Error::InvalidParameter(format!("vertex {v} out of range")));
        }
        match g.non_adjacent_pair(&vs) {
            Some((u, v)) => Err(Error::NotAClique(u, v)),
            None => Ok(Clique(vs)),
        }
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Clique(vertices)
    }

    pub fn empty() -> Self {
        Clique(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl AsRef<[usize]> for Clique {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}
