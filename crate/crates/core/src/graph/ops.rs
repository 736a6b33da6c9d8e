use super::{Clique, Graph};
use crate::error::{Error, Result};

/// The link of a clique together with the map from link vertices back to
/// host vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Link {
    pub graph: Graph,
    /// `host[i]` is the host vertex labelled `i` in `graph`.
    pub host: Vec<usize>,
}

/// `lk_G σ`: the subgraph induced on the common neighbourhood of `sigma`.
/// The link of the empty clique is the whole graph.
pub fn link(g: &Graph, sigma: &[usize]) -> Result<Link> {
    if let Some(&v) = sigma.iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidParameter(format!("vertex {v} out of range")));
    }
    if let Some((u, v)) = g.non_adjacent_pair(sigma) {
        return Err(Error::NotAClique(u, v));
    }
    let mut common = g.all_vertices();
    for &v in sigma {
        common.intersect_with(g.neighbors(v));
    }
    let host = common.to_vec();
    Ok(Link {
        graph: g.induced(&host),
        host,
    })
}

impl Link {
    pub fn of(g: &Graph, sigma: &Clique) -> Result<Link> {
        link(g, sigma.vertices())
    }
}

/// `G ∗ H`: disjoint union plus every edge between the two vertex sets.
/// Vertices of `h` are shifted by `g.n()`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = disjoint_union(g, h);
    for u in 0..g.n() {
        for v in 0..h.n() {
            out.add_edge(u, g.n() + v);
        }
    }
    out
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let offset = g.n();
    let mut out = Graph::empty(g.n() + h.n());
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(u + offset, v + offset);
    }
    out
}
