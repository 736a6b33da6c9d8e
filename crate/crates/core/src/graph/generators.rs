//! Deterministic graph families used as test instances and search seeds.

use super::{join, Graph};
use crate::error::{Error, Result};

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// `C_k` on `0..k` with edges `i ~ i+1 (mod k)`.
///
/// `k = 3` is accepted; its clique complex is a solid triangle, so every
/// complex-level check reports it as non-flag-sphere.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(invalid(format!("cycle length {k} < 3")));
    }
    Graph::from_edges(k, (0..k).map(|i| (i, (i + 1) % k)))
}

/// `k` isolated vertices.
pub fn independent(k: usize) -> Graph {
    Graph::empty(k)
}

/// `K^s(n_1, .., n_s)`; part `i` occupies a consecutive block of labels.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(invalid(format!("part sizes must be positive, got {parts:?}")));
    }
    Ok(parts
        .iter()
        .map(|&p| independent(p))
        .reduce(|a, b| join(&a, &b))
        .expect("non-empty"))
}

/// Boundary of the `(d+1)`-dimensional cross-polytope, a flag `d`-sphere:
/// `K^{d+1}(2, .., 2)`.
pub fn cross_polytope(d: usize) -> Graph {
    complete_multipartite(&vec![2; d + 1]).expect("parts are positive")
}

/// Sizes of `s` parts of `n` vertices, as balanced as possible; the first
/// `n mod s` parts get the extra vertex.
pub fn balanced_parts(s: usize, n: usize) -> Vec<usize> {
    (0..s).map(|i| n / s + usize::from(i < n % s)).collect()
}

/// Balanced join of `s` cycles on `n` vertices in total.
pub fn join_of_cycles(s: usize, n: usize) -> Result<Graph> {
    if s == 0 {
        return Err(invalid("join of zero cycles".into()));
    }
    if n < 4 * s {
        return Err(invalid(format!("need n >= 4s, got n = {n}, s = {s}")));
    }
    join_of_cycle_lengths(&balanced_parts(s, n))
}

/// Join of cycles with the given lengths (each at least 4).
pub fn join_of_cycle_lengths(lengths: &[usize]) -> Result<Graph> {
    if lengths.is_empty() {
        return Err(invalid("no cycle lengths given".into()));
    }
    if let Some(&k) = lengths.iter().find(|&&k| k < 4) {
        return Err(invalid(format!("cycle length {k} < 4")));
    }
    let mut cycles = lengths.iter().map(|&k| cycle(k));
    let first = cycles.next().expect("non-empty")?;
    cycles.try_fold(first, |acc, c| Ok(join(&acc, &c?)))
}

/// Suspension `S^0 ∗ C_k`: apexes `0` and `1`, cycle on `2..k+2`.
pub fn suspension_sphere(k: usize) -> Result<Graph> {
    if k < 4 {
        return Err(invalid(format!("suspension needs k >= 4, got {k}")));
    }
    Ok(join(&independent(2), &cycle(k)?))
}

/// Join of `s - 1` copies of `C_k` with the suspension of `C_k`, a flag
/// `2s`-sphere on `sk + 2` vertices.
pub fn even_sphere_join(s: usize, k: usize) -> Result<Graph> {
    if s == 0 {
        return Err(invalid("s must be at least 1".into()));
    }
    let mut g = suspension_sphere(k)?;
    for _ in 1..s {
        g = join(&cycle(k)?, &g);
    }
    Ok(g)
}

/// Triangulated torus on `Z_p × Z_q` with neighbour offsets `±(1,0)`,
/// `±(0,1)`, `±(1,1)`; vertex `(i, j)` is labelled `i*q + j`.
pub fn grid_torus(p: usize, q: usize) -> Result<Graph> {
    if p < 4 || q < 4 {
        return Err(invalid(format!("torus needs p, q >= 4, got {p} x {q}")));
    }
    let id = |i: usize, j: usize| (i % p) * q + (j % q);
    let mut g = Graph::empty(p * q);
    for i in 0..p {
        for j in 0..q {
            for (di, dj) in [(1, 0), (0, 1), (1, 1)] {
                g.add_edge(id(i, j), id(i + di, j + dj));
            }
        }
    }
    Ok(g)
}

/// The Petersen graph (outer 5-cycle `0..5`, inner pentagram `5..10`).
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, edges).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::clique_count;

    #[test]
    fn join_of_cycles_edge_formula() {
        let g = join_of_cycles(2, 10).unwrap();
        assert_eq!(g.edge_count(), 35);
        for s in 1..=4 {
            for n in (4 * s..=40).filter(|n| n % s == 0) {
                let e = join_of_cycles(s, n).unwrap().edge_count();
                // (s-1)/(2s) n^2 + n, exact since s | n.
                assert_eq!(2 * s * e, (s - 1) * n * n + 2 * s * n, "s={s} n={n}");
            }
        }
        assert_eq!(balanced_parts(3, 14), vec![5, 5, 4]);
        assert!(join_of_cycles(3, 11).is_err());
    }

    #[test]
    fn suspension_is_octahedron() {
        let g = suspension_sphere(4).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 12));
        assert_eq!(g, complete_multipartite(&[2, 2, 2]).unwrap().relabel(&[0, 1, 2, 4, 3, 5]));
    }

    #[test]
    fn torus_counts() {
        let t = grid_torus(4, 4).unwrap();
        assert_eq!((t.n(), t.edge_count(), clique_count(&t, 3)), (16, 48, 32));
        assert!((0..16).all(|v| t.degree(v) == 6));
        assert_eq!(clique_count(&t, 4), 0);
        assert!(grid_torus(3, 5).is_err());
    }

    #[test]
    fn parameter_errors() {
        assert!(cycle(2).is_err());
        assert!(cycle(3).is_ok());
        assert!(suspension_sphere(3).is_err());
        assert!(complete_multipartite(&[]).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
        assert!(join_of_cycle_lengths(&[4, 3]).is_err());
    }

    #[test]
    fn even_sphere_join_counts() {
        let g = even_sphere_join(2, 5).unwrap();
        assert_eq!((g.n(), g.edge_count()), (12, 55));
        assert_eq!(cross_polytope(2).edge_count(), 12);
    }
}
