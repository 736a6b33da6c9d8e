use rayon::prelude::*;

use super::{Clique, Graph};
use crate::bitset::VertexSet;

/// Below this order the sequential counter is faster than spawning tasks.
const PARALLEL_THRESHOLD: usize = 48;

/// Number of `k`-element cliques `k_k(G)`. `k = 0` counts the empty clique.
pub fn clique_count(g: &Graph, k: usize) -> u64 {
    match k {
        0 => 1,
        1 => g.n() as u64,
        2 => g.edge_count() as u64,
        _ => {
            let top = |v: usize| {
                let mut cand = g.neighbors(v).clone();
                clear_upto(&mut cand, v);
                count_rec(g, &cand, k - 1)
            };
            if g.n() >= PARALLEL_THRESHOLD {
                (0..g.n()).into_par_iter().map(top).sum()
            } else {
                (0..g.n()).map(top).sum()
            }
        }
    }
}

fn clear_upto(set: &mut VertexSet, v: usize) {
    // Removes every member <= v.
    for u in set.iter().take_while(|&u| u <= v).collect::<Vec<_>>() {
        set.remove(u);
    }
}

fn count_rec(g: &Graph, cand: &VertexSet, k: usize) -> u64 {
    if k == 0 {
        return 1;
    }
    if k == 1 {
        return cand.len() as u64;
    }
    let mut total = 0;
    let mut rest = cand.clone();
    while let Some(v) = rest.first() {
        rest.remove(v);
        if rest.len() + 1 < k {
            break;
        }
        let next = rest.intersection(g.neighbors(v));
        if next.len() + 1 >= k {
            total += count_rec(g, &next, k - 1);
        }
    }
    total
}

/// All `k`-cliques in lexicographic order.
pub fn cliques_of_size(g: &Graph, k: usize) -> Vec<Clique> {
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(k);
    collect_rec(g, &g.all_vertices(), k, &mut stack, &mut out);
    out
}

fn collect_rec(g: &Graph, cand: &VertexSet, k: usize, stack: &mut Vec<usize>, out: &mut Vec<Clique>) {
    if stack.len() == k {
        out.push(Clique::from_sorted_unchecked(stack.clone()));
        return;
    }
    let need = k - stack.len();
    let mut rest = cand.clone();
    while let Some(v) = rest.first() {
        rest.remove(v);
        if rest.len() + 1 < need {
            break;
        }
        stack.push(v);
        let next = rest.intersection(g.neighbors(v));
        collect_rec(g, &next, k, stack, out);
        stack.pop();
    }
}

/// Inclusion-maximal cliques, sorted lexicographically by vertex list.
///
/// Bron–Kerbosch with Tomita pivoting. The graph on zero vertices has the
/// single maximal clique `∅`.
pub fn maximal_cliques(g: &Graph) -> Vec<Clique> {
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, g.all_vertices(), VertexSet::new(g.n()), &mut out);
    out.sort();
    out
}

fn bron_kerbosch(g: &Graph, r: &mut Vec<usize>, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<Clique>) {
    if p.is_empty() {
        if x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(Clique::from_sorted_unchecked(c));
        }
        return;
    }
    // Pivot: vertex of P ∪ X with the most neighbours in P.
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (g.neighbors(u).intersection_len(&p), std::cmp::Reverse(u)))
        .expect("P is non-empty");
    let mut branch = p.clone();
    branch.difference_with(g.neighbors(pivot));
    for v in branch.iter() {
        let nv = g.neighbors(v);
        r.push(v);
        bron_kerbosch(g, r, p.intersection(nv), x.intersection(nv), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

pub fn is_maximal_clique(g: &Graph, vertices: &[usize]) -> bool {
    if !g.is_clique(vertices) {
        return false;
    }
    let mut common = g.all_vertices();
    for &v in vertices {
        common.intersect_with(g.neighbors(v));
    }
    common.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::*;

    fn brute_count(g: &Graph, k: usize) -> u64 {
        let n = g.n();
        (0u32..(1 << n))
            .filter(|m| m.count_ones() as usize == k)
            .filter(|m| {
                let vs: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                g.is_clique(&vs)
            })
            .count() as u64
    }

    fn brute_maximal(g: &Graph) -> Vec<Clique> {
        let n = g.n();
        let mut out: Vec<Clique> = (0u32..(1 << n))
            .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|vs| is_maximal_clique(g, vs))
            .map(Clique::from_sorted_unchecked)
            .collect();
        out.sort();
        out
    }

    #[test]
    fn counts_on_named_graphs() {
        let k4 = complete_multipartite(&[1, 1, 1, 1]).unwrap();
        assert_eq!(clique_count(&k4, 3), 4);
        let c5c5 = join_of_cycles(2, 10).unwrap();
        assert_eq!(clique_count(&c5c5, 3), 50);
        assert_eq!(clique_count(&c5c5, 4), 25);
        assert_eq!(brute_count(&c5c5, 3), 50);
        assert_eq!(brute_count(&c5c5, 4), 25);
        assert_eq!(clique_count(&petersen(), 3), 0);
        assert_eq!(clique_count(&c5c5, 0), 1);
        assert_eq!(clique_count(&c5c5, 1), 10);
    }

    #[test]
    fn maximal_cliques_named() {
        let c4 = cycle(4).unwrap();
        let mc: Vec<Vec<usize>> = maximal_cliques(&c4).into_iter().map(Clique::into_vec).collect();
        assert_eq!(mc, vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);

        let oct = complete_multipartite(&[2, 2, 2]).unwrap();
        let mc = maximal_cliques(&oct);
        assert_eq!(mc.len(), 8);
        assert_eq!(mc, brute_maximal(&oct));

        let e3 = independent(3);
        let mc: Vec<Vec<usize>> = maximal_cliques(&e3).into_iter().map(Clique::into_vec).collect();
        assert_eq!(mc, vec![vec![0], vec![1], vec![2]]);

        assert_eq!(maximal_cliques(&independent(0)), vec![Clique::empty()]);
    }

    #[test]
    fn cliques_of_size_matches_count() {
        let t = grid_torus(4, 4).unwrap();
        assert_eq!(cliques_of_size(&t, 3).len() as u64, clique_count(&t, 3));
        assert_eq!(clique_count(&t, 3), 32);
    }

    #[test]
    fn parallel_count_matches_brute() {
        // Three 17-cycles: a triangle is one vertex per part, or an edge of
        // one part with a vertex of another.
        let g = join_of_cycles(3, 51).unwrap();
        let expected = 17u64.pow(3) + 3 * 17 * 2 * 17;
        assert_eq!(clique_count(&g, 3), expected);
        assert_eq!(cliques_of_size(&g, 3).len() as u64, expected);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
            (1..=max_n).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                    let mut g = Graph::empty(n);
                    let mut idx = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[idx] {
                                g.add_edge(u, v);
                            }
                            idx += 1;
                        }
                    }
                    g
                })
            })
        }

        proptest! {
            #[test]
            fn maximal_cliques_match_brute_force(g in arb_graph(10)) {
                prop_assert_eq!(maximal_cliques(&g), brute_maximal(&g));
            }

            #[test]
            fn clique_count_matches_brute_force(g in arb_graph(9), k in 0usize..6) {
                prop_assert_eq!(clique_count(&g, k), brute_count(&g, k));
            }
        }
    }
}
