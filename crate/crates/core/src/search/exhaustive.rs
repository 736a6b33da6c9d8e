use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{argmax_reports, summarise, SearchConfig, SearchMode, SearchResult, RANGE_NOTE};
use crate::error::{Error, Result};
use crate::graph::{canonical_code, clique_count, CanonicalCode, Graph};
use crate::structure::is_d_leveled;

/// Isomorphism classes of graphs on `0..=n_max` vertices, as sorted
/// canonical codes per order. Each class at order `k` is extended by a new
/// vertex with every possible neighbourhood, and children are deduplicated
/// by canonical code. With `forbid_clique = Some(r)`, graphs containing
/// `K_r` are dropped as they appear; since the property is hereditary every
/// `K_r`-free graph is still reached.
pub fn enumerate_classes(n_max: usize, forbid_clique: Option<usize>, budget: u64) -> Result<Vec<Vec<CanonicalCode>>> {
    if n_max > crate::graph::MAX_CANONICAL_ORDER {
        return Err(Error::BudgetExceeded(format!(
            "order {n_max} exceeds the canonical-form limit {}",
            crate::graph::MAX_CANONICAL_ORDER
        )));
    }
    let mut levels = vec![vec![canonical_code(&Graph::empty(0))]];
    for k in 0..n_max {
        let parents = &levels[k];
        let children: BTreeSet<u64> = parents
            .par_iter()
            .map(|code| extensions(&code.to_graph(), forbid_clique))
            .collect::<Vec<Vec<u64>>>()
            .into_iter()
            .flatten()
            .collect();
        if children.len() as u64 > budget {
            return Err(Error::BudgetExceeded(format!(
                "{} classes on {} vertices exceed the budget {budget}",
                children.len(),
                k + 1
            )));
        }
        let n = (k + 1) as u8;
        levels.push(children.into_iter().map(|bits| CanonicalCode { n, bits }).collect());
    }
    Ok(levels)
}

fn extensions(parent: &Graph, forbid_clique: Option<usize>) -> Vec<u64> {
    let k = parent.n();
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u32..1 << k {
        let nbrs: Vec<usize> = (0..k).filter(|&v| mask >> v & 1 == 1).collect();
        if let Some(r) = forbid_clique {
            // A new K_r must use the new vertex and a K_{r-1} among its neighbours.
            if r >= 1 && nbrs.len() + 1 >= r && clique_count(&parent.induced(&nbrs), r - 1) > 0 {
                continue;
            }
        }
        let mut child = Graph::empty(k + 1);
        for (u, v) in parent.edges() {
            child.add_edge(u, v);
        }
        for &u in &nbrs {
            child.add_edge(u, k);
        }
        out.push(canonical_code(&child).bits);
    }
    out
}

/// Enumerates all graphs of each order in range up to isomorphism, keeping
/// the `K_{d+2}`-free ones (d-leveled graphs have no larger cliques), and
/// reports the d-leveled classes with the most edges.
pub fn exhaustive_search(cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    if cfg.mode != SearchMode::Exhaustive {
        return Err(Error::InvalidParameter("configuration is not in exhaustive mode".into()));
    }
    let cap = cfg.cap();
    if cfg.n_max > cap {
        return Err(Error::BudgetExceeded(format!(
            "n = {} exceeds the exhaustive cap {cap}; raise it explicitly to go further",
            cfg.n_max
        )));
    }
    let d = cfg.d;
    let summaries = cfg.run_in_pool(|| -> Result<_> {
        let levels = enumerate_classes(cfg.n_max, Some(d + 2), cfg.budget)?;
        let mut summaries = Vec::new();
        for (n, classes) in levels.iter().enumerate().skip(cfg.n_min) {
            let verdicts: Vec<bool> = classes.par_iter().map(|c| is_d_leveled(&c.to_graph(), d).is_leveled).collect();
            let mut best: Option<Graph> = None;
            let mut leveled = 0;
            for (c, ok) in classes.iter().zip(verdicts) {
                if !ok {
                    continue;
                }
                leveled += 1;
                let g = c.to_graph();
                if best.as_ref().is_none_or(|b| g.edge_count() > b.edge_count()) {
                    best = Some(g);
                }
            }
            summaries.push(summarise(d, n, classes.len() as u64, leveled, Some(leveled), best.as_ref()));
        }
        Ok(summaries)
    })??;
    Ok(SearchResult {
        mode: SearchMode::Exhaustive,
        d,
        range: cfg.range_label(),
        seed: cfg.seed,
        reports: argmax_reports(d, &summaries),
        summaries,
        note: RANGE_NOTE.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_code_bruteforce;

    #[test]
    fn class_counts_small_orders() {
        let levels = enumerate_classes(6, None, u64::MAX).unwrap();
        let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn class_counts_agree_with_orbit_count() {
        // Distinct brute-force canonical forms over all labelled graphs.
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let mut seen = BTreeSet::new();
            for mask in 0u64..1 << pairs.len() {
                let g = Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap();
                seen.insert(canonical_code_bruteforce(&g));
            }
            assert_eq!(seen.len(), enumerate_classes(n, None, u64::MAX).unwrap()[n].len());
        }
    }

    #[test]
    fn triangle_free_pruning() {
        // Triangle-free graphs on 1..=6 vertices: 1, 2, 3, 7, 14, 38.
        let levels = enumerate_classes(6, Some(3), u64::MAX).unwrap();
        let counts: Vec<usize> = levels.iter().skip(1).map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 3, 7, 14, 38]);
    }

    #[test]
    fn cycles_only_at_level_one() {
        let r = exhaustive_search(&SearchConfig::exhaustive(1, 1, 8)).unwrap();
        for s in &r.summaries {
            if s.n < 4 {
                assert_eq!(s.leveled, 0);
            } else {
                assert_eq!(s.max_edges, Some(s.n));
                assert_eq!(s.equality, Some(true));
            }
        }
        // C4 ⊔ C4 and C8.
        assert_eq!(r.summaries.last().unwrap().leveled, 2);
    }

    #[test]
    fn cap_and_budget() {
        let cfg = SearchConfig::exhaustive(3, 1, 9);
        assert!(matches!(exhaustive_search(&cfg), Err(Error::BudgetExceeded(_))));
        let cfg = SearchConfig { budget: 10, ..SearchConfig::exhaustive(3, 1, 6) };
        assert!(matches!(exhaustive_search(&cfg), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let base = SearchConfig::exhaustive(2, 4, 7);
        let one = exhaustive_search(&SearchConfig { workers: Some(1), ..base.clone() }).unwrap();
        let four = exhaustive_search(&SearchConfig { workers: Some(4), ..base }).unwrap();
        assert_eq!(one.to_json(), four.to_json());
    }
}
