use std::collections::BTreeSet;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{argmax_reports, summarise, OrderSummary, SearchConfig, SearchMode, SearchResult, HARD_CAP, RANGE_NOTE};
use crate::error::{Error, Result};
use crate::graph::generators::{cycle, independent};
use crate::graph::{canonical_code, disjoint_union, join, Graph};
use crate::structure::is_d_leveled;

/// Seeded sampling of d-leveled graphs by order.
///
/// Each proposal is a random join of `s` factors, each a disjoint union of
/// cycles of length at least 4 (joined with two isolated vertices when `d`
/// is even), followed by up to two random local moves: a double edge swap
/// or an edge toggle. Only proposals that are d-leveled are kept. The
/// budget is the number of proposals per order; orders too small for the
/// construction are skipped.
pub fn random_search(cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    if cfg.mode != SearchMode::Random {
        return Err(Error::InvalidParameter("configuration is not in random mode".into()));
    }
    let seed = cfg
        .seed
        .ok_or_else(|| Error::InvalidParameter("random mode needs a seed".into()))?;
    let summaries: Vec<OrderSummary> = cfg.run_in_pool(|| {
        (cfg.n_min..=cfg.n_max)
            .into_par_iter()
            .filter_map(|n| sample_order(cfg, seed, n))
            .collect()
    })?;
    Ok(SearchResult {
        mode: SearchMode::Random,
        d: cfg.d,
        range: cfg.range_label(),
        seed: Some(seed),
        reports: argmax_reports(cfg.d, &summaries),
        summaries,
        note: RANGE_NOTE.to_string(),
    })
}

fn sample_order(cfg: &SearchConfig, seed: u64, n: usize) -> Option<OrderSummary> {
    if cfg.budget == 0 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let d = cfg.d;
    let mut best: Option<Graph> = None;
    let mut leveled = 0;
    let mut distinct = BTreeSet::new();
    for _ in 0..cfg.budget {
        let mut g = propose(d, n, &mut rng)?;
        for _ in 0..rng.random_range(0..=2) {
            local_move(&mut g, &mut rng);
        }
        if !is_d_leveled(&g, d).is_leveled {
            continue;
        }
        leveled += 1;
        if cfg.dedup && n <= HARD_CAP {
            distinct.insert(canonical_code(&g).bits);
        }
        if best.as_ref().is_none_or(|b| g.edge_count() > b.edge_count()) {
            best = Some(g);
        }
    }
    let distinct = (cfg.dedup && n <= HARD_CAP).then_some(distinct.len() as u64);
    Some(summarise(d, n, cfg.budget, leveled, distinct, best.as_ref()))
}

/// Random join structure on `n` vertices, or `None` when `n` is too small.
fn propose(d: usize, n: usize, rng: &mut ChaCha8Rng) -> Option<Graph> {
    if d == 0 {
        return (n == 2).then(|| independent(2));
    }
    let s = d.div_ceil(2);
    let apex = if d % 2 == 0 { 2 } else { 0 };
    let cycle_vertices = n.checked_sub(apex)?;
    if cycle_vertices < 4 * s {
        return None;
    }
    let mut sizes = vec![4; s];
    for _ in 0..cycle_vertices - 4 * s {
        sizes[rng.random_range(0..s)] += 1;
    }
    let mut g = if apex == 2 { Some(independent(2)) } else { None };
    for size in sizes {
        let factor = union_of_cycles(size, rng);
        g = Some(match g {
            None => factor,
            Some(acc) => join(&acc, &factor),
        });
    }
    g
}

fn union_of_cycles(size: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut left = size;
    let mut g = Graph::empty(0);
    while left >= 8 && rng.random_bool(0.5) {
        let k = rng.random_range(4..=left - 4);
        g = disjoint_union(&g, &cycle(k).expect("length >= 4"));
        left -= k;
    }
    disjoint_union(&g, &cycle(left).expect("length >= 4"))
}

fn local_move(g: &mut Graph, rng: &mut ChaCha8Rng) {
    let n = g.n();
    if n < 2 {
        return;
    }
    if rng.random_bool(0.5) {
        let edges = g.edges();
        let (Some(&(a, b)), Some(&(c, e))) = (edges.choose(rng), edges.choose(rng)) else {
            return;
        };
        let (c, e) = if rng.random_bool(0.5) { (c, e) } else { (e, c) };
        let distinct = a != c && a != e && b != c && b != e;
        if distinct && !g.has_edge(a, e) && !g.has_edge(c, b) {
            g.remove_edge(a, b);
            g.remove_edge(c, e);
            g.add_edge(a, e);
            g.add_edge(c, b);
        }
    } else {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            if g.has_edge(u, v) {
                g.remove_edge(u, v);
            } else {
                g.add_edge(u, v);
            }
        }
    }
}
