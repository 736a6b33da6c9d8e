//! Canonical labelling for small graphs.
//!
//! The canonical code of a graph is the lexicographically least upper-triangle
//! adjacency bitstring over all vertex orderings. Pairs are read column by
//! column, `(0,1), (0,2), (1,2), (0,3), ..`, so fixing the first `k` positions
//! of an ordering fixes a prefix of the bitstring. That makes a depth-first
//! search with prefix pruning exact.

use serde::{Deserialize, Serialize};

use super::Graph;

/// Largest order whose bitstring fits in the 64-bit code.
pub const MAX_CANONICAL_ORDER: usize = 11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode {
    pub n: u8,
    pub bits: u64,
}

impl CanonicalCode {
    /// Graph whose vertex ordering realises this code.
    pub fn to_graph(self) -> Graph {
        let n = self.n as usize;
        let m = n * n.saturating_sub(1) / 2;
        let mut g = Graph::empty(n);
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (m - 1 - idx) & 1 == 1 {
                    g.add_edge(i, j);
                }
                idx += 1;
            }
        }
        g
    }
}

fn rows_of(g: &Graph) -> Vec<u16> {
    assert!(
        g.n() <= MAX_CANONICAL_ORDER,
        "canonical codes are limited to {MAX_CANONICAL_ORDER} vertices"
    );
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, u| m | 1 << u))
        .collect()
}

/// Code of `g` under the ordering `order` (position -> vertex).
fn code_for(rows: &[u16], order: &[usize]) -> u64 {
    let mut code = 0u64;
    for j in 1..order.len() {
        for &oi in &order[..j] {
            code = code << 1 | u64::from(rows[order[j]] >> oi & 1);
        }
    }
    code
}

/// Canonical code by exhaustive search over all `n!` orderings. Reference
/// implementation for tests.
pub fn canonical_code_bruteforce(g: &Graph) -> CanonicalCode {
    let rows = rows_of(g);
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut order, 0, &mut |o| best = best.min(code_for(&rows, o)));
    CanonicalCode { n: n as u8, bits: if n < 2 { 0 } else { best } }
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Canonical code of `g` (`g.n() <= MAX_CANONICAL_ORDER`).
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let rows = rows_of(g);
    let n = g.n();
    if n < 2 {
        return CanonicalCode { n: n as u8, bits: 0 };
    }
    let total_bits = n * (n - 1) / 2;
    let mut search = Search {
        rows: &rows,
        n,
        total_bits,
        order: Vec::with_capacity(n),
        best: u64::MAX,
    };
    search.descend(0, 0, 0);
    CanonicalCode { n: n as u8, bits: search.best }
}

struct Search<'a> {
    rows: &'a [u16],
    n: usize,
    total_bits: usize,
    order: Vec<usize>,
    best: u64,
}

impl Search<'_> {
    fn descend(&mut self, used: u16, prefix: u64, prefix_bits: usize) {
        let k = self.order.len();
        if k == self.n {
            self.best = self.best.min(prefix);
            return;
        }
        if self.best != u64::MAX {
            let best_prefix = self.best >> (self.total_bits - prefix_bits);
            if prefix > best_prefix {
                return;
            }
        }
        // Block contributed by placing v next: adjacency to positions 0..k.
        let blocks: Vec<u64> = (0..self.n)
            .map(|v| {
                self.order
                    .iter()
                    .fold(0u64, |b, &o| b << 1 | u64::from(self.rows[v] >> o & 1))
            })
            .collect();
        let min_block = (0..self.n)
            .filter(|&v| used >> v & 1 == 0)
            .map(|v| blocks[v])
            .min()
            .expect("an unplaced vertex remains");
        let mut explored: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if used >> v & 1 == 1 || blocks[v] != min_block {
                continue;
            }
            // Swapping twins is an automorphism fixing every placed vertex.
            if explored.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            explored.push(v);
            self.order.push(v);
            let next = prefix << k | min_block;
            self.descend(used | 1 << v, next, prefix_bits + k);
            self.order.pop();
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let clear = !(1u16 << u | 1u16 << v);
        self.rows[u] & clear == self.rows[v] & clear
    }
}
