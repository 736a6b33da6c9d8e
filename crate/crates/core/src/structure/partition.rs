//! Partitions `V = S_1 ⊔ .. ⊔ S_t ⊔ X` of type `(t, η, C)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{link, Graph, Link};
use crate::rational::{int, serde_str, Rational};

/// Candidate decomposition with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionWitness {
    pub t: usize,
    #[serde(with = "serde_str")]
    pub eta: Rational,
    #[serde(rename = "C")]
    pub c: usize,
    pub parts: Vec<Vec<usize>>,
    #[serde(rename = "X")]
    pub exceptional: Vec<usize>,
    #[serde(with = "serde_str", default = "Rational::zero")]
    pub alpha: Rational,
    #[serde(default)]
    pub m: usize,
}

/// Per-clause outcome of [`verify_type_partition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeDiagnostics {
    /// Cross-degree clause and `|X| <= C` together.
    pub type_holds: bool,
    pub cross_degree_holds: bool,
    pub exceptional_holds: bool,
    /// `|S_i| >= m` for all `i`.
    pub large_holds: bool,
    /// `n/t (1-α) <= |S_i| <= n/t (1+α)` for all `i`.
    pub flat_holds: bool,
    /// Smallest `η` for which the cross-degree clause holds.
    #[serde(with = "serde_str")]
    pub min_eta: Rational,
    /// Smallest `α` for which the partition is flat.
    #[serde(with = "serde_str")]
    pub min_alpha: Rational,
    /// First `(v, i, j)` with `v ∈ S_i` and `deg(v, S_j) < |S_j|(1-η)`.
    pub first_violation: Option<(usize, usize, usize)>,
}

impl PartitionWitness {
    pub fn new(parts: Vec<Vec<usize>>, exceptional: Vec<usize>, eta: Rational, c: usize) -> Self {
        PartitionWitness {
            t: parts.len(),
            eta,
            c,
            parts,
            exceptional,
            alpha: Rational::zero(),
            m: 0,
        }
    }

    pub fn with_flatness(mut self, alpha: Rational, m: usize) -> Self {
        self.alpha = alpha;
        self.m = m;
        self
    }

    pub fn part_sets(&self, n: usize) -> Vec<VertexSet> {
        self.parts
            .iter()
            .map(|p| VertexSet::from_iter_with_capacity(n, p.iter().copied()))
            .collect()
    }
}

fn validate(g: &Graph, w: &PartitionWitness) -> Result<()> {
    if w.t != w.parts.len() {
        return Err(Error::InvalidPartition(format!("t = {} but {} parts given", w.t, w.parts.len())));
    }
    let mut seen = vec![false; g.n()];
    for &v in w.parts.iter().flatten().chain(&w.exceptional) {
        if v >= g.n() {
            return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(Error::InvalidPartition(format!("vertex {v} is not covered")));
    }
    Ok(())
}

/// Checks the type, largeness and flatness clauses independently, with
/// exact rational comparisons.
pub fn verify_type_partition(g: &Graph, w: &PartitionWitness) -> Result<TypeDiagnostics> {
    validate(g, w)?;
    let sets = w.part_sets(g.n());
    let one_minus_eta = BigRational::one() - &w.eta;
    let mut min_eta = Rational::zero();
    let mut first_violation = None;
    for (i, part) in w.parts.iter().enumerate() {
        for &v in part {
            for (j, sj) in sets.iter().enumerate() {
                if i == j || w.parts[j].is_empty() {
                    continue;
                }
                let size = w.parts[j].len();
                let deg = g.degree_into(v, sj);
                // Condition deg >= size (1 - η); tightest η is 1 - deg/size.
                let need = BigRational::new(BigInt::from(size - deg), BigInt::from(size));
                if need > min_eta {
                    min_eta = need;
                }
                if first_violation.is_none() && int(deg) < int(size) * &one_minus_eta {
                    first_violation = Some((v, i, j));
                }
            }
        }
    }
    let cross_degree_holds = first_violation.is_none();
    let exceptional_holds = w.exceptional.len() <= w.c;
    let large_holds = w.parts.iter().all(|p| p.len() >= w.m);

    let n = g.n();
    let mut min_alpha = Rational::zero();
    let flat_holds = if w.t == 0 {
        true
    } else {
        let base = BigRational::new(BigInt::from(n), BigInt::from(w.t));
        let lo = &base * (BigRational::one() - &w.alpha);
        let hi = &base * (BigRational::one() + &w.alpha);
        if !base.is_zero() {
            for p in &w.parts {
                let dev = (int(p.len()) - &base) / &base;
                let dev = if dev < Rational::zero() { -dev } else { dev };
                if dev > min_alpha {
                    min_alpha = dev;
                }
            }
        }
        w.parts.iter().all(|p| lo <= int(p.len()) && int(p.len()) <= hi)
    };
    Ok(TypeDiagnostics {
        type_holds: cross_degree_holds && exceptional_holds,
        cross_degree_holds,
        exceptional_holds,
        large_holds,
        flat_holds,
        min_eta,
        min_alpha,
        first_violation,
    })
}

/// Result of [`extract_partition`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtractedPartition {
    /// `C = |X|`, `α` and `m` are set to the tightest values the
    /// partition meets, so the witness verifies on all three clauses.
    pub witness: PartitionWitness,
    /// Parameter the witness is certified at (always `>= eta` requested).
    #[serde(with = "serde_str")]
    pub eta_certified: Rational,
    /// Tightest cross-degree parameter of the returned parts.
    #[serde(with = "serde_str")]
    pub eta_measured: Rational,
}

const RESTARTS: usize = 8;

/// Heuristic search for a type-`(t, η, C)` witness.
///
/// 1. Candidate parts `A_1..A_t` come from `seed_parts` or, when absent,
///    from local search: a balanced random start followed by passes in
///    which each vertex moves to the part holding the fewest of its
///    neighbours (the current part wins ties, then the lowest index), for
///    at most `n` passes; several seeded restarts are tried.
/// 2. Exceptional vertices are peeled off one at a time: while some
///    `v ∈ A_i` has `deg(v, A_j) < |A_j| (1 - η/2)`, the vertex with the
///    largest missing fraction (lowest label on ties) moves to `X`.
/// 3. A vertex of `X` that is deficient towards at most one part is moved
///    back into that part (or the part where it has fewest neighbours when
///    it is deficient towards none), provided the partition still meets
///    the cross-degree clause at `η`.
///
/// A failure to find a small `X` says nothing about whether a witness
/// exists.
pub fn extract_partition(
    g: &Graph,
    t: usize,
    eta: &Rational,
    seed_parts: Option<&[Vec<usize>]>,
    seed: u64,
) -> Result<ExtractedPartition> {
    let n = g.n();
    if t == 0 || t > n {
        return Err(Error::InvalidParameter(format!("need 1 <= t <= n, got t = {t}, n = {n}")));
    }
    if *eta < Rational::zero() || *eta >= Rational::one() {
        return Err(Error::InvalidParameter(format!("eta must lie in [0, 1), got {eta}")));
    }

    let candidates: Vec<Vec<usize>> = match seed_parts {
        Some(parts) => {
            let probe = PartitionWitness::new(parts.to_vec(), Vec::new(), Rational::zero(), 0);
            if parts.len() != t {
                return Err(Error::InvalidPartition(format!("expected {t} seed parts, got {}", parts.len())));
            }
            validate(g, &probe)?;
            let mut assign = vec![0; n];
            for (i, p) in parts.iter().enumerate() {
                for &v in p {
                    assign[v] = i;
                }
            }
            vec![assign]
        }
        None => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..RESTARTS).map(|_| local_search(g, t, &mut rng)).collect()
        }
    };

    let half = eta / int(2);
    let mut best: Option<(Vec<Vec<usize>>, Vec<usize>)> = None;
    for assign in candidates {
        let mut parts: Vec<Vec<usize>> = vec![Vec::new(); t];
        for (v, &p) in assign.iter().enumerate() {
            parts[p].push(v);
        }
        let (parts, x) = peel(g, parts, &half);
        let (parts, x) = reinsert(g, parts, x, eta, &half);
        let better = match &best {
            None => true,
            Some((_, bx)) => x.len() < bx.len(),
        };
        if better {
            best = Some((parts, x));
        }
    }
    let (parts, x) = best.expect("at least one candidate");
    let probe = PartitionWitness::new(parts.clone(), x.clone(), eta.clone(), x.len());
    let diag = verify_type_partition(g, &probe)?;
    let m = parts.iter().map(Vec::len).min().unwrap_or(0);
    let eta_certified = if diag.cross_degree_holds { eta.clone() } else { diag.min_eta.clone() };
    let witness = PartitionWitness::new(parts, x.clone(), eta_certified.clone(), x.len())
        .with_flatness(diag.min_alpha.clone(), m);
    debug_assert!({
        let d = verify_type_partition(g, &witness).unwrap();
        d.type_holds && d.flat_holds && d.large_holds
    });
    Ok(ExtractedPartition {
        witness,
        eta_certified,
        eta_measured: diag.min_eta,
    })
}

fn local_search(g: &Graph, t: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut assign = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        assign[v] = pos % t;
    }
    let mut sets: Vec<VertexSet> = vec![VertexSet::new(n); t];
    for (v, &p) in assign.iter().enumerate() {
        sets[p].insert(v);
    }
    for _ in 0..n {
        let mut changed = false;
        for v in 0..n {
            let cur = assign[v];
            let within: Vec<usize> = sets.iter().map(|s| g.degree_into(v, s)).collect();
            let best = *within.iter().min().expect("t >= 1");
            if within[cur] == best {
                continue;
            }
            let target = within.iter().position(|&w| w == best).expect("minimum exists");
            sets[cur].remove(v);
            sets[target].insert(v);
            assign[v] = target;
            changed = true;
        }
        if !changed {
            break;
        }
    }
    assign
}

/// Missing fraction `1 - deg(v, S_j)/|S_j|` maximised over `j != i`, as an
/// exact rational, or `None` when `v` meets the threshold everywhere.
fn worst_deficit(g: &Graph, v: usize, i: usize, sets: &[VertexSet], sizes: &[usize], threshold: &Rational) -> Option<Rational> {
    let mut worst: Option<Rational> = None;
    for (j, sj) in sets.iter().enumerate() {
        if j == i || sizes[j] == 0 {
            continue;
        }
        let deg = g.degree_into(v, sj);
        if int(deg) < int(sizes[j]) * (BigRational::one() - threshold) {
            let missing = BigRational::new(BigInt::from(sizes[j] - deg), BigInt::from(sizes[j]));
            if worst.as_ref().is_none_or(|w| missing > *w) {
                worst = Some(missing);
            }
        }
    }
    worst
}

fn peel(g: &Graph, mut parts: Vec<Vec<usize>>, threshold: &Rational) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = g.n();
    let mut x = Vec::new();
    loop {
        let sets: Vec<VertexSet> = parts.iter().map(|p| VertexSet::from_iter_with_capacity(n, p.iter().copied())).collect();
        let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
        let mut pick: Option<(Rational, usize, usize)> = None;
        for (i, p) in parts.iter().enumerate() {
            for &v in p {
                if let Some(d) = worst_deficit(g, v, i, &sets, &sizes, threshold) {
                    let better = match &pick {
                        None => true,
                        Some((bd, bv, _)) => d > *bd || (d == *bd && v < *bv),
                    };
                    if better {
                        pick = Some((d, v, i));
                    }
                }
            }
        }
        match pick {
            None => break,
            Some((_, v, i)) => {
                parts[i].retain(|&u| u != v);
                x.push(v);
            }
        }
    }
    x.sort_unstable();
    (parts, x)
}

fn cross_holds(g: &Graph, parts: &[Vec<usize>], eta: &Rational) -> bool {
    let w = PartitionWitness::new(parts.to_vec(), Vec::new(), eta.clone(), 0);
    let n = g.n();
    let sets = w.part_sets(n);
    let one_minus = BigRational::one() - eta;
    parts.iter().enumerate().all(|(i, p)| {
        p.iter().all(|&v| {
            sets.iter().enumerate().all(|(j, sj)| {
                i == j || parts[j].is_empty() || int(g.degree_into(v, sj)) >= int(parts[j].len()) * &one_minus
            })
        })
    })
}

fn reinsert(
    g: &Graph,
    mut parts: Vec<Vec<usize>>,
    mut x: Vec<usize>,
    eta: &Rational,
    threshold: &Rational,
) -> (Vec<Vec<usize>>, Vec<usize>) {
    let n = g.n();
    for _ in 0..n {
        let mut moved = false;
        for &v in x.clone().iter() {
            let sets: Vec<VertexSet> =
                parts.iter().map(|p| VertexSet::from_iter_with_capacity(n, p.iter().copied())).collect();
            let one_minus = BigRational::one() - threshold;
            let deficient: Vec<usize> = (0..parts.len())
                .filter(|&i| !parts[i].is_empty() && int(g.degree_into(v, &sets[i])) < int(parts[i].len()) * &one_minus)
                .collect();
            let target = match deficient.as_slice() {
                [] => (0..parts.len())
                    .min_by_key(|&i| (g.degree_into(v, &sets[i]), i))
                    .expect("t >= 1"),
                [only] => *only,
                _ => continue,
            };
            let mut trial = parts.clone();
            trial[target].push(v);
            trial[target].sort_unstable();
            if cross_holds(g, &trial, eta) {
                parts = trial;
                x.retain(|&u| u != v);
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    (parts, x)
}

/// Greedy transversal clique: one vertex from each part, choosing at each
/// step the lowest-labelled vertex of `S_k` adjacent to all earlier
/// choices. Succeeds on every verified witness with `η < 1/t` and
/// non-empty parts.
pub fn transversal_clique(g: &Graph, w: &PartitionWitness) -> Option<Vec<usize>> {
    let mut common = g.all_vertices();
    let mut out = Vec::with_capacity(w.t);
    for part in &w.parts {
        let v = *part.iter().filter(|&&v| common.contains(v)).min()?;
        out.push(v);
        common.intersect_with(g.neighbors(v));
    }
    Some(out)
}

/// Restriction to `T_i ⊆ S_i` and `X' ⊆ X`: the induced subgraph and the
/// relabelled witness at parameter `η / β`, where `β` is the smallest ratio
/// `|T_i| / |S_i|`.
pub fn restrict_witness(
    g: &Graph,
    w: &PartitionWitness,
    keep_parts: &[Vec<usize>],
    keep_x: &[usize],
) -> Result<(Graph, PartitionWitness, Rational)> {
    if keep_parts.len() != w.t {
        return Err(Error::InvalidParameter("one kept subset per part is required".into()));
    }
    let mut beta = Rational::one();
    for (t_i, s_i) in keep_parts.iter().zip(&w.parts) {
        if t_i.iter().any(|v| !s_i.contains(v)) {
            return Err(Error::InvalidParameter("kept vertices must come from their part".into()));
        }
        if !s_i.is_empty() {
            let r = BigRational::new(BigInt::from(t_i.len()), BigInt::from(s_i.len()));
            if r < beta {
                beta = r;
            }
        }
    }
    if beta.is_zero() {
        return Err(Error::InvalidParameter("beta must be positive".into()));
    }
    let mut vertices: Vec<usize> = keep_parts.iter().flatten().chain(keep_x).copied().collect();
    vertices.sort_unstable();
    let index = |v: usize| vertices.binary_search(&v).expect("kept vertex");
    let h = g.induced(&vertices);
    let parts = keep_parts.iter().map(|p| p.iter().map(|&v| index(v)).collect()).collect();
    let x = keep_x.iter().map(|&v| index(v)).collect();
    let eta = &w.eta / &beta;
    Ok((h, PartitionWitness::new(parts, x, eta, w.c), beta))
}

/// Link of a clique `sigma ⊆ S_1 ∪ .. ∪ S_k` together with the induced
/// witness on parts `k+1..t` at parameter `η (1 - η|σ|)^{-1}`. Vertices of
/// the link outside `S_{k+1..t}` go to `X`.
pub fn link_witness(g: &Graph, w: &PartitionWitness, sigma: &[usize], k: usize) -> Result<(Link, PartitionWitness)> {
    let lk = link(g, sigma)?;
    let denom = BigRational::one() - &w.eta * int(sigma.len());
    if denom <= Rational::zero() {
        return Err(Error::InvalidParameter("need η |σ| < 1".into()));
    }
    let eta = &w.eta / denom;
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); w.t - k];
    let mut x = Vec::new();
    for (i, &host) in lk.host.iter().enumerate() {
        match w.parts[k..].iter().position(|p| p.contains(&host)) {
            Some(j) => parts[j].push(i),
            None => x.push(i),
        }
    }
    Ok((lk, PartitionWitness::new(parts, x, eta, w.c)))
}
