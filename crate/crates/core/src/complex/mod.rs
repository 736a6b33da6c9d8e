//! Simplicial complexes given by facets, and their enumerative invariants.

mod vectors;

pub use vectors::{
    check_dehn_sommerville, check_klee, euler_characteristic, f_from_h, gamma_in_f_basis, gamma_to_h,
    gamma_vector, h_vector, middle_ds_coefficients, sphere_euler_characteristic, DehnSommervilleCheck,
    FaceVector, GammaVector, HVector, KleeCheck, KleeEquation, MiddleDs,
};

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{maximal_cliques, Graph};

/// Facets are capped at this dimension to bound face enumeration.
pub const MAX_FACET_DIMENSION: usize = 24;

/// A simplicial complex on vertices `0..n`, stored as its inclusion-maximal
/// faces. Always contains `∅`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`: each is sorted and
    /// deduplicated, and faces contained in others are dropped. No faces
    /// gives the complex `{∅}`.
    pub fn new(n: usize, faces: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidParameter(format!("vertex {v} out of range for n = {n}")));
            }
            if f.len() > MAX_FACET_DIMENSION + 1 {
                return Err(Error::InvalidParameter(format!(
                    "facet of dimension {} exceeds the cap {MAX_FACET_DIMENSION}",
                    f.len() - 1
                )));
            }
            facets.push(f);
        }
        // Larger faces first so containment only needs checking one way.
        facets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        facets.dedup();
        let mut kept: Vec<Vec<usize>> = Vec::with_capacity(facets.len());
        for f in facets {
            if !kept.iter().any(|k| k.len() > f.len() && is_subset(&f, k)) {
                kept.push(f);
            }
        }
        if kept.is_empty() {
            kept.push(Vec::new());
        }
        kept.sort();
        Ok(SimplicialComplex { n, facets: kept })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Largest facet dimension; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Vec::len).max().unwrap_or(0) as isize - 1
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }

    pub fn contains_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    /// All faces grouped by size: `result[k]` holds the faces with `k`
    /// vertices, sorted. Built top-down, one level at a time, with hashing.
    pub fn faces_by_size(&self) -> Vec<Vec<Vec<usize>>> {
        let top = self.facets.iter().map(Vec::len).max().unwrap_or(0);
        let mut levels: Vec<HashSet<Vec<usize>>> = vec![HashSet::new(); top + 1];
        for f in &self.facets {
            levels[f.len()].insert(f.clone());
        }
        for size in (1..=top).rev() {
            let (lower, upper) = levels.split_at_mut(size);
            let below = &mut lower[size - 1];
            for face in &upper[0] {
                for skip in 0..face.len() {
                    let mut sub = Vec::with_capacity(size - 1);
                    sub.extend_from_slice(&face[..skip]);
                    sub.extend_from_slice(&face[skip + 1..]);
                    below.insert(sub);
                }
            }
        }
        levels
            .into_iter()
            .map(|set| {
                let mut v: Vec<Vec<usize>> = set.into_iter().collect();
                v.sort();
                v
            })
            .collect()
    }

    /// `(f_{-1}, f_0, .., f_dim)`.
    pub fn f_vector(&self) -> FaceVector {
        FaceVector::new(self.faces_by_size().iter().map(|l| l.len() as u64).collect())
    }

    /// The 1-skeleton as a graph on `0..n`.
    pub fn skeleton(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for f in &self.facets {
            for (i, &u) in f.iter().enumerate() {
                for &v in &f[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// `lk_K σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}`, on the same vertex labels.
    /// `None` when `sigma` is not a face.
    pub fn link(&self, sigma: &[usize]) -> Option<SimplicialComplex> {
        let mut sigma = sigma.to_vec();
        sigma.sort_unstable();
        sigma.dedup();
        let faces: Vec<Vec<usize>> = self
            .facets
            .iter()
            .filter(|f| is_subset(&sigma, f))
            .map(|f| f.iter().copied().filter(|v| sigma.binary_search(v).is_err()).collect())
            .collect();
        if faces.is_empty() {
            return None;
        }
        Some(SimplicialComplex::new(self.n, faces).expect("sub-faces of valid facets"))
    }
}

/// `a ⊆ b` for sorted slices.
pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

/// `Cl(G)`: the complex whose faces are the cliques of `g`.
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    let facets = maximal_cliques(g).into_iter().map(|c| c.into_vec()).collect();
    SimplicialComplex { n: g.n(), facets }
}

/// f-vector of `Cl(G)` by clique counting, `f_i = k_{i+1}(G)`.
pub fn clique_f_vector(g: &Graph) -> FaceVector {
    let mut entries = vec![1u64];
    for k in 1.. {
        let c = crate::graph::clique_count(g, k);
        if c == 0 {
            break;
        }
        entries.push(c);
    }
    FaceVector::new(entries)
}

/// Result of checking every face link for sphere-like Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct EulerianCheck {
    pub holds: bool,
    pub faces_checked: usize,
    /// First face whose link has the wrong Euler characteristic, with the
    /// observed and expected values.
    pub first_failure: Option<(Vec<usize>, i64, i64)>,
}

/// Checks `χ(lk σ) = χ(S^{d-|σ|})` for every face `σ` (including `∅`) of a
/// pure complex. This is the combinatorial Eulerian condition; it says
/// nothing about homology. Returns `None` when the complex has more than
/// `max_faces` faces.
pub fn eulerian_check(k: &SimplicialComplex, max_faces: usize) -> Option<EulerianCheck> {
    let levels = k.faces_by_size();
    let total: usize = levels.iter().map(Vec::len).sum();
    if total > max_faces {
        return None;
    }
    let d = k.dim();
    if !k.is_pure() {
        return Some(EulerianCheck {
            holds: false,
            faces_checked: 0,
            first_failure: None,
        });
    }
    let mut checked = 0;
    for face in levels.iter().flatten() {
        let lk = k.link(face).expect("face of the complex");
        let chi = euler_characteristic(&lk.f_vector());
        let expected = sphere_euler_characteristic(d - face.len() as isize);
        checked += 1;
        if chi != expected {
            return Some(EulerianCheck {
                holds: false,
                faces_checked: checked,
                first_failure: Some((face.clone(), chi, expected)),
            });
        }
    }
    Some(EulerianCheck {
        holds: true,
        faces_checked: checked,
        first_failure: None,
    })
}
