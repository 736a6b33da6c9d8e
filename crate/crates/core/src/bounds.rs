//! Edge bounds for flag complexes and d-leveled graphs, the γ₂ inequality,
//! and per-instance reports.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::complex::{
    check_dehn_sommerville, check_klee, clique_complex, eulerian_check, euler_characteristic, gamma_vector,
    h_vector, middle_ds_coefficients, DehnSommervilleCheck, EulerianCheck, FaceVector, GammaVector, HVector,
    KleeCheck, SimplicialComplex,
};
use crate::error::{Error, Result};
use crate::graph::{clique_count, Graph};
use crate::rational::{int, serde_bigint, serde_str, Rational};
use crate::structure::{
    bollobas_lower_bound, flag_violation, is_d_leveled, pseudomanifold_violation, LeveledWitness,
    PseudomanifoldViolation,
};

fn frac(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn quadratic_coefficient(s: u64) -> Rational {
    frac(s as i64 - 1, 2 * s as i64)
}

/// `((s-1)/2s) n² + n`.
pub fn edge_bound_odd(n: u64, s: u64) -> Rational {
    assert!(s >= 1, "s must be positive");
    quadratic_coefficient(s) * int(n) * int(n) + int(n)
}

/// `(4s-3) n - 8s(s-1)`.
pub fn edge_lower_bound_odd(n: u64, s: u64) -> Rational {
    assert!(s >= 1, "s must be positive");
    let s = BigInt::from(s);
    let n = BigInt::from(n);
    int((BigInt::from(4) * &s - 3u32) * n - BigInt::from(8) * &s * (&s - 1u32))
}

/// `((s-1)/2s) n² + (1 + 2/s) n - (4 + 2/s)`.
pub fn edge_bound_even_conjecture(n: u64, s: u64) -> Rational {
    assert!(s >= 1, "s must be positive");
    let s_i = s as i64;
    quadratic_coefficient(s) * int(n) * int(n) + frac(s_i + 2, s_i) * int(n) - frac(4 * s_i + 2, s_i)
}

/// `γ₁, γ₂` of a `(2s-1)`-dimensional complex from `f₀, f₁`, and the
/// inequality `γ₂ <= ((s-1)/2s) γ₁²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaCheck {
    #[serde(with = "serde_bigint")]
    pub g1: BigInt,
    #[serde(with = "serde_bigint")]
    pub g2: BigInt,
    /// `((s-1)/2s) γ₁²`.
    #[serde(with = "serde_str")]
    pub rhs: Rational,
    pub holds: bool,
    pub equality: bool,
}

pub fn gamma_check(f0: u64, f1: u64, s: u64) -> GammaCheck {
    assert!(s >= 1, "s must be positive");
    let (f0, f1, sb) = (BigInt::from(f0), BigInt::from(f1), BigInt::from(s));
    let g1 = &f0 - BigInt::from(4) * &sb;
    let g2: BigInt = f1 - (BigInt::from(4) * &sb - 3u32) * &f0 + BigInt::from(8) * &sb * (&sb - 1u32);
    let rhs = quadratic_coefficient(s) * int(g1.clone()) * int(g1.clone());
    let lhs = int(g2.clone());
    GammaCheck {
        holds: lhs <= rhs,
        equality: lhs == rhs,
        g1,
        g2,
        rhs,
    }
}

/// `(|E| - ((s-1)/2s) n²) / n`.
pub fn linear_excess(g: &Graph, s: u64) -> Result<Rational> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("linear excess needs n >= 1".into()));
    }
    if s == 0 {
        return Err(Error::InvalidParameter("s must be positive".into()));
    }
    let n = int(g.n());
    Ok((int(g.edge_count()) - quadratic_coefficient(s) * &n * &n) / n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    /// Holds whenever the hypotheses do.
    Theorem,
    /// Holds for instances with at least `n₀` vertices, `n₀` unknown.
    AsymptoticTheorem,
    Conjecture,
    OpenProblem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Upper,
    Lower,
}

/// One inequality evaluated on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEvaluation {
    pub kind: BoundKind,
    #[serde(with = "serde_str")]
    pub value: Rational,
    #[serde(with = "serde_bigint")]
    pub quantity: BigInt,
    pub holds: bool,
    pub equality: bool,
    /// `value - quantity` for upper bounds and `quantity - value` for lower
    /// bounds, so `holds` is `slack >= 0`.
    #[serde(with = "serde_str")]
    pub slack: Rational,
    pub status: BoundStatus,
    pub hypotheses_verified: bool,
    pub note: String,
}

impl BoundEvaluation {
    pub fn new(
        kind: BoundKind,
        value: Rational,
        quantity: impl Into<BigInt>,
        status: BoundStatus,
        hypotheses_verified: bool,
        note: impl Into<String>,
    ) -> Self {
        let quantity = quantity.into();
        let q = int(quantity.clone());
        let slack = match kind {
            BoundKind::Upper => &value - &q,
            BoundKind::Lower => &q - &value,
        };
        BoundEvaluation {
            kind,
            holds: !slack.is_negative(),
            equality: slack.is_zero(),
            slack,
            value,
            quantity,
            status,
            hypotheses_verified,
            note: note.into(),
        }
    }

    /// A violated theorem on an instance meeting its hypotheses.
    pub fn is_violation(&self) -> bool {
        !self.holds && self.hypotheses_verified && matches!(self.status, BoundStatus::Theorem)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeveledSummary {
    pub d: usize,
    pub verdict: bool,
    pub witness: Option<LeveledWitness>,
}

/// Invariants of the complex behind an instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    pub dim: isize,
    pub f: FaceVector,
    pub h: Option<HVector>,
    /// Present when `h` is palindromic.
    pub gamma: Option<GammaVector>,
    pub euler: i64,
    pub flag: bool,
    pub flag_witness: Option<Vec<usize>>,
    pub pseudomanifold: bool,
    pub pseudomanifold_witness: Option<PseudomanifoldViolation>,
    pub dehn_sommerville: Option<DehnSommervilleCheck>,
    pub klee: Option<KleeCheck>,
    /// Skipped (absent) above [`EULERIAN_FACE_LIMIT`] faces.
    pub eulerian: Option<EulerianCheck>,
    pub middle_ds: Option<bool>,
}

/// Face count above which the Eulerian link check is skipped.
pub const EULERIAN_FACE_LIMIT: usize = 20_000;

/// f/h/γ vectors, Euler characteristic and the structural checks of `k`.
pub fn complex_summary(k: &SimplicialComplex) -> ComplexSummary {
    let f = k.f_vector();
    let dim = k.dim();
    let h = usize::try_from(dim).ok().and_then(|d| h_vector(&f, d).ok());
    let gamma = h.as_ref().and_then(|h| gamma_vector(h).ok());
    let euler = euler_characteristic(&f);
    let flag_witness = flag_violation(k);
    let pm = usize::try_from(dim).ok().and_then(|d| pseudomanifold_violation(k, d));
    let klee = match (&h, usize::try_from(dim)) {
        (Some(h), Ok(d)) => check_klee(h, euler, d).ok(),
        _ => None,
    };
    let middle_ds = usize::try_from(dim)
        .ok()
        .filter(|&d| d >= 1)
        .and_then(|d| middle_ds_coefficients(d).ok())
        .map(|m| m.holds_for(&f));
    ComplexSummary {
        dim,
        dehn_sommerville: h.as_ref().map(check_dehn_sommerville),
        klee,
        eulerian: eulerian_check(k, EULERIAN_FACE_LIMIT),
        middle_ds,
        f,
        h,
        gamma,
        euler,
        flag: flag_witness.is_none(),
        flag_witness,
        pseudomanifold: dim >= 0 && pm.is_none(),
        pseudomanifold_witness: pm,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub instance: String,
    pub n: usize,
    pub s: usize,
    pub edges: usize,
    /// Clique-count constant of the hypothesis `k_{s+1} <= C n^s`, if given.
    #[serde(rename = "C", serialize_with = "serialize_opt_rational")]
    pub c: Option<Rational>,
    /// `k_{s+1}(G)`.
    pub cliques: u64,
    /// Smallest `C` meeting the clique hypothesis, `k_{s+1} / n^s`.
    #[serde(rename = "C_min", with = "serde_str")]
    pub c_min: Rational,
    pub bounds: BTreeMap<String, BoundEvaluation>,
    pub leveled: LeveledSummary,
    pub gamma: GammaCheck,
    #[serde(with = "serde_str")]
    pub linear_excess: Rational,
    /// The instance meets every checkable hypothesis of the odd edge bound
    /// and exceeds it.
    pub potential_counterexample: bool,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexSummary>,
}

fn serialize_opt_rational<S: serde::Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&crate::rational::format(r)),
        None => s.serialize_none(),
    }
}

impl BoundReport {
    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.instance = name.into();
        self
    }

    pub fn with_complex(mut self, summary: ComplexSummary) -> Self {
        self.complex = Some(summary);
        self
    }

    /// Some theorem-status bound fails on an instance meeting its
    /// hypotheses, or the instance is a potential counterexample.
    pub fn has_violation(&self) -> bool {
        self.potential_counterexample || self.bounds.values().any(BoundEvaluation::is_violation)
    }
}

const N0_CAVEAT: &str = "holds for n >= n0(s, C); n0 is not explicit, so a failure is not a refutation";

/// Evaluates the odd-dimensional edge bound and its companions on `g`.
///
/// The hypotheses of the odd bound that can be checked are
/// `(2s-1)`-leveledness and, when `c` is given, `k_{s+1} <= C n^s`. A
/// leveled instance above the bound is flagged as a potential
/// counterexample to the open question whether the bound holds for every
/// `(2s-1)`-leveled graph; it is never reported as refuting the asymptotic
/// statement.
pub fn verify_theorem_instance(g: &Graph, s: usize, c: Option<&Rational>) -> Result<BoundReport> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be positive".into()));
    }
    let n = g.n();
    let edges = g.edge_count();
    let d = 2 * s - 1;
    let verdict = is_d_leveled(g, d);
    let cliques = clique_count(g, s + 1);
    let s32 = u32::try_from(s).map_err(|_| Error::InvalidParameter("s too large".into()))?;
    let n_pow = int(BigInt::from(n).pow(s32));
    let c_min = if n == 0 { Rational::zero() } else { int(cliques) / &n_pow };
    let clique_hyp = c.is_none_or(|c| int(cliques) <= c * &n_pow);
    let (n64, s64) = (n as u64, s as u64);

    let mut notes = Vec::new();
    let mut bounds = BTreeMap::new();
    let odd_status = if s == 1 { BoundStatus::Theorem } else { BoundStatus::AsymptoticTheorem };
    let odd_hyp = verdict.is_leveled && clique_hyp;
    let odd_note = if s == 1 {
        "every 1-leveled graph is a disjoint union of cycles".to_string()
    } else {
        N0_CAVEAT.to_string()
    };
    bounds.insert(
        "thm_odd".to_string(),
        BoundEvaluation::new(BoundKind::Upper, edge_bound_odd(n64, s64), edges, odd_status, odd_hyp, odd_note),
    );
    let (lower_status, lower_note) = if s <= 2 {
        (BoundStatus::Theorem, "requires a flag (2s-1)-sphere, which is not certified here")
    } else {
        (BoundStatus::Conjecture, "conjectural for s >= 3, and stated for flag spheres only")
    };
    bounds.insert(
        "lower_odd".to_string(),
        BoundEvaluation::new(BoundKind::Lower, edge_lower_bound_odd(n64, s64), edges, lower_status, false, lower_note),
    );
    let even_leveled = is_d_leveled(g, 2 * s).is_leveled;
    bounds.insert(
        "even_conjecture".to_string(),
        BoundEvaluation::new(
            BoundKind::Upper,
            edge_bound_even_conjecture(n64, s64),
            edges,
            BoundStatus::Conjecture,
            false,
            if even_leveled {
                "instance is 2s-leveled; the conjecture concerns flag 2s-spheres, which is not certified"
            } else {
                "not applicable: instance is not 2s-leveled"
            },
        ),
    );
    let bb = bollobas_lower_bound(n64, edges as u64, s32);
    bounds.insert(
        "bollobas".to_string(),
        BoundEvaluation::new(
            BoundKind::Lower,
            bb.value,
            cliques,
            BoundStatus::Theorem,
            bb.in_window,
            if bb.in_window {
                "edge count inside the validity window"
            } else {
                "edge count outside the validity window; value is not a guarantee"
            },
        ),
    );

    notes.push(format!("C = {}", c.map_or_else(|| "unset".to_string(), crate::rational::format)));
    if !verdict.is_leveled {
        notes.push(format!("hypotheses not met: not {d}-leveled"));
    }
    if !clique_hyp {
        notes.push("hypotheses not met: k_{s+1} > C n^s".to_string());
    }
    let thm = &bounds["thm_odd"];
    let potential_counterexample = thm.hypotheses_verified && !thm.holds;
    if potential_counterexample {
        notes.push("potential counterexample: leveled instance above the odd edge bound".to_string());
    }
    notes.push("maximum edge count of closed flag 2s-manifolds is an open problem".to_string());

    Ok(BoundReport {
        instance: String::new(),
        n,
        s,
        edges,
        c: c.cloned(),
        cliques,
        c_min,
        bounds,
        leveled: LeveledSummary {
            d,
            verdict: verdict.is_leveled,
            witness: verdict.witness,
        },
        gamma: gamma_check(n64, edges as u64, s64),
        linear_excess: if n == 0 { Rational::zero() } else { linear_excess(g, s64)? },
        potential_counterexample,
        notes,
        complex: None,
    })
}

/// `s` matched to the dimension of `Cl(g)`: `d = 2s-1` or `d = 2s`.
pub fn natural_s(g: &Graph) -> usize {
    let k = clique_complex(g);
    usize::try_from(k.dim()).map_or(1, |d| d.div_ceil(2).max(1))
}
