//! Extremal inequalities used on the way to the edge bound: the independent
//! set bound for leveled graphs and the Bollobás clique lower bound.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{int, serde_bigint, serde_str, Rational};

use super::is_d_leveled;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependentBound {
    pub independent: usize,
    /// `2 |X|^d`.
    #[serde(with = "serde_bigint")]
    pub rhs: BigInt,
    /// `2 C(|X|, d)`, a sharper count of the `d`-subsets of `X` that can
    /// carry the links of independent vertices.
    #[serde(with = "serde_bigint")]
    pub binomial_rhs: BigInt,
    pub holds: bool,
}

/// For a d-leveled `g` with `V = I ⊔ X` and `I` independent, checks
/// `|I| <= 2 |X|^d`.
pub fn check_lemma_independent_bound(g: &Graph, d: usize, i: &[usize], x: &[usize]) -> Result<IndependentBound> {
    let mut seen = vec![false; g.n()];
    for &v in i.iter().chain(x) {
        if v >= g.n() || std::mem::replace(&mut seen[v], true) {
            return Err(Error::PreconditionFailed(format!("vertex {v} is out of range or repeated")));
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::PreconditionFailed("I and X must cover every vertex".into()));
    }
    if !g.is_independent(i) {
        return Err(Error::PreconditionFailed("I is not independent".into()));
    }
    if !is_d_leveled(g, d).is_leveled {
        return Err(Error::PreconditionFailed(format!("graph is not {d}-leveled")));
    }
    let d32 = u32::try_from(d).map_err(|_| Error::InvalidParameter("d too large".into()))?;
    let rhs = BigInt::from(2) * BigInt::from(x.len()).pow(d32);
    let binomial_rhs = BigInt::from(2) * binomial(BigInt::from(x.len()), BigInt::from(d));
    Ok(IndependentBound {
        independent: i.len(),
        holds: BigInt::from(i.len()) <= rhs,
        rhs,
        binomial_rhs,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BollobasBound {
    /// `(2t m n^{t-1} - (t-1) n^{t+1}) / (t+1)^t`, exact.
    #[serde(with = "serde_str")]
    pub value: Rational,
    /// `(t-1)/(2t) n² <= m <= t/(2(t+1)) n²`. Outside the window the value
    /// is not a guarantee.
    pub in_window: bool,
}

/// Lower bound on the number of `(t+1)`-cliques in a graph with `n`
/// vertices and `m` edges.
pub fn bollobas_lower_bound(n: u64, m: u64, t: u32) -> BollobasBound {
    let nb = BigInt::from(n);
    let mb = BigInt::from(m);
    let tb = BigInt::from(t);
    let num = BigInt::from(2) * &tb * &mb * nb.pow(t - 1) - (&tb - 1) * nb.pow(t + 1);
    let value = BigRational::new(num, (&tb + 1u32).pow(t));
    let n2 = int(n) * int(n);
    let lo = BigRational::new(&tb - 1, BigInt::from(2) * &tb) * &n2;
    let hi = BigRational::new(tb.clone(), BigInt::from(2) * (&tb + 1)) * &n2;
    let mr = int(m);
    BollobasBound {
        value,
        in_window: lo <= mr && mr <= hi,
    }
}

/// `C (t+1)^t / (2t)`: the linear-term constant obtained when the clique
/// hypothesis `k_{t+1} <= C n^t` is fed into the Bollobás bound.
pub fn bollobas_linear_constant(t: u32, c: &Rational) -> Rational {
    let tb = BigInt::from(t);
    c * BigRational::new((&tb + 1u32).pow(t), BigInt::from(2) * tb)
}

/// Default parameter pair for `t` parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Schedule {
    #[serde(with = "serde_str")]
    pub eta: Rational,
    #[serde(with = "serde_str")]
    pub alpha: Rational,
}

/// `η_t = 1/(200 t²)`, `α_t = η_t/(20 t)`. These satisfy `η_t < 1/(100t)`,
/// `α_t < η_t/(10t)` and `η_t/(1 - 2tη_t) < η_{t-1}`.
pub fn default_schedule(t: u32) -> Schedule {
    let t = BigInt::from(t.max(1));
    let eta = BigRational::new(BigInt::from(1), BigInt::from(200) * &t * &t);
    let alpha = &eta / BigRational::from_integer(BigInt::from(20) * &t);
    Schedule { eta, alpha }
}
