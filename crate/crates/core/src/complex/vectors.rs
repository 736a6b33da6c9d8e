use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::serde_bigint;

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

fn sign(e: usize) -> BigInt {
    if e % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `(f_{-1}, f_0, .., f_d)`; index 0 holds `f_{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FaceVector(Vec<u64>);

impl FaceVector {
    pub fn new(entries: Vec<u64>) -> Self {
        FaceVector(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// `f_i` for `i >= -1`; zero past the top dimension.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    /// Dimension implied by the length.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 2
    }
}

/// `(h_0, .., h_{d+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(#[serde(with = "serde_bigint::vec")] Vec<BigInt>);

impl HVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        HVector(entries)
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        HVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    /// `d` such that the vector has `d + 2` entries.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 2
    }

    pub fn is_palindromic(&self) -> bool {
        self.first_asymmetry().is_none()
    }

    fn first_asymmetry(&self) -> Option<usize> {
        let len = self.0.len();
        (0..len).find(|&i| self.0[i] != self.0[len - 1 - i])
    }
}

/// `(γ_0, .., γ_s)` with `s = ⌊(d+1)/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GammaVector(#[serde(with = "serde_bigint::vec")] Vec<BigInt>);

impl GammaVector {
    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        GammaVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }
}

/// Coefficient of `f_{i-1}` in `h_k` for a `d`-dimensional complex:
/// `(-1)^{k-i} C(d+1-i, k-i)`.
fn h_coefficient(d: usize, k: usize, i: usize) -> BigInt {
    debug_assert!(i <= k);
    sign(k - i) * binom(d + 1 - i, k - i)
}

/// h-vector from the f-vector of a `d`-dimensional complex, via
/// `Σ h_i x^{d+1-i} = Σ f_{i-1} (x-1)^{d+1-i}`.
pub fn h_vector(f: &FaceVector, d: usize) -> Result<HVector> {
    if f.entries().len() != d + 2 {
        return Err(Error::DimensionMismatch {
            expected: d + 2,
            got: f.entries().len(),
        });
    }
    let fs: Vec<BigInt> = f.entries().iter().map(|&x| BigInt::from(x)).collect();
    Ok(HVector(
        (0..=d + 1)
            .map(|k| (0..=k).map(|i| h_coefficient(d, k, i) * &fs[i]).sum())
            .collect(),
    ))
}

/// Inverse transform: `f_{k-1} = Σ_{i<=k} C(d+1-i, k-i) h_i`.
pub fn f_from_h(h: &HVector) -> Vec<BigInt> {
    let len = h.entries().len();
    let d1 = len - 1;
    (0..len)
        .map(|k| (0..=k).map(|i| binom(d1 - i, k - i) * &h.entries()[i]).sum())
        .collect()
}

/// γ-vector of a palindromic h-vector: the unique solution of
/// `Σ h_i x^i = Σ γ_i x^i (x+1)^{d+1-2i}`, solved from the low coefficients.
pub fn gamma_vector(h: &HVector) -> Result<GammaVector> {
    if let Some(index) = h.first_asymmetry() {
        return Err(Error::NotPalindromic { index });
    }
    let d1 = h.entries().len() - 1;
    let s = d1 / 2;
    let mut gamma: Vec<BigInt> = Vec::with_capacity(s + 1);
    for k in 0..=s {
        let mut g = h.entries()[k].clone();
        for (i, gi) in gamma.iter().enumerate() {
            g -= gi * binom(d1 - 2 * i, k - i);
        }
        gamma.push(g);
    }
    Ok(GammaVector(gamma))
}

/// Re-expands γ through the `x^i (x+1)^{d+1-2i}` basis.
pub fn gamma_to_h(gamma: &GammaVector, d: usize) -> HVector {
    let d1 = d + 1;
    let mut h = vec![BigInt::zero(); d1 + 1];
    for (i, g) in gamma.entries().iter().enumerate() {
        for j in 0..=(d1 - 2 * i) {
            h[i + j] += g * binom(d1 - 2 * i, j);
        }
    }
    HVector(h)
}

/// `γ_k` as a linear form in `f_{-1}, .., f_{k-1}` (index 0 holds the
/// coefficient of `f_{-1}`), obtained by running the triangular solve on
/// the symbolic h-coefficients.
pub fn gamma_in_f_basis(d: usize, k: usize) -> Vec<BigInt> {
    let d1 = d + 1;
    let h_form = |j: usize| -> Vec<BigInt> { (0..=j).map(|i| h_coefficient(d, j, i)).collect() };
    let mut forms: Vec<Vec<BigInt>> = Vec::new();
    for j in 0..=k {
        let mut g = h_form(j);
        g.resize(k + 1, BigInt::zero());
        for (i, gi) in forms.iter().enumerate() {
            let c = binom(d1 - 2 * i, j - i);
            for (a, b) in g.iter_mut().zip(gi) {
                *a -= &c * b;
            }
        }
        forms.push(g);
    }
    forms.pop().expect("k + 1 forms")
}

/// `Σ_{i>=0} (-1)^i f_i`.
pub fn euler_characteristic(f: &FaceVector) -> i64 {
    f.entries()
        .iter()
        .skip(1)
        .enumerate()
        .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// `χ(S^d) = 1 + (-1)^d`; `χ(S^{-1}) = 0`.
pub fn sphere_euler_characteristic(d: isize) -> i64 {
    if d.rem_euclid(2) == 0 {
        2
    } else {
        0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DehnSommervilleCheck {
    /// `per_index[i]` is `h_i == h_{d+1-i}`.
    pub per_index: Vec<bool>,
    pub holds: bool,
}

pub fn check_dehn_sommerville(h: &HVector) -> DehnSommervilleCheck {
    let e = h.entries();
    let per_index: Vec<bool> = (0..e.len()).map(|i| e[i] == e[e.len() - 1 - i]).collect();
    let holds = per_index.iter().all(|&b| b);
    DehnSommervilleCheck { per_index, holds }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KleeEquation {
    pub i: usize,
    /// `h_{d+1-i} - h_i`.
    #[serde(with = "serde_bigint")]
    pub lhs: BigInt,
    /// `(-1)^i C(d+1, i) (χ - χ(S^d))`.
    #[serde(with = "serde_bigint")]
    pub rhs: BigInt,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KleeCheck {
    pub equations: Vec<KleeEquation>,
    pub holds: bool,
}

/// Klee's relations `h_{d+1-i} - h_i = (-1)^i C(d+1,i) (χ(K) - χ(S^d))`
/// for `i = 0..=d+1`.
pub fn check_klee(h: &HVector, chi: i64, d: usize) -> Result<KleeCheck> {
    let e = h.entries();
    if e.len() != d + 2 {
        return Err(Error::DimensionMismatch {
            expected: d + 2,
            got: e.len(),
        });
    }
    let excess = BigInt::from(chi - sphere_euler_characteristic(d as isize));
    let equations: Vec<KleeEquation> = (0..=d + 1)
        .map(|i| {
            let lhs = &e[d + 1 - i] - &e[i];
            let rhs = sign(i) * binom(d + 1, i) * &excess;
            KleeEquation {
                i,
                holds: lhs == rhs,
                lhs,
                rhs,
            }
        })
        .collect();
    let holds = equations.iter().all(|q| q.holds);
    Ok(KleeCheck { equations, holds })
}

/// The middle Dehn–Sommerville relation solved for `f_s`:
/// `f_s = Σ_{j=-1}^{s-1} a_{s,j} f_j`, with `s = ⌊(d+1)/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleDs {
    pub d: usize,
    pub s: usize,
    /// `coefficients[j + 1] = a_{s,j}`.
    pub coefficients: Vec<BigRational>,
    /// `Σ |a_{s,j}|`.
    pub abs_sum: BigRational,
}

impl MiddleDs {
    pub fn coefficient(&self, j: isize) -> &BigRational {
        &self.coefficients[(j + 1) as usize]
    }

    /// `Σ a_{s,j} f_j` evaluated on `f`.
    pub fn predicted_f_s(&self, f: &FaceVector) -> BigRational {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, a)| a * BigRational::from_integer(BigInt::from(f.get(k as isize - 1))))
            .sum()
    }

    /// Whether `f` satisfies the relation exactly.
    pub fn holds_for(&self, f: &FaceVector) -> bool {
        self.predicted_f_s(f) == BigRational::from_integer(BigInt::from(f.get(self.s as isize)))
    }
}

/// Expands the middle relation (`h_{s-1} = h_{s+1}` for `d = 2s-1`,
/// `h_s = h_{s+1}` for `d = 2s`) in the f-basis. `f_s` only occurs in
/// `h_{s+1}`, with coefficient 1.
pub fn middle_ds_coefficients(d: usize) -> Result<MiddleDs> {
    if d == 0 {
        return Err(Error::InvalidParameter("middle Dehn–Sommerville needs d >= 1".into()));
    }
    let s = (d + 1) / 2;
    let low = if d % 2 == 1 { s - 1 } else { s };
    let high = s + 1;
    // 0 = h_high - h_low = f_s + Σ_{i<=s} (c_high,i - c_low,i) f_{i-1}.
    let coefficients: Vec<BigRational> = (0..=s)
        .map(|i| {
            let c_low = if i <= low { h_coefficient(d, low, i) } else { BigInt::zero() };
            let c_high = h_coefficient(d, high, i);
            BigRational::from_integer(c_low - c_high)
        })
        .collect();
    let abs_sum = coefficients.iter().map(|a| a.abs()).sum();
    Ok(MiddleDs {
        d,
        s,
        coefficients,
        abs_sum,
    })
}
