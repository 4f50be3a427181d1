//! The SIC probabilistic representation of quantum states.
//!
//! Fixing a SIC as reference measurement, the Born rule p(i) = tr(ρ Π_i)/d
//! maps density matrices one-to-one into the probability simplex, with the
//! inverse ρ = Σ_i [(d+1)p(i) − 1/d] Π_i. Purity becomes Σp² = 2/(d(d+1)),
//! the effective outcome count N_eff = (Σp²)⁻¹ equals C(d+1, 2) on pure
//! states, and no valid p carries more than d(d−1)/2 zeros.

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::golden::GoldenScalar;
use crate::linalg::ComplexMatrix;
use crate::sic::SicEnsemble;

/// Length-d² nonnegative vector summing to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector {
    p: Vec<f64>,
}

impl ProbabilityVector {
    /// Validates nonnegativity and normalization to 1e-12.
    pub fn new(p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::InvalidProbability("empty vector".into()));
        }
        if let Some(bad) = p.iter().find(|&&v| !v.is_finite() || v < -1e-12) {
            return Err(Error::InvalidProbability(format!("entry {}", bad)));
        }
        let sum: f64 = p.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidProbability(format!("sum {}", sum)));
        }
        Ok(Self { p })
    }

    pub fn uniform(n: usize) -> Self {
        Self {
            p: vec![1.0 / n as f64; n],
        }
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.p
    }

    pub fn get(&self, i: usize) -> f64 {
        self.p[i]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.p).expect("probability serialization is infallible")
    }
}

fn check_state(rho: &ComplexMatrix, tol: f64) -> Result<()> {
    if !rho.is_square() {
        return Err(Error::NonState("not square".into()));
    }
    let herm = rho.hermitian_deviation();
    if herm > tol {
        return Err(Error::NonState(format!("not Hermitian ({:.3e})", herm)));
    }
    let tr = rho.trace();
    if (tr - Complex64::new(1.0, 0.0)).norm() > tol {
        return Err(Error::NonState(format!("trace {} ≠ 1", tr.re)));
    }
    let eigs = rho.hermitian_eigenvalues(tol.max(1e-10))?;
    if let Some(min) = eigs.last() {
        if *min < -tol {
            return Err(Error::NonState(format!("negative eigenvalue {:.3e}", min)));
        }
    }
    Ok(())
}

/// Born-rule representation p(i) = tr(ρ E_i) with E_i = Π_i/d.
pub fn represent(e: &SicEnsemble, rho: &ComplexMatrix) -> Result<ProbabilityVector> {
    check_state(rho, 1e-8)?;
    if rho.rows() != e.dimension() {
        return Err(Error::DimensionMismatch(format!(
            "state dimension {} vs ensemble dimension {}",
            rho.rows(),
            e.dimension()
        )));
    }
    let d = e.dimension() as f64;
    let p: Vec<f64> = e
        .projectors()
        .iter()
        .map(|proj| {
            let mut tr = Complex64::new(0.0, 0.0);
            for i in 0..proj.rows() {
                for j in 0..proj.cols() {
                    tr += rho.get(i, j) * proj.get(j, i);
                }
            }
            (tr.re / d).max(0.0)
        })
        .collect();
    ProbabilityVector::new(p)
}

/// Reconstruction ρ = Σ_i [(d+1)p(i) − 1/d] Π_i.
pub fn reconstruct(e: &SicEnsemble, p: &ProbabilityVector) -> Result<ComplexMatrix> {
    if p.len() != e.len() {
        return Err(Error::DimensionMismatch(format!(
            "probability length {} vs ensemble size {}",
            p.len(),
            e.len()
        )));
    }
    let d = e.dimension() as f64;
    let mut rho = ComplexMatrix::zeros(e.dimension(), e.dimension());
    for (i, proj) in e.projectors().iter().enumerate() {
        let w = (d + 1.0) * p.get(i) - 1.0 / d;
        rho = rho.add(&proj.scale(Complex64::new(w, 0.0)));
    }
    Ok(rho)
}

/// Shannon entropy in bits, with 0·log 0 = 0.
pub fn shannon_entropy(p: &ProbabilityVector) -> f64 {
    shannon_entropy_raw(p.values())
}

pub(crate) fn shannon_entropy_raw(p: &[f64]) -> f64 {
    -p.iter()
        .filter(|&&v| v > 0.0)
        .map(|&v| v * v.log2())
        .sum::<f64>()
}

/// Σp² together with the pure-state verdict Σp² = 2/(d(d+1)).
pub fn purity_sum(p: &ProbabilityVector, d: usize, tol: f64) -> (f64, bool) {
    let sum: f64 = p.values().iter().map(|v| v * v).sum();
    let pure = 2.0 / (d as f64 * (d as f64 + 1.0));
    (sum, (sum - pure).abs() <= tol)
}

/// Effective number of outcomes (Σp²)⁻¹.
pub fn n_eff(p: &ProbabilityVector) -> Result<f64> {
    let sum: f64 = p.values().iter().map(|v| v * v).sum();
    if sum <= 0.0 {
        return Err(Error::InvalidProbability("all-zero vector".into()));
    }
    Ok(1.0 / sum)
}

/// Pure-state effective outcome count C(d+1, 2) = d(d+1)/2, exact.
pub fn n_eff_pure(d: usize) -> u64 {
    (d as u64) * (d as u64 + 1) / 2
}

/// Which scalar field the reference measurement lives over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    Real,
    Complex,
}

/// Upper bound on the number of zeros in a valid probability vector:
/// d(d−1)/2 for a complex SIC reference, (d²−1)/3 for a real one.
pub fn max_zero_bound(d: usize, field: Field) -> usize {
    match field {
        Field::Complex => d * (d - 1) / 2,
        Field::Real => (d * d - 1) / 3,
    }
}

/// Number of entries below `tol`.
pub fn count_zeros(p: &ProbabilityVector, tol: f64) -> usize {
    p.values().iter().filter(|&&v| v < tol).count()
}

/// The field elements φ^{2k} + φ^{−2k} + 1 for k = 1..k_max; each has zero
/// √5 part.
pub fn fibonacci_lucas_terms(k_max: usize) -> Vec<GoldenScalar> {
    assert!(k_max >= 1);
    let phi2 = GoldenScalar::phi().square();
    let phi2_inv = phi2.inverse();
    let mut out = Vec::with_capacity(k_max);
    let mut pos = GoldenScalar::one();
    let mut neg = GoldenScalar::one();
    for _ in 1..=k_max {
        pos = pos * phi2.clone();
        neg = neg * phi2_inv.clone();
        out.push(pos.clone() + neg.clone() + GoldenScalar::one());
    }
    out
}

/// Dimensions d_k = φ^{2k} + φ^{−2k} + 1, evaluated exactly in Q(√5);
/// the √5 parts cancel and the result is an integer.
pub fn fibonacci_lucas_dims(k_max: usize) -> Vec<BigInt> {
    fibonacci_lucas_terms(k_max)
        .into_iter()
        .map(|d| {
            d.to_integer()
                .expect("√5 parts cancel in φ^{2k} + φ^{−2k} + 1")
        })
        .collect()
}
