//! Small dense complex linear algebra for spaces of dimension ≤ 64.
//!
//! Everything here is sized for the constructions in this crate: dense
//! row-major storage, eigenvalues by cyclic Jacobi rotations on the real
//! symmetric realification, rank by Gram-spectrum thresholding. No attempt
//! is made at large-scale performance.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Self {
            rows,
            cols,
            entries: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex64::new(1.0, 0.0));
        }
        m
    }

    /// Build from nested rows. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        assert!(r > 0);
        let c = rows[0].len();
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend_from_slice(row);
        }
        Self {
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<Complex64>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Real diagonal matrix.
    pub fn diag(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, Complex64::new(v, 0.0));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn conjugate(&self) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.conj()).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        assert!(self.is_square());
        (0..self.rows).map(|i| self.get(i, i)).sum()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|e| e.norm()).fold(0.0, f64::max)
    }

    /// max_ij |A_ij − (A†)_ij|.
    pub fn hermitian_deviation(&self) -> f64 {
        assert!(self.is_square());
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                dev = dev.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    /// max_ij |A_ij + (Aᵀ)_ij|; zero for antisymmetric matrices.
    pub fn antisymmetric_deviation(&self) -> f64 {
        assert!(self.is_square());
        let mut dev: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                dev = dev.max((self.get(i, j) + self.get(j, i)).norm());
            }
        }
        dev
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self.rows, self.cols) == (other.rows, other.cols) && self.sub(other).max_abs() <= tol
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: &StateVector) -> StateVector {
        assert_eq!(self.cols, v.dim());
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows];
        for i in 0..self.rows {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..self.cols {
                acc += self.get(i, j) * v.amplitudes()[j];
            }
            out[i] = acc;
        }
        StateVector::new(out)
    }

    pub fn pow(&self, mut k: usize) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// Eigenvalues of a Hermitian matrix, descending with multiplicity.
    ///
    /// Works on the 2n×2n real symmetric realification [[B, −C], [C, B]] of
    /// A = B + iC, whose spectrum is that of A doubled.
    pub fn hermitian_eigenvalues(&self, tol: f64) -> Result<Vec<f64>> {
        let dev = self.hermitian_deviation();
        if dev > tol {
            return Err(Error::NotHermitian(dev));
        }
        let n = self.rows;
        // real symmetric input: no need to realify
        if self.entries.iter().all(|z| z.im == 0.0) {
            let mut r: Vec<f64> = self.entries.iter().map(|z| z.re).collect();
            let mut vals = jacobi_eigenvalues(&mut r, n);
            vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
            return Ok(vals);
        }
        let mut r = vec![0.0f64; 4 * n * n];
        let m = 2 * n;
        for i in 0..n {
            for j in 0..n {
                let z = self.get(i, j);
                r[i * m + j] = z.re;
                r[(i + n) * m + (j + n)] = z.re;
                r[i * m + (j + n)] = -z.im;
                r[(i + n) * m + j] = z.im;
            }
        }
        let mut vals = jacobi_eigenvalues(&mut r, m);
        vals.sort_by(|a, b| b.partial_cmp(a).unwrap());
        // doubled spectrum: keep every other value
        Ok(vals.into_iter().step_by(2).collect())
    }

    /// Real symmetric part of the Hilbert–Schmidt Gram matrix of `ops`.
    fn hermitian_gram(ops: &[ComplexMatrix]) -> Vec<f64> {
        let k = ops.len();
        let mut g = vec![0.0f64; k * k];
        for i in 0..k {
            for j in i..k {
                let v = hs_inner(&ops[i], &ops[j])
                    .expect("same-dimension operators")
                    .re;
                g[i * k + j] = v;
                g[j * k + i] = v;
            }
        }
        g
    }
}

/// State vector in C^d.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Self {
        assert!(!amplitudes.is_empty());
        Self { amplitudes }
    }

    pub fn from_reals(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim);
        let mut a = vec![Complex64::new(0.0, 0.0); dim];
        a[index] = Complex64::new(1.0, 0.0);
        Self::new(a)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        assert!(n > 0.0, "cannot normalize the zero vector");
        Self::new(self.amplitudes.iter().map(|a| a / n).collect())
    }

    /// Hermitian inner product ⟨self, other⟩ (conjugate-linear in self).
    pub fn inner(&self, other: &Self) -> Complex64 {
        assert_eq!(self.dim(), other.dim());
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// |⟨self, other⟩|² for unit vectors; the projective overlap.
    pub fn fidelity(&self, other: &Self) -> f64 {
        self.inner(other).norm_sqr()
    }

    /// Rank-1 projector |ψ⟩⟨ψ|.
    pub fn projector(&self) -> ComplexMatrix {
        let d = self.dim();
        let mut m = ComplexMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                m.set(i, j, self.amplitudes[i] * self.amplitudes[j].conj());
            }
        }
        m
    }
}

/// Hilbert–Schmidt inner product tr(A†B).
pub fn hs_inner(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<Complex64> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return Err(Error::DimensionMismatch(format!(
            "hs_inner needs equal square matrices, got {}×{} and {}×{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    // tr(A†B) = Σ_ij conj(A_ij) B_ij
    Ok(a.entries()
        .iter()
        .zip(b.entries())
        .map(|(x, y)| x.conj() * y)
        .sum())
}

/// Kronecker product A ⊗ B.
pub fn tensor(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let rows = a.rows() * b.rows();
    let cols = a.cols() * b.cols();
    let mut out = ComplexMatrix::zeros(rows, cols);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let aij = a.get(i, j);
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out.set(i * b.rows() + k, j * b.cols() + l, aij * b.get(k, l));
                }
            }
        }
    }
    out
}

/// Kronecker product of a vector pair.
pub fn tensor_state(a: &StateVector, b: &StateVector) -> StateVector {
    let mut out = Vec::with_capacity(a.dim() * b.dim());
    for x in a.amplitudes() {
        for y in b.amplitudes() {
            out.push(x * y);
        }
    }
    StateVector::new(out)
}

/// Rank of the span of `ops` inside the real vector space of Hermitian
/// operators: Gram eigenvalues above `tol` × largest.
pub fn operator_rank(ops: &[ComplexMatrix], tol: f64) -> Result<usize> {
    if ops.is_empty() {
        return Err(Error::EmptySet);
    }
    let d = ops[0].rows();
    for op in ops {
        if !op.is_square() || op.rows() != d {
            return Err(Error::DimensionMismatch(
                "operator_rank needs same-dimension square operators".into(),
            ));
        }
    }
    let k = ops.len();
    let mut g = ComplexMatrix::hermitian_gram(ops);
    let vals = jacobi_eigenvalues(&mut g, k);
    let max = vals.iter().cloned().fold(0.0f64, f64::max);
    if max <= 0.0 {
        return Ok(0);
    }
    Ok(vals.iter().filter(|&&v| v > tol * max).count())
}

/// Matrix rank of a Hermitian matrix by eigenvalue thresholding.
pub fn hermitian_rank(a: &ComplexMatrix, tol: f64) -> Result<usize> {
    let vals = a.hermitian_eigenvalues(1e-8)?;
    let max = vals.iter().map(|v| v.abs()).fold(0.0f64, f64::max);
    if max == 0.0 {
        return Ok(0);
    }
    Ok(vals.iter().filter(|v| v.abs() > tol * max).count())
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
///
/// `a` is n×n row-major and is destroyed. Converges quadratically; at the
/// sizes used here (≤ 128) a handful of sweeps suffices.
pub fn jacobi_eigenvalues(a: &mut [f64], n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    if n == 1 {
        return vec![a[0]];
    }
    let scale = a.iter().map(|v| v.abs()).fold(0.0f64, f64::max).max(1.0);
    let stop = 1e-15 * scale;
    for _sweep in 0..100 {
        let mut off: f64 = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[p * n + q].abs());
            }
        }
        if off <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= stop * 1e-2 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i * n + i]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sigma_x() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[vec![c(0., 0.), c(1., 0.)], vec![c(1., 0.), c(0., 0.)]])
    }

    fn sigma_y() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[vec![c(0., 0.), c(0., -1.)], vec![c(0., 1.), c(0., 0.)]])
    }

    fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::from_rows(&[vec![c(1., 0.), c(0., 0.)], vec![c(0., 0.), c(-1., 0.)]])
    }

    #[test]
    fn hs_inner_identity() {
        let i2 = ComplexMatrix::identity(2);
        let v = hs_inner(&i2, &i2).unwrap();
        assert!((v - c(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn hs_inner_pauli_orthogonality() {
        let v = hs_inner(&sigma_x(), &sigma_y()).unwrap();
        assert!(v.norm() < 1e-15);
    }

    #[test]
    fn hs_inner_dimension_mismatch() {
        let i2 = ComplexMatrix::identity(2);
        let i3 = ComplexMatrix::identity(3);
        assert!(hs_inner(&i2, &i3).is_err());
    }

    #[test]
    fn tensor_identities() {
        let i2 = ComplexMatrix::identity(2);
        let i4 = ComplexMatrix::identity(4);
        assert!(tensor(&i2, &i2).approx_eq(&i4, 0.0));
    }

    #[test]
    fn tensor_sigma_x_sigma_z_entries() {
        // direct expansion of the 4×4 product
        let m = tensor(&sigma_x(), &sigma_z());
        assert_eq!(m.get(0, 3), c(0.0, 0.0));
        assert_eq!(m.get(0, 2), c(1.0, 0.0));
        assert_eq!(m.get(1, 3), c(-1.0, 0.0));
        assert_eq!(m.get(2, 0), c(1.0, 0.0));
    }

    #[test]
    fn tensor_triple_sigma_y_antisymmetric() {
        let yyy = tensor(&tensor(&sigma_y(), &sigma_y()), &sigma_y());
        assert!(yyy.antisymmetric_deviation() < 1e-15);
    }

    #[test]
    fn tensor_associative() {
        let a = sigma_x();
        let b = sigma_y();
        let z = sigma_z();
        let left = tensor(&tensor(&a, &b), &z);
        let right = tensor(&a, &tensor(&b, &z));
        assert!(left.approx_eq(&right, 1e-14));
    }

    #[test]
    fn eigenvalues_sigma_z() {
        let vals = sigma_z().hermitian_eigenvalues(1e-12).unwrap();
        assert_eq!(vals.len(), 2);
        assert!((vals[0] - 1.0).abs() < 1e-12);
        assert!((vals[1] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn eigenvalues_reject_non_hermitian() {
        let m = ComplexMatrix::from_rows(&[vec![c(0., 0.), c(1., 0.)], vec![c(0., 0.), c(0., 0.)]]);
        assert!(matches!(
            m.hermitian_eigenvalues(1e-12),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn eigenvalue_sum_matches_trace() {
        // Hermitian matrix with known trace
        let m = ComplexMatrix::from_rows(&[
            vec![c(2.0, 0.0), c(1.0, 1.0), c(0.0, -0.5)],
            vec![c(1.0, -1.0), c(-1.0, 0.0), c(0.25, 0.0)],
            vec![c(0.0, 0.5), c(0.25, 0.0), c(0.5, 0.0)],
        ]);
        let vals = m.hermitian_eigenvalues(1e-12).unwrap();
        let sum: f64 = vals.iter().sum();
        assert!((sum - m.trace().re).abs() < 1e-10);
    }

    #[test]
    fn rank_of_repeated_identity() {
        let i2 = ComplexMatrix::identity(2);
        assert_eq!(operator_rank(&[i2.clone(), i2], 1e-10).unwrap(), 1);
    }

    #[test]
    fn rank_of_pauli_basis() {
        let ops = [ComplexMatrix::identity(2), sigma_x(), sigma_y(), sigma_z()];
        assert_eq!(operator_rank(&ops, 1e-10).unwrap(), 4);
    }

    #[test]
    fn rank_empty_errors() {
        assert!(matches!(operator_rank(&[], 1e-10), Err(Error::EmptySet)));
    }

    #[test]
    fn state_projector_and_fidelity() {
        let v = StateVector::new(vec![c(1.0, 0.0), c(0.0, 1.0)]).normalized();
        let p = v.projector();
        assert!((p.trace().re - 1.0).abs() < 1e-15);
        assert!(p.mul(&p).approx_eq(&p, 1e-14));
        assert!((v.fidelity(&v) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn hs_inner_self_nonnegative_for_hermitian() {
        // hs_inner(A, A) = Σ|A_ij|² is real and nonnegative
        let m = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(0.3, -0.7)],
            vec![c(0.3, 0.7), c(-2.0, 0.0)],
        ]);
        let v = hs_inner(&m, &m).unwrap();
        assert!(v.im.abs() < 1e-12);
        assert!(v.re >= 0.0);
    }
}
