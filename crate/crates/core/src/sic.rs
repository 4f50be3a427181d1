//! The sporadic SICs: qubit tetrahedra (d = 2), the Hesse SIC (d = 3, two
//! routes) and the Hoggar-type SICs (d = 8), with POVM/SIC verification.
//!
//! A SIC in dimension d is a set of d² rank-1 projectors {Π_j} with
//! tr(Π_jΠ_k) = (d·δ_jk + 1)/(d + 1); the effects Π_j/d form a POVM.
//! States are always compared projectively (|⟨u,v⟩|²); global phases are
//! never meaningful here.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cert::Certificate;
use crate::error::{Error, Result};
use crate::linalg::{hs_inner, operator_rank, ComplexMatrix, StateVector};
use crate::pauli::{
    displacement, sigma_x, sigma_y, sigma_z, three_qubit_pauli, PauliLabel, WhLabel,
};

/// Sign choice distinguishing a SIC from its twin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SicSign {
    Plus,
    Minus,
}

impl SicSign {
    fn suffix(self) -> &'static str {
        match self {
            SicSign::Plus => "plus",
            SicSign::Minus => "minus",
        }
    }
}

/// A dimension d, d² projectors, and a construction tag.
#[derive(Debug, Clone)]
pub struct SicEnsemble {
    d: usize,
    projectors: Vec<ComplexMatrix>,
    provenance: String,
}

impl SicEnsemble {
    pub fn new(d: usize, projectors: Vec<ComplexMatrix>, provenance: impl Into<String>) -> Self {
        assert_eq!(projectors.len(), d * d, "a SIC has d² elements");
        Self {
            d,
            projectors,
            provenance: provenance.into(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn projectors(&self) -> &[ComplexMatrix] {
        &self.projectors
    }

    pub fn projector(&self, i: usize) -> &ComplexMatrix {
        &self.projectors[i]
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.projectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projectors.is_empty()
    }

    /// Gram entry tr(Π_iΠ_j); real for projectors.
    pub fn gram_entry(&self, i: usize, j: usize) -> f64 {
        // tr(PQ) = tr(P†Q) for Hermitian P
        hs_inner(&self.projectors[i], &self.projectors[j])
            .expect("same-dimension projectors")
            .re
    }

    /// Unit states spanning each projector.
    pub fn states(&self) -> Result<Vec<StateVector>> {
        self.projectors
            .iter()
            .map(|p| pure_state_from_projector(p, 1e-8))
            .collect()
    }

    pub fn to_json(&self) -> String {
        let doc = EnsembleDoc {
            dimension: self.d,
            provenance: self.provenance.clone(),
            projectors: self
                .projectors
                .iter()
                .map(|p| {
                    p.entries()
                        .iter()
                        .flat_map(|z| [z.re, z.im])
                        .collect::<Vec<f64>>()
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("ensemble serialization is infallible")
    }

    /// Inverse of [`SicEnsemble::to_json`]; entries reproduce bit-exactly.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: EnsembleDoc =
            serde_json::from_str(text).map_err(|e| Error::Decode(e.to_string()))?;
        let d = doc.dimension;
        if d == 0 || d > 64 {
            return Err(Error::Decode(format!("dimension {} out of range", d)));
        }
        if doc.projectors.len() != d * d {
            return Err(Error::Decode(format!(
                "expected {} projectors, got {}",
                d * d,
                doc.projectors.len()
            )));
        }
        let mut projectors = Vec::with_capacity(d * d);
        for row in &doc.projectors {
            if row.len() != 2 * d * d {
                return Err(Error::Decode(format!(
                    "projector needs {} interleaved entries, got {}",
                    2 * d * d,
                    row.len()
                )));
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(Error::Decode("non-finite entry".into()));
            }
            let entries: Vec<Complex64> = row
                .chunks_exact(2)
                .map(|c| Complex64::new(c[0], c[1]))
                .collect();
            projectors.push(ComplexMatrix::from_entries(d, d, entries));
        }
        Ok(Self {
            d,
            projectors,
            provenance: doc.provenance,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct EnsembleDoc {
    dimension: usize,
    provenance: String,
    /// Row-major, interleaved real/imaginary parts.
    projectors: Vec<Vec<f64>>,
}

/// ρ = ½(I + xσ_x + yσ_y + zσ_z); rank 1 exactly when (x,y,z) is unit.
pub fn bloch_to_density(x: f64, y: f64, z: f64) -> Result<ComplexMatrix> {
    let norm2 = x * x + y * y + z * z;
    if norm2 > 1.0 + 1e-9 {
        return Err(Error::BlochNorm(norm2.sqrt()));
    }
    let m = ComplexMatrix::identity(2)
        .add(&sigma_x().scale(Complex64::new(x, 0.0)))
        .add(&sigma_y().scale(Complex64::new(y, 0.0)))
        .add(&sigma_z().scale(Complex64::new(z, 0.0)));
    Ok(m.scale(Complex64::new(0.5, 0.0)))
}

/// Bloch vectors (s, s′, ±ss′)/√3 of the tetrahedral qubit SIC pair, in
/// (s, s′) = (+,+), (+,−), (−,+), (−,−) order.
pub fn qubit_bloch_vectors(sign: SicSign) -> Vec<[f64; 3]> {
    let r = 1.0 / 3f64.sqrt();
    let flip = match sign {
        SicSign::Plus => 1.0,
        SicSign::Minus => -1.0,
    };
    [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)]
        .iter()
        .map(|&(s, sp): &(f64, f64)| [r * s, r * sp, r * flip * s * sp])
        .collect()
}

/// The tetrahedral qubit SIC (plus) or its antipodal twin (minus).
pub fn qubit_sic(sign: SicSign) -> SicEnsemble {
    let projectors = qubit_bloch_vectors(sign)
        .into_iter()
        .map(|[x, y, z]| bloch_to_density(x, y, z).expect("unit Bloch vector"))
        .collect();
    SicEnsemble::new(2, projectors, format!("qubit-{}", sign.suffix()))
}

pub fn omega() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI / 3.0)
}

/// The nine homogeneous vectors (0, 1, −ω^k), (−ω^k, 0, 1), (1, −ω^k, 0),
/// before the 1/√2 normalization, in row-major table order.
pub fn coxeter_vectors() -> Vec<StateVector> {
    let w = omega();
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let mut out = Vec::with_capacity(9);
    for k in 0..3u32 {
        let wk = w.powu(k);
        out.push(StateVector::new(vec![zero, one, -wk]));
        out.push(StateVector::new(vec![-wk, zero, one]));
        out.push(StateVector::new(vec![one, -wk, zero]));
    }
    out
}

/// The Hesse SIC from the nine homogeneous vectors, normalized by 1/√2.
pub fn hesse_sic_coxeter() -> SicEnsemble {
    let projectors = coxeter_vectors()
        .iter()
        .map(|v| v.normalized().projector())
        .collect();
    SicEnsemble::new(3, projectors, "hesse-coxeter")
}

/// The Hesse fiducial (0, 1, −1)/√2.
pub fn hesse_fiducial() -> StateVector {
    StateVector::new(vec![
        Complex64::new(0.0, 0.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(-1.0, 0.0),
    ])
    .normalized()
}

/// The Hesse SIC as the Weyl–Heisenberg orbit of (0, 1, −1)/√2, ordered by
/// (l, α) lexicographic.
pub fn hesse_sic_orbit() -> SicEnsemble {
    let ops: Vec<ComplexMatrix> = WhLabel::enumerate(3)
        .into_iter()
        .map(displacement)
        .collect();
    orbit_sic(&hesse_fiducial(), &ops, "hesse-orbit").expect("the Hesse orbit does not collapse")
}

/// The Hoggar fiducial ∝ (−1 ± 2i, 1, 1, 1, 1, 1, 1, 1)ᵀ, normalized.
pub fn hoggar_fiducial(sign: SicSign) -> StateVector {
    let im = match sign {
        SicSign::Plus => 2.0,
        SicSign::Minus => -2.0,
    };
    let one = Complex64::new(1.0, 0.0);
    let mut amps = vec![one; 8];
    amps[0] = Complex64::new(-1.0, im);
    StateVector::new(amps).normalized()
}

/// A Hoggar-type SIC: the orbit of the fiducial under all 64 three-qubit
/// Pauli operators, indexed by [`PauliLabel`] order.
pub fn hoggar_sic(sign: SicSign) -> SicEnsemble {
    let ops: Vec<ComplexMatrix> = PauliLabel::enumerate().map(three_qubit_pauli).collect();
    orbit_sic(
        &hoggar_fiducial(sign),
        &ops,
        format!("hoggar-{}", sign.suffix()),
    )
    .expect("the Hoggar orbit does not collapse")
}

/// Orbit construction: projectors of U|fiducial⟩ in operator order.
///
/// Fails with the colliding index pair when two operators produce the same
/// projective state (fidelity > 1 − 1e-8).
pub fn orbit_sic(
    fiducial: &StateVector,
    operators: &[ComplexMatrix],
    provenance: impl Into<String>,
) -> Result<SicEnsemble> {
    let d = fiducial.dim();
    if operators.len() != d * d {
        return Err(Error::DimensionMismatch(format!(
            "orbit needs d² = {} operators, got {}",
            d * d,
            operators.len()
        )));
    }
    let states: Vec<StateVector> = operators
        .iter()
        .map(|u| u.apply(fiducial).normalized())
        .collect();
    for i in 0..states.len() {
        for j in (i + 1)..states.len() {
            if states[i].fidelity(&states[j]) > 1.0 - 1e-8 {
                return Err(Error::OrbitCollapse(i, j));
            }
        }
    }
    let projectors = states.iter().map(StateVector::projector).collect();
    Ok(SicEnsemble::new(d, projectors, provenance))
}

/// Extract the unit state spanning a rank-1 projector.
pub fn pure_state_from_projector(p: &ComplexMatrix, tol: f64) -> Result<StateVector> {
    assert!(p.is_square());
    let d = p.rows();
    // the largest column of |ψ⟩⟨ψ| is ψ times a phase
    let mut best = 0;
    let mut best_norm = 0.0f64;
    for j in 0..d {
        let n: f64 = (0..d).map(|i| p.get(i, j).norm_sqr()).sum();
        if n > best_norm {
            best_norm = n;
            best = j;
        }
    }
    if best_norm <= 0.0 {
        return Err(Error::NotPure(1.0));
    }
    let column: Vec<Complex64> = (0..d).map(|i| p.get(i, best)).collect();
    let state = StateVector::new(column).normalized();
    let dev = state.projector().sub(p).max_abs();
    if dev > tol {
        return Err(Error::NotPure(dev));
    }
    Ok(state)
}

/// Verify the SIC/POVM axioms. Failures are recorded in the certificate,
/// never thrown.
pub fn verify_sic(e: &SicEnsemble, tol: f64) -> Certificate {
    let mut cert = Certificate::new(format!("verify-sic/{}", e.provenance()));
    let d = e.dimension();
    let n = e.len();

    let mut idem_dev = 0.0f64;
    let mut trace_dev = 0.0f64;
    for p in e.projectors() {
        idem_dev = idem_dev.max(p.mul(p).sub(p).max_abs());
        trace_dev = trace_dev.max((p.trace() - Complex64::new(1.0, 0.0)).norm());
    }
    cert.check("projector-idempotence", idem_dev, tol);
    cert.check("unit-trace", trace_dev, tol);

    let mut gram_dev = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let expect = (d as f64 * if i == j { 1.0 } else { 0.0 } + 1.0) / (d as f64 + 1.0);
            gram_dev = gram_dev.max((e.gram_entry(i, j) - expect).abs());
        }
    }
    cert.check("gram-condition", gram_dev, tol);

    let mut sum = ComplexMatrix::zeros(d, d);
    for p in e.projectors() {
        sum = sum.add(p);
    }
    let effect_dev = sum
        .scale(Complex64::new(1.0 / d as f64, 0.0))
        .sub(&ComplexMatrix::identity(d))
        .max_abs();
    cert.check("effect-sum-identity", effect_dev, tol);

    match operator_rank(e.projectors(), 1e-10) {
        Ok(rank) => cert.check_exact("operator-rank", (rank as f64 - (d * d) as f64).abs()),
        Err(_) => cert.check_bool("operator-rank", false),
    }

    // Gram spectrum: d once, d/(d+1) with multiplicity d²−1
    let mut gram = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, Complex64::new(e.gram_entry(i, j), 0.0));
        }
    }
    match gram.hermitian_eigenvalues(1e-8) {
        Ok(vals) => {
            let mut dev = (vals[0] - d as f64).abs();
            for v in &vals[1..] {
                dev = dev.max((v - d as f64 / (d as f64 + 1.0)).abs());
            }
            cert.check("gram-spectrum", dev, tol.max(1e-9));
        }
        Err(_) => cert.check_bool("gram-spectrum", false),
    }

    cert
}

/// Greedy projective matching between two equal-length families of
/// projectors. Returns the permutation (index into `b` for each element of
/// `a`) and the smallest matched fidelity, or `None` when the greedy pairing
/// is not a bijection.
pub fn fidelity_matching(a: &SicEnsemble, b: &SicEnsemble) -> Option<(Vec<usize>, f64)> {
    if a.len() != b.len() || a.dimension() != b.dimension() {
        return None;
    }
    let n = a.len();
    let mut used = vec![false; n];
    let mut perm = vec![0usize; n];
    let mut min_fid = f64::INFINITY;
    for i in 0..n {
        let mut best = None;
        let mut best_fid = -1.0f64;
        for j in 0..n {
            if used[j] {
                continue;
            }
            let fid = hs_inner(a.projector(i), b.projector(j))
                .expect("same dimension")
                .re;
            if fid > best_fid {
                best_fid = fid;
                best = Some(j);
            }
        }
        let j = best?;
        used[j] = true;
        perm[i] = j;
        min_fid = min_fid.min(best_fid);
    }
    Some((perm, min_fid))
}

/// One Hessian-polyhedron vertex with its three-character Segre symbol.
#[derive(Debug, Clone)]
pub struct HessianVertex {
    pub vector: StateVector,
    pub symbol: String,
}

/// The 27 vertices (0, ω^μ, −ω^ν), (−ω^ν, 0, ω^μ), (ω^μ, −ω^ν, 0) for
/// μ, ν ∈ {1, 2, 3}, tagged 0μν, ν0μ, μν0.
pub fn hessian_polyhedron() -> Vec<HessianVertex> {
    let w = omega();
    let zero = Complex64::new(0.0, 0.0);
    let mut out = Vec::with_capacity(27);
    for mu in 1..=3u32 {
        for nu in 1..=3u32 {
            let wmu = w.powu(mu);
            let wnu = w.powu(nu);
            out.push(HessianVertex {
                vector: StateVector::new(vec![zero, wmu, -wnu]),
                symbol: format!("0{}{}", mu, nu),
            });
            out.push(HessianVertex {
                vector: StateVector::new(vec![-wnu, zero, wmu]),
                symbol: format!("{}0{}", nu, mu),
            });
            out.push(HessianVertex {
                vector: StateVector::new(vec![wmu, -wnu, zero]),
                symbol: format!("{}{}0", mu, nu),
            });
        }
    }
    out
}

/// Vertex pairs on distinct diameters, classified two ways: by how many
/// symbol places agree (one vs. two-or-none) and by the real part of the
/// unnormalized Hermitian inner product (−1 vs. ½).
#[derive(Debug, Clone)]
pub struct HessianAdjacency {
    pub vertex_count: usize,
    pub diameter_count: usize,
    pub diameters_are_triples: bool,
    pub pairs_checked: usize,
    /// max |Re⟨u,v⟩ + 1| over pairs agreeing in exactly one place
    pub agree_one_max_dev: f64,
    /// max |Re⟨u,v⟩ − ½| over pairs agreeing in two places or none
    pub agree_two_or_none_max_dev: f64,
}

pub fn hessian_adjacency_classes() -> HessianAdjacency {
    let vertices = hessian_polyhedron();
    let n = vertices.len();

    // diameters: projective classes under scalar ω-multiplication
    let mut diameter = vec![usize::MAX; n];
    let mut next = 0;
    for i in 0..n {
        if diameter[i] != usize::MAX {
            continue;
        }
        diameter[i] = next;
        let u = vertices[i].vector.normalized();
        for j in (i + 1)..n {
            if diameter[j] == usize::MAX
                && u.fidelity(&vertices[j].vector.normalized()) > 1.0 - 1e-8
            {
                diameter[j] = next;
            }
        }
        next += 1;
    }
    let mut sizes = vec![0usize; next];
    for &d in &diameter {
        sizes[d] += 1;
    }

    let mut pairs = 0usize;
    let mut one_dev = 0.0f64;
    let mut other_dev = 0.0f64;
    for i in 0..n {
        for j in (i + 1)..n {
            if diameter[i] == diameter[j] {
                continue;
            }
            pairs += 1;
            let agree = vertices[i]
                .symbol
                .bytes()
                .zip(vertices[j].symbol.bytes())
                .filter(|(a, b)| a == b)
                .count();
            let re = vertices[i].vector.inner(&vertices[j].vector).re;
            if agree == 1 {
                one_dev = one_dev.max((re + 1.0).abs());
            } else {
                other_dev = other_dev.max((re - 0.5).abs());
            }
        }
    }

    HessianAdjacency {
        vertex_count: n,
        diameter_count: next,
        diameters_are_triples: sizes.iter().all(|&s| s == 3),
        pairs_checked: pairs,
        agree_one_max_dev: one_dev,
        agree_two_or_none_max_dev: other_dev,
    }
}
