//! Dual structures of the sporadic SICs: the MUB dual of the Hesse SIC via
//! the affine plane on nine points, the trine and dual-qubit-SIC
//! extractions, and the twin-Hoggar orthogonality pattern with its binary
//! probability rows.

use crate::error::{Error, Result};
use crate::linalg::{hermitian_rank, ComplexMatrix, StateVector};
use crate::pauli::{is_antisymmetric, PauliLabel};
use crate::prob::{reconstruct, represent, ProbabilityVector};
use crate::sic::{hoggar_sic, pure_state_from_projector, SicEnsemble, SicSign};

/// The affine plane of order 3 on points 1…9 (row-major grid), with the
/// twelve lines in displayed order and the four parallel classes
/// (horizontals, verticals, diagonals, other diagonals).
#[derive(Debug, Clone)]
pub struct AffinePlane9 {
    lines: [[u8; 3]; 12],
    parallel_classes: [[usize; 3]; 4],
}

pub fn affine_plane_9() -> AffinePlane9 {
    AffinePlane9 {
        lines: [
            [1, 2, 3],
            [4, 5, 6],
            [7, 8, 9],
            [1, 4, 7],
            [2, 5, 8],
            [3, 6, 9],
            [1, 5, 9],
            [2, 6, 7],
            [3, 4, 8],
            [1, 6, 8],
            [2, 4, 9],
            [3, 5, 7],
        ],
        parallel_classes: [[0, 1, 2], [3, 4, 5], [6, 7, 8], [9, 10, 11]],
    }
}

impl AffinePlane9 {
    pub fn lines(&self) -> &[[u8; 3]; 12] {
        &self.lines
    }

    pub fn parallel_classes(&self) -> &[[usize; 3]; 4] {
        &self.parallel_classes
    }

    pub fn line_contains(&self, line: usize, point: u8) -> bool {
        self.lines[line].contains(&point)
    }

    /// Lines through a point, as indices.
    pub fn lines_through(&self, point: u8) -> Vec<usize> {
        (0..12).filter(|&l| self.line_contains(l, point)).collect()
    }

    pub fn are_parallel(&self, a: usize, b: usize) -> bool {
        self.parallel_classes
            .iter()
            .any(|c| c.contains(&a) && c.contains(&b))
    }

    /// Structural invariants: each point on 4 lines, non-parallel lines
    /// meet in exactly one point, parallel lines in none.
    pub fn verify(&self) -> bool {
        let points_ok = (1..10u8).all(|p| self.lines_through(p).len() == 4);
        let mut meets_ok = true;
        for a in 0..12 {
            for b in (a + 1)..12 {
                let common = self.lines[a]
                    .iter()
                    .filter(|p| self.lines[b].contains(p))
                    .count();
                let expect = if self.are_parallel(a, b) { 0 } else { 1 };
                meets_ok &= common == expect;
            }
        }
        points_ok && meets_ok
    }
}

/// The zeros-on-a-line probability vector: 0 on the three line points,
/// 1/6 elsewhere.
pub fn line_probability_vector(plane: &AffinePlane9, line: usize) -> ProbabilityVector {
    let p: Vec<f64> = (1..10u8)
        .map(|point| {
            if plane.line_contains(line, point) {
                0.0
            } else {
                1.0 / 6.0
            }
        })
        .collect();
    ProbabilityVector::new(p).expect("line vector is a valid distribution")
}

/// One MUB state: its affine line, probability vector, reconstructed
/// density matrix and extracted unit state.
#[derive(Debug, Clone)]
pub struct MubState {
    pub line: usize,
    pub parallel_class: usize,
    pub probabilities: ProbabilityVector,
    pub density: ComplexMatrix,
    pub state: StateVector,
    /// max deviation of the reconstruction from a rank-1 projector
    pub purity_deviation: f64,
}

/// The twelve MUB states dual to the Hesse SIC, reconstructed from the
/// zeros-on-a-line vectors and grouped by parallel class.
pub fn mub_dual(hesse: &SicEnsemble) -> Result<Vec<MubState>> {
    assert_eq!(hesse.dimension(), 3);
    let plane = affine_plane_9();
    let mut out = Vec::with_capacity(12);
    for line in 0..12 {
        let probabilities = line_probability_vector(&plane, line);
        let density = reconstruct(hesse, &probabilities)?;
        let purity_deviation = density
            .mul(&density)
            .sub(&density)
            .max_abs()
            .max((density.trace().re - 1.0).abs());
        let state = pure_state_from_projector(&density, 1e-8)
            .map_err(|_| Error::NotPure(purity_deviation))?;
        let parallel_class = plane
            .parallel_classes
            .iter()
            .position(|c| c.contains(&line))
            .expect("every line is in a class");
        out.push(MubState {
            line,
            parallel_class,
            probabilities,
            density,
            state,
            purity_deviation,
        });
    }
    Ok(out)
}

/// Orthogonality incidence between the 9 SIC states and the 12 MUB states:
/// the boolean matrix plus per-side counts (4 per SIC state, 3 per MUB
/// state, 36 pairs in total).
#[derive(Debug, Clone)]
pub struct SicMubIncidence {
    /// matrix[i][j]: SIC state i orthogonal to MUB state j
    pub matrix: Vec<Vec<bool>>,
    pub per_sic_counts: Vec<usize>,
    pub per_mub_counts: Vec<usize>,
}

impl SicMubIncidence {
    pub fn total_pairs(&self) -> usize {
        self.per_sic_counts.iter().sum()
    }
}

pub fn sic_mub_incidence(
    hesse: &SicEnsemble,
    mub: &[MubState],
    tol: f64,
) -> Result<SicMubIncidence> {
    let states = hesse.states()?;
    let mut matrix = vec![vec![false; mub.len()]; states.len()];
    for (i, s) in states.iter().enumerate() {
        for (j, m) in mub.iter().enumerate() {
            matrix[i][j] = s.fidelity(&m.state) < tol;
        }
    }
    let per_sic_counts = matrix
        .iter()
        .map(|row| row.iter().filter(|&&b| b).count())
        .collect();
    let per_mub_counts = (0..mub.len())
        .map(|j| matrix.iter().filter(|row| row[j]).count())
        .collect();
    Ok(SicMubIncidence {
        matrix,
        per_sic_counts,
        per_mub_counts,
    })
}

/// Three SIC states orthogonal to a MUB state, with their common qubit
/// subspace: a trine.
#[derive(Debug, Clone)]
pub struct TrineReport {
    pub sic_indices: Vec<usize>,
    pub span_rank: usize,
    /// pairwise fidelities, all 1/4
    pub fidelities: Vec<f64>,
    /// pairwise Bloch angles inside the subspace, all 120°
    pub bloch_cosines: Vec<f64>,
}

/// Extract the trine of SIC states orthogonal to one MUB state.
pub fn trine_extract(
    hesse: &SicEnsemble,
    mub_state: &StateVector,
    tol: f64,
) -> Result<TrineReport> {
    let states = hesse.states()?;
    let sic_indices: Vec<usize> = states
        .iter()
        .enumerate()
        .filter(|(_, s)| s.fidelity(mub_state) < tol)
        .map(|(i, _)| i)
        .collect();
    if sic_indices.len() != 3 {
        return Err(Error::OrthogonalCount {
            expected: 3,
            found: sic_indices.len(),
        });
    }
    let trine: Vec<&StateVector> = sic_indices.iter().map(|&i| &states[i]).collect();

    let mut sum = ComplexMatrix::zeros(3, 3);
    for s in &trine {
        sum = sum.add(&s.projector());
    }
    let span_rank = hermitian_rank(&sum, 1e-8)?;

    let mut fidelities = Vec::new();
    for i in 0..3 {
        for j in (i + 1)..3 {
            fidelities.push(trine[i].fidelity(trine[j]));
        }
    }

    let basis = subspace_basis(&trine);
    let bloch: Vec<[f64; 3]> = trine.iter().map(|s| bloch_in_subspace(s, &basis)).collect();
    let mut bloch_cosines = Vec::new();
    for i in 0..3 {
        for j in (i + 1)..3 {
            let dot: f64 = (0..3).map(|k| bloch[i][k] * bloch[j][k]).sum();
            let ni: f64 = bloch[i].iter().map(|x| x * x).sum::<f64>().sqrt();
            let nj: f64 = bloch[j].iter().map(|x| x * x).sum::<f64>().sqrt();
            bloch_cosines.push(dot / (ni * nj));
        }
    }

    Ok(TrineReport {
        sic_indices,
        span_rank,
        fidelities,
        bloch_cosines,
    })
}

/// Four MUB states orthogonal to a SIC state: a qubit SIC in their common
/// 2-dimensional subspace.
#[derive(Debug, Clone)]
pub struct DualQubitSicReport {
    pub mub_indices: Vec<usize>,
    pub span_rank: usize,
    /// pairwise fidelities, all 1/3
    pub fidelities: Vec<f64>,
}

pub fn qubit_sic_from_dual(
    sic_state: &StateVector,
    mub: &[MubState],
    tol: f64,
) -> Result<DualQubitSicReport> {
    let mub_indices: Vec<usize> = mub
        .iter()
        .enumerate()
        .filter(|(_, m)| m.state.fidelity(sic_state) < tol)
        .map(|(i, _)| i)
        .collect();
    if mub_indices.len() != 4 {
        return Err(Error::OrthogonalCount {
            expected: 4,
            found: mub_indices.len(),
        });
    }
    let quad: Vec<&StateVector> = mub_indices.iter().map(|&i| &mub[i].state).collect();
    let mut sum = ComplexMatrix::zeros(3, 3);
    for s in &quad {
        sum = sum.add(&s.projector());
    }
    let span_rank = hermitian_rank(&sum, 1e-8)?;
    let mut fidelities = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            fidelities.push(quad[i].fidelity(quad[j]));
        }
    }
    Ok(DualQubitSicReport {
        mub_indices,
        span_rank,
        fidelities,
    })
}

/// Orthonormal basis of the 2-dimensional span of the given states, by
/// Gram–Schmidt on the states themselves.
fn subspace_basis(states: &[&StateVector]) -> [StateVector; 2] {
    let b1 = states[0].normalized();
    for s in &states[1..] {
        let overlap = b1.inner(s);
        let mut residual: Vec<_> = s
            .amplitudes()
            .iter()
            .zip(b1.amplitudes())
            .map(|(a, b)| a - overlap * b)
            .collect();
        let norm: f64 = residual.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            for z in &mut residual {
                *z /= norm;
            }
            return [b1, StateVector::new(residual)];
        }
    }
    panic!("states do not span a 2-dimensional subspace");
}

/// Bloch vector of a state inside the qubit subspace spanned by `basis`.
fn bloch_in_subspace(state: &StateVector, basis: &[StateVector; 2]) -> [f64; 3] {
    let a = basis[0].inner(state);
    let b = basis[1].inner(state);
    [
        2.0 * (a.conj() * b).re,
        2.0 * (a.conj() * b).im,
        a.norm_sqr() - b.norm_sqr(),
    ]
}

/// The 64×64 orthogonality pattern between the twin Hoggar SICs.
#[derive(Debug, Clone)]
pub struct TwinIncidence {
    /// zero_pattern[a][b]: plus state a orthogonal to minus state b
    pub zero_pattern: Vec<Vec<bool>>,
    pub row_counts: Vec<usize>,
    pub col_counts: Vec<usize>,
    /// max |tr(Π⁺Π⁻) − 2/9| over the nonzero pairs
    pub nonzero_value_deviation: f64,
    /// largest overlap classified as zero
    pub max_zero_overlap: f64,
}

impl TwinIncidence {
    pub fn is_28_regular(&self) -> bool {
        self.row_counts.iter().all(|&c| c == 28) && self.col_counts.iter().all(|&c| c == 28)
    }

    /// The fiducial row as the set of minus-displacement labels orthogonal
    /// to Π₀⁺.
    pub fn fiducial_zero_labels(&self) -> Vec<PauliLabel> {
        self.zero_pattern[0]
            .iter()
            .enumerate()
            .filter(|(_, &z)| z)
            .map(|(b, _)| PauliLabel::from_index(b as u8))
            .collect()
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<u8>> = self
            .zero_pattern
            .iter()
            .map(|row| row.iter().map(|&b| b as u8).collect())
            .collect();
        serde_json::to_string(&rows).expect("incidence serialization is infallible")
    }
}

/// Compute the twin orthogonality pattern from both Hoggar ensembles.
/// Overlaps tr(Π⁺Π⁻) are 0 (28 per row and column) or 2/9.
pub fn twin_incidence(plus: &SicEnsemble, minus: &SicEnsemble, tol: f64) -> TwinIncidence {
    let n = plus.len();
    let mut zero_pattern = vec![vec![false; n]; n];
    let mut nonzero_dev = 0.0f64;
    let mut max_zero = 0.0f64;
    for a in 0..n {
        for b in 0..n {
            let overlap = cross_overlap(plus, minus, a, b);
            if overlap < tol {
                zero_pattern[a][b] = true;
                max_zero = max_zero.max(overlap);
            } else {
                nonzero_dev = nonzero_dev.max((overlap - 2.0 / 9.0).abs());
            }
        }
    }
    let row_counts = zero_pattern
        .iter()
        .map(|row| row.iter().filter(|&&z| z).count())
        .collect();
    let col_counts = (0..n)
        .map(|b| zero_pattern.iter().filter(|row| row[b]).count())
        .collect();
    TwinIncidence {
        zero_pattern,
        row_counts,
        col_counts,
        nonzero_value_deviation: nonzero_dev,
        max_zero_overlap: max_zero,
    }
}

fn cross_overlap(plus: &SicEnsemble, minus: &SicEnsemble, a: usize, b: usize) -> f64 {
    let p = plus.projector(a);
    let q = minus.projector(b);
    let mut tr = num_complex::Complex64::new(0.0, 0.0);
    for i in 0..p.rows() {
        for j in 0..p.cols() {
            tr += p.get(i, j) * q.get(j, i);
        }
    }
    tr.re
}

/// The four 64-bit rows printed for the minus SIC in the plus
/// representation, up to normalization by 1/36.
pub const PRINTED_BINARY_ROWS: [&str; 4] = [
    "1110111011100001111011101110000111101110111000010001000100011110",
    "1101110111010010110111011101001011011101110100100010001000101101",
    "1011101110110100101110111011010010111011101101000100010001001011",
    "0111011101111000011101110111100001110111011110001000100010000111",
];

/// All 64 minus-state probability rows ×36, rounded to binary.
#[derive(Debug, Clone)]
pub struct BinaryPatternTable {
    /// rows[b][q] ∈ {0, 1}: minus state b against plus state q
    pub rows: Vec<Vec<u8>>,
    /// max |36·p − round(36·p)| over all entries
    pub rounding_deviation: f64,
    pub row_weights: Vec<usize>,
}

/// Represent every minus state in the plus-SIC representation and scale by
/// 36. Entries must be binary within `tol`.
pub fn table1_patterns(
    plus: &SicEnsemble,
    minus: &SicEnsemble,
    tol: f64,
) -> Result<BinaryPatternTable> {
    let n = minus.len();
    let mut rows = Vec::with_capacity(n);
    let mut dev = 0.0f64;
    for b in 0..n {
        let p = represent(plus, minus.projector(b))?;
        let mut row = Vec::with_capacity(n);
        for q in 0..n {
            let scaled = 36.0 * p.get(q);
            let bit = scaled.round();
            dev = dev.max((scaled - bit).abs());
            if bit != 0.0 && bit != 1.0 {
                return Err(Error::Decode(format!(
                    "entry 36·p = {} is not binary",
                    scaled
                )));
            }
            row.push(bit as u8);
        }
        rows.push(row);
    }
    if dev > tol {
        return Err(Error::Decode(format!(
            "binary rounding deviation {:.3e} exceeds tolerance",
            dev
        )));
    }
    let row_weights = rows
        .iter()
        .map(|r| r.iter().filter(|&&v| v == 1).count())
        .collect();
    Ok(BinaryPatternTable {
        rows,
        rounding_deviation: dev,
        row_weights,
    })
}

/// Search for one global column permutation σ and four minus-state rows
/// such that row_i[σ(j)] equals printed_i[j] for all four printed rows
/// simultaneously. Returns (row indices, permutation) on success.
///
/// A column is determined, for a candidate row 4-tuple, by its 4-bit
/// signature; a valid permutation exists exactly when the signature
/// multisets match, and is then built by pairing signature classes.
pub fn align_printed_rows(table: &BinaryPatternTable) -> Option<([usize; 4], Vec<usize>)> {
    let printed: Vec<Vec<u8>> = PRINTED_BINARY_ROWS
        .iter()
        .map(|s| s.bytes().map(|c| c - b'0').collect())
        .collect();
    let n = printed[0].len();
    let target_sig: Vec<u8> = (0..n)
        .map(|j| (0..4).fold(0u8, |acc, i| (acc << 1) | printed[i][j]))
        .collect();
    let mut target_hist = [0usize; 16];
    for &s in &target_sig {
        target_hist[s as usize] += 1;
    }

    let rows = &table.rows;
    let m = rows.len();
    // prune row by row on partial signature histograms
    let hist_of = |chosen: &[usize]| {
        let bits = chosen.len();
        let mut h = vec![0usize; 1 << bits];
        for q in 0..n {
            let mut sig = 0usize;
            for &r in chosen {
                sig = (sig << 1) | rows[r][q] as usize;
            }
            h[sig] += 1;
        }
        h
    };
    let target_partial = |bits: usize| {
        let mut h = vec![0usize; 1 << bits];
        for j in 0..n {
            let mut sig = 0usize;
            for row in printed.iter().take(bits) {
                sig = (sig << 1) | row[j] as usize;
            }
            h[sig] += 1;
        }
        h
    };
    let t1 = target_partial(1);
    let t2 = target_partial(2);
    let t3 = target_partial(3);

    for r1 in 0..m {
        if hist_of(&[r1]) != t1 {
            continue;
        }
        for r2 in 0..m {
            if r2 == r1 || hist_of(&[r1, r2]) != t2 {
                continue;
            }
            for r3 in 0..m {
                if r3 == r1 || r3 == r2 || hist_of(&[r1, r2, r3]) != t3 {
                    continue;
                }
                for r4 in 0..m {
                    if r4 == r1 || r4 == r2 || r4 == r3 {
                        continue;
                    }
                    let chosen = [r1, r2, r3, r4];
                    let sig: Vec<u8> = (0..n)
                        .map(|q| (0..4).fold(0u8, |acc, i| (acc << 1) | rows[chosen[i]][q]))
                        .collect();
                    let mut hist = [0usize; 16];
                    for &s in &sig {
                        hist[s as usize] += 1;
                    }
                    if hist != target_hist {
                        continue;
                    }
                    // pair columns class by class: σ maps printed position j
                    // to a table column with the same signature
                    let mut pools: Vec<Vec<usize>> = vec![Vec::new(); 16];
                    for (q, &s) in sig.iter().enumerate() {
                        pools[s as usize].push(q);
                    }
                    let mut perm = Vec::with_capacity(n);
                    for &s in &target_sig {
                        perm.push(pools[s as usize].pop().expect("histograms match"));
                    }
                    return Some((chosen, perm));
                }
            }
        }
    }
    None
}

/// Convenience: both Hoggar twins.
pub fn hoggar_pair() -> (SicEnsemble, SicEnsemble) {
    (hoggar_sic(SicSign::Plus), hoggar_sic(SicSign::Minus))
}

/// The twin zero set of the fiducial row coincides with the antisymmetric
/// labels: minus state D|ψ₀⁻⟩ is orthogonal to Π₀⁺ iff D's label satisfies
/// the parity condition m₁m₂ + m₃m₄ + m₅m₆ = 1.
pub fn fiducial_row_matches_antisymmetric(t: &TwinIncidence) -> bool {
    let zeros = t.fiducial_zero_labels();
    let expected: Vec<PauliLabel> = PauliLabel::enumerate()
        .filter(|l| is_antisymmetric(*l))
        .collect();
    zeros == expected
}
