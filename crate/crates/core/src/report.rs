//! Family verification suites, aggregate reports, and output rendering.
//!
//! Each family names one construction; `verify_family` builds it and runs
//! its full check suite into a [`Certificate`]. Reports are deterministic:
//! no timestamps, fixed family order, fixed-precision deviation strings.

use serde::Serialize;
use std::fmt;
use std::str::FromStr;

use crate::cert::{f64_to_string, Certificate, Check};
use crate::duality::{
    affine_plane_9, align_printed_rows, fiducial_row_matches_antisymmetric, mub_dual,
    qubit_sic_from_dual, sic_mub_incidence, table1_patterns, trine_extract, twin_incidence,
    MubState, TwinIncidence,
};
use crate::error::{Error, Result};
use crate::golden::GoldenScalar;
use crate::linalg::StateVector;
use crate::lines::{
    antiflag_lines_28, fano_lines_r7, gerzon_bound, icosahedron_orbit, real_wh_ops, so8_lines_28,
    tetrahedral_group, trine_r2, welch_angle, GerzonField,
};
use crate::octonion::{
    antiflag_to_pauli, cayley_graves_sign, fano_plane, octonion_mul, OctonionUnit,
};
use crate::pauli::{
    antisymmetric_count, is_antisymmetric, three_qubit_pauli, verify_ghz_identity, PauliLabel,
};
use crate::prob::{
    count_zeros, fibonacci_lucas_terms, max_zero_bound, n_eff_pure, purity_sum, represent,
    shannon_entropy, Field,
};
use crate::search::{entropy_min_search, verify_local_minima, SearchMinimum};
use crate::sic::{
    fidelity_matching, hesse_sic_coxeter, hesse_sic_orbit, hessian_adjacency_classes,
    hessian_polyhedron, hoggar_fiducial, hoggar_sic, qubit_bloch_vectors, qubit_sic, verify_sic,
    SicEnsemble, SicSign,
};

/// The thirteen verification families, in fixed report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    QubitPlus,
    QubitMinus,
    HesseCoxeter,
    HesseOrbit,
    HoggarPlus,
    HoggarMinus,
    MubDual,
    TwinIncidence,
    Fano28,
    So828,
    Icosahedron,
    TrineR2,
    Bounds,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::QubitPlus,
        Family::QubitMinus,
        Family::HesseCoxeter,
        Family::HesseOrbit,
        Family::HoggarPlus,
        Family::HoggarMinus,
        Family::MubDual,
        Family::TwinIncidence,
        Family::Fano28,
        Family::So828,
        Family::Icosahedron,
        Family::TrineR2,
        Family::Bounds,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::QubitPlus => "qubit-plus",
            Family::QubitMinus => "qubit-minus",
            Family::HesseCoxeter => "hesse-coxeter",
            Family::HesseOrbit => "hesse-orbit",
            Family::HoggarPlus => "hoggar-plus",
            Family::HoggarMinus => "hoggar-minus",
            Family::MubDual => "mub-dual",
            Family::TwinIncidence => "twin-incidence",
            Family::Fano28 => "fano-28",
            Family::So828 => "so8-28",
            Family::Icosahedron => "icosahedron",
            Family::TrineR2 => "trine-r2",
            Family::Bounds => "bounds",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .iter()
            .find(|f| f.name() == s)
            .copied()
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Verification parameters.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub family: Option<Family>,
    pub tolerance: f64,
    pub seed: u64,
    pub restarts: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            family: None,
            tolerance: 1e-10,
            seed: 0,
            restarts: 64,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(Error::InvalidProbability(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if self.restarts == 0 {
            return Err(Error::InvalidProbability("restarts must be ≥ 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigDoc {
    pub family: Option<String>,
    pub tolerance: String,
    pub seed: u64,
    pub restarts: usize,
}

impl ConfigDoc {
    fn new(config: &RunConfig, family: Option<Family>) -> Self {
        Self {
            family: family.map(|f| f.name().to_string()),
            tolerance: f64_to_string(config.tolerance),
            seed: config.seed,
            restarts: config.restarts,
        }
    }
}

/// A certificate together with the configuration that produced it.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyDocument {
    pub subject: String,
    pub config: ConfigDoc,
    pub checks: Vec<Check>,
    pub overall: bool,
}

/// Combined document for all families, in fixed order.
#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub subject: String,
    pub config: ConfigDoc,
    pub families: Vec<VerifyDocument>,
    pub overall: bool,
}

/// Build a family and run its full check suite.
pub fn verify_family(family: Family, config: &RunConfig) -> Certificate {
    match family {
        Family::QubitPlus => qubit_family(SicSign::Plus, config),
        Family::QubitMinus => qubit_family(SicSign::Minus, config),
        Family::HesseCoxeter => hesse_coxeter_family(config),
        Family::HesseOrbit => hesse_orbit_family(config),
        Family::HoggarPlus => hoggar_family(SicSign::Plus, config),
        Family::HoggarMinus => hoggar_family(SicSign::Minus, config),
        Family::MubDual => mub_dual_family(config),
        Family::TwinIncidence => twin_incidence_family(config),
        Family::Fano28 => fano_28_family(config),
        Family::So828 => so8_28_family(config),
        Family::Icosahedron => icosahedron_family(config),
        Family::TrineR2 => trine_family(config),
        Family::Bounds => bounds_family(config),
    }
}

pub fn verify_document(family: Family, config: &RunConfig) -> VerifyDocument {
    let cert = verify_family(family, config);
    VerifyDocument {
        subject: cert.subject,
        config: ConfigDoc::new(config, Some(family)),
        checks: cert.checks,
        overall: cert.overall,
    }
}

/// Run every family in fixed order; per-family failures are recorded, not
/// propagated.
pub fn report_all(config: &RunConfig) -> ReportDocument {
    let families: Vec<VerifyDocument> = Family::ALL
        .iter()
        .map(|&f| verify_document(f, config))
        .collect();
    let overall = families.iter().all(|f| f.overall);
    ReportDocument {
        subject: "report-all".into(),
        config: ConfigDoc::new(config, None),
        families,
        overall,
    }
}

fn qubit_family(sign: SicSign, config: &RunConfig) -> Certificate {
    let tol = config.tolerance;
    let e = qubit_sic(sign);
    let twin = qubit_sic(match sign {
        SicSign::Plus => SicSign::Minus,
        SicSign::Minus => SicSign::Plus,
    });
    let mut cert = Certificate::new(e.provenance().to_string());
    cert.absorb("sic", verify_sic(&e, tol));

    // the 8 Bloch vectors of both tetrahedra form a cube
    let mut all = qubit_bloch_vectors(SicSign::Plus);
    all.extend(qubit_bloch_vectors(SicSign::Minus));
    let mut cube_dev = 0.0f64;
    for i in 0..8 {
        for j in 0..8 {
            if i == j {
                continue;
            }
            let dot: f64 = (0..3).map(|k| all[i][k] * all[j][k]).sum();
            let nearest = [1.0, -1.0, 1.0 / 3.0, -1.0 / 3.0]
                .iter()
                .map(|t| (dot - t).abs())
                .fold(f64::INFINITY, f64::min);
            cube_dev = cube_dev.max(nearest);
        }
    }
    cert.check("bloch-cube-dot-products", cube_dev, tol);

    // orthogonality to the twin is a perfect matching
    let mut matched = vec![false; 4];
    let mut perfect = true;
    for i in 0..4 {
        let orth: Vec<usize> = (0..4)
            .filter(|&j| cross_gram(&e, &twin, i, j) < tol)
            .collect();
        if orth.len() == 1 && !matched[orth[0]] {
            matched[orth[0]] = true;
        } else {
            perfect = false;
        }
    }
    cert.check_bool(
        "twin-orthogonality-perfect-matching",
        perfect && matched.iter().all(|&m| m),
    );

    // zero-count saturation: a twin state hits the d(d−1)/2 = 1 bound
    let p = represent(&e, twin.projector(0)).expect("twin projector is a state");
    let zeros = count_zeros(&p, 1e-9);
    let bound = max_zero_bound(2, Field::Complex);
    cert.check_exact(
        "zero-saturation-bound-1",
        (zeros as f64 - bound as f64).abs(),
    );

    // pure-state purity Σp² = 2/(d(d+1)) = 1/3 on the SIC's own states
    let mut purity_dev = 0.0f64;
    for proj in e.projectors() {
        let p = represent(&e, proj).expect("projector is a state");
        let (sum, _) = purity_sum(&p, 2, tol);
        purity_dev = purity_dev.max((sum - 1.0 / 3.0).abs());
    }
    cert.check("purity-sum-third", purity_dev, 1e-12);

    // entropy minimization lands on the twin tetrahedron
    let minima = entropy_min_search(&e, config.restarts, config.seed);
    let target = 3f64.log2();
    cert.check(
        "entropy-minimum-log2-3",
        (minima[0].entropy - target).abs(),
        1e-6,
    );
    let global: Vec<&SearchMinimum> = minima
        .iter()
        .filter(|m| m.entropy < target + 1e-6)
        .collect();
    cert.check_exact(
        "entropy-minimizer-count-4",
        (global.len() as f64 - 4.0).abs(),
    );
    let twin_states = twin.states().expect("twin projectors are rank-1");
    let all_matched = global.iter().all(|g| {
        twin_states
            .iter()
            .any(|s| s.fidelity(&g.state) >= 1.0 - 1e-6)
    });
    cert.check_bool("entropy-minimizers-match-twin", all_matched);

    cert
}

fn cross_gram(a: &SicEnsemble, b: &SicEnsemble, i: usize, j: usize) -> f64 {
    crate::linalg::hs_inner(a.projector(i), b.projector(j))
        .expect("same dimension")
        .re
}

fn hesse_coxeter_family(config: &RunConfig) -> Certificate {
    let tol = config.tolerance;
    let e = hesse_sic_coxeter();
    let mut cert = Certificate::new(e.provenance().to_string());
    cert.absorb("sic", verify_sic(&e, tol));

    // unnormalized overlaps of the homogeneous vectors
    let vs = crate::sic::coxeter_vectors();
    let mut self_dev = 0.0f64;
    let mut cross_dev = 0.0f64;
    for (i, u) in vs.iter().enumerate() {
        self_dev = self_dev.max((u.inner(u).norm_sqr() - 4.0).abs());
        for v in vs.iter().skip(i + 1) {
            cross_dev = cross_dev.max((u.inner(v).norm_sqr() - 1.0).abs());
        }
    }
    cert.check("unnormalized-self-overlap-4", self_dev, tol);
    cert.check("unnormalized-distinct-overlap-1", cross_dev, tol);

    let mut fid_dev = 0.0f64;
    for i in 0..9 {
        for j in 0..9 {
            if i != j {
                fid_dev = fid_dev.max((e.gram_entry(i, j) - 0.25).abs());
            }
        }
    }
    cert.check("normalized-distinct-fidelity-quarter", fid_dev, tol);

    // Hessian polyhedron bookkeeping
    let vertices = hessian_polyhedron();
    cert.check_exact(
        "hessian-vertex-count-27",
        (vertices.len() as f64 - 27.0).abs(),
    );
    let adj = hessian_adjacency_classes();
    cert.check_exact(
        "hessian-diameter-count-9",
        (adj.diameter_count as f64 - 9.0).abs(),
    );
    cert.check_bool("hessian-diameters-are-triples", adj.diameters_are_triples);
    cert.check_exact(
        "hessian-cross-diameter-pairs-324",
        (adj.pairs_checked as f64 - 324.0).abs(),
    );
    cert.check(
        "hessian-agree-one-inner-minus-1",
        adj.agree_one_max_dev,
        tol,
    );
    cert.check(
        "hessian-agree-two-or-none-inner-half",
        adj.agree_two_or_none_max_dev,
        tol,
    );

    cert
}

fn hesse_orbit_family(config: &RunConfig) -> Certificate {
    let tol = config.tolerance;
    let e = hesse_sic_orbit();
    let mut cert = Certificate::new(e.provenance().to_string());
    cert.absorb("sic", verify_sic(&e, tol));
    cert.check_exact("orbit-size-9", (e.len() as f64 - 9.0).abs());

    // projective equivalence of the two routes
    let cox = hesse_sic_coxeter();
    match fidelity_matching(&cox, &e) {
        Some((perm, min_fid)) => {
            let mut sorted = perm.clone();
            sorted.sort_unstable();
            cert.check_bool(
                "route-matching-is-permutation",
                sorted == (0..9).collect::<Vec<_>>(),
            );
            cert.check("route-equivalence-fidelity", 1.0 - min_fid, tol);
        }
        None => {
            cert.check_bool("route-matching-is-permutation", false);
            cert.check_bool("route-equivalence-fidelity", false);
        }
    }
    cert
}

fn hoggar_family(sign: SicSign, config: &RunConfig) -> Certificate {
    let tol = config.tolerance;
    let e = hoggar_sic(sign);
    let mut cert = Certificate::new(e.provenance().to_string());
    cert.absorb("sic", verify_sic(&e, tol));
    cert.check_exact("orbit-size-64", (e.len() as f64 - 64.0).abs());
    cert.check(
        "fiducial-norm-1",
        (hoggar_fiducial(sign).norm() - 1.0).abs(),
        tol,
    );
    let mut pair_dev = 0.0f64;
    for j in 1..e.len() {
        pair_dev = pair_dev.max((e.gram_entry(0, j) - 1.0 / 9.0).abs());
    }
    cert.check("distinct-pair-overlap-ninth", pair_dev, tol);
    cert
}

fn mub_dual_family(config: &RunConfig) -> Certificate {
    let tol = config.tolerance;
    let mut cert = Certificate::new("mub-dual");
    let plane = affine_plane_9();
    cert.check_bool("affine-plane-axioms", plane.verify());

    let hesse = hesse_sic_orbit();
    let mub = match mub_dual(&hesse) {
        Ok(m) => m,
        Err(_) => {
            cert.check_bool("reconstruction-purity", false);
            return cert;
        }
    };
    cert.check_exact("mub-state-count-12", (mub.len() as f64 - 12.0).abs());
    let purity_dev = mub.iter().map(|m| m.purity_deviation).fold(0.0, f64::max);
    cert.check("reconstruction-purity", purity_dev, tol);

    let mut class_dev = 0.0f64;
    let mut cross_dev = 0.0f64;
    for a in &mub {
        for b in &mub {
            if a.line == b.line {
                continue;
            }
            let fid = a.state.fidelity(&b.state);
            if a.parallel_class == b.parallel_class {
                class_dev = class_dev.max(fid);
            } else {
                cross_dev = cross_dev.max((fid - 1.0 / 3.0).abs());
            }
        }
    }
    cert.check("class-orthogonality", class_dev, tol);
    cert.check("cross-class-fidelity-third", cross_dev, tol);

    match sic_mub_incidence(&hesse, &mub, tol) {
        Ok(inc) => {
            let sic_dev = inc
                .per_sic_counts
                .iter()
                .map(|&c| (c as f64 - 4.0).abs())
                .fold(0.0, f64::max);
            let mub_dev = inc
                .per_mub_counts
                .iter()
                .map(|&c| (c as f64 - 3.0).abs())
                .fold(0.0, f64::max);
            cert.check_exact("incidence-per-sic-4", sic_dev);
            cert.check_exact("incidence-per-mub-3", mub_dev);
            cert.check_exact(
                "incidence-total-36",
                (inc.total_pairs() as f64 - 36.0).abs(),
            );
        }
        Err(_) => cert.check_bool("incidence-per-sic-4", false),
    }

    // trines under every MUB state
    let mut trine_ok = true;
    let mut trine_rank_ok = true;
    let mut trine_fid_dev = 0.0f64;
    let mut trine_bloch_dev = 0.0f64;
    for m in &mub {
        match trine_extract(&hesse, &m.state, tol) {
            Ok(t) => {
                trine_rank_ok &= t.span_rank == 2;
                for f in &t.fidelities {
                    trine_fid_dev = trine_fid_dev.max((f - 0.25).abs());
                }
                for c in &t.bloch_cosines {
                    trine_bloch_dev = trine_bloch_dev.max((c + 0.5).abs());
                }
            }
            Err(_) => trine_ok = false,
        }
    }
    cert.check_bool("trine-count-3-each", trine_ok);
    cert.check_bool("trine-span-rank-2", trine_rank_ok);
    cert.check("trine-fidelity-quarter", trine_fid_dev, tol);
    cert.check("trine-bloch-cosine-minus-half", trine_bloch_dev, 1e-8);

    // dual qubit SIC under every Hesse state
    let states = hesse.states().expect("Hesse projectors are rank-1");
    let mut dual_ok = true;
    let mut dual_rank_ok = true;
    let mut dual_fid_dev = 0.0f64;
    for s in &states {
        match qubit_sic_from_dual(s, &mub, tol) {
            Ok(d) => {
                dual_rank_ok &= d.span_rank == 2;
                for f in &d.fidelities {
                    dual_fid_dev = dual_fid_dev.max((f - 1.0 / 3.0).abs());
                }
            }
            Err(_) => dual_ok = false,
        }
    }
    cert.check_bool("dual-qubit-count-4-each", dual_ok);
    cert.check_bool("dual-qubit-span-rank-2", dual_rank_ok);
    cert.check("dual-qubit-fidelity-third", dual_fid_dev, tol);

    // entropy, purity and zero saturation of the MUB probability vectors
    let mut entropy_dev = 0.0f64;
    let mut zeros_ok = true;
    let mut purity_dev = 0.0f64;
    for m in &mub {
        entropy_dev = entropy_dev.max((shannon_entropy(&m.probabilities) - 6f64.log2()).abs());
        zeros_ok &= count_zeros(&m.probabilities, 1e-9) == max_zero_bound(3, Field::Complex);
        let (sum, _) = purity_sum(&m.probabilities, 3, tol);
        purity_dev = purity_dev.max((sum - 1.0 / 6.0).abs());
    }
    cert.check("mub-entropy-log2-6", entropy_dev, 1e-12);
    cert.check_bool("mub-zero-count-3", zeros_ok);
    cert.check("mub-purity-sum-sixth", purity_dev, 1e-12);

    // the twelve MUB states are the entropy minimizers
    let minima = entropy_min_search(&hesse, config.restarts, config.seed);
    let target = 6f64.log2();
    cert.check(
        "entropy-minimum-log2-6",
        (minima[0].entropy - target).abs(),
        1e-6,
    );
    let global: Vec<&SearchMinimum> = minima
        .iter()
        .filter(|m| m.entropy < target + 1e-6)
        .collect();
    cert.check_exact(
        "entropy-minimizer-count-12",
        (global.len() as f64 - 12.0).abs(),
    );
    let all_matched = global
        .iter()
        .all(|g| mub.iter().any(|m| m.state.fidelity(&g.state) >= 1.0 - 1e-6));
    cert.check_bool("entropy-minimizers-match-mub", all_matched);

    cert
}

fn twin_incidence_family(config: &RunConfig) -> Certificate {
    let tol = config.tolerance;
    let mut cert = Certificate::new("twin-incidence");
    let plus = hoggar_sic(SicSign::Plus);
    let minus = hoggar_sic(SicSign::Minus);
    let t = twin_incidence(&plus, &minus, 1e-9);

    let row_dev = t
        .row_counts
        .iter()
        .map(|&c| (c as f64 - 28.0).abs())
        .fold(0.0, f64::max);
    let col_dev = t
        .col_counts
        .iter()
        .map(|&c| (c as f64 - 28.0).abs())
        .fold(0.0, f64::max);
    cert.check_exact("row-regularity-28", row_dev);
    cert.check_exact("column-regularity-28", col_dev);
    cert.check("nonzero-overlap-two-ninths", t.nonzero_value_deviation, tol);
    cert.check("zero-overlap-magnitude", t.max_zero_overlap, tol);
    cert.check_bool(
        "fiducial-zeros-match-antisymmetric",
        fiducial_row_matches_antisymmetric(&t),
    );
    cert.check_exact(
        "antisymmetric-count-28",
        (antisymmetric_count() as f64 - 28.0).abs(),
    );
    // the whole pattern: Π_a⁺ ⊥ Π_b⁻ exactly when a ⊕ b is antisymmetric
    let mut xor_parity_ok = true;
    for a in 0..64usize {
        for b in 0..64usize {
            let expect = is_antisymmetric(
                PauliLabel::from_index(a as u8).xor(&PauliLabel::from_index(b as u8)),
            );
            xor_parity_ok &= t.zero_pattern[a][b] == expect;
        }
    }
    cert.check_bool("zero-pattern-xor-parity", xor_parity_ok);

    // parity formula agrees with the transpose test on realized matrices
    let transpose_ok = PauliLabel::enumerate().all(|l| {
        let m = three_qubit_pauli(l);
        (m.antisymmetric_deviation() < 1e-12) == is_antisymmetric(l)
    });
    cert.check_bool("antisymmetry-transpose-agreement", transpose_ok);
    cert.check_bool("ghz-sign-identity", verify_ghz_identity());

    // the bare first tensor factor leaves each realized operator Hermitian
    // only up to a phase; that phase is always one of ±1, ±i and drops out
    // under conjugation
    let mut phase_dev = 0.0f64;
    for l in PauliLabel::enumerate() {
        let m = three_qubit_pauli(l);
        let dagger = m.dagger();
        let best = [
            num_complex::Complex64::new(1.0, 0.0),
            num_complex::Complex64::new(-1.0, 0.0),
            num_complex::Complex64::new(0.0, 1.0),
            num_complex::Complex64::new(0.0, -1.0),
        ]
        .iter()
        .map(|&eta| dagger.sub(&m.scale(eta)).max_abs())
        .fold(f64::INFINITY, f64::min);
        phase_dev = phase_dev.max(best);
    }
    cert.check("first-factor-phase-unimodular", phase_dev, tol);

    // binary rows and the printed-row alignment
    match table1_patterns(&plus, &minus, 1e-8) {
        Ok(table) => {
            cert.check("table1-binary-rounding", table.rounding_deviation, 1e-8);
            let weight_dev = table
                .row_weights
                .iter()
                .map(|&w| (w as f64 - 36.0).abs())
                .fold(0.0, f64::max);
            cert.check_exact("table1-row-weights-36", weight_dev);
            cert.check_bool(
                "table1-printed-rows-align",
                align_printed_rows(&table).is_some(),
            );
        }
        Err(_) => cert.check_bool("table1-binary-rounding", false),
    }

    // minus states in the plus representation: uniform over 36, 28 zeros
    let mut entropy_dev = 0.0f64;
    let mut zeros_ok = true;
    for b in 0..minus.len() {
        let p = represent(&plus, minus.projector(b)).expect("projector is a state");
        entropy_dev = entropy_dev.max((shannon_entropy(&p) - 36f64.log2()).abs());
        zeros_ok &= count_zeros(&p, 1e-9) == max_zero_bound(8, Field::Complex);
    }
    cert.check("minus-entropy-log2-36", entropy_dev, 1e-9);
    cert.check_bool("minus-zero-count-28", zeros_ok);

    // sampled minus states are local entropy minima under perturbation
    let states = minus.states().expect("minus projectors are rank-1");
    let sampled: Vec<StateVector> = states.iter().step_by(8).cloned().collect();
    let report = verify_local_minima(&plus, &sampled, 10_000, config.seed);
    let target = 36f64.log2();
    let drop = (target - 1e-6 - report.min_perturbed_entropy).max(0.0);
    cert.check("local-minima-perturbation", drop, 0.0);

    cert
}

fn fano_28_family(config: &RunConfig) -> Certificate {
    let tol = config.tolerance;
    let mut cert = Certificate::new("fano-28");
    let plane = fano_plane();

    cert.check_exact(
        "fano-line-count-7",
        (plane.lines().len() as f64 - 7.0).abs(),
    );
    let point_dev = (1..8u8)
        .map(|p| (plane.lines_through(p).len() as f64 - 3.0).abs())
        .fold(0.0, f64::max);
    cert.check_exact("fano-point-on-3-lines", point_dev);
    let m = plane.incidence_matrix();
    let mut overlap_ok = true;
    for i in 0..7 {
        for j in (i + 1)..7 {
            let overlap: u8 = (0..7).map(|k| m[i][k] & m[j][k]).sum();
            overlap_ok &= overlap == 1;
        }
    }
    cert.check_bool("fano-row-overlap-1", overlap_ok);

    // octonion table: examples, antisymmetry, the xor index law
    let e = OctonionUnit::positive;
    cert.check_bool(
        "octonion-examples",
        octonion_mul(e(1), e(4)) == e(5)
            && octonion_mul(e(1), e(1)) == OctonionUnit::new(0, -1)
            && octonion_mul(e(2), e(1)) == OctonionUnit::new(3, -1),
    );
    let mut anti_ok = true;
    let mut xor_ok = true;
    for i in 1..8u8 {
        for j in 1..8u8 {
            if i == j {
                continue;
            }
            let ij = octonion_mul(e(i), e(j));
            let ji = octonion_mul(e(j), e(i));
            anti_ok &= ij.sign() == -ji.sign() && ij.index() == ji.index();
            xor_ok &= ij.index() == i ^ j;
        }
    }
    cert.check_bool("octonion-antisymmetry", anti_ok);
    cert.check_bool("octonion-xor-law", xor_ok);

    // 7 lines from incidence rows
    let seven = fano_lines_r7();
    cert.check_exact("seven-line-count", (seven.line_count() as f64 - 7.0).abs());
    cert.check_bool(
        "seven-lines-equiangular-exact",
        seven.exact_equiangularity() == Some(true),
    );
    cert.check_bool(
        "seven-cosine-third",
        seven.cosine == GoldenScalar::from_ratio(1, 3),
    );

    // 28 anti-flag lines
    let (set, tags) = antiflag_lines_28();
    cert.check_exact("antiflag-count-28", (set.line_count() as f64 - 28.0).abs());
    cert.check_bool(
        "antiflag-equiangular-exact",
        set.exact_equiangularity() == Some(true),
    );
    let gerzon = gerzon_bound(7, GerzonField::Real).expect("real bound");
    cert.check_exact(
        "antiflag-gerzon-saturation",
        (set.line_count() as f64 - gerzon as f64).abs(),
    );
    cert.check(
        "welch-cosine-7-real-third",
        (welch_angle(7, Field::Real) - 1.0 / 3.0).abs(),
        tol,
    );

    // the displayed sign matrix for line (e₁,e₂,e₃)
    let sign_rows: Vec<[i8; 3]> = (4..8u8)
        .map(|p| {
            [
                cayley_graves_sign(1, p),
                cayley_graves_sign(2, p),
                cayley_graves_sign(3, p),
            ]
        })
        .collect();
    let expect: [[i8; 3]; 4] = [[1, 1, 1], [-1, 1, -1], [-1, -1, 1], [1, -1, -1]];
    cert.check_bool("antiflag-sign-matrix-line-1", sign_rows == expect);

    // anti-flag ↔ antisymmetric-label bijection, flags rejected
    let mut labels: Vec<PauliLabel> = Vec::new();
    let mut bijection_ok = true;
    for t in &tags {
        match antiflag_to_pauli(plane.line(t.line_listed), t.point) {
            Ok(l) => {
                bijection_ok &= is_antisymmetric(l);
                labels.push(l);
            }
            Err(_) => bijection_ok = false,
        }
    }
    labels.sort_unstable();
    labels.dedup();
    cert.check_exact(
        "antiflag-pauli-bijection-28",
        (labels.len() as f64 - 28.0).abs(),
    );
    cert.check_bool("antiflag-labels-antisymmetric", bijection_ok);

    let mut flags_rejected = 0usize;
    let mut flags_symmetric = true;
    for line in plane.lines() {
        for &p in &line.points {
            match antiflag_to_pauli(line, p) {
                Err(Error::FlagNotAntiflag { .. }) => {
                    flags_rejected += 1;
                    flags_symmetric &=
                        !is_antisymmetric(PauliLabel::from_xz_bits(p, line.dual_index));
                }
                _ => flags_symmetric = false,
            }
        }
    }
    cert.check_exact("flags-rejected-21", (flags_rejected as f64 - 21.0).abs());
    cert.check_bool("flag-labels-symmetric", flags_symmetric);

    cert
}

fn so8_28_family(_config: &RunConfig) -> Certificate {
    let mut cert = Certificate::new("so8-28");
    let (set, tags) = so8_lines_28();
    cert.check_exact("so8-count-28", (set.line_count() as f64 - 28.0).abs());
    cert.check_bool(
        "so8-equiangular-exact",
        set.exact_equiangularity() == Some(true),
    );
    let gerzon = gerzon_bound(7, GerzonField::Real).expect("real bound");
    cert.check_exact(
        "so8-gerzon-saturation",
        (set.line_count() as f64 - gerzon as f64).abs(),
    );
    cert.check_bool(
        "so8-base-vector-point-1",
        set.vectors[0] == crate::golden::RealVector::exact_integers(&[1, 1, 1, 0, 0, 0, 0]),
    );
    cert.check_bool(
        "so8-flip-vector-point-1",
        set.vectors[2] == crate::golden::RealVector::exact_integers(&[1, -1, 1, 0, 0, 0, 0]),
    );
    // same-point pairs: 1 − 1 + 1 = 1
    let mut same_point_ok = true;
    for i in 0..tags.len() {
        for j in (i + 1)..tags.len() {
            if tags[i].point != tags[j].point {
                continue;
            }
            let inner = set.vectors[i].exact_dot(&set.vectors[j]).expect("exact");
            same_point_ok &= inner.abs() == GoldenScalar::one();
        }
    }
    cert.check_bool("so8-same-point-inner-1", same_point_ok);
    cert.check_exact(
        "so8-antisymmetric-label-count-match",
        (set.line_count() as f64 - antisymmetric_count() as f64).abs(),
    );
    cert
}

fn icosahedron_family(_config: &RunConfig) -> Certificate {
    let mut cert = Certificate::new("icosahedron");

    let (x, z) = real_wh_ops();
    let i3 = crate::golden::GoldenMatrix::identity(3);
    cert.check_bool("real-shift-cubed-identity", x.mul(&x).mul(&x) == i3);
    cert.check_bool("real-phase-squared-identity", z.mul(&z) == i3);
    let zx = z.mul(&x);
    cert.check_bool("zx-cubed-minus-identity", zx.mul(&zx).mul(&zx) == i3.neg());
    let nz = z.neg();
    let nzx = zx.neg();
    cert.check_bool(
        "tetrahedral-relations",
        nz.mul(&nz) == i3 && nzx.mul(&nzx).mul(&nzx) == i3,
    );

    match tetrahedral_group() {
        Ok(group) => {
            cert.check_exact("tetrahedral-order-12", (group.len() as f64 - 12.0).abs());
            cert.check_bool(
                "tetrahedral-rotations",
                group
                    .iter()
                    .all(|g| g.is_orthogonal() && g.determinant() == GoldenScalar::one()),
            );
        }
        Err(_) => cert.check_bool("tetrahedral-order-12", false),
    }

    let phi = GoldenScalar::phi();
    cert.check_bool(
        "golden-quadratic",
        (phi.square() - phi.clone() - GoldenScalar::one()).is_zero(),
    );
    cert.check_bool(
        "golden-inverse",
        phi.inverse() == phi.clone() - GoldenScalar::one(),
    );
    cert.check_bool(
        "golden-unit-product",
        phi.clone() * phi.inverse() == GoldenScalar::one(),
    );
    // equal-overlap condition ⟨Zv, v⟩ = ⟨X²v, v⟩ for v = (0, 1, φ)
    let v = vec![GoldenScalar::zero(), GoldenScalar::one(), phi.clone()];
    let dot = |u: &[GoldenScalar], w: &[GoldenScalar]| {
        let mut acc = GoldenScalar::zero();
        for (a, b) in u.iter().zip(w) {
            acc = acc + a.clone() * b.clone();
        }
        acc
    };
    cert.check_bool(
        "golden-equal-overlap-condition",
        dot(&z.apply(&v), &v) == dot(&x.mul(&x).apply(&v), &v),
    );

    match icosahedron_orbit() {
        Ok(set) => {
            cert.check_exact(
                "icosahedron-vertex-count-12",
                (set.vectors.len() as f64 - 12.0).abs(),
            );
            cert.check_exact(
                "icosahedron-line-count-6",
                (set.line_count() as f64 - 6.0).abs(),
            );
            cert.check_bool(
                "icosahedron-equiangular-exact",
                set.exact_equiangularity() == Some(true),
            );
            cert.check_bool(
                "icosahedron-cosine-squared-fifth",
                set.cosine.square() == GoldenScalar::from_ratio(1, 5),
            );
            // cross-line inner products are ±φ exactly
            let classes = set.line_classes();
            let mut phi_ok = true;
            for (a, ca) in classes.iter().enumerate() {
                for cb in classes.iter().skip(a + 1) {
                    let inner = set.vectors[ca[0]]
                        .exact_dot(&set.vectors[cb[0]])
                        .expect("exact vectors");
                    phi_ok &= inner.abs() == phi;
                }
            }
            cert.check_bool("icosahedron-inner-phi", phi_ok);
            let gerzon = gerzon_bound(3, GerzonField::Real).expect("real bound");
            cert.check_exact(
                "icosahedron-gerzon-saturation-6",
                (set.line_count() as f64 - gerzon as f64).abs(),
            );
        }
        Err(_) => cert.check_bool("icosahedron-vertex-count-12", false),
    }

    cert
}

fn trine_family(config: &RunConfig) -> Certificate {
    let tol = config.tolerance;
    let mut cert = Certificate::new("trine-r2");
    let set = trine_r2();
    cert.check_exact("trine-count-3", (set.line_count() as f64 - 3.0).abs());
    let gerzon = gerzon_bound(2, GerzonField::Real).expect("real bound");
    cert.check_exact(
        "trine-gerzon-saturation",
        (set.line_count() as f64 - gerzon as f64).abs(),
    );
    cert.check(
        "trine-cosine-half",
        set.float_equiangularity_deviation(),
        tol,
    );
    // tight frame: Σ|v⟩⟨v| = (3/2) I
    let mut sum = [[0.0f64; 2]; 2];
    for v in &set.vectors {
        let f = v.to_floats();
        for i in 0..2 {
            for j in 0..2 {
                sum[i][j] += f[i] * f[j];
            }
        }
    }
    let mut frame_dev = 0.0f64;
    for (i, row) in sum.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let expect = if i == j { 1.5 } else { 0.0 };
            frame_dev = frame_dev.max((v - expect).abs());
        }
    }
    cert.check("trine-tight-frame", frame_dev, tol);
    cert
}

fn bounds_family(config: &RunConfig) -> Certificate {
    let tol = config.tolerance;
    let mut cert = Certificate::new("bounds");

    let gerzon_cases: [(usize, GerzonField, usize, &str); 6] = [
        (7, GerzonField::Real, 28, "gerzon-7-real-28"),
        (8, GerzonField::Complex, 64, "gerzon-8-complex-64"),
        (3, GerzonField::Octonionic3, 27, "gerzon-3-octonionic-27"),
        (2, GerzonField::Real, 3, "gerzon-2-real-3"),
        (3, GerzonField::Real, 6, "gerzon-3-real-6"),
        (23, GerzonField::Real, 276, "gerzon-23-real-276"),
    ];
    for (d, field, expect, name) in gerzon_cases {
        match gerzon_bound(d, field) {
            Ok(v) => cert.check_exact(name, (v as f64 - expect as f64).abs()),
            Err(_) => cert.check_bool(name, false),
        }
    }
    cert.check_bool(
        "gerzon-octonionic-rejects-other-dimensions",
        gerzon_bound(4, GerzonField::Octonionic3).is_err(),
    );

    let zero_cases: [(usize, Field, usize, &str); 4] = [
        (2, Field::Complex, 1, "zero-bound-2-complex-1"),
        (3, Field::Complex, 3, "zero-bound-3-complex-3"),
        (8, Field::Complex, 28, "zero-bound-8-complex-28"),
        (23, Field::Real, 176, "zero-bound-23-real-176"),
    ];
    for (d, field, expect, name) in zero_cases {
        cert.check_exact(
            name,
            (max_zero_bound(d, field) as f64 - expect as f64).abs(),
        );
    }

    cert.check(
        "welch-3-complex-half",
        (welch_angle(3, Field::Complex) - 0.5).abs(),
        tol,
    );
    cert.check(
        "welch-3-real-inverse-sqrt5",
        (welch_angle(3, Field::Real) - 1.0 / 5f64.sqrt()).abs(),
        tol,
    );
    cert.check(
        "welch-7-real-third",
        (welch_angle(7, Field::Real) - 1.0 / 3.0).abs(),
        tol,
    );

    let neff_cases: [(usize, u64, &str); 3] = [
        (2, 3, "neff-pure-2-3"),
        (3, 6, "neff-pure-3-6"),
        (8, 36, "neff-pure-8-36"),
    ];
    for (d, expect, name) in neff_cases {
        cert.check_exact(name, (n_eff_pure(d) as f64 - expect as f64).abs());
    }
    let complement_ok = [2usize, 3, 8]
        .iter()
        .all(|&d| (d * d) as u64 - n_eff_pure(d) == (d as u64) * (d as u64 - 1) / 2);
    cert.check_bool("neff-complement-choose-2", complement_ok);

    let terms = fibonacci_lucas_terms(5);
    let residues_zero = terms.iter().all(|t| t.is_rational());
    cert.check_bool("fibonacci-lucas-zero-sqrt5-residue", residues_zero);
    let expect = [4i64, 8, 19, 48, 124];
    let values_ok = terms
        .iter()
        .zip(expect.iter())
        .all(|(t, &v)| t.to_integer() == Some(v.into()));
    cert.check_bool("fibonacci-lucas-first-five", values_ok);

    cert
}

/// Output format for rendered documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn render_verify(doc: &VerifyDocument, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(doc).expect("document serialization is infallible")
        }
        OutputFormat::Csv => {
            let mut out = String::from("subject,check,passed,max_deviation,tolerance\n");
            for c in &doc.checks {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    doc.subject,
                    c.name,
                    c.passed,
                    f64_to_string(c.max_deviation),
                    f64_to_string(c.tolerance)
                ));
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!("subject: {}\n", doc.subject);
            for c in &doc.checks {
                out.push_str(&format!(
                    "  [{}] {:<42} deviation {:>12.5e}  tolerance {:>12.5e}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.max_deviation,
                    c.tolerance
                ));
            }
            out.push_str(&format!(
                "overall: {}\n",
                if doc.overall { "PASS" } else { "FAIL" }
            ));
            out
        }
    }
}

pub fn render_report(doc: &ReportDocument, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(doc).expect("document serialization is infallible")
        }
        OutputFormat::Csv => {
            let mut out = String::from("subject,check,passed,max_deviation,tolerance\n");
            for f in &doc.families {
                for c in &f.checks {
                    out.push_str(&format!(
                        "{},{},{},{},{}\n",
                        f.subject,
                        c.name,
                        c.passed,
                        f64_to_string(c.max_deviation),
                        f64_to_string(c.tolerance)
                    ));
                }
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for f in &doc.families {
                out.push_str(&render_verify(f, OutputFormat::Text));
                out.push('\n');
            }
            out.push_str(&format!(
                "report-all overall: {}\n",
                if doc.overall { "PASS" } else { "FAIL" }
            ));
            out
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MinimumDoc {
    pub entropy_bits: String,
    /// index into the dual family when matched with fidelity ≥ 1 − 1e-6
    pub matched_dual: Option<usize>,
    pub match_fidelity: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PerturbationDoc {
    pub states_checked: usize,
    pub perturbations_each: usize,
    pub min_perturbed_entropy_bits: String,
}

/// Entropy-search report: minima found, matches against the dual
/// structure, and (for the Hoggar pair) the perturbation verification.
#[derive(Debug, Clone, Serialize)]
pub struct EntropySearchDocument {
    pub subject: String,
    pub config: ConfigDoc,
    pub expected_minimum_bits: String,
    pub minimum_found_bits: String,
    pub minima: Vec<MinimumDoc>,
    pub minimizers_at_minimum: usize,
    pub expected_minimizers: Option<usize>,
    pub perturbation: Option<PerturbationDoc>,
    pub overall: bool,
}

/// Run the entropy minimizer for a SIC family and compare against its dual
/// structure.
pub fn entropy_search_document(
    family: Family,
    config: &RunConfig,
) -> Result<EntropySearchDocument> {
    let (ensemble, duals, expected_min, expected_count): (
        SicEnsemble,
        Vec<StateVector>,
        f64,
        Option<usize>,
    ) = match family {
        Family::QubitPlus => (
            qubit_sic(SicSign::Plus),
            qubit_sic(SicSign::Minus).states()?,
            3f64.log2(),
            Some(4),
        ),
        Family::QubitMinus => (
            qubit_sic(SicSign::Minus),
            qubit_sic(SicSign::Plus).states()?,
            3f64.log2(),
            Some(4),
        ),
        Family::HesseCoxeter | Family::HesseOrbit => {
            let e = if family == Family::HesseCoxeter {
                hesse_sic_coxeter()
            } else {
                hesse_sic_orbit()
            };
            let mub = mub_dual(&hesse_sic_orbit())?;
            let duals = mub.into_iter().map(|m| m.state).collect();
            (e, duals, 6f64.log2(), Some(12))
        }
        Family::HoggarPlus => (
            hoggar_sic(SicSign::Plus),
            hoggar_sic(SicSign::Minus).states()?,
            36f64.log2(),
            None,
        ),
        Family::HoggarMinus => (
            hoggar_sic(SicSign::Minus),
            hoggar_sic(SicSign::Plus).states()?,
            36f64.log2(),
            None,
        ),
        other => {
            return Err(Error::UnknownFamily(format!(
                "{} is not a SIC family",
                other
            )))
        }
    };

    let minima = entropy_min_search(&ensemble, config.restarts, config.seed);
    let minimum_found = minima.first().map(|m| m.entropy).unwrap_or(f64::INFINITY);
    let docs: Vec<MinimumDoc> = minima
        .iter()
        .map(|m| {
            let (best_idx, best_fid) = duals
                .iter()
                .enumerate()
                .map(|(i, s)| (i, s.fidelity(&m.state)))
                .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .expect("dual family is nonempty");
            MinimumDoc {
                entropy_bits: f64_to_string(m.entropy),
                matched_dual: (best_fid >= 1.0 - 1e-6).then_some(best_idx),
                match_fidelity: f64_to_string(best_fid),
            }
        })
        .collect();
    let at_minimum: Vec<(&SearchMinimum, &MinimumDoc)> = minima
        .iter()
        .zip(&docs)
        .filter(|(m, _)| m.entropy < expected_min + 1e-6)
        .collect();
    let minimizers_at_minimum = at_minimum.len();
    let all_matched = at_minimum.iter().all(|(_, d)| d.matched_dual.is_some());

    // Hoggar: verify the dual states are local minima under perturbation
    let perturbation = match family {
        Family::HoggarPlus | Family::HoggarMinus => {
            let report = verify_local_minima(&ensemble, &duals, 10_000, config.seed);
            Some(report)
        }
        _ => None,
    };

    let mut overall = minimum_found >= expected_min - 1e-6 && all_matched;
    if let Some(count) = expected_count {
        overall &= (minimum_found - expected_min).abs() < 1e-6;
        overall &= minimizers_at_minimum == count;
    }
    if let Some(p) = &perturbation {
        overall &= p.min_perturbed_entropy >= expected_min - 1e-6;
    }

    Ok(EntropySearchDocument {
        subject: format!("entropy-search/{}", family),
        config: ConfigDoc::new(config, Some(family)),
        expected_minimum_bits: f64_to_string(expected_min),
        minimum_found_bits: f64_to_string(minimum_found),
        minima: docs,
        minimizers_at_minimum,
        expected_minimizers: expected_count,
        perturbation: perturbation.map(|p| PerturbationDoc {
            states_checked: p.states_checked,
            perturbations_each: p.perturbations_each,
            min_perturbed_entropy_bits: f64_to_string(p.min_perturbed_entropy),
        }),
        overall,
    })
}

pub fn render_entropy_search(doc: &EntropySearchDocument, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(doc).expect("document serialization is infallible")
        }
        OutputFormat::Csv => {
            let mut out = String::from("entropy_bits,matched_dual,match_fidelity\n");
            for m in &doc.minima {
                out.push_str(&format!(
                    "{},{},{}\n",
                    m.entropy_bits,
                    m.matched_dual.map(|i| i.to_string()).unwrap_or_default(),
                    m.match_fidelity
                ));
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!("subject: {}\n", doc.subject);
            out.push_str(&format!(
                "expected minimum: {} bits\nminimum found:    {} bits\n",
                doc.expected_minimum_bits, doc.minimum_found_bits
            ));
            out.push_str(&format!(
                "minimizers at the minimum: {}{}\n",
                doc.minimizers_at_minimum,
                doc.expected_minimizers
                    .map(|c| format!(" (expected {})", c))
                    .unwrap_or_default()
            ));
            for m in &doc.minima {
                out.push_str(&format!(
                    "  entropy {:<24} dual {:<6} fidelity {}\n",
                    m.entropy_bits,
                    m.matched_dual
                        .map(|i| i.to_string())
                        .unwrap_or_else(|| "-".into()),
                    m.match_fidelity
                ));
            }
            if let Some(p) = &doc.perturbation {
                out.push_str(&format!(
                    "perturbation: {} states × {} trials, min entropy {}\n",
                    p.states_checked, p.perturbations_each, p.min_perturbed_entropy_bits
                ));
            }
            out.push_str(&format!(
                "overall: {}\n",
                if doc.overall { "PASS" } else { "FAIL" }
            ));
            out
        }
    }
}

/// Incidence summary for the families that carry an incidence structure.
#[derive(Debug, Clone, Serialize)]
pub struct IncidenceDocument {
    pub subject: String,
    pub row_counts: Vec<usize>,
    pub col_counts: Vec<usize>,
    pub total_incidences: usize,
    pub matrix: Vec<Vec<u8>>,
}

pub fn incidence_document(family: Family, config: &RunConfig) -> Result<IncidenceDocument> {
    match family {
        Family::MubDual => {
            let hesse = hesse_sic_orbit();
            let mub = mub_dual(&hesse)?;
            let inc = sic_mub_incidence(&hesse, &mub, config.tolerance)?;
            let matrix: Vec<Vec<u8>> = inc
                .matrix
                .iter()
                .map(|row| row.iter().map(|&b| b as u8).collect())
                .collect();
            Ok(IncidenceDocument {
                subject: "incidence/mub-dual".into(),
                row_counts: inc.per_sic_counts,
                col_counts: inc.per_mub_counts,
                total_incidences: matrix.iter().flatten().map(|&v| v as usize).sum(),
                matrix,
            })
        }
        Family::TwinIncidence => {
            let t: TwinIncidence = twin_incidence(
                &hoggar_sic(SicSign::Plus),
                &hoggar_sic(SicSign::Minus),
                1e-9,
            );
            let matrix: Vec<Vec<u8>> = t
                .zero_pattern
                .iter()
                .map(|row| row.iter().map(|&b| b as u8).collect())
                .collect();
            Ok(IncidenceDocument {
                subject: "incidence/twin-incidence".into(),
                row_counts: t.row_counts,
                col_counts: t.col_counts,
                total_incidences: matrix.iter().flatten().map(|&v| v as usize).sum(),
                matrix,
            })
        }
        Family::Fano28 => {
            let plane = fano_plane();
            let m = plane.incidence_matrix();
            let matrix: Vec<Vec<u8>> = m.iter().map(|row| row.to_vec()).collect();
            Ok(IncidenceDocument {
                subject: "incidence/fano-28".into(),
                row_counts: matrix
                    .iter()
                    .map(|r| r.iter().map(|&v| v as usize).sum())
                    .collect(),
                col_counts: (0..7)
                    .map(|j| matrix.iter().map(|r| r[j] as usize).sum())
                    .collect(),
                total_incidences: 21,
                matrix,
            })
        }
        other => Err(Error::UnknownFamily(format!(
            "{} has no incidence structure",
            other
        ))),
    }
}

pub fn render_incidence(doc: &IncidenceDocument, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(doc).expect("document serialization is infallible")
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            for row in &doc.matrix {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!("subject: {}\n", doc.subject);
            out.push_str(&format!(
                "rows: {}×{}  total incidences: {}\n",
                doc.matrix.len(),
                doc.matrix.first().map(|r| r.len()).unwrap_or(0),
                doc.total_incidences
            ));
            out.push_str(&format!("row counts: {:?}\n", doc.row_counts));
            out.push_str(&format!("col counts: {:?}\n", doc.col_counts));
            out
        }
    }
}

/// Everything the label machinery knows about one six-bit label: its bit
/// halves, octonion pair, anti-flag (when antisymmetric), and its row of
/// the twin zero pattern.
#[derive(Debug, Clone, Serialize)]
pub struct LabelDocument {
    pub subject: String,
    pub label: String,
    pub index: u8,
    pub x_bits: String,
    pub z_bits: String,
    pub antisymmetric: bool,
    pub octonion_pair: [String; 2],
    /// (line points, line dual index, off-line point) when antisymmetric
    pub antiflag: Option<([u8; 3], u8, u8)>,
    /// minus-state labels orthogonal to the plus state at this label
    pub twin_zero_labels: Vec<String>,
}

/// Inspect a six-character bit-string label against the twin-Hoggar
/// structure.
pub fn label_document(label: PauliLabel) -> LabelDocument {
    let (x, z) = crate::octonion::hoggar_label_to_octonions(label);
    let anti = is_antisymmetric(label);
    let antiflag = if anti && label.x_bits() != 0 && label.z_bits() != 0 {
        let plane = fano_plane();
        plane
            .line_by_dual(label.z_bits())
            .map(|line| (line.points, line.dual_index, label.x_bits()))
    } else {
        None
    };
    // row of the twin zero pattern for the plus state at this label:
    // tr(Π_a⁺ Π_b⁻) vanishes exactly when a ⊕ b is antisymmetric
    let twin_zero_labels = PauliLabel::enumerate()
        .filter(|b| is_antisymmetric(label.xor(b)))
        .map(|b| b.to_string())
        .collect();
    LabelDocument {
        subject: format!("label/{}", label),
        label: label.to_string(),
        index: label.index(),
        x_bits: format!("{:03b}", label.x_bits()),
        z_bits: format!("{:03b}", label.z_bits()),
        antisymmetric: anti,
        octonion_pair: [x.to_string(), z.to_string()],
        antiflag,
        twin_zero_labels,
    }
}

pub fn render_label(doc: &LabelDocument, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(doc).expect("document serialization is infallible")
        }
        OutputFormat::Csv => {
            let mut out = String::from("label,index,x_bits,z_bits,antisymmetric\n");
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                doc.label, doc.index, doc.x_bits, doc.z_bits, doc.antisymmetric
            ));
            out
        }
        OutputFormat::Text => {
            let mut out = format!(
                "label {} (index {}): x = {}, z = {}, {}\n",
                doc.label,
                doc.index,
                doc.x_bits,
                doc.z_bits,
                if doc.antisymmetric {
                    "antisymmetric"
                } else {
                    "symmetric"
                }
            );
            out.push_str(&format!(
                "octonion pair: ({}, {})\n",
                doc.octonion_pair[0], doc.octonion_pair[1]
            ));
            match &doc.antiflag {
                Some((points, dual, point)) => out.push_str(&format!(
                    "anti-flag: line (e{}, e{}, e{}) [dual index {}], point e{}\n",
                    points[0], points[1], points[2], dual, point
                )),
                None => out.push_str("anti-flag: none (symmetric or degenerate half)\n"),
            }
            out.push_str(&format!(
                "twin zero row: {} orthogonal minus states\n",
                doc.twin_zero_labels.len()
            ));
            out
        }
    }
}

/// The quoted bound values, as a value table.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsDocument {
    pub subject: String,
    pub gerzon: Vec<(String, usize)>,
    pub max_zeros: Vec<(String, usize)>,
    pub welch: Vec<(String, String)>,
    pub n_eff_pure: Vec<(String, u64)>,
    pub fibonacci_lucas: Vec<String>,
}

pub fn bounds_document() -> BoundsDocument {
    let gerzon = vec![
        (
            "2-real".to_string(),
            gerzon_bound(2, GerzonField::Real).unwrap(),
        ),
        (
            "3-real".to_string(),
            gerzon_bound(3, GerzonField::Real).unwrap(),
        ),
        (
            "7-real".to_string(),
            gerzon_bound(7, GerzonField::Real).unwrap(),
        ),
        (
            "23-real".to_string(),
            gerzon_bound(23, GerzonField::Real).unwrap(),
        ),
        (
            "2-complex".to_string(),
            gerzon_bound(2, GerzonField::Complex).unwrap(),
        ),
        (
            "3-complex".to_string(),
            gerzon_bound(3, GerzonField::Complex).unwrap(),
        ),
        (
            "8-complex".to_string(),
            gerzon_bound(8, GerzonField::Complex).unwrap(),
        ),
        (
            "3-octonionic".to_string(),
            gerzon_bound(3, GerzonField::Octonionic3).unwrap(),
        ),
    ];
    let max_zeros = vec![
        ("2-complex".to_string(), max_zero_bound(2, Field::Complex)),
        ("3-complex".to_string(), max_zero_bound(3, Field::Complex)),
        ("8-complex".to_string(), max_zero_bound(8, Field::Complex)),
        ("23-real".to_string(), max_zero_bound(23, Field::Real)),
    ];
    let welch = vec![
        (
            "2-complex".to_string(),
            f64_to_string(welch_angle(2, Field::Complex)),
        ),
        (
            "3-complex".to_string(),
            f64_to_string(welch_angle(3, Field::Complex)),
        ),
        (
            "8-complex".to_string(),
            f64_to_string(welch_angle(8, Field::Complex)),
        ),
        (
            "3-real".to_string(),
            f64_to_string(welch_angle(3, Field::Real)),
        ),
        (
            "7-real".to_string(),
            f64_to_string(welch_angle(7, Field::Real)),
        ),
    ];
    let n_eff = vec![
        ("2".to_string(), n_eff_pure(2)),
        ("3".to_string(), n_eff_pure(3)),
        ("8".to_string(), n_eff_pure(8)),
    ];
    let fib = fibonacci_lucas_terms(5)
        .iter()
        .map(|t| t.to_integer().expect("integer dimensions").to_string())
        .collect();
    BoundsDocument {
        subject: "bounds".into(),
        gerzon,
        max_zeros,
        welch,
        n_eff_pure: n_eff,
        fibonacci_lucas: fib,
    }
}

pub fn render_bounds(doc: &BoundsDocument, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(doc).expect("document serialization is infallible")
        }
        OutputFormat::Csv => {
            let mut out = String::from("table,case,value\n");
            for (k, v) in &doc.gerzon {
                out.push_str(&format!("gerzon,{},{}\n", k, v));
            }
            for (k, v) in &doc.max_zeros {
                out.push_str(&format!("max-zeros,{},{}\n", k, v));
            }
            for (k, v) in &doc.welch {
                out.push_str(&format!("welch,{},{}\n", k, v));
            }
            for (k, v) in &doc.n_eff_pure {
                out.push_str(&format!("n-eff-pure,{},{}\n", k, v));
            }
            for (i, v) in doc.fibonacci_lucas.iter().enumerate() {
                out.push_str(&format!("fibonacci-lucas,k={},{}\n", i + 1, v));
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::from("bound values\n");
            out.push_str("  gerzon:        ");
            out.push_str(
                &doc.gerzon
                    .iter()
                    .map(|(k, v)| format!("{} → {}", k, v))
                    .collect::<Vec<_>>()
                    .join(", "),
            );
            out.push_str("\n  max zeros:     ");
            out.push_str(
                &doc.max_zeros
                    .iter()
                    .map(|(k, v)| format!("{} → {}", k, v))
                    .collect::<Vec<_>>()
                    .join(", "),
            );
            out.push_str("\n  welch cosine:  ");
            out.push_str(
                &doc.welch
                    .iter()
                    .map(|(k, v)| format!("{} → {}", k, v))
                    .collect::<Vec<_>>()
                    .join(", "),
            );
            out.push_str("\n  N_eff (pure):  ");
            out.push_str(
                &doc.n_eff_pure
                    .iter()
                    .map(|(k, v)| format!("d={} → {}", k, v))
                    .collect::<Vec<_>>()
                    .join(", "),
            );
            out.push_str("\n  Fibonacci–Lucas dimensions: ");
            out.push_str(&doc.fibonacci_lucas.join(", "));
            out.push('\n');
            out
        }
    }
}

/// Canonical artifact for a family: ensemble JSON for the SICs, line-set
/// JSON/CSV for the line systems, probability vectors for the MUB dual,
/// the zero-pattern for the twin incidence, and the bound table.
pub fn export_artifact(family: Family, config: &RunConfig, format: OutputFormat) -> Result<String> {
    let ensemble = |e: SicEnsemble| -> Result<String> {
        match format {
            OutputFormat::Json | OutputFormat::Text => Ok(e.to_json()),
            OutputFormat::Csv => {
                let mut out = String::new();
                for p in e.projectors() {
                    let cells: Vec<String> = p
                        .entries()
                        .iter()
                        .flat_map(|z| [format!("{}", z.re), format!("{}", z.im)])
                        .collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
                Ok(out)
            }
        }
    };
    let line_set = |s: crate::lines::LineSet| -> Result<String> {
        match format {
            OutputFormat::Json | OutputFormat::Text => Ok(s.to_json()),
            OutputFormat::Csv => Ok(s.to_csv()),
        }
    };
    match family {
        Family::QubitPlus => ensemble(qubit_sic(SicSign::Plus)),
        Family::QubitMinus => ensemble(qubit_sic(SicSign::Minus)),
        Family::HesseCoxeter => ensemble(hesse_sic_coxeter()),
        Family::HesseOrbit => ensemble(hesse_sic_orbit()),
        Family::HoggarPlus => ensemble(hoggar_sic(SicSign::Plus)),
        Family::HoggarMinus => ensemble(hoggar_sic(SicSign::Minus)),
        Family::MubDual => {
            let mub: Vec<MubState> = mub_dual(&hesse_sic_orbit())?;
            match format {
                OutputFormat::Json | OutputFormat::Text => {
                    let plane = affine_plane_9();
                    let doc = serde_json::json!({
                        "lines": plane.lines(),
                        "parallel_classes": plane.parallel_classes(),
                        "probability_vectors": mub
                            .iter()
                            .map(|m| m.probabilities.values().to_vec())
                            .collect::<Vec<_>>(),
                    });
                    Ok(serde_json::to_string_pretty(&doc).expect("serialization"))
                }
                OutputFormat::Csv => {
                    let mut out = String::new();
                    for m in &mub {
                        let cells: Vec<String> = m
                            .probabilities
                            .values()
                            .iter()
                            .map(|v| format!("{}", v))
                            .collect();
                        out.push_str(&cells.join(","));
                        out.push('\n');
                    }
                    Ok(out)
                }
            }
        }
        Family::TwinIncidence => {
            let doc = incidence_document(Family::TwinIncidence, config)?;
            match format {
                OutputFormat::Json | OutputFormat::Text => {
                    Ok(serde_json::to_string_pretty(&doc.matrix).expect("serialization"))
                }
                OutputFormat::Csv => Ok(render_incidence(&doc, OutputFormat::Csv)),
            }
        }
        Family::Fano28 => line_set(antiflag_lines_28().0),
        Family::So828 => line_set(so8_lines_28().0),
        Family::Icosahedron => line_set(icosahedron_orbit()?),
        Family::TrineR2 => line_set(trine_r2()),
        Family::Bounds => Ok(render_bounds(
            &bounds_document(),
            match format {
                OutputFormat::Text => OutputFormat::Json,
                other => other,
            },
        )),
    }
}

/// Names of every check any certificate can emit, for the schema reference.
pub fn documented_check_names() -> Vec<String> {
    let config = RunConfig {
        restarts: 1,
        ..RunConfig::default()
    };
    let mut names: Vec<String> = Vec::new();
    for family in Family::ALL {
        for check in verify_family(family, &config).checks {
            names.push(check.name);
        }
    }
    names.sort();
    names.dedup();
    names
}
