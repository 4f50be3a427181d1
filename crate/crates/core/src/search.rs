//! Shannon-entropy minimization over pure states, by random-restart
//! direct search on the unit sphere.
//!
//! The objective H(p) with p(i) = |⟨π_i|ψ⟩|²/d is nonsmooth where p has
//! zeros — exactly at the minimizers of interest — so a Nelder–Mead-style
//! simplex search on the real-imaginary coordinates is used instead of a
//! gradient method, with renormalization after every step. Restart r seeds
//! its own generator with `seed + r`, so results do not depend on restart
//! execution order.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::StateVector;
use crate::prob::shannon_entropy_raw;
use crate::sic::SicEnsemble;

/// One local minimum found by the search.
#[derive(Debug, Clone)]
pub struct SearchMinimum {
    pub state: StateVector,
    pub entropy: f64,
}

/// Entropy of the probability vector induced by unit coordinates `x`.
struct Objective {
    states: Vec<StateVector>,
    d: usize,
}

impl Objective {
    fn new(e: &SicEnsemble) -> Self {
        Self {
            states: e.states().expect("ensemble projectors are rank-1"),
            d: e.dimension(),
        }
    }

    fn state_from(&self, x: &[f64]) -> StateVector {
        let amps: Vec<Complex64> = x
            .chunks_exact(2)
            .map(|c| Complex64::new(c[0], c[1]))
            .collect();
        StateVector::new(amps).normalized()
    }

    fn eval(&self, x: &[f64]) -> f64 {
        let psi = self.state_from(x);
        let d = self.d as f64;
        let p: Vec<f64> = self.states.iter().map(|s| s.fidelity(&psi) / d).collect();
        shannon_entropy_raw(&p)
    }

    pub fn entropy_of(&self, psi: &StateVector) -> f64 {
        let d = self.d as f64;
        let p: Vec<f64> = self.states.iter().map(|s| s.fidelity(psi) / d).collect();
        shannon_entropy_raw(&p)
    }
}

fn normalize(x: &mut [f64]) {
    let n: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if n > 0.0 {
        for v in x.iter_mut() {
            *v /= n;
        }
    }
}

/// Nelder–Mead on the unit sphere: every candidate point is renormalized
/// before evaluation. Returns the best point and value.
fn nelder_mead(obj: &Objective, start: &[f64], step: f64, max_iter: usize) -> (Vec<f64>, f64) {
    let n = start.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    let mut values: Vec<f64> = Vec::with_capacity(n + 1);
    let mut base = start.to_vec();
    normalize(&mut base);
    simplex.push(base.clone());
    values.push(obj.eval(&base));
    for i in 0..n {
        let mut p = base.clone();
        p[i] += step;
        normalize(&mut p);
        simplex.push(p.clone());
        values.push(obj.eval(&p));
    }

    let (alpha, gamma, beta, sigma) = (1.0, 2.0, 0.5, 0.5);
    for _ in 0..max_iter {
        // order
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
        let best = order[0];
        let worst = order[n];
        let second_worst = order[n - 1];
        if (values[worst] - values[best]).abs() < 1e-13 {
            let spread: f64 = (0..n)
                .map(|k| (simplex[worst][k] - simplex[best][k]).abs())
                .fold(0.0, f64::max);
            if spread < 1e-9 {
                break;
            }
        }

        // centroid of all but worst
        let mut centroid = vec![0.0; n];
        for &i in order.iter().take(n) {
            for k in 0..n {
                centroid[k] += simplex[i][k] / n as f64;
            }
        }

        let mut reflected = vec![0.0; n];
        for k in 0..n {
            reflected[k] = centroid[k] + alpha * (centroid[k] - simplex[worst][k]);
        }
        normalize(&mut reflected);
        let fr = obj.eval(&reflected);

        if fr < values[best] {
            let mut expanded = vec![0.0; n];
            for k in 0..n {
                expanded[k] = centroid[k] + gamma * (centroid[k] - simplex[worst][k]);
            }
            normalize(&mut expanded);
            let fe = obj.eval(&expanded);
            if fe < fr {
                simplex[worst] = expanded;
                values[worst] = fe;
            } else {
                simplex[worst] = reflected;
                values[worst] = fr;
            }
        } else if fr < values[second_worst] {
            simplex[worst] = reflected;
            values[worst] = fr;
        } else {
            let mut contracted = vec![0.0; n];
            for k in 0..n {
                contracted[k] = centroid[k] + beta * (simplex[worst][k] - centroid[k]);
            }
            normalize(&mut contracted);
            let fc = obj.eval(&contracted);
            if fc < values[worst] {
                simplex[worst] = contracted;
                values[worst] = fc;
            } else {
                // shrink toward best
                let best_point = simplex[best].clone();
                for i in 0..=n {
                    if i == best {
                        continue;
                    }
                    for k in 0..n {
                        simplex[i][k] = best_point[k] + sigma * (simplex[i][k] - best_point[k]);
                    }
                    normalize(&mut simplex[i]);
                    values[i] = obj.eval(&simplex[i]);
                }
            }
        }
    }

    let mut best = 0;
    for i in 1..=n {
        if values[i] < values[best] {
            best = i;
        }
    }
    (simplex[best].clone(), values[best])
}

/// Random-restart entropy minimization. Deterministic for a given seed;
/// local minima are deduplicated projectively (fidelity > 1 − 1e-6) and
/// sorted by entropy, then by a phase-canonical key.
pub fn entropy_min_search(e: &SicEnsemble, restarts: usize, seed: u64) -> Vec<SearchMinimum> {
    assert!(restarts >= 1);
    let obj = Objective::new(e);
    let n = 2 * e.dimension();
    let mut found: Vec<SearchMinimum> = Vec::new();

    for r in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(r as u64));
        let mut start: Vec<f64> = (0..n).map(|_| standard_normal(&mut rng)).collect();
        normalize(&mut start);

        let (mut point, mut value) = nelder_mead(&obj, &start, 0.4, 2000);
        // polish with progressively smaller simplices
        for step in [0.05, 0.005, 5e-4] {
            let (p, v) = nelder_mead(&obj, &point, step, 800);
            if v < value {
                point = p;
                value = v;
            }
        }

        let state = obj.state_from(&point);
        match found
            .iter_mut()
            .find(|m| m.state.fidelity(&state) > 1.0 - 1e-6)
        {
            Some(existing) => {
                if value < existing.entropy {
                    existing.state = state;
                    existing.entropy = value;
                }
            }
            None => found.push(SearchMinimum {
                state,
                entropy: value,
            }),
        }
    }

    found.sort_by(|a, b| {
        a.entropy
            .partial_cmp(&b.entropy)
            .unwrap()
            .then_with(|| canonical_key(&a.state).cmp(&canonical_key(&b.state)))
    });
    found
}

/// Phase-fixed integer key for deterministic ordering of projective states.
fn canonical_key(state: &StateVector) -> Vec<i64> {
    let amps = state.amplitudes();
    let mut pivot = 0;
    for (i, a) in amps.iter().enumerate() {
        if a.norm_sqr() > amps[pivot].norm_sqr() + 1e-12 {
            pivot = i;
        }
    }
    let phase = amps[pivot] / amps[pivot].norm();
    amps.iter()
        .flat_map(|a| {
            let z = a * phase.conj();
            [(z.re * 1e8).round() as i64, (z.im * 1e8).round() as i64]
        })
        .collect()
}

fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    // Box–Muller
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Perturbation report for candidate local minima.
#[derive(Debug, Clone)]
pub struct LocalMinimaReport {
    pub states_checked: usize,
    pub perturbations_each: usize,
    /// smallest entropy seen at any perturbed state
    pub min_perturbed_entropy: f64,
    /// largest decrease below a candidate's own entropy (≤ 0 means none)
    pub max_entropy_drop: f64,
}

/// Perturb each candidate state `perturbations` times at scales log-uniform
/// in [1e-4, 1e-1] and record whether entropy ever drops.
pub fn verify_local_minima(
    e: &SicEnsemble,
    candidates: &[StateVector],
    perturbations: usize,
    seed: u64,
) -> LocalMinimaReport {
    let obj = Objective::new(e);
    let mut min_entropy = f64::INFINITY;
    let mut max_drop = f64::NEG_INFINITY;
    for (ci, psi) in candidates.iter().enumerate() {
        let base = obj.entropy_of(psi);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(ci as u64));
        for _ in 0..perturbations {
            let scale = 10f64.powf(rng.gen_range(-4.0..-1.0));
            let amps: Vec<Complex64> = psi
                .amplitudes()
                .iter()
                .map(|a| {
                    a + Complex64::new(
                        scale * standard_normal(&mut rng),
                        scale * standard_normal(&mut rng),
                    )
                })
                .collect();
            let perturbed = StateVector::new(amps).normalized();
            let h = obj.entropy_of(&perturbed);
            min_entropy = min_entropy.min(h);
            max_drop = max_drop.max(base - h);
        }
    }
    LocalMinimaReport {
        states_checked: candidates.len(),
        perturbations_each: perturbations,
        min_perturbed_entropy: min_entropy,
        max_entropy_drop: max_drop,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::mub_dual;
    use crate::sic::{hesse_sic_orbit, qubit_sic, SicSign};

    #[test]
    fn qubit_minimum_is_log2_3_at_antipodal_states() {
        let plus = qubit_sic(SicSign::Plus);
        let minima = entropy_min_search(&plus, 64, 0);
        let target = 3f64.log2();
        assert!(
            (minima[0].entropy - target).abs() < 1e-6,
            "minimum {} vs {}",
            minima[0].entropy,
            target
        );
        let global: Vec<&SearchMinimum> = minima
            .iter()
            .filter(|m| m.entropy < target + 1e-6)
            .collect();
        assert_eq!(global.len(), 4, "expected the 4 antipodal minimizers");
        let minus_states = qubit_sic(SicSign::Minus).states().unwrap();
        for g in &global {
            let matched = minus_states
                .iter()
                .any(|s| s.fidelity(&g.state) >= 1.0 - 1e-6);
            assert!(matched, "minimizer does not match an antipodal state");
        }
    }

    #[test]
    fn hesse_minimum_is_log2_6_at_the_mub() {
        let hesse = hesse_sic_orbit();
        let minima = entropy_min_search(&hesse, 64, 0);
        let target = 6f64.log2();
        assert!((minima[0].entropy - target).abs() < 1e-6);
        let global: Vec<&SearchMinimum> = minima
            .iter()
            .filter(|m| m.entropy < target + 1e-6)
            .collect();
        assert_eq!(global.len(), 12, "expected the 12 MUB minimizers");
        let mub = mub_dual(&hesse).unwrap();
        for g in &global {
            let matched = mub.iter().any(|m| m.state.fidelity(&g.state) >= 1.0 - 1e-6);
            assert!(matched, "minimizer does not match a MUB state");
        }
    }

    #[test]
    fn search_is_deterministic() {
        let plus = qubit_sic(SicSign::Plus);
        let a = entropy_min_search(&plus, 8, 7);
        let b = entropy_min_search(&plus, 8, 7);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.entropy.to_bits(), y.entropy.to_bits());
            for (p, q) in x.state.amplitudes().iter().zip(y.state.amplitudes()) {
                assert_eq!(p.re.to_bits(), q.re.to_bits());
                assert_eq!(p.im.to_bits(), q.im.to_bits());
            }
        }
    }

    #[test]
    fn minus_fiducial_is_a_local_minimum() {
        use crate::sic::hoggar_sic;
        let plus = hoggar_sic(SicSign::Plus);
        let minus = hoggar_sic(SicSign::Minus);
        let states = minus.states().unwrap();
        let report = verify_local_minima(&plus, &states[..2], 500, 0);
        let target = 36f64.log2();
        assert!(report.min_perturbed_entropy >= target - 1e-6);
    }
}
