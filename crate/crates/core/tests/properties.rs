//! Property tests for the algebraic invariants: exact ring laws in Q(√5),
//! tensor associativity, Hilbert–Schmidt positivity, representation round
//! trips, and parser totality.

use num_complex::Complex64;
use proptest::prelude::*;

use sporadic_core::golden::GoldenScalar;
use sporadic_core::linalg::{hs_inner, tensor, ComplexMatrix, StateVector};
use sporadic_core::pauli::PauliLabel;
use sporadic_core::prob::{n_eff, reconstruct, represent, ProbabilityVector};
use sporadic_core::sic::{hesse_sic_orbit, SicEnsemble};

fn golden(a_num: i32, a_den: i32, b_num: i32, b_den: i32) -> GoldenScalar {
    GoldenScalar::from_ratio(a_num as i64, a_den as i64)
        + GoldenScalar::from_ratio(b_num as i64, b_den as i64) * GoldenScalar::sqrt5()
}

fn golden_strategy() -> impl Strategy<Value = GoldenScalar> {
    (-20i32..=20, 1i32..=6, -20i32..=20, 1i32..=6)
        .prop_map(|(an, ad, bn, bd)| golden(an, ad, bn, bd))
}

proptest! {
    #[test]
    fn golden_ring_laws(x in golden_strategy(), y in golden_strategy(), z in golden_strategy()) {
        // distributivity and commutativity, exactly
        let left = x.clone() * (y.clone() + z.clone());
        let right = x.clone() * y.clone() + x.clone() * z.clone();
        prop_assert_eq!(left, right);
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!(x.clone() + y.clone(), y + x.clone());
        prop_assert_eq!(x.clone() - x, GoldenScalar::zero());
    }

    #[test]
    fn golden_inverse_law(x in golden_strategy()) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(x.clone() * x.inverse(), GoldenScalar::one());
    }

    #[test]
    fn golden_signum_matches_float(x in golden_strategy()) {
        let f = x.to_f64();
        prop_assume!(f.abs() > 1e-9);
        prop_assert_eq!(x.signum(), if f > 0.0 { 1 } else { -1 });
    }
}

fn small_matrix() -> impl Strategy<Value = ComplexMatrix> {
    proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 4).prop_map(|entries| {
        ComplexMatrix::from_entries(
            2,
            2,
            entries
                .into_iter()
                .map(|(re, im)| Complex64::new(re, im))
                .collect(),
        )
    })
}

fn hermitian_matrix() -> impl Strategy<Value = ComplexMatrix> {
    small_matrix().prop_map(|m| {
        // A + A† is Hermitian
        m.add(&m.dagger())
    })
}

proptest! {
    #[test]
    fn tensor_is_associative(a in small_matrix(), b in small_matrix(), c in small_matrix()) {
        let left = tensor(&tensor(&a, &b), &c);
        let right = tensor(&a, &tensor(&b, &c));
        prop_assert!(left.approx_eq(&right, 1e-14));
    }

    #[test]
    fn hs_self_inner_is_nonnegative_real(a in hermitian_matrix()) {
        let v = hs_inner(&a, &a).unwrap();
        prop_assert!(v.im.abs() < 1e-12);
        prop_assert!(v.re >= -1e-12);
    }

    #[test]
    fn eigenvalue_sum_is_trace(a in hermitian_matrix()) {
        let vals = a.hermitian_eigenvalues(1e-10).unwrap();
        let sum: f64 = vals.iter().sum();
        prop_assert!((sum - a.trace().re).abs() < 1e-10);
    }
}

fn random_state(d: usize) -> impl Strategy<Value = StateVector> {
    proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), d).prop_filter_map(
        "nonzero state",
        |amps| {
            let v: Vec<Complex64> = amps
                .into_iter()
                .map(|(re, im)| Complex64::new(re, im))
                .collect();
            let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            (norm > 1e-3).then(|| StateVector::new(v).normalized())
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn represent_reconstruct_round_trip(psi in random_state(3)) {
        let hesse = hesse_sic_orbit();
        let rho = psi.projector();
        let p = represent(&hesse, &rho).unwrap();
        let back = reconstruct(&hesse, &p).unwrap();
        prop_assert!(back.sub(&rho).max_abs() < 1e-10);
        // pure states hit N_eff = 6 and never beat the zero bound
        prop_assert!((n_eff(&p).unwrap() - 6.0).abs() < 1e-8);
        let zeros = sporadic_core::prob::count_zeros(&p, 1e-9);
        prop_assert!(zeros <= sporadic_core::prob::max_zero_bound(3, sporadic_core::prob::Field::Complex));
    }

    #[test]
    fn ensemble_json_round_trip(states in proptest::collection::vec(random_state(2), 4)) {
        // arbitrary rank-1 entries survive write-then-read bit-exactly
        let e = SicEnsemble::new(2, states.iter().map(StateVector::projector).collect(), "random");
        let back = SicEnsemble::from_json(&e.to_json()).unwrap();
        for (p, q) in e.projectors().iter().zip(back.projectors()) {
            for (a, b) in p.entries().iter().zip(q.entries()) {
                prop_assert_eq!(a.re.to_bits(), b.re.to_bits());
                prop_assert_eq!(a.im.to_bits(), b.im.to_bits());
            }
        }
    }
}

proptest! {
    #[test]
    fn pauli_label_parse_display_round_trip(idx in 0u8..64) {
        let label = PauliLabel::from_index(idx);
        let text = label.to_string();
        prop_assert_eq!(text.len(), 6);
        prop_assert_eq!(text.parse::<PauliLabel>().unwrap(), label);
    }

    #[test]
    fn pauli_label_parser_never_panics(s in "\\PC*") {
        let _ = s.parse::<PauliLabel>();
    }

    #[test]
    fn ensemble_decoder_never_panics(s in "\\PC*") {
        let _ = SicEnsemble::from_json(&s);
    }

    #[test]
    fn probability_vector_validation(v in proptest::collection::vec(0.0f64..1.0, 1..16)) {
        let sum: f64 = v.iter().sum();
        prop_assume!(sum > 1e-6);
        let normalized: Vec<f64> = v.iter().map(|x| x / sum).collect();
        let p = ProbabilityVector::new(normalized).unwrap();
        // entropy is within [0, log₂ n]
        let h = sporadic_core::prob::shannon_entropy(&p);
        prop_assert!(h >= -1e-12);
        prop_assert!(h <= (p.len() as f64).log2() + 1e-12);
    }
}

#[test]
fn values_are_shareable_across_threads() {
    // everything is immutable after construction; concurrent verification
    // only needs Send + Sync
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<ComplexMatrix>();
    assert_send_sync::<StateVector>();
    assert_send_sync::<GoldenScalar>();
    assert_send_sync::<SicEnsemble>();
    assert_send_sync::<ProbabilityVector>();
    assert_send_sync::<sporadic_core::cert::Certificate>();

    // and a SIC verification actually runs from several threads at once
    let hesse = std::sync::Arc::new(hesse_sic_orbit());
    let handles: Vec<_> = (0..4)
        .map(|_| {
            let e = hesse.clone();
            std::thread::spawn(move || sporadic_core::sic::verify_sic(&e, 1e-10).overall)
        })
        .collect();
    for h in handles {
        assert!(h.join().unwrap());
    }
}

#[test]
fn search_results_are_projectively_deduplicated() {
    // distinct reported minima are genuinely distinct lines, and the list
    // is sorted by entropy
    use sporadic_core::search::entropy_min_search;
    use sporadic_core::sic::{qubit_sic, SicSign};
    let minima = entropy_min_search(&qubit_sic(SicSign::Plus), 16, 3);
    for w in minima.windows(2) {
        assert!(w[0].entropy <= w[1].entropy);
    }
    for i in 0..minima.len() {
        for j in (i + 1)..minima.len() {
            assert!(
                minima[i].state.fidelity(&minima[j].state) <= 1.0 - 1e-6,
                "minima {} and {} are the same projective state",
                i,
                j
            );
        }
    }
}
