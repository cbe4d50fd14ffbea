//! Property tests for the structural invariants: coordinate round trips,
//! series normalization, positivity and hermiticity of constructed matrices,
//! partial-transpose involution, and eigensolver self-consistency.

use proptest::prelude::*;

use rindler::bogoliubov::{
    min_cutoff_for_tolerance, one_particle_expansion, vacuum_expansion, SeriesKind, SqueezeParams,
};
use rindler::fock::{partial_trace_alice, partial_trace_bob, BlockDensityMatrix, SymMatrix};
use rindler::kinematics::{classify_sector, to_minkowski, to_rindler, MinkowskiEvent};
use rindler::measures::partial_transpose_alice;
use rindler::states::{helicity_bell_rho, number_bell_rho};
use rindler::StateFamily;

fn off_horizon_event() -> impl Strategy<Value = MinkowskiEvent> {
    (-10.0..10.0f64, -10.0..10.0f64)
        .prop_filter("off the horizons", |(t, x)| (t.abs() - x.abs()).abs() > 1e-3)
        .prop_map(|(t, x)| MinkowskiEvent::new(t, x))
}

fn rho_for(family: StateFamily, q: f64, n_max: usize) -> BlockDensityMatrix {
    let p = SqueezeParams::from_q(q).unwrap();
    match family {
        StateFamily::HelicityBell => helicity_bell_rho(&p, n_max),
        StateFamily::NumberBell => number_bell_rho(&p, n_max),
    }
}

fn family_strategy() -> impl Strategy<Value = StateFamily> {
    prop_oneof![
        Just(StateFamily::HelicityBell),
        Just(StateFamily::NumberBell)
    ]
}

proptest! {
    #[test]
    fn round_trip_is_identity(event in off_horizon_event()) {
        let wedge = to_rindler(&event).unwrap();
        let back = to_minkowski(&wedge).unwrap();
        let scale = 1.0_f64.max(event.t.abs()).max(event.x.abs());
        prop_assert!((back.t - event.t).abs() <= 1e-12 * scale);
        prop_assert!((back.x - event.x).abs() <= 1e-12 * scale);
    }

    #[test]
    fn wedge_map_preserves_sector(event in off_horizon_event()) {
        let wedge = to_rindler(&event).unwrap();
        prop_assert_eq!(wedge.sector, classify_sector(&event).unwrap());
    }

    #[test]
    fn expansions_normalize_with_their_tails(q in 0.0..0.97f64) {
        let p = SqueezeParams::from_q(q).unwrap();
        for kind in [SeriesKind::Vacuum, SeriesKind::OneParticle] {
            let n_max = min_cutoff_for_tolerance(&p, kind, 1e-10).unwrap();
            let series = match kind {
                SeriesKind::Vacuum => vacuum_expansion(&p, n_max),
                SeriesKind::OneParticle => one_particle_expansion(&p, n_max),
            };
            let total = series.sum_of_squares() + series.tail_bound;
            prop_assert!((total - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn density_matrices_are_hermitian_psd_normalized(
        family in family_strategy(),
        q in 0.0..0.95f64,
        n_max in 0usize..40,
    ) {
        let rho = rho_for(family, q, n_max);
        prop_assert!(rho.operator.max_asymmetry() <= 1e-14);
        prop_assert!(rho.operator.labels_are_disjoint());
        let min_eig = rho.operator.min_eigenvalue().unwrap();
        prop_assert!(min_eig >= -1e-12, "min eigenvalue {min_eig}");
        prop_assert!(rho.trace() <= 1.0 + 1e-13);
        // At the tolerance-derived cutoff the trace closes to 1.
        let p = SqueezeParams::from_q(q).unwrap();
        let tight = min_cutoff_for_tolerance(&p, SeriesKind::OneParticle, 1e-12).unwrap();
        let tight_rho = rho_for(family, q, tight);
        prop_assert!((tight_rho.trace() + tight_rho.trace_deficit - 1.0).abs() < 1e-13);
    }

    #[test]
    fn partial_transpose_is_a_trace_preserving_involution(
        family in family_strategy(),
        q in 0.01..0.95f64,
        n_max in 0usize..12,
    ) {
        let rho = rho_for(family, q, n_max);
        let pt = partial_transpose_alice(&rho);
        prop_assert!((pt.trace() - rho.trace()).abs() <= 1e-15);
        prop_assert!(pt.labels_are_disjoint());
        let wrapped = BlockDensityMatrix {
            family: rho.family,
            q: rho.q,
            n_max: rho.n_max,
            operator: pt,
            trace_deficit: rho.trace_deficit,
        };
        let back = partial_transpose_alice(&wrapped);
        prop_assert!(back.max_entrywise_diff(&rho.operator) <= 1e-15);
    }

    #[test]
    fn partial_traces_preserve_trace(
        family in family_strategy(),
        q in 0.0..0.95f64,
        n_max in 0usize..30,
    ) {
        let rho = rho_for(family, q, n_max);
        let alice = partial_trace_bob(&rho);
        let bob = partial_trace_alice(&rho);
        prop_assert!((alice.trace() - rho.trace()).abs() <= 1e-13);
        prop_assert!((bob.trace() - rho.trace()).abs() <= 1e-13);
    }

    #[test]
    fn eigensolver_reconstructs_random_symmetric_matrices(
        dim in 3usize..7,
        seed in any::<[f64; 36]>(),
    ) {
        let mut m = SymMatrix::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                let raw = seed[i * 6 + j] % 2.0;
                let value = if raw.is_finite() { raw } else { 0.0 };
                m.set(i, j, value);
            }
        }
        let eig = m.eigen_decomposition().unwrap();
        prop_assert!(eig.reconstruct().max_entry_diff(&m) <= 1e-12);
        // Descending order.
        for pair in eig.values.windows(2) {
            prop_assert!(pair[0] >= pair[1]);
        }
    }

    #[test]
    fn spectrum_is_invariant_under_rotations(
        angle in 0.0..std::f64::consts::TAU,
        a in -2.0..2.0f64,
        b in -2.0..2.0f64,
        c in -2.0..2.0f64,
        d in -2.0..2.0f64,
        e in -2.0..2.0f64,
        f in -2.0..2.0f64,
    ) {
        let m = SymMatrix::from_rows(&[
            vec![a, b, c],
            vec![b, d, e],
            vec![c, e, f],
        ]).unwrap();
        // Conjugate by a Givens rotation in the (0, 1) plane.
        let (s, co) = angle.sin_cos();
        let g = [[co, -s, 0.0], [s, co, 0.0], [0.0, 0.0, 1.0]];
        let mut rotated = SymMatrix::zeros(3);
        for i in 0..3 {
            for j in i..3 {
                let mut acc = 0.0;
                for k in 0..3 {
                    for l in 0..3 {
                        acc += g[i][k] * m.get(k, l) * g[j][l];
                    }
                }
                rotated.set(i, j, acc);
            }
        }
        let original = m.eigenvalues().unwrap();
        let conjugated = rotated.eigenvalues().unwrap();
        for (x, y) in original.iter().zip(&conjugated) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
    }
}
