mod common;

use magnon::concurrence::rho_rho_tilde_eigenvalues;
use magnon::linalg;
use magnon::tolerances::{CONCURRENCE, DEFAULT_BRUTE_FORCE_CAP, EXACT_F64};
use magnon::{
    concurrence_closed_form, concurrence_numeric, concurrence_oracle, embed_full,
    reduced_density_fast, reduced_density_oracle, MagnonLabel, OneMagnonState,
};
use proptest::prelude::*;

#[test]
fn closed_form_numeric_and_oracle_agree() {
    for n in 2..=12 {
        for label in MagnonLabel::all(n) {
            let st = OneMagnonState::from_label(n, label).unwrap();
            let full = embed_full(&st, DEFAULT_BRUTE_FORCE_CAP).unwrap();
            for j in 1..=n {
                for k in j + 1..=n {
                    let fast = reduced_density_fast(&st, j, k).unwrap();
                    let slow =
                        reduced_density_oracle(&full, j, k, DEFAULT_BRUTE_FORCE_CAP).unwrap();
                    assert!(linalg::max_abs_diff(fast.matrix(), slow.matrix()) <= EXACT_F64);

                    let closed = concurrence_closed_form(n, st.label(), j, k).unwrap();
                    let num = concurrence_numeric(&fast).unwrap();
                    let orc = concurrence_oracle(&slow).unwrap();
                    assert!(
                        (closed - num.value).abs() <= CONCURRENCE,
                        "n={n} {label:?} ({j},{k})"
                    );
                    assert!(
                        (closed - orc.value).abs() <= CONCURRENCE,
                        "n={n} {label:?} ({j},{k})"
                    );
                    assert!((2.0 * (st.at(j) * st.at(k)).abs() - num.value).abs() <= CONCURRENCE);
                }
            }
        }
    }
}

#[test]
fn random_mixed_states_agree_across_eigen_routes() {
    let mut rng = common::rng(0x5eed);
    for _ in 0..100 {
        let rho = common::random_density(&mut rng);
        let a = concurrence_numeric(&rho).unwrap();
        let b = concurrence_oracle(&rho).unwrap();
        assert!((a.value - b.value).abs() <= CONCURRENCE);
        for (x, y) in a.sqrt_eigs.iter().zip(b.sqrt_eigs) {
            assert!(
                (x - y).abs() <= CONCURRENCE,
                "{:?} vs {:?}",
                a.sqrt_eigs,
                b.sqrt_eigs
            );
        }
        assert!((0.0..=1.0).contains(&a.value));
    }
}

#[test]
fn random_pure_states_have_rank_one_products() {
    // ρ = |ψ⟩⟨ψ| makes ρ·ρ̃ rank one with C = |⟨ψ|σy⊗σy|ψ*⟩|.
    let mut rng = common::rng(7);
    for _ in 0..50 {
        let mixed = common::random_density(&mut rng);
        let eig = linalg::hermitian_eigen(mixed.matrix());
        let psi: Vec<_> = (0..4).map(|i| eig.vectors[i][0]).collect();
        let mut m = linalg::zeros::<4>();
        for i in 0..4 {
            for j in 0..4 {
                m[i][j] = psi[i] * psi[j].conj();
            }
        }
        let rho = magnon::TwoQubitDensity::new((1, 2), linalg::hermitize(&m)).unwrap();
        let expected = (2.0 * (psi[0] * psi[3] - psi[1] * psi[2])).norm();
        let mut r = rho_rho_tilde_eigenvalues(&rho).unwrap();
        r.sort_by(|a, b| b.total_cmp(a));
        assert!(r[1..].iter().all(|&x| x.abs() < 1e-12), "{r:?}");
        assert!((concurrence_numeric(&rho).unwrap().value - expected).abs() <= CONCURRENCE);
        assert!((concurrence_oracle(&rho).unwrap().value - expected).abs() <= CONCURRENCE);
    }
}

#[test]
fn local_unitaries_leave_concurrence_unchanged() {
    let mut rng = common::rng(42);
    for _ in 0..100 {
        let rho = common::random_density(&mut rng);
        let u = common::random_unitary(&mut rng);
        let v = common::random_unitary(&mut rng);
        let rotated = common::local_rotate(&rho, &u, &v);
        let before = concurrence_numeric(&rho).unwrap().value;
        let after = concurrence_numeric(&rotated).unwrap().value;
        assert!((before - after).abs() <= CONCURRENCE);
    }
}

#[test]
fn local_unitaries_on_magnon_pairs() {
    let mut rng = common::rng(3);
    let st = OneMagnonState::from_label(6, MagnonLabel::SecondRow(4)).unwrap();
    for (j, k) in [(1, 2), (2, 4), (4, 5)] {
        let rho = reduced_density_fast(&st, j, k).unwrap();
        let base = concurrence_numeric(&rho).unwrap().value;
        for _ in 0..20 {
            let rot = common::local_rotate(
                &rho,
                &common::random_unitary(&mut rng),
                &common::random_unitary(&mut rng),
            );
            let nr = concurrence_numeric(&rot).unwrap();
            assert!(
                (nr.value - base).abs() <= CONCURRENCE,
                "{j},{k}: {base} vs {:?}",
                nr
            );
            assert!((concurrence_oracle(&rot).unwrap().value - base).abs() <= CONCURRENCE);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigen_routes_agree(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let rho = common::random_density(&mut rng);
        let a = concurrence_numeric(&rho).unwrap().value;
        let b = concurrence_oracle(&rho).unwrap().value;
        prop_assert!((a - b).abs() <= CONCURRENCE);
    }
}
