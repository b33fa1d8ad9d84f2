use proptest::prelude::*;
use qesosc_core::matcher::*;
use qesosc_core::nogo::*;
use qesosc_core::qes::*;
use qesosc_core::Parity;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn n1_matches_closed_form(b in -20.0f64..20.0) {
        let p = QespParams::unit(b, 1, Parity::Even).unwrap();
        let levels = qes_levels(&p).unwrap().energies();
        let (lo, hi) = qes_levels_n1_closed(b);
        for (e, c) in levels.iter().zip([lo, hi]) {
            prop_assert!((e - c).abs() <= 1e-9 * c.abs().max(1.0), "b={} {} vs {}", b, e, c);
        }
    }

    #[test]
    fn n3_matches_quartic_roots(b in -20.0f64..25.0) {
        let p = QespParams::unit(b, 3, Parity::Even).unwrap();
        let levels = qes_levels(&p).unwrap().energies();
        if let Ok(roots) = qes_char_poly_n3_roots(b) {
            for (e, c) in levels.iter().zip(roots) {
                prop_assert!((e - c).abs() <= 1e-8 * c.abs().max(1.0), "b={} {} vs {}", b, e, c);
            }
        }
    }

    #[test]
    fn levels_continuous_in_b(b in -15.0f64..15.0, n in 0u32..8, odd in any::<bool>()) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let at = |b: f64| qes_levels(&QespParams::unit(b, n, parity).unwrap()).unwrap().energies();
        let (e0, e1) = (at(b), at(b + 1e-6));
        for w in e0.windows(2) {
            prop_assert!(w[1] > w[0]);
        }
        for (x, y) in e0.iter().zip(&e1) {
            prop_assert!((x - y).abs() < 1e-3);
        }
    }

    #[test]
    fn matching_round_trip(n in 0u32..10, odd in any::<bool>(), n_cap in 3u32..1000, neg in any::<bool>()) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        let branch = if neg { Branch::BNegative } else { Branch::BPositive };
        let s = solve_match_at(n, parity, branch, n_cap, 0).unwrap();
        prop_assert!(s.residuals.max() <= 1e-6);
        prop_assert!(feasibility_window(branch, 0).contains(s.n_tau()));
        prop_assert!(s.amplitude > 0.0);
        prop_assert_eq!(s.b > 0.0, branch == Branch::BPositive);
        prop_assert_eq!(s.qesp().n, n);
        prop_assert_eq!(s.qesp().parity, parity);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn q_phase_never_feasible(omega in 1e-3f64..100.0, tau in 1e-6f64..(core::f64::consts::PI - 1e-6)) {
        let v = check_q_phase(omega, tau).unwrap();
        prop_assert!(!v.feasible && !v.violated_constraint.is_empty());
        prop_assert!(v.value("8a^2").unwrap() < 0.0);
    }

    #[test]
    fn q_real_never_feasible(omega in 1e-3f64..100.0, tau in 1e-6f64..20.0) {
        let v = check_q_real(omega, tau).unwrap();
        prop_assert!(!v.feasible && !v.violated_constraint.is_empty());
        prop_assert!(v.value("2k+3").unwrap() < 0.0);
    }

    #[test]
    fn big_q_never_feasible(omega in 1e-3f64..100.0, ln_q in -5.0f64..5.0) {
        prop_assume!(ln_q.abs() > 1e-6);
        let v = check_big_q(omega, ln_q.exp()).unwrap();
        prop_assert!(!v.feasible && !v.violated_constraint.is_empty());
    }

    #[test]
    fn pt_never_feasible(amplitude in 1e-4f64..1e3) {
        let v = check_pt(amplitude).unwrap();
        prop_assert!(!v.feasible);
        let expected = -(18.0 / 17.0) * (5.0f64 / 17.0).sqrt();
        prop_assert!((v.value("2k+3").unwrap() - expected).abs() <= 1e-12);
    }
}

#[test]
fn q_phase_sign_on_grid() {
    for i in 1..1000 {
        let tau = core::f64::consts::PI * i as f64 / 1000.0;
        assert!(q_phase_required_a_squared_times_8(1.0, tau) < 0.0);
    }
}

#[test]
fn published_levels_at_published_b() {
    let cases: [(f64, u32, &[f64]); 4] = [
        (12.589097, 1, &[12.4307, 63.1039]),
        (18.469158, 3, &[18.1429, 91.3783, 165.913, 241.703]),
        (
            21.275801,
            9,
            &[
                20.4153, 102.682, 186.138, 270.749, 356.485, 443.317, 531.218, 620.165, 710.133,
                801.101,
            ],
        ),
        (-12.108743, 1, &[-60.7083, -11.9441]),
    ];
    for (b, n, expected) in cases {
        let e = qes_levels(&QespParams::unit(b, n, Parity::Even).unwrap())
            .unwrap()
            .energies();
        assert_eq!(e.len(), expected.len());
        for (x, y) in e.iter().zip(expected) {
            assert!((x - y).abs() < 1e-2, "b={b}: {x} vs {y}");
        }
    }
}
