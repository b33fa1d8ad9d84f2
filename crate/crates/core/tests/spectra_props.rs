use proptest::prelude::*;
use qesosc_core::deformed::*;
use qesosc_core::potential::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

proptest! {
    #[test]
    fn undeformed_limits(n in 0u32..40, omega in 0.1f64..10.0) {
        let exact = omega * (n as f64 + 0.5);
        for tau in [1e-9, 1e-13, 0.0] {
            prop_assert!(rel(spectrum_q_real(n, tau, omega), exact) <= 1e-6);
            prop_assert!(rel(spectrum_q_phase(n, tau, omega), exact) <= 1e-6);
        }
        for q in [1.0 + 1e-9, 1.0 - 1e-9, 1.0 + 1e-13, 1.0] {
            prop_assert!(rel(spectrum_big_q(n, q, omega), exact) <= 1e-6);
        }
        let p = Suq11Params::new(1.0, 0.0, 2 * n + 7, 0.0).unwrap();
        prop_assert_eq!(spectrum_suq11(n, &p), spectrum_pt_limit(n, 1.0, 2 * n + 7, 0.0));
    }

    #[test]
    fn q_numbers_odd_and_inversion_symmetric(x in -20.0f64..20.0, tau in 1e-3f64..1.5) {
        for f in [q_number_real, q_number_phase] {
            let v = f(x, tau);
            prop_assert!((f(-x, tau) + v).abs() <= 1e-14 * v.abs().max(1.0));
            prop_assert!((f(x, -tau) - v).abs() <= 1e-14 * v.abs().max(1.0));
        }
    }

    #[test]
    fn bracket_sum_matches_closed_spectrum(n in 0u32..60, tau in 1e-4f64..1.0, omega in 0.1f64..5.0) {
        let nf = n as f64;
        for d in [DeformationParam::q_real(tau, omega).unwrap(), DeformationParam::q_phase(tau, omega).unwrap()] {
            let sum = 0.5 * omega * (q_number(nf, &d).unwrap() + q_number(nf + 1.0, &d).unwrap());
            prop_assert!(rel(sum, d.level(n)) <= 1e-11);
        }
    }

    #[test]
    fn suq11_reflection_symmetry(tau in 1e-4f64..0.05, a in 0.01f64..2.0, n_cap in 2u32..400, e0 in -100.0f64..100.0) {
        let p = Suq11Params::new(a, tau, n_cap, e0).unwrap();
        for n in 0..n_cap {
            let (e, mirror) = (p.level(n), p.level(n_cap - 1 - n));
            prop_assert!((e - mirror).abs() <= 1e-9 * e.abs().max(1.0));
        }
    }

    #[test]
    fn q_real_increasing_and_convex(tau in 1e-3f64..2.0, omega in 0.1f64..5.0) {
        let e: Vec<f64> = (0..40).map(|n| spectrum_q_real(n, tau, omega)).collect();
        for w in e.windows(3) {
            prop_assert!(w[1] > w[0]);
            prop_assert!(w[2] - w[1] > w[1] - w[0]);
        }
    }

    #[test]
    fn q_phase_increasing_in_squeezed_regime(tau in 1e-3f64..0.7, omega in 0.1f64..5.0) {
        let mut n = 0u32;
        while tau * (n as f64 + 1.0) < core::f64::consts::FRAC_PI_2 {
            prop_assert!(spectrum_q_phase(n + 1, tau, omega) > spectrum_q_phase(n, tau, omega)
                || tau * (n as f64 + 1.5) >= core::f64::consts::FRAC_PI_2);
            n += 1;
        }
    }

    #[test]
    fn wkb_potentials_are_even(x in -3.0f64..3.0, tau in 1e-2f64..1.0, omega in 0.2f64..4.0) {
        let pots = [
            wkb_q_phase(omega, tau, 12).unwrap(),
            wkb_q_real(omega, tau, 12).unwrap(),
            wkb_big_q(omega, 1.0 + tau, 10).unwrap(),
            pt_taylor(0.3, 7, 1.0, 8).unwrap(),
        ];
        for p in &pots {
            prop_assert_eq!(p.evaluate(x), p.evaluate(-x));
        }
    }

    #[test]
    fn wkb_q_real_is_monotone(tau in 1e-2f64..1.5, omega in 0.2f64..4.0, order in prop::sample::select(vec![2u32, 4, 6, 8, 10, 12])) {
        let p = wkb_q_real(omega, tau, order).unwrap();
        let mut prev = p.evaluate(0.0);
        for i in 1..200 {
            let v = p.evaluate(i as f64 * 0.05);
            prop_assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn suq11_quartic_sign_tracks_cos_n_tau(n_cap in 3u32..600, frac in 0.01f64..0.99) {
        let tau = frac * core::f64::consts::PI / n_cap as f64;
        let cos_nt = (n_cap as f64 * tau).cos();
        prop_assume!(cos_nt.abs() > 1e-6);
        let p = Suq11Params::new(0.5, tau, n_cap, 0.0).unwrap();
        let c4 = wkb_suq11(&p, 6).unwrap().coeff(4);
        prop_assert_eq!(c4 > 0.0, cos_nt < 0.0);
    }
}
