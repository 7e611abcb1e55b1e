use std::f64::consts::LN_2;

use p2gle::pressure::xi0;
use p2gle::spectrum::{
    khintchine_spectrum, linspace, solve_system, spectrum_curve, SolverConfig,
};
use p2gle::{Method, PotentialKind, SpectrumCurve};

fn curve(kind: PotentialKind, lo: f64, hi: f64, steps: usize) -> SpectrumCurve {
    spectrum_curve(kind, lo, hi, steps, &SolverConfig::default()).unwrap()
}

fn argmax_t(c: &SpectrumCurve) -> usize {
    (0..c.rows.len()).max_by(|&a, &b| c.rows[a].t.total_cmp(&c.rows[b].t)).unwrap()
}

#[test]
fn khintchine_curve_peaks_at_two() {
    let c = curve(PotentialKind::Khintchine, 1.1, 50.0, 200);
    let nearest = (0..200)
        .min_by(|&a, &b| (c.rows[a].xi - 2.0).abs().total_cmp(&(c.rows[b].xi - 2.0).abs()))
        .unwrap();
    assert_eq!(argmax_t(&c), nearest);
    assert!(c.rows.windows(2).all(|w| w[0].xi < w[1].xi));
}

#[test]
fn khintchine_derivative_signs() {
    for xi in [1.01, 1.3, 1.9] {
        assert!(khintchine_spectrum(xi).unwrap().t_prime > 0.0);
    }
    assert!(khintchine_spectrum(2.0).unwrap().t_prime.abs() < 1e-12);
    for xi in [2.1, 5.0, 40.0] {
        assert!(khintchine_spectrum(xi).unwrap().t_prime < 0.0);
    }
}

#[test]
fn newton_matches_closed_form_on_fifty_points() {
    for xi in linspace(1.05, 50.0, 50) {
        let s = solve_system(PotentialKind::Khintchine, xi, None).unwrap();
        let c = khintchine_spectrum(xi).unwrap();
        assert!((s.t - c.t).abs() < 1e-9, "xi = {xi}");
        assert!(s.residual_p.abs() < 1e-12 && s.residual_dpdq.abs() < 1e-12);
    }
}

#[test]
fn lyapunov_curve_peaks_at_two_log_two() {
    let c = curve(PotentialKind::Lyapunov, 0.75, 30.0, 200);
    let best = argmax_t(&c);
    let nearest = (0..200)
        .min_by(|&a, &b| (c.rows[a].xi - 2.0 * LN_2).abs().total_cmp(&(c.rows[b].xi - 2.0 * LN_2).abs()))
        .unwrap();
    assert_eq!(best, nearest);
}

#[test]
fn logdigit_curve_shape() {
    let c = curve(PotentialKind::LogDigit, 0.05, 20.0, 200);
    let x0 = xi0();
    for r in &c.rows {
        assert_eq!(r.method, Method::Newton);
        assert!(r.residual_p.abs() < 1e-12 && r.residual_dpdq.abs() < 1e-12, "xi = {}", r.xi);
        assert!(r.t > 0.0 && r.t <= 1.0);
    }
    for w in c.rows.windows(2) {
        if w[1].xi < x0 {
            assert!(w[1].t > w[0].t, "increasing before xi0 at {}", w[1].xi);
        } else if w[0].xi > x0 {
            assert!(w[1].t < w[0].t, "decreasing after xi0 at {}", w[1].xi);
        }
        assert!((w[0].t_prime > 0.0) == (w[0].xi < x0));
    }
}

#[test]
fn logdigit_curvature_changes_sign_after_xi0() {
    // concave at xi0, convex somewhere beyond it
    let h = 1e-3;
    let t = |xi: f64| solve_system(PotentialKind::LogDigit, xi, None).unwrap().t;
    let second = |xi: f64| (t(xi + h) - 2.0 * t(xi) + t(xi - h)) / (h * h);
    let x0 = xi0();
    assert!(second(x0) < 0.0);
    let grid = linspace(x0 + 0.5, 20.0, 60);
    assert!(grid.iter().any(|&xi| second(xi) > 0.0));
}

#[test]
fn t_prime_matches_difference_quotients() {
    for kind in [PotentialKind::LogDigit, PotentialKind::ExpDigit] {
        let h = 1e-5;
        for xi in [0.4, 1.3, 3.3] {
            let xi = if kind == PotentialKind::ExpDigit { xi + 2.0 } else { xi };
            let t = |x: f64| solve_system(kind, x, None).unwrap().t;
            let fd = (t(xi + h) - t(xi - h)) / (2.0 * h);
            let tp = solve_system(kind, xi, None).unwrap().t_prime;
            assert!(((fd - tp) / tp).abs() < 1e-4, "{kind} at {xi}: {fd} vs {tp}");
        }
    }
}

#[test]
fn expdigit_curve_rises_to_one() {
    let c = curve(PotentialKind::ExpDigit, 2.05, 500.0, 200);
    for w in c.rows.windows(2) {
        // 1 − t drops below f64 resolution past xi ≈ 50, where t rounds to 1
        if w[1].t < 1.0 {
            assert!(w[1].t > w[0].t, "at {}", w[1].xi);
        } else {
            assert!(w[1].t >= w[0].t);
        }
        assert!(w[1].q > w[0].q && w[1].q < 0.0);
    }
    let last = c.rows.last().unwrap();
    assert!(last.t > 0.999 && last.q > -1e-100);
    assert!(c.rows.iter().all(|r| r.residual_p.abs() < 1e-12 && r.residual_dpdq.abs() < 1e-12));
}

#[test]
fn solutions_do_not_depend_on_the_path() {
    let cfg = SolverConfig::default();
    let direct = solve_system(PotentialKind::ExpDigit, 7.0, None).unwrap();
    let c = spectrum_curve(PotentialKind::ExpDigit, 3.0, 7.0, 9, &cfg).unwrap();
    let swept = c.rows.last().unwrap();
    assert!((direct.t - swept.t).abs() < 1e-12);
    assert!((direct.q - swept.q).abs() < 1e-12 * direct.q.abs().max(1e-3));
}

#[test]
fn non_convergence_is_reported_with_xi() {
    let cfg = SolverConfig {
        max_iter: 1,
        ..SolverConfig::default()
    };
    let err = spectrum_curve(PotentialKind::ExpDigit, 100.0, 200.0, 3, &cfg).unwrap_err();
    match err {
        p2gle::Error::NonConvergence { xi, .. } => assert_eq!(xi, 100.0),
        other => panic!("unexpected {other:?}"),
    }
}
