//! Dimension spectra `ξ ↦ t(ξ)` of the level sets of Birkhoff averages.
//!
//! For every potential the dimension is the `t` solving
//!
//! ```text
//! P(t, q) = q·ξ,    ∂P/∂q(t, q) = ξ
//! ```
//!
//! The Khintchine and Lyapunov systems have closed-form solutions. The
//! log-digit and exp-digit systems are solved by damped Newton iteration,
//! in coordinates adapted to each potential:
//!
//! - log-digit runs in `(log t, q)`, since `t(ξ)` becomes tiny for large `ξ`;
//! - exp-digit runs in `(t, log(−q))`, since `q(ξ)` tends to 0 from below
//!   extremely fast and must never cross into `q > 0`.
//!
//! If Newton from the default start fails, the solve is continued from a
//! known solution (an anchor) in small steps of `log(ξ − ξ_min)`.

use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::PotentialKind;
use crate::pressure::{evaluate, in_domain, pressure_khintchine, xi0, PressureEval, PressurePoint};

/// How a solution was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Newton,
    /// Stored dimension at a level where the system has no solution.
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSolution {
    pub xi: f64,
    pub t: f64,
    pub q: f64,
    pub t_prime: f64,
    #[serde(rename = "residual_P")]
    pub residual_p: f64,
    #[serde(rename = "residual_dPdq")]
    pub residual_dpdq: f64,
    pub iterations: usize,
    pub method: Method,
}

impl SpectrumSolution {
    pub fn point(&self, kind: PotentialKind) -> PressurePoint {
        PressurePoint::new(kind, self.t, self.q)
    }

    fn boundary(xi: f64, t: f64, q: f64, t_prime: f64) -> Self {
        SpectrumSolution {
            xi,
            t,
            q,
            t_prime,
            residual_p: 0.0,
            residual_dpdq: 0.0,
            iterations: 0,
            method: Method::Boundary,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Target for `max(|P − qξ|, |∂P/∂q − ξ|)`.
    pub tol: f64,
    pub max_iter: usize,
    pub max_halvings: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: 1e-12,
            max_iter: 100,
            max_halvings: 60,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumCurve {
    pub kind: PotentialKind,
    pub rows: Vec<SpectrumSolution>,
}

fn residuals(e: &PressureEval, xi: f64, q: f64) -> (f64, f64) {
    (e.value - q * xi, e.dp_dq - xi)
}

// ---------------------------------------------------------------------------
// closed forms

/// `t(ξ)`, `q(ξ)` and `t′(ξ)` for the Khintchine spectrum, `ξ ≥ 1`.
pub fn khintchine_spectrum(xi: f64) -> Result<SpectrumSolution> {
    if xi.is_nan() || xi < 1.0 {
        return Err(Error::Domain(format!("Khintchine spectrum needs xi >= 1, got {xi}")));
    }
    if xi == 1.0 {
        return Ok(SpectrumSolution::boundary(xi, 0.0, f64::NEG_INFINITY, f64::INFINITY));
    }
    if xi.is_infinite() {
        return Ok(SpectrumSolution::boundary(xi, 0.0, 0.0, 0.0));
    }
    let q = (xi - 1.0).ln() / xi;
    // log ξ − log(ξ − 1) = −log(1 − 1/ξ)
    let t = (q - (-1.0 / xi).ln_1p()) / LN_2;
    // + 0.0 turns the −0 at ξ = 2 into 0
    let t_prime = -q / (xi * LN_2) + 0.0;
    let (residual_p, residual_dpdq) = match pressure_khintchine(t, q) {
        Ok(e) => residuals(&e, xi, q),
        Err(_) => (f64::NAN, f64::NAN),
    };
    Ok(SpectrumSolution {
        xi,
        t,
        q,
        t_prime,
        residual_p,
        residual_dpdq,
        iterations: 0,
        method: Method::ClosedForm,
    })
}

/// `t″(ξ) = (2(ξ−1)·log(ξ−1) − ξ) / (ξ³(ξ−1)·log 2)`.
pub fn khintchine_second_derivative(xi: f64) -> Result<f64> {
    if xi.is_nan() || xi <= 1.0 {
        return Err(Error::Domain(format!("t'' needs xi > 1, got {xi}")));
    }
    Ok(inflection_function(xi) / (xi.powi(3) * (xi - 1.0) * LN_2))
}

/// Numerator of `t″`; its unique root is the inflection point.
pub fn inflection_function(xi: f64) -> f64 {
    2.0 * (xi - 1.0) * (xi - 1.0).ln() - xi
}

/// The inflection point `ξ̃ ∈ (3, 1 + e)` of the Khintchine spectrum, by
/// bisection on [`inflection_function`].
pub fn khintchine_inflection() -> f64 {
    let (mut lo, mut hi) = (3.0, 1.0 + std::f64::consts::E);
    let mut f_lo = inflection_function(lo);
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return if inflection_function(lo).abs() < inflection_function(hi).abs() {
                lo
            } else {
                hi
            };
        }
        let f_mid = inflection_function(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
}

/// Number of sign changes of `t″` on `points` equally spaced samples of
/// `[lo, hi]`, with `1 < lo < hi`.
pub fn second_derivative_sign_changes(lo: f64, hi: f64, points: usize) -> Result<usize> {
    if points < 2 || lo.partial_cmp(&hi) != Some(std::cmp::Ordering::Less) {
        return Err(Error::Domain(format!(
            "sign scan needs lo < hi and at least 2 points, got [{lo}, {hi}] with {points}"
        )));
    }
    let mut changes = 0;
    let mut prev: Option<bool> = None;
    for i in 0..points {
        let xi = lo + (hi - lo) * i as f64 / (points - 1) as f64;
        let v = khintchine_second_derivative(xi)?;
        if v == 0.0 {
            continue;
        }
        let neg = v < 0.0;
        if prev.is_some_and(|p| p != neg) {
            changes += 1;
        }
        prev = Some(neg);
    }
    Ok(changes)
}

/// Lyapunov spectrum at `β ≥ log 2`; the parameter `q` is for the potential
/// `n·log 2`, so `q_Lyapunov = q_Khintchine / log 2`.
pub fn lyapunov_spectrum(beta: f64) -> Result<SpectrumSolution> {
    if beta.is_nan() || beta < LN_2 {
        return Err(Error::Domain(format!(
            "Lyapunov spectrum needs beta >= log 2, got {beta}"
        )));
    }
    if beta == LN_2 {
        return Ok(SpectrumSolution::boundary(beta, 0.0, f64::NEG_INFINITY, f64::INFINITY));
    }
    let xi = beta / LN_2;
    let k = khintchine_spectrum(xi)?;
    let t = (xi - 1.0).ln() / beta - (-LN_2 / beta).ln_1p() / LN_2;
    let q = k.q / LN_2;
    let (residual_p, residual_dpdq) = match crate::pressure::pressure_lyapunov(t, q) {
        Ok(e) => residuals(&e, beta, q),
        Err(_) => (f64::NAN, f64::NAN),
    };
    Ok(SpectrumSolution {
        xi: beta,
        t,
        q,
        t_prime: k.t_prime / LN_2,
        residual_p,
        residual_dpdq,
        iterations: 0,
        method: Method::ClosedForm,
    })
}

/// Dimension of the extreme level set at the lower end of the range:
/// `E(1)` (Khintchine), `F(log 2)` (Lyapunov), `E(0)` (log-digit), `E(2)`
/// (exp-digit). All are zero.
pub fn boundary_dimension(kind: PotentialKind) -> f64 {
    match kind {
        PotentialKind::Khintchine
        | PotentialKind::Lyapunov
        | PotentialKind::LogDigit
        | PotentialKind::ExpDigit => 0.0,
    }
}

/// Dimension of the level set `ξ = ∞`, where it is known: the exp-digit
/// spectrum tends to (and attains) 1.
pub fn dimension_at_infinity(kind: PotentialKind) -> Option<f64> {
    match kind {
        PotentialKind::ExpDigit => Some(1.0),
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Newton

/// Solver coordinates `(a, b)` and their map to `(t, q)`.
#[derive(Debug, Clone, Copy)]
enum Chart {
    Plain,
    LogT,
    LogNegQ,
}

impl Chart {
    fn for_kind(kind: PotentialKind) -> Self {
        match kind {
            PotentialKind::LogDigit => Chart::LogT,
            PotentialKind::ExpDigit => Chart::LogNegQ,
            PotentialKind::Khintchine | PotentialKind::Lyapunov => Chart::Plain,
        }
    }

    fn to_tq(self, a: f64, b: f64) -> (f64, f64) {
        match self {
            Chart::Plain => (a, b),
            Chart::LogT => (a.exp(), b),
            Chart::LogNegQ => (a, -b.exp()),
        }
    }

    fn coords(self, t: f64, q: f64) -> Option<(f64, f64)> {
        let ab = match self {
            Chart::Plain => (t, q),
            Chart::LogT => (t.ln(), q),
            Chart::LogNegQ => (t, (-q).ln()),
        };
        (ab.0.is_finite() && ab.1.is_finite()).then_some(ab)
    }

    /// `(dt/da, dq/db)`
    fn scales(self, t: f64, q: f64) -> (f64, f64) {
        match self {
            Chart::Plain => (1.0, 1.0),
            Chart::LogT => (t, 1.0),
            Chart::LogNegQ => (1.0, q),
        }
    }
}

/// Smallest admissible `ξ` for the Newton system (exclusive).
fn xi_lower(kind: PotentialKind) -> f64 {
    kind.xi_lower_bound()
}

fn check_admissible(kind: PotentialKind, xi: f64) -> Result<()> {
    if xi.is_finite() && xi > xi_lower(kind) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{kind} system needs finite xi > {}, got {xi}",
            xi_lower(kind)
        )))
    }
}

/// Default Newton start for each potential.
fn default_start(kind: PotentialKind, xi: f64) -> (f64, f64) {
    match kind {
        PotentialKind::Khintchine => khintchine_spectrum(xi).map(|s| (s.t, s.q)).unwrap_or((0.5, -1.0)),
        PotentialKind::Lyapunov => lyapunov_spectrum(xi).map(|s| (s.t, s.q)).unwrap_or((0.5, -1.0)),
        PotentialKind::LogDigit => (1.0, 0.0),
        PotentialKind::ExpDigit => (0.5, -1.0),
    }
}

/// A point on the spectrum from which continuation can start, with a start
/// for Newton close to it.
fn anchor(kind: PotentialKind) -> (f64, (f64, f64)) {
    match kind {
        PotentialKind::LogDigit => (xi0(), (1.0, 0.0)),
        PotentialKind::ExpDigit => (3.0, (0.5, -1.0)),
        PotentialKind::Khintchine => (2.0, (1.0, 0.0)),
        PotentialKind::Lyapunov => (2.0 * LN_2, (1.0, 0.0)),
    }
}

/// Solve the spectrum system with default tolerances.
pub fn solve_system(kind: PotentialKind, xi: f64, initial: Option<PressurePoint>) -> Result<SpectrumSolution> {
    solve_system_with(kind, xi, initial, &SolverConfig::default())
}

/// Solve `P(t, q) = qξ`, `∂P/∂q = ξ` by damped Newton.
///
/// With an explicit `initial` point only that start is tried. Without one,
/// the default start is tried first and continuation from the anchor
/// solution is the fallback.
pub fn solve_system_with(
    kind: PotentialKind,
    xi: f64,
    initial: Option<PressurePoint>,
    cfg: &SolverConfig,
) -> Result<SpectrumSolution> {
    check_admissible(kind, xi)?;
    if let Some(p) = initial {
        if p.kind != kind || !in_domain(kind, p.t, p.q) {
            return Err(Error::Domain(format!(
                "initial point ({}, {}) is outside the {kind} domain",
                p.t, p.q
            )));
        }
        return newton(kind, xi, (p.t, p.q), cfg);
    }
    match newton(kind, xi, default_start(kind, xi), cfg) {
        Ok(s) => Ok(s),
        Err(first) if first.is_numerical() => continuation(kind, xi, cfg).map_err(|_| first),
        Err(e) => Err(e),
    }
}

fn newton(kind: PotentialKind, xi: f64, start: (f64, f64), cfg: &SolverConfig) -> Result<SpectrumSolution> {
    let chart = Chart::for_kind(kind);
    let (mut a, mut b) = chart.coords(start.0, start.1).ok_or_else(|| {
        Error::Domain(format!(
            "start ({}, {}) cannot be expressed in the {kind} solver coordinates",
            start.0, start.1
        ))
    })?;
    let (mut t, mut q) = chart.to_tq(a, b);
    let mut e = evaluate(kind, t, q)?;
    let mut f = residuals(&e, xi, q);
    let norm = |f: (f64, f64)| f.0.abs().max(f.1.abs());
    let fail = |iterations: usize, f: (f64, f64)| Error::NonConvergence {
        xi,
        iterations,
        residual: norm(f),
    };

    for iter in 0..=cfg.max_iter {
        if norm(f) < cfg.tol {
            return Ok(SpectrumSolution {
                xi,
                t,
                q,
                t_prime: q / e.dp_dt + 0.0,
                residual_p: f.0,
                residual_dpdq: f.1,
                iterations: iter,
                method: Method::Newton,
            });
        }
        if iter == cfg.max_iter {
            break;
        }
        let (sa, sb) = chart.scales(t, q);
        let j11 = e.dp_dt * sa;
        let j12 = (e.dp_dq - xi) * sb;
        let j21 = e.d2p_dtdq * sa;
        let j22 = e.d2p_dq2 * sb;
        let det = j11 * j22 - j12 * j21;
        if !det.is_finite() || det == 0.0 {
            return Err(fail(iter, f));
        }
        let da = -(f.0 * j22 - j12 * f.1) / det;
        let db = -(j11 * f.1 - j21 * f.0) / det;

        let mut lambda = 1.0;
        let mut accepted = None;
        for _ in 0..=cfg.max_halvings {
            let (na, nb) = (a + lambda * da, b + lambda * db);
            let (nt, nq) = chart.to_tq(na, nb);
            if in_domain(kind, nt, nq) {
                if let Ok(ne) = evaluate(kind, nt, nq) {
                    let nf = residuals(&ne, xi, nq);
                    if nf.0.is_finite() && nf.1.is_finite() && norm(nf) < norm(f) {
                        accepted = Some((na, nb, nt, nq, ne, nf));
                        break;
                    }
                }
            }
            lambda *= 0.5;
        }
        match accepted {
            Some((na, nb, nt, nq, ne, nf)) => {
                (a, b, t, q, e, f) = (na, nb, nt, nq, ne, nf);
            }
            None => return Err(fail(iter, f)),
        }
    }
    Err(fail(cfg.max_iter, f))
}

/// Walk from the anchor solution to `xi` in steps of `log(ξ − ξ_min)`,
/// warm-starting each solve from the previous one.
fn continuation(kind: PotentialKind, xi: f64, cfg: &SolverConfig) -> Result<SpectrumSolution> {
    let lower = xi_lower(kind);
    let (anchor_xi, anchor_start) = anchor(kind);
    let mut current = newton(kind, anchor_xi, anchor_start, cfg)?;
    let param = |x: f64| (x - lower).ln();
    let target = param(xi);
    let mut s = param(anchor_xi);
    let mut step: f64 = 0.25;
    let mut total_iterations = current.iterations;
    while s != target {
        let remaining = target - s;
        let ds = remaining.signum() * step.min(remaining.abs());
        let next_s = s + ds;
        let next_xi = if next_s == target { xi } else { lower + next_s.exp() };
        match newton(kind, next_xi, (current.t, current.q), cfg) {
            Ok(sol) => {
                total_iterations += sol.iterations;
                current = sol;
                s = next_s;
                step = (step * 2.0).min(1.0);
            }
            Err(e) if e.is_numerical() && step > 1e-6 => step *= 0.25,
            Err(e) => return Err(e),
        }
    }
    current.iterations = total_iterations;
    Ok(current)
}

/// One point of the spectrum of `kind`: closed forms for Khintchine and
/// Lyapunov, stored constants at the boundaries, Newton otherwise.
pub fn spectrum_point(kind: PotentialKind, xi: f64, cfg: &SolverConfig) -> Result<SpectrumSolution> {
    match kind {
        PotentialKind::Khintchine => khintchine_spectrum(xi),
        PotentialKind::Lyapunov => lyapunov_spectrum(xi),
        PotentialKind::LogDigit | PotentialKind::ExpDigit => {
            if xi == xi_lower(kind) {
                let q = f64::NEG_INFINITY;
                return Ok(SpectrumSolution::boundary(xi, boundary_dimension(kind), q, f64::INFINITY));
            }
            if xi == f64::INFINITY {
                if let Some(t) = dimension_at_infinity(kind) {
                    return Ok(SpectrumSolution::boundary(xi, t, 0.0, 0.0));
                }
            }
            solve_system_with(kind, xi, None, cfg)
        }
    }
}

/// `steps` equally spaced values from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|i| {
            if i + 1 == steps {
                hi
            } else {
                lo + (hi - lo) * i as f64 / (steps - 1) as f64
            }
        })
        .collect()
}

/// The spectrum on an equally spaced grid of `steps` points. Newton-solved
/// rows are warm-started from the previous row.
pub fn spectrum_curve(
    kind: PotentialKind,
    xi_min: f64,
    xi_max: f64,
    steps: usize,
    cfg: &SolverConfig,
) -> Result<SpectrumCurve> {
    if steps < 2 || xi_min.partial_cmp(&xi_max) != Some(std::cmp::Ordering::Less) || !xi_max.is_finite() {
        return Err(Error::Domain(format!(
            "curve needs xi_min < xi_max (finite) and steps >= 2, got [{xi_min}, {xi_max}] with {steps}"
        )));
    }
    let mut rows: Vec<SpectrumSolution> = Vec::with_capacity(steps);
    for xi in linspace(xi_min, xi_max, steps) {
        let row = match (kind, rows.last()) {
            (PotentialKind::LogDigit | PotentialKind::ExpDigit, Some(prev)) if prev.method == Method::Newton => {
                let warm = PressurePoint::new(kind, prev.t, prev.q);
                match solve_system_with(kind, xi, Some(warm), cfg) {
                    Ok(s) => s,
                    Err(e) if e.is_numerical() => spectrum_point(kind, xi, cfg)?,
                    Err(e) => return Err(e),
                }
            }
            _ => spectrum_point(kind, xi, cfg)?,
        };
        rows.push(row);
    }
    Ok(SpectrumCurve { kind, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn khintchine_closed_form_values() {
        let s = khintchine_spectrum(2.0).unwrap();
        assert_eq!((s.t, s.q, s.t_prime), (1.0, 0.0, 0.0));
        assert!(s.residual_p.abs() < 1e-15 && s.residual_dpdq.abs() < 1e-15);

        let s = khintchine_spectrum(3.0).unwrap();
        assert!((s.t - 0.9182958340544897).abs() < 1e-15);
        assert!((s.q - LN_2 / 3.0).abs() < 1e-16);
        assert!(s.residual_p.abs() < 1e-14 && s.residual_dpdq.abs() < 1e-14);

        let s = khintchine_spectrum(1.0).unwrap();
        assert_eq!((s.t, s.method), (0.0, Method::Boundary));
        assert!(khintchine_spectrum(0.99).is_err());
    }

    #[test]
    fn khintchine_limits() {
        assert!(khintchine_spectrum(1.0 + 1e-8).unwrap().t < 1e-3);
        assert!(khintchine_spectrum(1e6).unwrap().t < 1e-3);
        // t′(1 + ε) ≈ log₂(1/ε): divergent, but only logarithmically
        let mut prev = 0.0;
        for k in [2, 4, 6, 8, 10, 12, 14] {
            let eps = 10f64.powi(-k);
            let tp = khintchine_spectrum(1.0 + eps).unwrap().t_prime;
            assert!(tp > prev);
            let xi2 = (1.0 + eps) * (1.0 + eps);
            assert!((tp * xi2 / (1.0 / eps).log2() - 1.0).abs() < 1e-3, "eps = {eps}");
            prev = tp;
        }
        assert!(khintchine_spectrum(1e6).unwrap().t_prime.abs() < 1e-6);
    }

    #[test]
    fn second_derivative_signs() {
        let d2 = khintchine_second_derivative(2.0).unwrap();
        assert!((d2 + 1.0 / (4.0 * LN_2)).abs() < 1e-15);
        assert!(khintchine_second_derivative(3.0).unwrap() < 0.0);
        assert!(khintchine_second_derivative(1.0 + std::f64::consts::E).unwrap() > 0.0);
        // central difference of the closed-form t′
        let h = 1e-5;
        let tp = |x: f64| khintchine_spectrum(x).unwrap().t_prime;
        let fd = (tp(2.5 + h) - tp(2.5 - h)) / (2.0 * h);
        assert!((fd - khintchine_second_derivative(2.5).unwrap()).abs() < 1e-8);
    }

    #[test]
    fn inflection_point() {
        let x = khintchine_inflection();
        assert!(x > 3.0 && x < 1.0 + std::f64::consts::E);
        assert!(inflection_function(x).abs() < 1e-13);
        assert!((x - 3.0934952365697126).abs() < 1e-12);
        assert!(khintchine_second_derivative(x).unwrap().abs() < 1e-10);
        assert_eq!(second_derivative_sign_changes(1.01, 50.0, 10_000).unwrap(), 1);
    }

    #[test]
    fn lyapunov_is_rescaled_khintchine() {
        let s = lyapunov_spectrum(2.0 * LN_2).unwrap();
        assert!((s.t - 1.0).abs() < 1e-15);
        assert_eq!(lyapunov_spectrum(LN_2).unwrap().t, 0.0);
        for xi in [1.3, 2.0, 3.0, 17.0] {
            let l = lyapunov_spectrum(xi * LN_2).unwrap();
            let k = khintchine_spectrum(xi).unwrap();
            assert!((l.t - k.t).abs() < 1e-14, "xi = {xi}");
            assert!(l.residual_p.abs() < 1e-13 && l.residual_dpdq.abs() < 1e-13);
        }
        assert!(lyapunov_spectrum(0.5).is_err());
    }

    #[test]
    fn newton_reproduces_khintchine_from_a_generic_start() {
        for xi in [1.05, 1.5, 3.0, 10.0, 50.0] {
            let start = PressurePoint::new(PotentialKind::Khintchine, 1.0, -1.0);
            let s = solve_system(PotentialKind::Khintchine, xi, Some(start)).unwrap();
            let c = khintchine_spectrum(xi).unwrap();
            assert_eq!(s.method, Method::Newton);
            assert!((s.t - c.t).abs() < 1e-9 && (s.q - c.q).abs() < 1e-9, "xi = {xi}");
        }
    }

    #[test]
    fn logdigit_anchor() {
        let s = solve_system(PotentialKind::LogDigit, xi0(), None).unwrap();
        assert!((s.t - 1.0).abs() < 1e-8 && s.q.abs() < 1e-8);
    }

    #[test]
    fn expdigit_solutions_increase() {
        let a = solve_system(PotentialKind::ExpDigit, 2.5, None).unwrap();
        let b = solve_system(PotentialKind::ExpDigit, 3.0, None).unwrap();
        assert!(a.t < b.t && b.q < 0.0);
        assert!((b.t - 0.84958).abs() < 1e-5 && (b.q + 0.196107).abs() < 1e-5);
    }

    #[test]
    fn admissibility() {
        assert!(matches!(solve_system(PotentialKind::ExpDigit, 2.0, None), Err(Error::Domain(_))));
        assert!(matches!(solve_system(PotentialKind::LogDigit, 0.0, None), Err(Error::Domain(_))));
        assert_eq!(spectrum_point(PotentialKind::ExpDigit, f64::INFINITY, &SolverConfig::default()).unwrap().t, 1.0);
        assert_eq!(boundary_dimension(PotentialKind::LogDigit), 0.0);
    }

    #[test]
    fn linspace_ends_exactly() {
        let g = linspace(1.1, 50.0, 200);
        assert_eq!((g[0], g[199], g.len()), (1.1, 50.0, 200));
    }
}
