//! The pressure function `P(t, q) = log Σₙ exp(−n·t·log 2 + q·f(n))` and its
//! first and second partial derivatives.
//!
//! Because every potential here is constant on first-level cylinders, the
//! pressure collapses to the logarithm of a single series, and its partial
//! derivatives are moments of the normalised weights
//! `wₙ ∝ exp(−n·t·log 2 + q·f(n))`:
//!
//! - `∂P/∂q = E[f]`, `∂²P/∂q² = Var f`
//! - `∂P/∂t = −log 2 · E[n]`, `∂²P/∂t² = log²2 · Var n`
//! - `∂²P/∂t∂q = −log 2 · Cov(n, f)`
//!
//! All moments are accumulated in one pass over the series, together with a
//! certificate for the truncated tail.

mod expdigit;
mod khintchine;
mod logdigit;
pub mod zeta;

use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::PotentialKind;

pub use expdigit::pressure_expdigit;
pub use khintchine::{pressure_khintchine, pressure_lyapunov};
pub use logdigit::{pressure_logdigit, xi0};
pub use zeta::zeta;

/// Relative size below which series terms and tails are dropped.
pub(crate) const SERIES_EPS: f64 = 1e-17;

/// A `(t, q)` pair tagged with its domain status for a potential.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PressurePoint {
    pub t: f64,
    pub q: f64,
    pub kind: PotentialKind,
    pub in_domain: bool,
}

impl PressurePoint {
    pub fn new(kind: PotentialKind, t: f64, q: f64) -> Self {
        PressurePoint {
            t,
            q,
            kind,
            in_domain: in_domain(kind, t, q),
        }
    }
}

/// Pressure value, partial derivatives and the truncation certificate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PressureEval {
    pub value: f64,
    pub dp_dt: f64,
    pub dp_dq: f64,
    pub d2p_dq2: f64,
    pub d2p_dtdq: f64,
    pub d2p_dt2: f64,
    /// Number of series terms summed explicitly (0 for closed forms).
    pub truncation_n: usize,
    /// Bound on the neglected part, relative to the series sum.
    pub tail_bound: f64,
}

impl PressureEval {
    pub fn hessian_det(&self) -> f64 {
        self.d2p_dt2 * self.d2p_dq2 - self.d2p_dtdq * self.d2p_dtdq
    }
}

/// Moments of the normalised digit weights; the common currency of all
/// evaluators.
#[derive(Debug, Clone, Copy)]
pub(crate) struct WeightMoments {
    pub log_sum: f64,
    pub mean_f: f64,
    pub var_f: f64,
    pub mean_n: f64,
    pub var_n: f64,
    pub cov_nf: f64,
    pub truncation_n: usize,
    pub tail_bound: f64,
}

impl From<WeightMoments> for PressureEval {
    fn from(m: WeightMoments) -> Self {
        PressureEval {
            value: m.log_sum,
            dp_dt: -LN_2 * m.mean_n,
            dp_dq: m.mean_f,
            d2p_dq2: m.var_f,
            d2p_dtdq: -LN_2 * m.cov_nf,
            d2p_dt2: LN_2 * LN_2 * m.var_n,
            truncation_n: m.truncation_n,
            tail_bound: m.tail_bound,
        }
    }
}

/// Domain of convergence of the pressure series for each potential.
///
/// - Khintchine: `q − t·log 2 < 0`
/// - Lyapunov: `q < t`
/// - LogDigit: `t > 0`, or `t = 0` with `q < −1`
/// - ExpDigit: `t > 0` with `q ≤ 0`, or `t ≥ 0` with `q < 0`
pub fn in_domain(kind: PotentialKind, t: f64, q: f64) -> bool {
    if !t.is_finite() || !q.is_finite() {
        return false;
    }
    match kind {
        PotentialKind::Khintchine => q - t * LN_2 < 0.0,
        PotentialKind::Lyapunov => q < t,
        PotentialKind::LogDigit => t > 0.0 || (t == 0.0 && q < -1.0),
        PotentialKind::ExpDigit => (t > 0.0 && q <= 0.0) || (t >= 0.0 && q < 0.0),
    }
}

pub(crate) fn check_domain(kind: PotentialKind, t: f64, q: f64) -> Result<()> {
    if in_domain(kind, t, q) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "(t, q) = ({t}, {q}) is outside the {kind} pressure domain"
        )))
    }
}

/// Evaluate the pressure of `kind` at `(t, q)`.
pub fn evaluate(kind: PotentialKind, t: f64, q: f64) -> Result<PressureEval> {
    match kind {
        PotentialKind::Khintchine => pressure_khintchine(t, q),
        PotentialKind::LogDigit => pressure_logdigit(t, q),
        PotentialKind::ExpDigit => pressure_expdigit(t, q),
        PotentialKind::Lyapunov => pressure_lyapunov(t, q),
    }
}
