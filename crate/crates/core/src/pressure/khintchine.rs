use std::f64::consts::LN_2;

use super::{check_domain, PressureEval};
use crate::error::Result;
use crate::potential::PotentialKind;

/// Closed form with `r = e^{q − t log 2}`: `P = log(r / (1 − r))`.
pub fn pressure_khintchine(t: f64, q: f64) -> Result<PressureEval> {
    check_domain(PotentialKind::Khintchine, t, q)?;
    let u = q - t * LN_2;
    let r = u.exp();
    // 1 − r without cancellation near the domain boundary
    let one_minus_r = -u.exp_m1();
    let curvature = r / (one_minus_r * one_minus_r);
    Ok(PressureEval {
        value: u - one_minus_r.ln(),
        dp_dt: -LN_2 / one_minus_r,
        dp_dq: 1.0 / one_minus_r,
        d2p_dq2: curvature,
        d2p_dtdq: -LN_2 * curvature,
        d2p_dt2: LN_2 * LN_2 * curvature,
        truncation_n: 0,
        tail_bound: 0.0,
    })
}

/// `P_Lyapunov(t, q) = P_Khintchine(t, q·log 2)`, with the chain rule in `q`.
pub fn pressure_lyapunov(t: f64, q: f64) -> Result<PressureEval> {
    check_domain(PotentialKind::Lyapunov, t, q)?;
    let k = pressure_khintchine(t, q * LN_2)?;
    Ok(PressureEval {
        dp_dq: LN_2 * k.dp_dq,
        d2p_dq2: LN_2 * LN_2 * k.d2p_dq2,
        d2p_dtdq: LN_2 * k.d2p_dtdq,
        ..k
    })
}
