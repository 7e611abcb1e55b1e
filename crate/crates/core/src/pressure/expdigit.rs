//! `P(t, q) = log Σ_{n≥1} 2^{-nt} e^{q·2ⁿ}` for the potential `f(n) = 2ⁿ`.
//!
//! For `q < 0` the weights die off doubly exponentially once `2ⁿ|q|` is
//! large, so direct summation with a ratio certificate always terminates
//! within the range of `f64` exponents. On the edge `q = 0` the series is
//! geometric and every moment has a closed form (some of them infinite).

use std::f64::consts::LN_2;

use super::{check_domain, PressureEval, WeightMoments, SERIES_EPS};
use crate::error::{Error, Result};
use crate::numerics::{exp2_neg_product, scale_pow2, CompensatedSum};
use crate::potential::PotentialKind;

/// Largest digit whose value `2ⁿ` (and `4ⁿ` after scaling) stays in range.
const MAX_DIGIT: u32 = 1020;

pub fn pressure_expdigit(t: f64, q: f64) -> Result<PressureEval> {
    check_domain(PotentialKind::ExpDigit, t, q)?;
    if q == 0.0 {
        return Ok(geometric_moments(t).into());
    }
    series_moments(t, q).map(Into::into)
}

/// Moments relative to `n = 1`, in the shifted variables `u = n − 1` and
/// `v = 2ⁿ − 2`. Both vanish on the dominant digit, so variances of strongly
/// concentrated measures come out without cancellation.
fn series_moments(t: f64, q: f64) -> Result<WeightMoments> {
    // [1, u, v, u², u·v, v²]
    let mut sums = [CompensatedSum::new(); 6];
    for n in 1..=MAX_DIGIT {
        let nf = n as f64;
        let u = nf - 1.0;
        let two_n = 2f64.powi(n as i32);
        // 1 − 2^{1−n}, so that v = 2ⁿ·shrink
        let shrink = -(2f64.powi(1 - n as i32) - 1.0);
        let w = exp2_neg_product(u, t) * ((two_n - 2.0) * q).exp();
        let wv = scale_pow2(w * shrink, nf);
        let wvv = scale_pow2(w * shrink * shrink, 2.0 * nf);
        let terms = [w, w * u, wv, w * u * u, wv * u, wvv];
        for (s, x) in sums.iter_mut().zip(terms) {
            s.add(x);
        }

        if n < 2 {
            continue;
        }
        // v_{k+1}/v_k ≤ 2 + 2/(2ⁿ − 2) for k ≥ n; the squared factor also
        // dominates the growth of u and u²
        let growth = 2.0 + 2.0 / (two_n - 2.0);
        let ratio = growth * growth * (-t * LN_2 + two_n * q).exp();
        if ratio >= 1.0 {
            continue;
        }
        let factor = ratio / (1.0 - ratio);
        let certified = terms
            .iter()
            .zip(&sums)
            .all(|(x, s)| *x <= SERIES_EPS * s.value() && x * factor <= SERIES_EPS * s.value());
        if certified {
            let s0 = sums[0].value();
            return Ok(moments_from_sums(
                -t * LN_2 + 2.0 * q,
                sums.map(|s| s.value()),
                n as usize,
                w * factor / s0,
            ));
        }
    }
    Err(Error::Convergence(format!(
        "exp-digit series at (t, q) = ({t}, {q}) not certified within {MAX_DIGIT} terms"
    )))
}

fn moments_from_sums(log_ref: f64, s: [f64; 6], truncation_n: usize, tail_bound: f64) -> WeightMoments {
    let mean_u = s[1] / s[0];
    let mean_v = s[2] / s[0];
    WeightMoments {
        log_sum: log_ref + s[0].ln(),
        mean_f: 2.0 + mean_v,
        var_f: s[5] / s[0] - mean_v * mean_v,
        mean_n: 1.0 + mean_u,
        var_n: s[3] / s[0] - mean_u * mean_u,
        cov_nf: s[4] / s[0] - mean_u * mean_v,
        truncation_n,
        tail_bound,
    }
}

/// `q = 0`: with `r = 2^{-t}` the digit is geometric, `P(n) = (1 − r) r^{n−1}`.
/// `E[2ⁿ]` is finite only for `t > 1`, `E[4ⁿ]` only for `t > 2`.
fn geometric_moments(t: f64) -> WeightMoments {
    let r = (-t * LN_2).exp();
    let one_minus_r = -(-t * LN_2).exp_m1();
    let mean_u = r / one_minus_r;
    let var_u = r / (one_minus_r * one_minus_r);

    let (mean_f, cov) = if t > 1.0 {
        let d = 1.0 - 2.0 * r;
        let mean_f = 2.0 * one_minus_r / d;
        // E[n·2ⁿ] = 2(1 − r)/(1 − 2r)²
        let e_n_f = 2.0 * one_minus_r / (d * d);
        (mean_f, e_n_f - (1.0 + mean_u) * mean_f)
    } else {
        (f64::INFINITY, f64::INFINITY)
    };
    let var_f = if t > 2.0 {
        let e_ff = 4.0 * one_minus_r / (1.0 - 4.0 * r);
        e_ff - mean_f * mean_f
    } else {
        f64::INFINITY
    };

    WeightMoments {
        log_sum: -(t * LN_2).exp_m1().ln(),
        mean_f,
        var_f,
        mean_n: 1.0 + mean_u,
        var_n: var_u,
        cov_nf: cov,
        truncation_n: 0,
        tail_bound: 0.0,
    }
}
