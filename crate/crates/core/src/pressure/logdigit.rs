//! `P(t, q) = log Σ_{n≥1} 2^{-nt} n^q` for the potential `f(n) = log n`.
//!
//! For `t > 0` the series is summed term by term until a geometric bound on
//! the remainder certifies it. When the weights peak far out (small `t`,
//! moderate `q`), the sum switches after [`DIRECT_TERMS`] terms to an
//! Euler–Maclaurin tail whose integral is done by Gauss–Legendre panels in
//! `log x`. At `t = 0` the series is `ζ(−q)` and its moments come from zeta
//! derivatives.

use std::f64::consts::LN_2;

use super::zeta::{self, zeta_minus_one_jet};
use super::{check_domain, PressureEval, WeightMoments, SERIES_EPS};
use crate::error::{Error, Result};
use crate::numerics::{gauss_legendre_16, CompensatedSum, Taylor};
use crate::potential::PotentialKind;

/// Terms summed directly before falling back to Euler–Maclaurin.
const DIRECT_TERMS: u64 = 4096;

/// `B_{2j}` for `j = 1..=6`.
const BERNOULLI: [f64; 6] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
];

const PANEL_WIDTH: f64 = 0.25;
const MAX_PANELS: usize = 4000;

/// Moment integrands, in order: `1, log n, n − 1, log² n, (n − 1) log n, (n − 1)²`.
/// Shifting `n` by one keeps the variance free of cancellation when the
/// weight sits almost entirely on the digit 1.
const MOMENTS: usize = 6;

#[inline]
fn moment_terms(ln_n: f64, u: f64) -> [f64; MOMENTS] {
    [1.0, ln_n, u, ln_n * ln_n, u * ln_n, u * u]
}

pub fn pressure_logdigit(t: f64, q: f64) -> Result<PressureEval> {
    check_domain(PotentialKind::LogDigit, t, q)?;
    if t == 0.0 {
        return zeta_moments(-q).map(Into::into);
    }
    series_moments(t, q).map(Into::into)
}

/// `ξ₀ = Σ_{n≥1} 2^{-n} log n`, the Lebesgue-typical value of the log-digit
/// average, summed until a geometric tail bound certifies `1e-17` relative
/// accuracy.
pub fn xi0() -> f64 {
    let mut sum = CompensatedSum::new();
    let mut n = 2u32;
    loop {
        let ln_n = (n as f64).ln();
        let term = ln_n * 2f64.powi(-(n as i32));
        sum.add(term);
        // term ratios ½·log(k+1)/log k decrease in k
        let ratio = 0.5 * ((n + 1) as f64).ln() / ln_n;
        if n >= 3 && term * ratio / (1.0 - ratio) < SERIES_EPS * sum.value() {
            return sum.value();
        }
        n += 1;
    }
}

fn series_moments(t: f64, q: f64) -> Result<WeightMoments> {
    let c = t * LN_2;
    // Log of the largest weight over real x ≥ 1, so all scaled terms are ≤ 1.
    let peak = q / c;
    let log_ref = if q > 0.0 && peak > 1.0 {
        q * peak.ln() - q
    } else {
        -c
    };

    let mut sums = [CompensatedSum::new(); MOMENTS];
    // exponent of the heaviest moment weight n^{q+2}
    let heavy_power = q + 2.0;
    let mut certified = None;
    for n in 1..DIRECT_TERMS {
        let nf = n as f64;
        let ln_n = nf.ln();
        let w = (q * ln_n - c * nf - log_ref).exp();
        for (s, m) in sums.iter_mut().zip(moment_terms(ln_n, nf - 1.0)) {
            s.add(w * m);
        }

        let past_peak = heavy_power <= 0.0 || c * nf >= heavy_power;
        if !past_peak {
            continue;
        }
        // Bound on the ratio of successive n^{q+2}-weighted terms from here on.
        let ratio = (-c + heavy_power.max(0.0) * (1.0 / nf).ln_1p()).exp();
        if ratio >= 1.0 {
            continue;
        }
        let s0 = sums[0].value();
        let tail = w * nf * nf * ratio / (1.0 - ratio);
        if w <= SERIES_EPS * s0 && tail <= SERIES_EPS * s0 {
            certified = Some((n as usize, tail / s0));
            break;
        }
    }

    let (truncation_n, tail_bound) = match certified {
        Some(cert) => cert,
        None => {
            let (tail_sums, err) = euler_maclaurin_tail(c, q, log_ref, DIRECT_TERMS)?;
            for (s, v) in sums.iter_mut().zip(tail_sums) {
                s.add(v);
            }
            (DIRECT_TERMS as usize, err / sums[0].value())
        }
    };

    let s: Vec<f64> = sums.iter().map(CompensatedSum::value).collect();
    let mean_ln = s[1] / s[0];
    let mean_u = s[2] / s[0];
    Ok(WeightMoments {
        log_sum: log_ref + s[0].ln(),
        mean_f: mean_ln,
        var_f: s[3] / s[0] - mean_ln * mean_ln,
        mean_n: 1.0 + mean_u,
        var_n: s[5] / s[0] - mean_u * mean_u,
        cov_nf: s[4] / s[0] - mean_u * mean_ln,
        truncation_n,
        tail_bound,
    })
}

/// `Σ_{n≥n0} wₙ·mₖ(n)` for every moment integrand, scaled by `e^{-log_ref}`,
/// and an estimate of the absolute error of the heaviest one.
fn euler_maclaurin_tail(c: f64, q: f64, log_ref: f64, n0: u64) -> Result<([f64; MOMENTS], f64)> {
    let x0 = n0 as f64;
    // Derivatives of x^q e^{-cx} at x0 stay small against the Bernoulli
    // factors only while |q|/x0 and c are well below 2π.
    if (q.abs() + 3.0) * 8.0 > x0 || c > 0.5 {
        return Err(Error::Convergence(format!(
            "log-digit series at (t, q) = ({}, {q}) needs more than {n0} terms and lies outside the Euler-Maclaurin range",
            c / LN_2
        )));
    }

    type Series = Taylor<12>;
    let ln_x = Series::ln_of_shifted(x0);
    let exponent = ln_x.scale(q) - Series::variable(x0).scale(c) - Series::constant(log_ref);
    let w = exponent.exp();
    let u = Series::variable(x0 - 1.0);
    let integrands = [
        Series::constant(1.0),
        ln_x,
        u,
        ln_x * ln_x,
        u * ln_x,
        u * u,
    ];

    let integrals = tail_integrals(c, q, log_ref, x0)?;
    let mut out = [0.0; MOMENTS];
    let mut err = 0.0;
    for (k, phi) in integrands.iter().enumerate() {
        let f = w * *phi;
        let mut corr = 0.5 * f.0[0];
        let mut last = 0.0;
        for (j, &b) in BERNOULLI.iter().enumerate().map(|(i, b)| (i + 1, b)) {
            // B_{2j}/(2j)! · f^{(2j−1)}(x0) = B_{2j} · coef_{2j−1} / (2j)
            last = b * f.0[2 * j - 1] / (2 * j) as f64;
            corr -= last;
        }
        out[k] = integrals[k] + corr;
        if k == MOMENTS - 1 {
            err = last.abs() + 1e-15 * integrals[k].abs();
        }
    }
    Ok((out, err))
}

/// `∫_{x0}^∞ x^q e^{-cx - log_ref} mₖ(x) dx`, substituting `x = eˢ`.
fn tail_integrals(c: f64, q: f64, log_ref: f64, x0: f64) -> Result<[f64; MOMENTS]> {
    let rule = gauss_legendre_16();
    let s0 = x0.ln();
    // beyond the peak of the heaviest integrand the decay is double exponential
    let s_peak = ((q + 3.0).max(1.0) / c).ln().max(s0);
    let mut totals = [CompensatedSum::new(); MOMENTS];
    for panel in 0..MAX_PANELS {
        let a = s0 + panel as f64 * PANEL_WIDTH;
        let half = 0.5 * PANEL_WIDTH;
        let mid = a + half;
        let mut contrib = [0.0; MOMENTS];
        for &(node, weight) in rule {
            let s = mid + half * node;
            let x = s.exp();
            let g = ((q + 1.0) * s - c * x - log_ref).exp() * weight * half;
            for (acc, m) in contrib.iter_mut().zip(moment_terms(s, x - 1.0)) {
                *acc += g * m;
            }
        }
        for (tot, v) in totals.iter_mut().zip(contrib) {
            tot.add(v);
        }
        let negligible = contrib
            .iter()
            .zip(&totals)
            .all(|(v, tot)| v.abs() <= 1e-20 * tot.value().abs());
        if a > s_peak && negligible {
            return Ok(totals.map(|t| t.value()));
        }
    }
    Err(Error::Convergence(format!(
        "log-digit tail integral did not decay within {MAX_PANELS} panels (c = {c}, q = {q})"
    )))
}

/// Moments at `t = 0`, where the weights are `n^{-s}` with `s = −q > 1`.
/// Moments of `n` exist only for `s > 2` (mean) and `s > 3` (variance);
/// otherwise they are reported as infinite.
fn zeta_moments(s: f64) -> Result<WeightMoments> {
    let (z, bound) = zeta_minus_one_jet(s)?;
    let zeta_s = 1.0 + z.v;
    // Σ log n · n^{-s} = −ζ'(s), Σ log² n · n^{-s} = ζ''(s)
    let mean_ln = -z.d1 / zeta_s;
    let var_ln = z.d2 / zeta_s - mean_ln * mean_ln;

    let (mean_u, cov) = if s > 2.0 {
        let (z1, _) = zeta_minus_one_jet(s - 1.0)?;
        let mean_u = (z1.v - z.v) / zeta_s;
        // E[(n − 1) log n] = (−ζ'(s−1) + ζ'(s)) / ζ(s)
        let e_u_ln = (-z1.d1 + z.d1) / zeta_s;
        (mean_u, e_u_ln - mean_u * mean_ln)
    } else {
        (f64::INFINITY, f64::INFINITY)
    };
    let var_u = if s > 3.0 {
        let (z1, _) = zeta_minus_one_jet(s - 1.0)?;
        let (z2, _) = zeta_minus_one_jet(s - 2.0)?;
        let e_uu = (z2.v - 2.0 * z1.v + z.v) / zeta_s;
        e_uu - mean_u * mean_u
    } else {
        f64::INFINITY
    };

    Ok(WeightMoments {
        log_sum: z.v.ln_1p(),
        mean_f: mean_ln,
        var_f: var_ln,
        mean_n: 1.0 + mean_u,
        var_n: var_u,
        cov_nf: cov,
        truncation_n: zeta::CUTOFF as usize,
        tail_bound: bound / zeta_s,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    /// Plain summation of the first `terms` weights, without any scaling or
    /// certificate: (P, E[log n], E[n]).
    fn brute_force(t: f64, q: f64, terms: u64) -> (f64, f64, f64) {
        let (mut s0, mut s1, mut s2) = (0.0, 0.0, 0.0);
        for n in (1..=terms).rev() {
            let x = n as f64;
            let w = 2f64.powf(-x * t) * x.powf(q);
            s0 += w;
            s1 += w * x.ln();
            s2 += w * x;
        }
        (s0.ln(), s1 / s0, s2 / s0)
    }

    #[test]
    fn lebesgue_point() {
        let e = pressure_logdigit(1.0, 0.0).unwrap();
        assert!(e.value.abs() < 1e-15);
        assert!((e.dp_dq - 0.507834).abs() < 5e-6);
        assert!((e.dp_dq - xi0()).abs() < 1e-15);
        assert!((e.dp_dt + 2.0 * LN_2).abs() < 1e-14);
        assert!(e.tail_bound < 1e-17);
    }

    #[test]
    fn q_zero_slice() {
        for t in [0.3, 1.0, 2.5] {
            let e = pressure_logdigit(t, 0.0).unwrap();
            assert!((e.value + (2f64.powf(t) - 1.0).ln()).abs() < 1e-14, "t = {t}");
        }
    }

    #[test]
    fn zero_temperature_is_log_zeta() {
        let e = pressure_logdigit(0.0, -2.0).unwrap();
        assert!((e.value - (PI * PI / 6.0).ln()).abs() < 1e-13);
        // Σ n^{-2} diverges in its first moment
        assert_eq!(e.dp_dt, f64::NEG_INFINITY);

        let e = pressure_logdigit(0.0, -4.5).unwrap();
        let terms = 2_000_000;
        let (p, mean_ln, mean_n) = brute_force(0.0, -4.5, terms);
        assert!((e.value - p).abs() < 1e-12);
        assert!((e.dp_dq - mean_ln).abs() < 1e-12);
        assert!((e.dp_dt + LN_2 * mean_n).abs() < 1e-10);
        assert!(e.d2p_dt2.is_finite() && e.d2p_dt2 > 0.0);
    }

    #[test]
    fn direct_route_matches_brute_force() {
        for &(t, q) in &[(1.0, 2.0), (0.4, -1.5), (2.0, 5.0), (0.05, 0.5)] {
            let e = pressure_logdigit(t, q).unwrap();
            let (p, mean_ln, mean_n) = brute_force(t, q, 200_000);
            assert!((e.value - p).abs() < 1e-12 * p.abs().max(1.0), "({t},{q})");
            assert!((e.dp_dq - mean_ln).abs() < 1e-12 * mean_ln.abs().max(1.0), "({t},{q})");
            assert!((e.dp_dt + LN_2 * mean_n).abs() < 1e-11 * mean_n, "({t},{q})");
        }
    }

    #[test]
    fn euler_maclaurin_route_matches_brute_force() {
        // Both need more than DIRECT_TERMS terms to certify.
        for &(t, q) in &[(0.003, 1.5), (0.004, -1.2), (0.001, 4.0)] {
            let e = pressure_logdigit(t, q).unwrap();
            assert_eq!(e.truncation_n, DIRECT_TERMS as usize, "({t},{q})");
            let (p, mean_ln, mean_n) = brute_force(t, q, 3_000_000);
            assert!((e.value - p).abs() < 1e-11 * p.abs().max(1.0), "P at ({t},{q}): {} vs {p}", e.value);
            assert!((e.dp_dq - mean_ln).abs() < 1e-11 * mean_ln.abs().max(1.0), "({t},{q})");
            assert!((e.dp_dt + LN_2 * mean_n).abs() < 1e-10 * mean_n, "({t},{q})");
        }
    }

    #[test]
    fn handles_astronomically_large_typical_digits() {
        // typical digit ≈ q / (t log 2) ≈ 4e9
        let e = pressure_logdigit(7e-9, 21.0).unwrap();
        assert!(e.value.is_finite() && e.dp_dq > 19.0 && e.dp_dq < 25.0);
        assert!(e.d2p_dq2 > 0.0 && e.d2p_dt2 > 0.0 && e.hessian_det() > 0.0);
    }

    #[test]
    fn xi0_value() {
        let x = xi0();
        assert!((x - 0.507834).abs() < 5e-6);
        // two independent summations agree
        let direct: f64 = (1..200).rev().map(|n| 2f64.powi(-n) * (n as f64).ln()).sum();
        assert!((x - direct).abs() < 1e-15);
    }
}
