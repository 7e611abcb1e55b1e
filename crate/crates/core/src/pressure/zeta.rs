//! Riemann zeta on the real half-line `s > 1`, with first and second
//! derivatives, by Euler–Maclaurin summation.

use crate::error::{Error, Result};
use crate::numerics::Jet2;

/// Terms summed explicitly before the Euler–Maclaurin tail starts.
pub(crate) const CUTOFF: u32 = 16;

/// `B_{2j}` for `j = 1..=11`.
const BERNOULLI: [f64; 11] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
];

/// Correction terms used; the next one serves as the error estimate.
const CORRECTIONS: usize = 10;

/// `Σ_{n≥2} n^{-s}`, i.e. `ζ(s) − 1`, as a jet in `s`, plus an error estimate.
///
/// Leaving out the `n = 1` term keeps differences such as `ζ(s−1) − ζ(s)`
/// free of cancellation when `s` is large.
pub fn zeta_minus_one_jet(s: f64) -> Result<(Jet2, f64)> {
    if s.is_nan() || s <= 1.0 {
        return Err(Error::Domain(format!("zeta requires s > 1, got {s}")));
    }
    let sj = Jet2::variable(s);
    let power = |n: f64, shift: f64| {
        // n^{-(s + shift)}
        let ln_n = n.ln();
        (sj.scale(-ln_n) + Jet2::constant(-shift * ln_n)).exp()
    };

    let mut sum = Jet2::constant(0.0);
    for n in 2..CUTOFF {
        sum = sum + power(n as f64, 0.0);
    }

    let big_n = CUTOFF as f64;
    // ∫_N^∞ x^{-s} dx = N^{1−s} / (s − 1)
    sum = sum + power(big_n, -1.0) * (sj + Jet2::constant(-1.0)).recip();
    sum = sum + power(big_n, 0.0).scale(0.5);

    // B_{2j}/(2j)! · s(s+1)⋯(s+2j−2) · N^{-s-2j+1}
    let mut pochhammer = sj;
    let mut factorial = 2.0;
    let mut next_term = 0.0;
    for (j, &b) in BERNOULLI.iter().enumerate().map(|(i, b)| (i + 1, b)) {
        if j > 1 {
            let k = (2 * j - 1) as f64;
            pochhammer = pochhammer * (sj + Jet2::constant(k - 2.0)) * (sj + Jet2::constant(k - 1.0));
            factorial *= (2 * j - 1) as f64 * (2 * j) as f64;
        }
        let term = (pochhammer * power(big_n, (2 * j - 1) as f64)).scale(b / factorial);
        if j <= CORRECTIONS {
            sum = sum + term;
        } else {
            next_term = term.v.abs().max(term.d1.abs()).max(term.d2.abs());
        }
    }
    Ok((sum, next_term))
}

/// `ζ(s) = Σ_{n≥1} n^{-s}` for `s > 1`, absolute error below `1e-12`.
pub fn zeta(s: f64) -> Result<f64> {
    let (tail, _) = zeta_minus_one_jet(s)?;
    Ok(1.0 + tail.v)
}
