//! Gibbs measures `μ_{t,q}` as i.i.d. digit distributions.
//!
//! Each potential here depends on the first digit only, so the Gibbs measure
//! of a cylinder factorises exactly:
//! `μ(I_n(d₁…d_n)) = Π p_{d_j}` with `p_n = exp(a_n(t, q) − P(t, q))`.
//! Sampling a `μ`-typical point is sampling i.i.d. digits from `p`.
//!
//! Sampling uses ChaCha8 seeded with `seed_from_u64(seed)`; the `i`-th
//! sequence of a report uses stream `i`, so results depend only on the
//! seed and the parameters, never on thread scheduling.

use std::f64::consts::LN_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expansion::DigitSequence;
use crate::numerics::CompensatedSum;
use crate::potential::PotentialKind;
use crate::pressure::{check_domain, evaluate};
use crate::spectrum::{spectrum_point, SolverConfig};

/// Probability mass beyond the support that may be dropped.
pub const TAIL_MASS: f64 = 1e-15;

/// Largest support a distribution may need before construction gives up.
pub const MAX_SUPPORT: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DigitDistribution {
    pub kind: PotentialKind,
    pub t: f64,
    pub q: f64,
    /// `pmf[n − 1]` is the probability of digit `n`.
    pub pmf: Vec<f64>,
    pub support_cap: usize,
    /// Certified bound on the mass of digits above `support_cap`.
    pub tail_mass_bound: f64,
    /// `Σ exp(a_n − P)` over the support, before renormalisation.
    pub raw_mass: f64,
    #[serde(skip)]
    cdf: Vec<f64>,
}

impl DigitDistribution {
    /// The digit distribution of `μ_{t,q}` for `kind`.
    pub fn new(kind: PotentialKind, t: f64, q: f64) -> Result<Self> {
        check_domain(kind, t, q)?;
        let pressure = evaluate(kind, t, q)?.value;

        let mut pmf = Vec::new();
        let mut mass = CompensatedSum::new();
        let mut tail_mass_bound = None;
        for n in 1..=MAX_SUPPORT as u64 {
            let p = (log_weight(kind, n, t, q) - pressure).exp();
            pmf.push(p);
            mass.add(p);
            if let Some(bound) = tail_bound(kind, n, t, q, p, pressure) {
                if bound < TAIL_MASS {
                    tail_mass_bound = Some(bound);
                    break;
                }
            }
        }
        let tail_mass_bound = tail_mass_bound.ok_or_else(|| {
            Error::Convergence(format!(
                "{kind} distribution at (t, q) = ({t}, {q}) needs more than {MAX_SUPPORT} digits"
            ))
        })?;

        let raw_mass = mass.value();
        for p in &mut pmf {
            *p /= raw_mass;
        }
        let mut cdf = Vec::with_capacity(pmf.len());
        let mut acc = CompensatedSum::new();
        for &p in &pmf {
            acc.add(p);
            cdf.push(acc.value());
        }
        if let Some(last) = cdf.last_mut() {
            *last = 1.0;
        }
        Ok(DigitDistribution {
            kind,
            t,
            q,
            support_cap: pmf.len(),
            pmf,
            tail_mass_bound,
            raw_mass,
            cdf,
        })
    }

    /// Probability of digit `n`, zero outside the support.
    pub fn probability(&self, n: u64) -> f64 {
        match n {
            0 => 0.0,
            n => self.pmf.get(n as usize - 1).copied().unwrap_or(0.0),
        }
    }

    /// `E f(n)` under the pmf.
    pub fn mean_f(&self) -> f64 {
        self.moment(|v| v)
    }

    /// `Var f(n)` under the pmf, centred in a second pass.
    pub fn variance_f(&self) -> f64 {
        let m = self.mean_f();
        self.moment(|v| (v - m) * (v - m))
    }

    fn moment(&self, g: impl Fn(f64) -> f64) -> f64 {
        self.pmf
            .iter()
            .enumerate()
            .map(|(i, &p)| p * g(self.kind.digit_value(i as u64 + 1)))
            .collect::<CompensatedSum>()
            .value()
    }

    /// One digit by inversion of the cumulative distribution.
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        let u: f64 = rng.gen();
        let i = self.cdf.partition_point(|&c| c <= u);
        i.min(self.cdf.len() - 1) as u64 + 1
    }
}

fn log_weight(kind: PotentialKind, n: u64, t: f64, q: f64) -> f64 {
    if q == 0.0 {
        // avoids 0·∞ once 2ⁿ overflows
        -(n as f64) * t * LN_2
    } else {
        kind.log_weight(n, t, q)
    }
}

/// Upper bound on `Σ_{k>n} p_k` given `p_n`, once the weights are past
/// their peak; `None` while no bound is available yet.
fn tail_bound(kind: PotentialKind, n: u64, t: f64, q: f64, p: f64, pressure: f64) -> Option<f64> {
    let nf = n as f64;
    let log_ratio = match kind {
        PotentialKind::Khintchine => q - t * LN_2,
        PotentialKind::Lyapunov => (q - t) * LN_2,
        PotentialKind::LogDigit if t == 0.0 => {
            // p_k = k^{-s}/ζ(s); Σ_{k>n} k^{-s} ≤ n^{1−s}/(s − 1)
            let s = -q;
            return Some(((1.0 - s) * nf.ln() - pressure).exp() / (s - 1.0));
        }
        // (1 + 1/k)^q is non-increasing in k for q ≥ 0 and at most 1 for q < 0
        PotentialKind::LogDigit => -t * LN_2 + q.max(0.0) * (1.0 / nf).ln_1p(),
        PotentialKind::ExpDigit => {
            let growth = if q == 0.0 { 0.0 } else { q * nf.exp2() };
            -t * LN_2 + growth
        }
    };
    (log_ratio < 0.0).then(|| {
        let ratio = log_ratio.exp();
        p * ratio / (1.0 - ratio)
    })
}

/// `depth` i.i.d. digits from `dist`, stream 0 of `seed`.
pub fn sample_digits(dist: &DigitDistribution, depth: usize, seed: u64) -> DigitSequence {
    sample_digits_stream(dist, depth, seed, 0)
}

/// `depth` i.i.d. digits from an independent stream of the same seed.
pub fn sample_digits_stream(dist: &DigitDistribution, depth: usize, seed: u64, stream: u64) -> DigitSequence {
    let mut rng = rng_for(seed, stream);
    let digits = (0..depth).map(|_| dist.draw(&mut rng)).collect();
    DigitSequence::new(digits).expect("sampled digits are positive")
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `(1/n) Σ f(d_j)`.
pub fn birkhoff_average(d: &DigitSequence, kind: PotentialKind) -> Result<f64> {
    if d.is_empty() {
        return Err(Error::Empty);
    }
    let sum: CompensatedSum = d.digits.iter().map(|&n| kind.digit_value(n)).collect();
    Ok(sum.value() / d.len() as f64)
}

/// `log μ(I_n) / log |I_n|` for the cylinder spelled by `d`.
pub fn local_dimension(d: &DigitSequence, dist: &DigitDistribution) -> Result<f64> {
    if d.is_empty() {
        return Err(Error::Empty);
    }
    let mut log_mu = CompensatedSum::new();
    let mut digit_sum = CompensatedSum::new();
    for &n in &d.digits {
        let p = dist.probability(n);
        if p == 0.0 {
            return Err(Error::Support {
                digit: n,
                cap: dist.support_cap,
            });
        }
        log_mu.add(p.ln());
        digit_sum.add(n as f64);
    }
    Ok(log_mu.value() / (-LN_2 * digit_sum.value()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub kind: PotentialKind,
    pub xi: f64,
    pub t: f64,
    pub q: f64,
    pub n_points: usize,
    pub depth: usize,
    pub seed: u64,
    pub birkhoff_mean: f64,
    pub birkhoff_stderr: f64,
    pub local_dimension_mean: f64,
    pub local_dimension_stderr: f64,
}

/// Mean and standard error of the mean.
fn mean_and_stderr(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().copied().collect::<CompensatedSum>().value() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let ss = xs.iter().map(|x| (x - mean) * (x - mean)).collect::<CompensatedSum>().value();
    (mean, (ss / (n - 1.0)).sqrt() / n.sqrt())
}

/// Birkhoff average and local-dimension quotient of `depth` digits of
/// stream `stream`, without materialising the sequence.
fn sample_statistics(dist: &DigitDistribution, depth: usize, seed: u64, stream: u64) -> (f64, f64) {
    let mut rng = rng_for(seed, stream);
    let mut f_sum = CompensatedSum::new();
    let mut log_mu = CompensatedSum::new();
    let mut digit_sum = CompensatedSum::new();
    for _ in 0..depth {
        let n = dist.draw(&mut rng);
        f_sum.add(dist.kind.digit_value(n));
        log_mu.add(dist.probability(n).ln());
        digit_sum.add(n as f64);
    }
    (
        f_sum.value() / depth as f64,
        log_mu.value() / (-LN_2 * digit_sum.value()),
    )
}

/// Sample `n_points` sequences of length `depth` from the Gibbs measure at
/// the solution `(t(ξ), q(ξ))` and summarise their Birkhoff averages
/// (which should cluster at `ξ`) and local dimensions (at `t(ξ)`).
pub fn empirical_level_set_check(
    kind: PotentialKind,
    xi: f64,
    n_points: usize,
    depth: usize,
    seed: u64,
) -> Result<SampleReport> {
    empirical_level_set_check_with(kind, xi, n_points, depth, seed, &SolverConfig::default())
}

pub fn empirical_level_set_check_with(
    kind: PotentialKind,
    xi: f64,
    n_points: usize,
    depth: usize,
    seed: u64,
    cfg: &SolverConfig,
) -> Result<SampleReport> {
    if n_points == 0 || depth == 0 {
        return Err(Error::Domain(format!(
            "sampling needs n_points >= 1 and depth >= 1, got {n_points} and {depth}"
        )));
    }
    let sol = spectrum_point(kind, xi, cfg)?;
    let dist = DigitDistribution::new(kind, sol.t, sol.q)?;
    let stats: Vec<(f64, f64)> = (0..n_points as u64)
        .into_par_iter()
        .map(|i| sample_statistics(&dist, depth, seed, i))
        .collect();
    let (birkhoff, local): (Vec<f64>, Vec<f64>) = stats.into_iter().unzip();
    let (birkhoff_mean, birkhoff_stderr) = mean_and_stderr(&birkhoff);
    let (local_dimension_mean, local_dimension_stderr) = mean_and_stderr(&local);
    Ok(SampleReport {
        kind,
        xi,
        t: sol.t,
        q: sol.q,
        n_points,
        depth,
        seed,
        birkhoff_mean,
        birkhoff_stderr,
        local_dimension_mean,
        local_dimension_stderr,
    })
}
