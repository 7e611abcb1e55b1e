//! Power-2-decaying Gauss-like expansions and their multifractal spectra.
//!
//! Every `x` in `(0, 1]` has a unique expansion
//! `x = Σ 2^-(d₁ + ⋯ + dᵢ)` with digits `dᵢ ≥ 1`, generated by the map
//! `T x = 2ⁿ x − 1` on the branch `(2⁻ⁿ, 2⁻ⁿ⁺¹]`. This crate provides
//!
//! - [`expansion`]: exact rational encoding, decoding and orbit iteration;
//! - [`pressure`]: the pressure function `P(t, q)` and its partial derivatives
//!   for the Khintchine, log-digit, exp-digit and Lyapunov potentials;
//! - [`spectrum`]: closed-form and Newton-solved dimension spectra;
//! - [`gibbs`]: the product Gibbs measures as digit distributions, with
//!   seeded sampling and empirical Birkhoff / local-dimension checks.

pub mod error;
pub mod expansion;
pub mod gibbs;
pub mod numerics;
pub mod potential;
pub mod pressure;
pub mod spectrum;

pub use error::{Error, Result};
pub use expansion::{CylinderInterval, Decoded, DigitSequence, ExactRational, Tail};
pub use gibbs::{DigitDistribution, SampleReport};
pub use potential::PotentialKind;
pub use pressure::{PressureEval, PressurePoint};
pub use spectrum::{Method, SolverConfig, SpectrumCurve, SpectrumSolution};
