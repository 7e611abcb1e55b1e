use std::f64::consts::LN_2;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// The digit functional `f` whose Birkhoff averages are studied.
///
/// The weight of digit `n` in the pressure sum is
/// `a_n(t, q) = −n·t·log 2 + q·f(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PotentialKind {
    /// `f(n) = n`
    Khintchine,
    /// `f(n) = log n`
    LogDigit,
    /// `f(n) = 2ⁿ`
    ExpDigit,
    /// `f(n) = n·log 2`, i.e. `log |T'|` on the n-th branch.
    Lyapunov,
}

impl PotentialKind {
    pub const ALL: [PotentialKind; 4] = [
        PotentialKind::Khintchine,
        PotentialKind::LogDigit,
        PotentialKind::ExpDigit,
        PotentialKind::Lyapunov,
    ];

    /// Value of the digit functional at `n`.
    pub fn digit_value(self, n: u64) -> f64 {
        match self {
            PotentialKind::Khintchine => n as f64,
            PotentialKind::LogDigit => (n as f64).ln(),
            PotentialKind::ExpDigit => (n as f64).exp2(),
            PotentialKind::Lyapunov => n as f64 * LN_2,
        }
    }

    /// Log-weight `a_n(t, q)` of digit `n`.
    pub fn log_weight(self, n: u64, t: f64, q: f64) -> f64 {
        -(n as f64) * t * LN_2 + q * self.digit_value(n)
    }

    /// Smallest value the Birkhoff average can take; level sets are studied
    /// strictly above it.
    pub fn xi_lower_bound(self) -> f64 {
        match self {
            PotentialKind::Khintchine => 1.0,
            PotentialKind::LogDigit => 0.0,
            PotentialKind::ExpDigit => 2.0,
            PotentialKind::Lyapunov => LN_2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PotentialKind::Khintchine => "khintchine",
            PotentialKind::LogDigit => "logdigit",
            PotentialKind::ExpDigit => "expdigit",
            PotentialKind::Lyapunov => "lyapunov",
        }
    }
}

impl fmt::Display for PotentialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PotentialKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "khintchine" => Ok(PotentialKind::Khintchine),
            "logdigit" | "log-digit" | "log" => Ok(PotentialKind::LogDigit),
            "expdigit" | "exp-digit" | "exp" => Ok(PotentialKind::ExpDigit),
            "lyapunov" => Ok(PotentialKind::Lyapunov),
            other => Err(Error::Parse(format!("unknown potential '{other}'"))),
        }
    }
}
