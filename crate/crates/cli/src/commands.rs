use std::fmt;
use std::str::FromStr;

use p2gle::expansion::{self, Decoded};
use p2gle::gibbs::empirical_level_set_check_with;
use p2gle::pressure::xi0;
use p2gle::spectrum::{
    inflection_function, khintchine_inflection, second_derivative_sign_changes, solve_system_with,
    spectrum_curve, spectrum_point,
};
use p2gle::{DigitSequence, Error, ExactRational, PotentialKind, SolverConfig, SpectrumSolution, Tail};
use serde_json::{json, Value};

use crate::{GlobalOpts, TailArg};

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(Error::Domain(_)) => "domain",
            CliError::Core(Error::Parse(_)) => "parse",
            CliError::Core(Error::Convergence(_)) => "convergence",
            CliError::Core(Error::NonConvergence { .. }) => "non_convergence",
            CliError::Core(Error::Support { .. }) => "support",
            CliError::Core(Error::Empty) => "empty",
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_numerical() => 2,
            _ => 1,
        }
    }
}

/// A command result in both output formats.
pub struct Output {
    pub csv: String,
    pub json: Value,
}

/// 17 significant digits.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn solver_config(g: &GlobalOpts) -> Result<SolverConfig, CliError> {
    if g.tol.is_nan() || g.tol <= 0.0 || g.max_iter == 0 {
        return Err(CliError::Usage(format!(
            "--tol must be positive and --max-iter at least 1, got {} and {}",
            g.tol, g.max_iter
        )));
    }
    Ok(SolverConfig {
        tol: g.tol,
        max_iter: g.max_iter,
        ..SolverConfig::default()
    })
}

/// A level value: a number, `xi0`, or `inf` (exp-digit only).
fn parse_level(kind: PotentialKind, s: &str) -> Result<f64, CliError> {
    match s.trim().to_ascii_lowercase().as_str() {
        "xi0" => Ok(xi0()),
        "inf" | "+inf" | "infinity" => {
            if kind == PotentialKind::ExpDigit {
                Ok(f64::INFINITY)
            } else {
                Err(Error::Domain(format!("xi = inf is only meaningful for expdigit, not {kind}")).into())
            }
        }
        other => match other.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(Error::Parse(format!("cannot read '{s}' as a level value")).into()),
        },
    }
}

pub fn encode(x: &str, depth: usize) -> Result<Output, CliError> {
    if depth == 0 {
        return Err(CliError::Usage("--digits must be at least 1".into()));
    }
    let x = ExactRational::from_str(x)?;
    let digits = expansion::encode(&x, depth)?;
    let cyl = expansion::cylinder(&digits)?;
    Ok(Output {
        csv: format!("{digits}\n{},{}\n", cyl.left, cyl.right),
        json: json!({
            "x": x.to_string(),
            "digits": digits.digits,
            "left": cyl.left.to_string(),
            "right": cyl.right.to_string(),
        }),
    })
}

pub fn decode(digits: &str, tail: TailArg) -> Result<Output, CliError> {
    let mut seq = DigitSequence::from_str(digits)?;
    seq.tail = match tail {
        TailArg::AllOnes => Tail::AllOnes,
        TailArg::Unspecified => Tail::Unspecified,
    };
    Ok(match expansion::decode(&seq)? {
        Decoded::Point(x) => Output {
            csv: format!("{x}\n"),
            json: json!({ "digits": seq.digits, "tail": "all-ones", "value": x.to_string() }),
        },
        Decoded::Cylinder(c) => Output {
            csv: format!("{},{}\n", c.left, c.right),
            json: json!({
                "digits": seq.digits,
                "tail": "unspecified",
                "left": c.left.to_string(),
                "right": c.right.to_string(),
                "length": c.length().to_string(),
            }),
        },
    })
}

const SOLUTION_HEADER: &str = "xi,t,q,t_prime,residual_P,residual_dPdq,iterations,method";

fn solution_row(s: &SpectrumSolution) -> String {
    let method = serde_json::to_value(s.method).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
    format!(
        "{},{},{},{},{},{},{},{}",
        num(s.xi),
        num(s.t),
        num(s.q),
        num(s.t_prime),
        num(s.residual_p),
        num(s.residual_dpdq),
        s.iterations,
        method
    )
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<Value, CliError> {
    serde_json::to_value(v).map_err(|e| CliError::Io(e.to_string()))
}

pub fn solve(g: &GlobalOpts, kind: PotentialKind, xi: &str, newton: bool) -> Result<Output, CliError> {
    let cfg = solver_config(g)?;
    let xi = parse_level(kind, xi)?;
    let sol = if newton {
        solve_system_with(kind, xi, None, &cfg)?
    } else {
        spectrum_point(kind, xi, &cfg)?
    };
    Ok(Output {
        csv: format!("{SOLUTION_HEADER}\n{}\n", solution_row(&sol)),
        json: to_json(&sol)?,
    })
}

pub fn spectrum(
    g: &GlobalOpts,
    kind: PotentialKind,
    xi_min: &str,
    xi_max: &str,
    steps: usize,
) -> Result<Output, CliError> {
    let cfg = solver_config(g)?;
    let lo = parse_level(kind, xi_min)?;
    let hi = parse_level(kind, xi_max)?;
    let curve = spectrum_curve(kind, lo, hi, steps, &cfg)?;
    let mut csv = String::from("xi,t,q,t_prime\n");
    for r in &curve.rows {
        csv.push_str(&format!("{},{},{},{}\n", num(r.xi), num(r.t), num(r.q), num(r.t_prime)));
    }
    Ok(Output {
        csv,
        json: to_json(&curve)?,
    })
}

pub fn inflection(lo: f64, hi: f64, points: usize) -> Result<Output, CliError> {
    let xi = khintchine_inflection();
    let residual = inflection_function(xi);
    let changes = second_derivative_sign_changes(lo, hi, points)?;
    let summary = match changes {
        1 => "1 sign change".to_owned(),
        n => format!("{n} sign changes"),
    };
    Ok(Output {
        csv: format!("xi_tilde,residual,sign_changes\n{},{},{changes}\n", num(xi), num(residual)),
        json: json!({
            "xi_tilde": xi,
            "residual": residual,
            "sign_changes": changes,
            "scan_lo": lo,
            "scan_hi": hi,
            "scan_points": points,
            "summary": summary,
        }),
    })
}

pub fn sample(
    g: &GlobalOpts,
    kind: PotentialKind,
    xi: &str,
    n_points: usize,
    depth: usize,
) -> Result<Output, CliError> {
    let cfg = solver_config(g)?;
    let xi = parse_level(kind, xi)?;
    let r = empirical_level_set_check_with(kind, xi, n_points, depth, g.seed, &cfg)?;
    let csv = format!(
        "potential,xi,t,q,n_points,depth,seed,birkhoff_mean,birkhoff_stderr,local_dimension_mean,local_dimension_stderr\n\
         {},{},{},{},{},{},{},{},{},{},{}\n",
        r.kind,
        num(r.xi),
        num(r.t),
        num(r.q),
        r.n_points,
        r.depth,
        r.seed,
        num(r.birkhoff_mean),
        num(r.birkhoff_stderr),
        num(r.local_dimension_mean),
        num(r.local_dimension_stderr)
    );
    Ok(Output {
        csv,
        json: to_json(&r)?,
    })
}
