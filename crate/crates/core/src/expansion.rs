//! Exact encoding and decoding between rationals in `(0, 1]` and digit
//! sequences of the expansion `x = Σ 2^-(d₁+⋯+dᵢ)`.
//!
//! All arithmetic here is exact. The branch test `2⁻ⁿ < x` is discontinuous,
//! so no floating-point value ever enters this module.
//!
//! Branches are the half-open intervals `(2⁻ⁿ, 2⁻ⁿ⁺¹]`. At a dyadic point
//! `x = 2⁻ᵏ` this gives `d₁ = k + 1` followed by an all-ones tail, which is the
//! unique infinite expansion of `x` (the ceiling formula `⌈−log₂ x⌉` would
//! give `k` there instead).

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(ExactRational(BigRational::new(numerator.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        ExactRational(BigRational::from_integer(n.into()))
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    /// `2^-k`
    pub fn pow2_neg(k: u64) -> Self {
        ExactRational(BigRational::new(BigInt::one(), BigInt::one() << k))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_big_rational(self) -> BigRational {
        self.0
    }

    /// Nearest-ish `f64`, for reporting only.
    pub fn to_f64(&self) -> f64 {
        let (n, d) = (self.numerator(), self.denominator());
        // Shift both into the f64 range before dividing.
        let shift = n.bits().max(d.bits()).saturating_sub(1000) as usize;
        let nf = big_to_f64(&(n >> shift));
        let df = big_to_f64(&(d >> shift));
        nf / df
    }

    fn check_unit_interval(&self) -> Result<()> {
        if !self.0.is_positive() || self.0 > BigRational::one() {
            return Err(Error::Domain(format!("x = {self} is not in (0, 1]")));
        }
        Ok(())
    }
}

fn big_to_f64(n: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    n.to_f64().unwrap_or(match n.sign() {
        Sign::Minus => f64::NEG_INFINITY,
        _ => f64::INFINITY,
    })
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator(), self.denominator())
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactRational({self})")
    }
}

/// Accepts `"p/q"`, integers and finite decimals such as `"0.625"`; all are
/// converted exactly.
impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("cannot parse '{s}' as a rational"));
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            return ExactRational::new(p, q);
        }
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        let all_digits = |p: &str| p.bytes().all(|b| b.is_ascii_digit());
        if !all_digits(int_part) || !all_digits(frac_part) {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut num: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| bad())?
        };
        if negative {
            num = -num;
        }
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        ExactRational::new(num, den)
    }
}

/// Convention for the digits after a finite prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Tail {
    /// The expansion continues with `1, 1, 1, …`; the prefix names a point.
    AllOnes,
    /// Nothing is known beyond the prefix; the prefix names a cylinder.
    #[default]
    Unspecified,
}

/// A finite prefix `d₁ … dₙ` of an expansion.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DigitSequence {
    pub digits: Vec<u64>,
    pub tail: Tail,
}

impl DigitSequence {
    pub fn new(digits: Vec<u64>) -> Result<Self> {
        Self::with_tail(digits, Tail::Unspecified)
    }

    pub fn with_tail(digits: Vec<u64>, tail: Tail) -> Result<Self> {
        if let Some(pos) = digits.iter().position(|&d| d == 0) {
            return Err(Error::Domain(format!("digit {} is zero; digits must be ≥ 1", pos + 1)));
        }
        Ok(DigitSequence { digits, tail })
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().sum()
    }
}

impl fmt::Display for DigitSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Parses a comma-separated list of positive integers.
impl FromStr for DigitSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DigitSequence::default());
        }
        let digits = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad digit '{}'", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        DigitSequence::new(digits)
    }
}

/// The cylinder `(left, right]` of points sharing a digit prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylinderInterval {
    pub left: ExactRational,
    pub right: ExactRational,
    pub depth: usize,
}

impl CylinderInterval {
    pub fn length(&self) -> ExactRational {
        ExactRational(self.right.0.clone() - self.left.0.clone())
    }

    /// Membership in the half-open interval `(left, right]`.
    pub fn contains(&self, x: &ExactRational) -> bool {
        self.left < *x && *x <= self.right
    }
}

/// Result of [`decode`]: a point for [`Tail::AllOnes`], a cylinder otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decoded {
    Point(ExactRational),
    Cylinder(CylinderInterval),
}

/// The unique `n ≥ 1` with `2⁻ⁿ < x ≤ 2⁻ⁿ⁺¹`.
pub fn first_digit(x: &ExactRational) -> Result<u64> {
    x.check_unit_interval()?;
    Ok(first_digit_unchecked(x.numerator(), x.denominator()))
}

// Caller guarantees 0 < p ≤ q.
fn first_digit_unchecked(p: &BigInt, q: &BigInt) -> u64 {
    // p·2^k0 has the same bit length as q, so the answer is k0 or k0 + 1.
    let k0 = q.bits() - p.bits();
    if &(p << k0) > q {
        k0
    } else {
        k0 + 1
    }
}

/// One step of the map: `T x = 2^{d₁(x)} x − 1`.
pub fn apply_t(x: &ExactRational) -> Result<ExactRational> {
    let n = first_digit(x)?;
    Ok(shift(x, n))
}

fn shift(x: &ExactRational, n: u64) -> ExactRational {
    let p = x.numerator();
    let q = x.denominator();
    ExactRational(BigRational::new((p << n) - q, q.clone()))
}

/// The first `depth` digits of `x`.
pub fn encode(x: &ExactRational, depth: usize) -> Result<DigitSequence> {
    x.check_unit_interval()?;
    let mut digits = Vec::with_capacity(depth);
    let mut y = x.clone();
    for _ in 0..depth {
        let n = first_digit_unchecked(y.numerator(), y.denominator());
        digits.push(n);
        y = shift(&y, n);
    }
    Ok(DigitSequence {
        digits,
        tail: Tail::Unspecified,
    })
}

/// Digits with all-ones tail decode to the point `Σᵢ 2^-(d₁+⋯+dᵢ) + 2^-(d₁+⋯+dₙ)`;
/// otherwise to the cylinder `(partial sum, partial sum + 2^-(d₁+⋯+dₙ)]`.
pub fn decode(d: &DigitSequence) -> Result<Decoded> {
    let cylinder = cylinder(d)?;
    Ok(match d.tail {
        Tail::AllOnes => Decoded::Point(cylinder.right),
        Tail::Unspecified => Decoded::Cylinder(cylinder),
    })
}

/// The cylinder named by the digit prefix, whatever its tail convention.
pub fn cylinder(d: &DigitSequence) -> Result<CylinderInterval> {
    if d.is_empty() {
        return Err(Error::Empty);
    }
    // Work over the common denominator 2^(Σd).
    let total = d.digit_sum();
    let mut numer = BigInt::zero();
    let mut partial = 0u64;
    for &digit in &d.digits {
        partial += digit;
        numer += BigInt::one() << (total - partial);
    }
    let den = BigInt::one() << total;
    let left = BigRational::new(numer.clone(), den.clone());
    let right = BigRational::new(numer + 1, den);
    Ok(CylinderInterval {
        left: ExactRational(left),
        right: ExactRational(right),
        depth: d.len(),
    })
}

/// The point whose digits repeat `period` forever:
/// `y = S / (1 − 2^-(p₁+⋯+pₖ))` with `S` the partial sum over one period.
pub fn periodic_point(period: &[u64]) -> Result<ExactRational> {
    let seq = DigitSequence::new(period.to_vec())?;
    if seq.is_empty() {
        return Err(Error::Empty);
    }
    let cyl = cylinder(&seq)?;
    let total = seq.digit_sum();
    // S = left endpoint = A / 2^total, so y = A / (2^total − 1).
    let a = cyl.left.0 * BigRational::from_integer(BigInt::one() << total);
    debug_assert!(a.is_integer());
    let den = (BigInt::one() << total) - 1;
    let g = a.numer().gcd(&den);
    Ok(ExactRational(BigRational::new(a.numer() / &g, den / g)))
}

/// Mean of the digits, i.e. the Khintchine exponent of a periodic point.
pub fn digit_mean(period: &[u64]) -> f64 {
    period.iter().map(|&d| d as f64).sum::<f64>() / period.len() as f64
}
