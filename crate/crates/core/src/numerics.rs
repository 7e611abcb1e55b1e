//! Small numerical building blocks shared by the pressure evaluators.

use std::ops::{Add, Mul, Sub};
use std::sync::OnceLock;

/// Neumaier's compensated sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for x in iter {
            s.add(x);
        }
        s
    }
}

/// Nodes and weights of the 16-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre_16() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| gauss_legendre(16))
}

/// Gauss–Legendre rule of order `n` by Newton iteration on `P_n`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    let nf = n as f64;
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Truncated power series `Σ c_k ε^k`, `k < N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Taylor<const N: usize>(pub [f64; N]);

impl<const N: usize> Taylor<N> {
    pub fn constant(c: f64) -> Self {
        let mut a = [0.0; N];
        a[0] = c;
        Taylor(a)
    }

    /// `x0 + ε`
    pub fn variable(x0: f64) -> Self {
        let mut a = [0.0; N];
        a[0] = x0;
        if N > 1 {
            a[1] = 1.0;
        }
        Taylor(a)
    }

    pub fn scale(self, s: f64) -> Self {
        Taylor(self.0.map(|c| c * s))
    }

    /// `ln(x0 + ε)` expanded at `x0 > 0`.
    pub fn ln_of_shifted(x0: f64) -> Self {
        let mut a = [0.0; N];
        a[0] = x0.ln();
        let mut pow = 1.0;
        for (k, c) in a.iter_mut().enumerate().skip(1) {
            pow /= x0;
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            *c = sign * pow / k as f64;
        }
        Taylor(a)
    }

    /// `exp(u)` by the recurrence `k g_k = Σ j u_j g_{k−j}`.
    pub fn exp(self) -> Self {
        let u = self.0;
        let mut g = [0.0; N];
        g[0] = u[0].exp();
        for k in 1..N {
            let mut s = 0.0;
            for j in 1..=k {
                s += j as f64 * u[j] * g[k - j];
            }
            g[k] = s / k as f64;
        }
        Taylor(g)
    }

    /// `k`-th derivative at the expansion point.
    pub fn derivative(&self, k: usize) -> f64 {
        let mut fact = 1.0;
        for i in 2..=k {
            fact *= i as f64;
        }
        self.0[k] * fact
    }
}

impl<const N: usize> Add for Taylor<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut a = self.0;
        for (x, y) in a.iter_mut().zip(rhs.0) {
            *x += y;
        }
        Taylor(a)
    }
}

impl<const N: usize> Sub for Taylor<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut a = self.0;
        for (x, y) in a.iter_mut().zip(rhs.0) {
            *x -= y;
        }
        Taylor(a)
    }
}

impl<const N: usize> Mul for Taylor<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut c = [0.0; N];
        for i in 0..N {
            for j in 0..N - i {
                c[i + j] += self.0[i] * rhs.0[j];
            }
        }
        Taylor(c)
    }
}

/// Value with first and second derivative in one real parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet2 {
    pub v: f64,
    pub d1: f64,
    pub d2: f64,
}

impl Jet2 {
    pub fn constant(v: f64) -> Self {
        Jet2 { v, d1: 0.0, d2: 0.0 }
    }

    pub fn variable(v: f64) -> Self {
        Jet2 { v, d1: 1.0, d2: 0.0 }
    }

    pub fn exp(self) -> Self {
        let e = self.v.exp();
        Jet2 {
            v: e,
            d1: e * self.d1,
            d2: e * (self.d2 + self.d1 * self.d1),
        }
    }

    pub fn recip(self) -> Self {
        let r = 1.0 / self.v;
        Jet2 {
            v: r,
            d1: -self.d1 * r * r,
            d2: (2.0 * self.d1 * self.d1 * r - self.d2) * r * r,
        }
    }

    pub fn scale(self, s: f64) -> Self {
        Jet2 {
            v: self.v * s,
            d1: self.d1 * s,
            d2: self.d2 * s,
        }
    }
}

impl Add for Jet2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Jet2 {
            v: self.v + o.v,
            d1: self.d1 + o.d1,
            d2: self.d2 + o.d2,
        }
    }
}

impl Mul for Jet2 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Jet2 {
            v: self.v * o.v,
            d1: self.d1 * o.v + self.v * o.d1,
            d2: self.d2 * o.v + 2.0 * self.d1 * o.d1 + self.v * o.d2,
        }
    }
}

/// Error-free product: `a·b = p + e` exactly.
#[inline]
pub fn two_product(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// `2^-(n·t)` with the product `n·t` carried to double-double precision, so
/// the relative error stays at a few ulps even when `n·t` is large.
#[inline]
pub fn exp2_neg_product(n: f64, t: f64) -> f64 {
    let (p, e) = two_product(n, t);
    let whole = p.floor();
    let frac = p - whole;
    let head = (-frac).exp2() * (-e * std::f64::consts::LN_2).exp();
    scale_pow2(head, -whole)
}

/// `x·2^k` for integral `k`, without intermediate overflow or underflow.
pub fn scale_pow2(mut x: f64, k: f64) -> f64 {
    let mut k = k;
    while k > 1000.0 {
        x *= 2f64.powi(1000);
        k -= 1000.0;
    }
    while k < -1000.0 {
        x *= 2f64.powi(-1000);
        k += 1000.0;
    }
    x * 2f64.powi(k as i32)
}
