//! Truncated power series with complex coefficients.
//!
//! A [`PowerSeries`] of order `N` stores `c_0..=c_N`. Binary operations
//! truncate to the smaller order of their operands. Everything here is a
//! plain value computation: no caching, no shared state.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default truncation order for synthesized series.
pub const DEFAULT_ORDER: usize = 64;

/// Largest order the escalation loop will try before giving up.
pub const MAX_ORDER: usize = 512;

/// A series is considered converged at radius `r` when
/// `max(|c_N|, |c_{N-1}|) * N * r^N` falls below this bound.
pub const TAIL_TOLERANCE: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<Complex64>,
}

impl PowerSeries {
    /// Builds a series from `c_0..=c_N`.
    ///
    /// # Panics
    ///
    /// Panics if fewer than two coefficients are given (order must be ≥ 1).
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        assert!(coeffs.len() >= 2, "truncation order must be at least 1");
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// Series of order `order` whose coefficients are produced by `f(n)`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> f64) -> Self {
        let mut f = f;
        Self::new((0..=order).map(|n| Complex64::new(f(n), 0.0)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Complex64::new(0.0, 0.0); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Complex64::new(1.0, 0.0);
        s
    }

    /// The identity map `z`.
    pub fn variable(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[1] = Complex64::new(1.0, 0.0);
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient `c_n`, zero beyond the truncation order.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Complex64::default());
        Self::new(coeffs)
    }

    pub fn scale(&self, k: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// True when every imaginary part is below `tol` in magnitude.
    pub fn is_real(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.im.abs() <= tol)
    }

    /// The series of `a(s z)`: coefficients `c_n s^n`.
    pub fn dilate(&self, s: Complex64) -> Self {
        let mut power = Complex64::new(1.0, 0.0);
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    let out = c * power;
                    power *= s;
                    out
                })
                .collect(),
        )
    }

    /// Multiplies by `z`; the order grows by one so nothing is lost.
    pub fn mul_z(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::default());
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    /// Divides by `z`; requires `c_0 = 0`.
    pub fn div_z(&self) -> Result<Self> {
        self.require_vanishing("div_z")?;
        let mut coeffs = self.coeffs[1..].to_vec();
        if coeffs.len() < 2 {
            coeffs.push(Complex64::default());
        }
        Ok(Self::new(coeffs))
    }

    fn require_vanishing(&self, op: &'static str) -> Result<()> {
        if self.coeffs[0].norm() > 1e-14 {
            return Err(Error::ConstantTerm {
                op,
                expected: "0",
                found: self.coeffs[0],
            });
        }
        Ok(())
    }

    fn require_normalized(&self, op: &'static str) -> Result<()> {
        if (self.coeffs[0] - 1.0).norm() > 1e-12 {
            return Err(Error::ConstantTerm {
                op,
                expected: "1",
                found: self.coeffs[0],
            });
        }
        Ok(())
    }

    /// `exp(a)` for a series with vanishing constant term, via
    /// `d_n = (1/n) Σ_{k=1}^{n} k a_k d_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        self.require_vanishing("exp")?;
        let n_max = self.order();
        let mut d = vec![Complex64::default(); n_max + 1];
        d[0] = Complex64::new(1.0, 0.0);
        for n in 1..=n_max {
            let mut acc = Complex64::default();
            for k in 1..=n {
                acc += self.coeffs[k] * d[n - k] * k as f64;
            }
            d[n] = acc / n as f64;
        }
        Ok(Self::new(d))
    }

    /// Principal logarithm of a normalized series (`c_0 = 1`).
    pub fn ln(&self) -> Result<Self> {
        self.require_normalized("ln")?;
        let n_max = self.order();
        let mut l = vec![Complex64::default(); n_max + 1];
        for n in 1..=n_max {
            let mut acc = Complex64::default();
            for k in 1..n {
                acc += l[k] * self.coeffs[n - k] * k as f64;
            }
            l[n] = self.coeffs[n] - acc / n as f64;
        }
        Ok(Self::new(l))
    }

    /// `a^p` for a normalized series using the J. C. P. Miller recurrence.
    pub fn powf(&self, p: f64) -> Result<Self> {
        self.require_normalized("powf")?;
        let n_max = self.order();
        let mut b = vec![Complex64::default(); n_max + 1];
        b[0] = Complex64::new(1.0, 0.0);
        for n in 1..=n_max {
            let mut acc = Complex64::default();
            for k in 1..=n {
                acc += self.coeffs[k] * b[n - k] * ((p + 1.0) * k as f64 - n as f64);
            }
            b[n] = acc / n as f64;
        }
        Ok(Self::new(b))
    }

    /// Long division `self / rhs`; `rhs` must have a nonzero constant term.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        let b0 = rhs.coeffs[0];
        if b0.norm() < 1e-300 {
            return Err(Error::Pole);
        }
        let n_max = self.order().min(rhs.order());
        let mut q = vec![Complex64::default(); n_max + 1];
        for n in 0..=n_max {
            let mut acc = self.coeffs[n];
            for k in 1..=n {
                acc -= rhs.coeffs[k] * q[n - k];
            }
            q[n] = acc / b0;
        }
        Ok(Self::new(q))
    }

    /// `∫_0^z (ψ(t) - 1)/t dt = Σ_{n≥1} (B_n / n) z^n` for normalized `ψ`.
    pub fn integrate_kernel(&self) -> Result<Self> {
        self.require_normalized("integrate_kernel")?;
        let mut coeffs = vec![Complex64::default(); self.coeffs.len()];
        for (n, c) in self.coeffs.iter().enumerate().skip(1) {
            coeffs[n] = c / n as f64;
        }
        Ok(Self::new(coeffs))
    }

    /// `(1/z) ∫_0^z a(t) dt`, coefficients `c_n / (n + 1)`.
    pub fn mean_integral(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c / (n + 1) as f64)
                .collect(),
        )
    }

    /// Term-wise derivative; the order drops by one (kept ≥ 1).
    pub fn derivative(&self) -> Self {
        let mut coeffs: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| c * n as f64)
            .collect();
        if coeffs.len() < 2 {
            coeffs.push(Complex64::default());
        }
        Self::new(coeffs)
    }

    /// `self ∘ inner` for an inner series with vanishing constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        inner.require_vanishing("compose")?;
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        acc.coeffs[0] = self.coeffs[order];
        for n in (0..order).rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += self.coeffs[n];
        }
        Ok(acc)
    }

    /// Horner evaluation of `Σ c_n z^n`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::default(), |acc, c| acc * z + c)
    }

    /// Horner evaluation over the shortest power-of-two prefix (at least 16
    /// terms) whose tail passes [`TAIL_TOLERANCE`] at `|z|`; the full series
    /// when none does.
    pub fn eval_adaptive(&self, z: Complex64) -> Complex64 {
        let r = z.norm();
        let full = self.order();
        let mut n = 16.min(full);
        while n < full {
            let last = self.coeffs[n].norm().max(self.coeffs[n - 1].norm());
            if last * n as f64 * r.powi(n as i32) < TAIL_TOLERANCE {
                break;
            }
            n = (n * 2).min(full);
        }
        self.coeffs[..=n]
            .iter()
            .rev()
            .fold(Complex64::default(), |acc, c| acc * z + c)
    }

    /// `Σ |c_n| r^n`.
    pub fn abs_eval(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }

    /// Size of the last retained terms at radius `r`, scaled by the order.
    pub fn tail_bound(&self, r: f64) -> f64 {
        let n = self.order();
        let last = self.coeffs[n].norm().max(self.coeffs[n - 1].norm());
        last * n as f64 * r.powi(n as i32)
    }

    pub fn converged_at(&self, r: f64) -> bool {
        self.tail_bound(r) < TAIL_TOLERANCE
    }
}

/// Rebuilds a series at increasing orders (doubling from `start` up to
/// [`MAX_ORDER`]) until it passes the tail test at radius `r`.
pub fn escalate<F>(what: &str, r: f64, start: usize, mut build: F) -> Result<PowerSeries>
where
    F: FnMut(usize) -> Result<PowerSeries>,
{
    let mut order = start.max(2);
    loop {
        let series = build(order)?;
        if series.converged_at(r) {
            return Ok(series);
        }
        if order >= MAX_ORDER {
            return Err(Error::NonConvergence {
                what: format!("{what} at radius {r}"),
                order,
            });
        }
        order = (order * 2).min(MAX_ORDER);
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: Self) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::new((0..=n).map(|k| self.coeffs[k] + rhs.coeffs[k]).collect())
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;

    fn sub(self, rhs: Self) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::new((0..=n).map(|k| self.coeffs[k] - rhs.coeffs[k]).collect())
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;

    fn neg(self) -> PowerSeries {
        PowerSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Cauchy product truncated at the smaller order.
impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: Self) -> PowerSeries {
        let n_max = self.order().min(rhs.order());
        let mut out = vec![Complex64::default(); n_max + 1];
        for (i, a) in self.coeffs.iter().take(n_max + 1).enumerate() {
            if *a == Complex64::default() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n_max + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        PowerSeries::new(out)
    }
}
