//! Gauss and Kummer hypergeometric series for real arguments.
//!
//! Plain power-series summation. The arguments met by the Janowski convex
//! radii stay well inside the unit interval, so no transformation formulas
//! are used.

use crate::error::{Error, Result};

pub const MAX_TERMS: usize = 10_000;
pub const DEFAULT_TOL: f64 = 1e-15;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricQuery {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub x: f64,
    /// Relative tolerance on the truncated sum.
    pub tol: f64,
}

impl HypergeometricQuery {
    pub fn new(a: f64, b: f64, c: f64, x: f64) -> Self {
        Self {
            a,
            b,
            c,
            x,
            tol: DEFAULT_TOL,
        }
    }

    /// Query for `₁F₁(a; c; x)`; `b` is unused.
    pub fn confluent(a: f64, c: f64, x: f64) -> Self {
        Self::new(a, 0.0, c, x)
    }
}

fn check_c(c: f64) -> Result<()> {
    if c <= 0.0 && c.fract() == 0.0 {
        return Err(Error::InvalidHypergeometric(c));
    }
    Ok(())
}

/// Sums `Σ t_k` where `t_{k+1} = t_k * ratio(k)`, stopping once the
/// geometric tail estimate drops below `tol * |sum|`. `limit` is the limit
/// of `|ratio(k)|` as `k → ∞`.
fn sum_series(
    what: &str,
    tol: f64,
    limit: f64,
    ratio: impl Fn(usize) -> f64,
) -> Result<f64> {
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..MAX_TERMS {
        let rho = ratio(k);
        term *= rho;
        if term == 0.0 {
            return Ok(sum);
        }
        sum += term;
        let q = ratio(k + 1).abs().max(limit);
        if q < 1.0 {
            let tail = (term * ratio(k + 1)).abs() / (1.0 - q);
            if tail <= tol * sum.abs() {
                return Ok(sum);
            }
        }
    }
    Err(Error::NonConvergence {
        what: what.to_string(),
        order: MAX_TERMS,
    })
}

/// `₂F₁(a, b; c; x)` for `|x| < 1`.
pub fn gauss_2f1(q: HypergeometricQuery) -> Result<f64> {
    check_c(q.c)?;
    if q.x.abs() >= 1.0 {
        return Err(Error::Precondition(format!(
            "2F1 requires |x| < 1, got x = {}",
            q.x
        )));
    }
    let HypergeometricQuery { a, b, c, x, tol } = q;
    sum_series("2F1 series", tol, x.abs(), |k| {
        let k = k as f64;
        (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x
    })
}

/// `₁F₁(a; c; x)`, an entire function of `x`.
pub fn kummer_1f1(q: HypergeometricQuery) -> Result<f64> {
    check_c(q.c)?;
    let HypergeometricQuery { a, c, x, tol, .. } = q;
    sum_series("1F1 series", tol, 0.0, |k| {
        let k = k as f64;
        (a + k) / ((c + k) * (k + 1.0)) * x
    })
}
