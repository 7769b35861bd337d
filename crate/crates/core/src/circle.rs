//! Extrema of `|ψ|` and `Re ψ` over the circle `|z| = r`.
//!
//! Every function handled here has real Taylor coefficients, so
//! `ψ(conj z) = conj ψ(z)` and it is enough to search `θ ∈ [0, π]`. The
//! search is a uniform scan followed by golden-section refinement of the
//! best few local minima of the sampled sequence; the endpoints `θ = 0`
//! and `θ = π` are always candidates.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::catalog::MindaFunction;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremumKind {
    MinMod,
    MaxMod,
    MinRe,
    MaxRe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    GridRefined,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CircleExtremum {
    pub r: f64,
    /// Extremal angle in `[0, π]`.
    pub theta_star: f64,
    pub value: f64,
    pub kind: ExtremumKind,
    pub method: Method,
}

/// Scan-and-refine parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleScan {
    /// Number of grid intervals on `[0, π]`.
    pub samples: usize,
    /// Width at which golden-section refinement stops.
    pub theta_tol: f64,
    /// How many of the best sampled local minima get refined.
    pub brackets: usize,
}

impl Default for CircleScan {
    fn default() -> Self {
        Self {
            samples: 2048,
            theta_tol: 1e-12,
            brackets: 3,
        }
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

fn golden_section(g: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = g(x1);
    let mut f2 = g(x2);
    while (b - a).abs() > tol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = g(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = g(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Keeps `a` unless `b` is lower by more than rounding noise, so exact
/// endpoint candidates win ties against refined interior points.
fn better(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    if b.1 < a.1 - 4.0 * f64::EPSILON * a.1.abs().max(1e-300) {
        b
    } else {
        a
    }
}

impl CircleScan {
    /// Global minimum of `g` over `[0, π]` as `(θ, g(θ))`.
    pub fn minimize(&self, g: impl Fn(f64) -> f64) -> (f64, f64) {
        let g = |t: f64| {
            let v = g(t);
            if v.is_nan() {
                f64::INFINITY
            } else {
                v
            }
        };
        let n = self.samples.max(2);
        let step = PI / n as f64;
        let thetas: Vec<f64> = (0..=n).map(|k| if k == n { PI } else { k as f64 * step }).collect();
        let values: Vec<f64> = thetas.iter().map(|&t| g(t)).collect();

        let mut minima: Vec<usize> = (0..=n)
            .filter(|&k| {
                (k == 0 || values[k] <= values[k - 1]) && (k == n || values[k] <= values[k + 1])
            })
            .collect();
        minima.sort_by(|&i, &j| values[i].total_cmp(&values[j]).then(i.cmp(&j)));
        minima.truncate(self.brackets.max(1));

        let mut best = better((0.0, values[0]), (PI, values[n]));
        for k in minima {
            let lo = thetas[k.saturating_sub(1)];
            let hi = thetas[(k + 1).min(n)];
            let refined = golden_section(&g, lo, hi, self.theta_tol);
            best = better(best, better((thetas[k], values[k]), refined));
        }
        best
    }

    /// Numeric extremum of `eval` on `|z| = r`.
    pub fn extremum(
        &self,
        eval: impl Fn(Complex64) -> Complex64,
        r: f64,
        kind: ExtremumKind,
    ) -> CircleExtremum {
        let at = |t: f64| eval(Complex64::from_polar(r, t));
        let (theta_star, value) = match kind {
            ExtremumKind::MinMod => self.minimize(|t| at(t).norm()),
            ExtremumKind::MinRe => self.minimize(|t| at(t).re),
            ExtremumKind::MaxMod => {
                let (t, v) = self.minimize(|t| -at(t).norm());
                (t, -v)
            }
            ExtremumKind::MaxRe => {
                let (t, v) = self.minimize(|t| -at(t).re);
                (t, -v)
            }
        };
        CircleExtremum {
            r,
            theta_star,
            value,
            kind,
            method: Method::GridRefined,
        }
    }
}

fn check_radius(f: &MindaFunction, r: f64) -> Result<()> {
    let limit = f.domain_radius();
    let inside = if f.is_restricted() { r < limit } else { r <= limit };
    if r > 0.0 && inside {
        Ok(())
    } else {
        Err(Error::Domain { r, limit })
    }
}

/// `min_{|z|=r} |ψ(z)|`, closed form when the catalog knows the minimizing
/// real point, otherwise scanned.
pub fn min_modulus_on_circle(f: &MindaFunction, r: f64) -> Result<CircleExtremum> {
    check_radius(f, r)?;
    if let Some((theta_star, value)) = f.closed_min_modulus(r) {
        return Ok(CircleExtremum {
            r,
            theta_star,
            value,
            kind: ExtremumKind::MinMod,
            method: Method::ClosedForm,
        });
    }
    Ok(numeric(f, r, ExtremumKind::MinMod))
}

/// `max_{|z|=r} |ψ(z)|`, always scanned. See [`CircleExtremum::on_real_axis`]
/// for whether the maximum sits at `θ = 0`.
pub fn max_modulus_on_circle(f: &MindaFunction, r: f64) -> Result<CircleExtremum> {
    check_radius(f, r)?;
    Ok(numeric(f, r, ExtremumKind::MaxMod))
}

/// `min_{|z|=r} Re ψ(z)` for any evaluator defined on the circle.
pub fn min_re_on_circle(eval: impl Fn(Complex64) -> Complex64, r: f64) -> Result<CircleExtremum> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::Domain { r, limit: 1.0 });
    }
    Ok(CircleScan::default().extremum(eval, r, ExtremumKind::MinRe))
}

/// `max_{|z|=r} Re ψ(z)` for any evaluator defined on the circle.
pub fn max_re_on_circle(eval: impl Fn(Complex64) -> Complex64, r: f64) -> Result<CircleExtremum> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::Domain { r, limit: 1.0 });
    }
    Ok(CircleScan::default().extremum(eval, r, ExtremumKind::MaxRe))
}

/// Scanned extremum of a catalog entry, ignoring any closed form.
pub fn numeric(f: &MindaFunction, r: f64, kind: ExtremumKind) -> CircleExtremum {
    CircleScan::default().extremum(|z| f.eval_raw(z), r, kind)
}

impl CircleExtremum {
    /// True when the extremum sits on the real axis (`θ = 0` or `θ = π`)
    /// up to the refinement tolerance.
    pub fn on_real_axis(&self) -> bool {
        self.theta_star < 1e-9 || (PI - self.theta_star) < 1e-9
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cardioid_unit_circle() {
        let f = MindaFunction::cardioid();
        let m = min_modulus_on_circle(&f, 1.0).unwrap();
        assert_eq!(m.method, Method::GridRefined);
        assert!((m.theta_star - 1.88438).abs() < 5e-6, "{m:?}");
        assert!((m.value - 0.372412).abs() < 5e-7, "{m:?}");
    }

    #[test]
    fn cardioid_two_thirds() {
        let m = min_modulus_on_circle(&MindaFunction::cardioid(), 2.0 / 3.0).unwrap();
        assert!((m.theta_star - 2.17677).abs() < 5e-6, "{m:?}");
        assert!((m.value - 0.611553).abs() < 5e-7, "{m:?}");
    }

    #[test]
    fn exponential_minimum_at_pi() {
        let m = numeric(&MindaFunction::exp(), 0.5, ExtremumKind::MinMod);
        assert!((m.value - (-0.5f64).exp()).abs() < 1e-15);
        assert!((m.theta_star - PI).abs() < 1e-9);
    }

    #[test]
    fn maxima_of_cardioid_and_half_plane() {
        let r = 0.6;
        let m = max_modulus_on_circle(&MindaFunction::cardioid(), r).unwrap();
        assert!((m.value - (1.0 + r * r.exp())).abs() < 1e-14);
        assert!(m.theta_star < 1e-9);
        let m = max_modulus_on_circle(&MindaFunction::janowski(1.0, -1.0).unwrap(), r).unwrap();
        assert!((m.value - (1.0 + r) / (1.0 - r)).abs() < 1e-13);
    }

    #[test]
    fn sine_maximum() {
        let m = max_modulus_on_circle(&MindaFunction::sine(), 0.5).unwrap();
        // Brute-force grid over 10^6 angles.
        let f = MindaFunction::sine();
        let oracle = (0..=1_000_000)
            .map(|k| f.eval_raw(Complex64::from_polar(0.5, PI * k as f64 / 1e6)).norm())
            .fold(f64::MIN, f64::max);
        assert!((m.value - oracle).abs() < 1e-12);
        assert!((m.value - 1.479_426).abs() < 1e-6);
    }

    #[test]
    fn min_real_part_examples() {
        let r: f64 = 0.4;
        let bell = |z: Complex64| {
            if z.norm() == 0.0 {
                Complex64::new(1.0, 0.0)
            } else {
                (z.exp() - 1.0) / z
            }
        };
        let m = min_re_on_circle(bell, r).unwrap();
        assert!((m.value - (1.0 - (-r).exp()) / r).abs() < 1e-14);
        assert!((m.theta_star - PI).abs() < 1e-9);

        let m = min_re_on_circle(|_| Complex64::new(1.0, 0.0), r).unwrap();
        assert_eq!(m.value, 1.0);

        let hallen = |z: Complex64| -1.0 - (1.0 - z).ln() * 2.0 / z;
        let m = min_re_on_circle(hallen, 0.3).unwrap();
        let expected = (2.0 * 1.3f64.ln() - 0.3) / 0.3;
        assert!((m.value - expected).abs() < 1e-13);
        assert!((m.value - 0.749_095).abs() < 1e-6);
    }

    #[test]
    fn rejects_radius_outside_domain() {
        let f = MindaFunction::booth(0.5).unwrap();
        assert!(matches!(min_modulus_on_circle(&f, 0.75), Err(Error::Domain { .. })));
        assert!(min_modulus_on_circle(&MindaFunction::exp(), 0.0).is_err());
        assert!(min_modulus_on_circle(&MindaFunction::exp(), 1.01).is_err());
    }
}
