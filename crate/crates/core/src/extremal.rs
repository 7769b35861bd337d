//! The extremal function `f₀(z) = z exp ∫_0^z (ψ(t) - 1)/t dt` of
//! `S*(ψ)`, its Koebe radius `-f₀(-1)` and the majorant `f̂₀(r) = Σ |t_n| r^n`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::catalog::{MindaFunction, Orientation};
use crate::error::{Error, Result};
use crate::quad;
use crate::series::{self, PowerSeries};

/// Known closed forms of `f₀`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClosedF0 {
    /// `z (1 + Ez)^{(D-E)/E}`, or `z e^{Dz}` when `E = 0`.
    Janowski { d: f64, e: f64 },
    /// `z exp(e^z - 1)`.
    Cardioid,
    /// `4z exp(2√(1+z) - 2) / (1 + √(1+z))²`.
    Lemniscate,
}

impl ClosedF0 {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let one = Complex64::new(1.0, 0.0);
        match *self {
            ClosedF0::Janowski { d, e: 0.0 } => z * (z * d).exp(),
            ClosedF0::Janowski { d, e } => z * ((one + z * e).ln() * ((d - e) / e)).exp(),
            ClosedF0::Cardioid => z * (z.exp() - 1.0).exp(),
            ClosedF0::Lemniscate => {
                let root = (one + z).sqrt();
                z * 4.0 * (root * 2.0 - 2.0).exp() / ((one + root) * (one + root))
            }
        }
    }

    fn for_entry(f: &MindaFunction) -> Option<Self> {
        match f.id() {
            "janowski" => Some(ClosedF0::Janowski {
                d: f.param("D")?,
                e: f.param("E")?,
            }),
            "order_alpha" => Some(ClosedF0::Janowski {
                d: 1.0 - 2.0 * f.param("alpha")?,
                e: -1.0,
            }),
            "cardioid" => Some(ClosedF0::Cardioid),
            "lemniscate" => Some(ClosedF0::Lemniscate),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KoebeMethod {
    ClosedForm,
    Series,
    Quadrature,
}

#[derive(Debug, Clone)]
pub struct ExtremalFunction {
    psi: MindaFunction,
    series: PowerSeries,
    closed_form: Option<ClosedF0>,
    koebe_radius: f64,
    koebe_method: KoebeMethod,
}

/// `z · exp(∫ (ψ - 1)/t)` computed coefficientwise; the result has order
/// `psi.order() + 1`.
pub fn extremal_series(psi: &PowerSeries) -> Result<PowerSeries> {
    Ok(psi.integrate_kernel()?.exp()?.mul_z())
}

/// Builds `f₀` for `ψ` with series order `order` (≥ 8).
pub fn synth_f0(psi: &MindaFunction, order: usize) -> Result<ExtremalFunction> {
    if order < 8 {
        return Err(Error::Precondition(format!(
            "extremal synthesis needs order >= 8, got {order}"
        )));
    }
    let series = extremal_series(&psi.series(order)?)?;
    let closed_form = ClosedF0::for_entry(psi);
    let mut e = ExtremalFunction {
        psi: psi.clone(),
        series,
        closed_form,
        koebe_radius: f64::NAN,
        koebe_method: KoebeMethod::ClosedForm,
    };
    let (koebe, method) = e.compute_koebe()?;
    if !(koebe > 0.0) {
        return Err(Error::Precondition(format!(
            "Koebe radius of {} is not positive ({koebe})",
            psi.id()
        )));
    }
    e.koebe_radius = koebe;
    e.koebe_method = method;
    Ok(e)
}

/// Coefficient `t_n` of `z (1 + Ez)^{(D-E)/E}`, i.e.
/// `binom((D-E)/E, n-1) E^{n-1} = Π_{j=1}^{n-1} (D - jE) / j`.
/// For `E = 0` this is the limit `D^{n-1}/(n-1)!`.
pub fn janowski_tn(d: f64, e: f64, n: usize) -> f64 {
    (1..n).map(|j| (d - j as f64 * e) / j as f64).product()
}

impl ExtremalFunction {
    pub fn psi(&self) -> &MindaFunction {
        &self.psi
    }

    pub fn psi_id(&self) -> &str {
        self.psi.id()
    }

    pub fn series(&self) -> &PowerSeries {
        &self.series
    }

    pub fn closed_form(&self) -> Option<ClosedF0> {
        self.closed_form
    }

    /// `r* = -f₀(-1)`, or `f₀(1)` for a negatively oriented `ψ`.
    pub fn koebe_radius(&self) -> f64 {
        self.koebe_radius
    }

    pub fn koebe_method(&self) -> KoebeMethod {
        self.koebe_method
    }

    fn series_at(&self, r: f64) -> Result<PowerSeries> {
        if self.series.converged_at(r) {
            return Ok(self.series.clone());
        }
        series::escalate(
            &format!("extremal series of {}", self.psi.id()),
            r,
            self.series.order(),
            |n| extremal_series(&self.psi.series(n)?),
        )
    }

    /// The real boundary point nearest to the origin in the image: `-1`
    /// for positively oriented `ψ`, `+1` when `ψ'(0) < 0`.
    fn koebe_point(&self) -> f64 {
        if self.psi.orientation() == Orientation::Negative {
            1.0
        } else {
            -1.0
        }
    }

    fn compute_koebe(&self) -> Result<(f64, KoebeMethod)> {
        let x = self.koebe_point();
        let z = Complex64::new(x, 0.0);
        if let Some(cf) = self.closed_form {
            return Ok((cf.eval(z).re.abs(), KoebeMethod::ClosedForm));
        }
        if let Ok(s) = self.series_at(1.0) {
            return Ok((s.eval(z).re.abs(), KoebeMethod::Series));
        }
        // |f₀(x)| = exp ∫_0^1 (ψ(xs) - 1)/s ds; the integrand stays bounded
        // on [0, 1] for every catalog entry.
        let psi = &self.psi;
        let integral = quad::integrate(
            |s| (psi.eval_raw(Complex64::new(x * s, 0.0)).re - 1.0) / s,
            0.0,
            1.0,
            1e-13,
        )?;
        Ok((integral.exp(), KoebeMethod::Quadrature))
    }

    /// `f₀(z)` for `|z| ≤ 1`: closed form when known, else the series
    /// (escalated until its tail is small), else quadrature along the ray
    /// from 0 to `z`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if let Some(cf) = self.closed_form {
            return Ok(cf.eval(z));
        }
        let r = z.norm();
        if r > 1.0 + 1e-12 {
            return Err(Error::Domain { r, limit: 1.0 });
        }
        if let Ok(s) = self.series_at(r) {
            return Ok(s.eval(z));
        }
        let psi = &self.psi;
        let rule = quad::gauss_legendre(20);
        let integral = quad::integrate_unit_complex(
            |s| (psi.eval_raw(z * s) - 1.0) / s,
            &rule,
            64,
        );
        Ok(z * integral.exp())
    }

    /// `f₀(x)` for real `x`.
    pub fn eval_real(&self, x: f64) -> Result<f64> {
        self.eval(Complex64::new(x, 0.0)).map(|w| w.re)
    }

    /// `max_{|z|=r} |f₀(z)|`, attained at `z = r` (or `-r` when `ψ'(0) < 0`).
    pub fn max_growth(&self, r: f64) -> Result<f64> {
        Ok(self.eval_real(-self.koebe_point() * r)?.abs())
    }

    /// `f₀'(z) = ψ(z) f₀(z) / z`, with `f₀'(0) = 1`.
    pub fn derivative(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() == 0.0 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        Ok(self.psi.eval_raw(z) * self.eval(z)? / z)
    }

    /// `f̂₀(r) = r + Σ_{n≥2} |t_n| r^n`.
    pub fn f0_hat(&self, r: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&r) {
            return Err(Error::Domain { r, limit: 1.0 });
        }
        Ok(self.series_at(r)?.abs_eval(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn koebe_function_for_order_zero() {
        let e = synth_f0(&MindaFunction::order_alpha(0.0).unwrap(), 16).unwrap();
        for n in 1..=16 {
            assert!((e.series().coeff(n).re - n as f64).abs() < 1e-12);
        }
        assert_eq!(e.koebe_radius(), 0.25);
        assert_eq!(e.koebe_method(), KoebeMethod::ClosedForm);
    }

    #[test]
    fn cardioid_coefficients() {
        let e = synth_f0(&MindaFunction::cardioid(), 16).unwrap();
        let expected = [0.0, 1.0, 1.0, 1.0, 5.0 / 6.0];
        for (n, v) in expected.iter().enumerate() {
            assert!((e.series().coeff(n).re - v).abs() < 1e-15);
        }
        assert!((e.koebe_radius() - (1f64.exp().recip() - 1.0).exp()).abs() < 1e-15);
    }

    #[test]
    fn lemniscate_koebe() {
        let e = synth_f0(&MindaFunction::lemniscate(), 64).unwrap();
        assert!((e.koebe_radius() - 4.0 / 1f64.exp().powi(2)).abs() < 1e-15);
        assert!((e.koebe_radius() - 0.541_341).abs() < 1e-6);
    }

    #[test]
    fn order_alpha_koebe() {
        for alpha in [0.0, 0.25, 0.5] {
            let e = synth_f0(&MindaFunction::order_alpha(alpha).unwrap(), 16).unwrap();
            assert_eq!(e.koebe_radius(), 2f64.powf(-2.0 * (1.0 - alpha)));
        }
    }

    #[test]
    fn quadrature_koebe_matches_closed_form() {
        // sqrt_plus is the lemniscate without its attached closed form.
        let e = synth_f0(&MindaFunction::sqrt_plus(), 64).unwrap();
        assert_eq!(e.koebe_method(), KoebeMethod::Quadrature);
        assert!((e.koebe_radius() - 4.0 / 1f64.exp().powi(2)).abs() < 1e-11);
    }

    #[test]
    fn negative_orientation_uses_the_right_endpoint() {
        let e = synth_f0(&MindaFunction::sqrt_minus(), 64).unwrap();
        let plus = synth_f0(&MindaFunction::sqrt_plus(), 64).unwrap();
        // f₀ for √(1 - z) is -f₀(-z) for √(1 + z).
        assert!((e.koebe_radius() - plus.koebe_radius()).abs() < 1e-11);
        assert!(e.koebe_radius() < 1.0);
    }

    #[test]
    fn janowski_coefficients() {
        assert_eq!(janowski_tn(1.0, -1.0, 2), 2.0);
        assert_eq!(janowski_tn(1.0, -1.0, 3), 3.0);
        assert!((janowski_tn(0.5, -0.5, 2) - 1.0).abs() < 1e-15);
        let e = synth_f0(&MindaFunction::janowski(0.6, 0.3).unwrap(), 12).unwrap();
        for n in 2..=12 {
            assert!((e.series().coeff(n).re - janowski_tn(0.6, 0.3, n)).abs() < 1e-14);
        }
    }

    #[test]
    fn f0_hat_at_origin() {
        let e = synth_f0(&MindaFunction::sine(), 32).unwrap();
        assert_eq!(e.f0_hat(0.0).unwrap(), 0.0);
        assert!(e.f0_hat(1.5).is_err());
    }

    #[test]
    fn rejects_small_order_and_unnormalized_psi() {
        assert!(synth_f0(&MindaFunction::exp(), 4).is_err());
        let f = MindaFunction::ab_power(2.0, 0.5).unwrap();
        assert!(matches!(synth_f0(&f, 16), Err(Error::ConstantTerm { .. })));
    }
}
