//! Registry of Ma-Minda functions `ψ` with `ψ(0) = 1`.
//!
//! Each entry knows how to evaluate itself on the closed disk, how to
//! expand itself as a power series, the sign of `ψ'(0)`, and, where one is
//! known, on which real point `|ψ|` attains its minimum over `|z| = r`.
//! Functions outside the registry can be injected with
//! [`MindaFunction::custom`].

use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::PowerSeries;

pub type Params = BTreeMap<String, f64>;

/// Every shipped catalog key, in listing order.
pub const IDS: [&str; 15] = [
    "janowski",
    "order_alpha",
    "power_eta",
    "rl_crescent",
    "ab_power",
    "exp",
    "crescent",
    "sigmoid",
    "sine",
    "cardioid",
    "sqrt_plus",
    "sqrt_minus",
    "linear",
    "booth",
    "lemniscate",
];

/// Radius up to which the cardioid `1 + z e^z` is known to attain its
/// minimum modulus at `z = -r`.
pub fn cardioid_real_axis_threshold() -> f64 {
    (3.0 - 5f64.sqrt()) / 2.0
}

/// Positive root of `α r² + r - 1 = 0`; `Re ψ > 0` for the Booth function
/// only inside this radius.
pub fn booth_domain_radius(alpha: f64) -> f64 {
    (-1.0 + (1.0 + 4.0 * alpha).sqrt()) / (2.0 * alpha)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Positive,
    Negative,
    /// `ψ'(0) = 0`; only possible for injected functions such as `ψ ≡ 1`.
    Flat,
}

impl Orientation {
    fn of(b1: f64) -> Self {
        if b1 > 0.0 {
            Orientation::Positive
        } else if b1 < 0.0 {
            Orientation::Negative
        } else {
            Orientation::Flat
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Positive => "+",
            Orientation::Negative => "-",
            Orientation::Flat => "0",
        })
    }
}

/// Where `min_{|z|=r} |ψ(z)|` is attained, when known in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum MinModulusForm {
    AtMinusR,
    AtPlusR,
    /// `-r` for `r ≤ threshold`, numeric beyond it.
    AtMinusRUpTo { threshold: f64 },
    Numeric,
}

impl fmt::Display for MinModulusForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinModulusForm::AtMinusR => f.write_str("at_minus_r"),
            MinModulusForm::AtPlusR => f.write_str("at_plus_r"),
            MinModulusForm::AtMinusRUpTo { threshold } => {
                write!(f, "at_minus_r for r <= {threshold:.6}, numeric beyond")
            }
            MinModulusForm::Numeric => f.write_str("numeric"),
        }
    }
}

type Evaluator = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

#[derive(Clone)]
enum Shape {
    Janowski { d: f64, e: f64 },
    PowerEta { eta: f64 },
    RlCrescent,
    AbPower { a: f64, b: f64 },
    Exp,
    Crescent,
    Sigmoid,
    Sine,
    Cardioid,
    SqrtPlus,
    SqrtMinus,
    Linear { beta: f64 },
    Booth { alpha: f64 },
    Custom { series: PowerSeries, eval: Option<Evaluator> },
}

/// A catalog entry (or an injected function) describing `ψ`.
#[derive(Clone)]
pub struct MindaFunction {
    id: String,
    params: Vec<(String, f64)>,
    shape: Shape,
    orientation: Orientation,
    min_modulus_form: MinModulusForm,
    domain_radius: f64,
    convex: bool,
    label: String,
}

impl fmt::Debug for MindaFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MindaFunction")
            .field("id", &self.id)
            .field("params", &self.params)
            .field("orientation", &self.orientation)
            .field("min_modulus_form", &self.min_modulus_form)
            .field("domain_radius", &self.domain_radius)
            .finish()
    }
}

fn check_range(name: &str, value: f64, ok: bool, range: &str) -> Result<()> {
    if ok && value.is_finite() {
        Ok(())
    } else {
        Err(Error::ParameterRange {
            name: name.to_string(),
            value,
            range: range.to_string(),
        })
    }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Looks up `id` (dashes and underscores are interchangeable) and builds
/// the entry from `params`.
pub fn get(id: &str, params: &Params) -> Result<MindaFunction> {
    let key = id.replace('-', "_");
    let param = |name: &str| -> Result<f64> {
        params
            .get(name)
            .copied()
            .ok_or_else(|| Error::MissingParameter {
                id: key.clone(),
                name: name.to_string(),
            })
    };
    match key.as_str() {
        "janowski" => MindaFunction::janowski(param("D")?, param("E")?),
        "order_alpha" => MindaFunction::order_alpha(param("alpha")?),
        "power_eta" => MindaFunction::power_eta(param("eta")?),
        "rl_crescent" => Ok(MindaFunction::rl_crescent()),
        "ab_power" => MindaFunction::ab_power(param("a")?, param("b")?),
        "exp" => Ok(MindaFunction::exp()),
        "crescent" => Ok(MindaFunction::crescent()),
        "sigmoid" => Ok(MindaFunction::sigmoid()),
        "sine" => Ok(MindaFunction::sine()),
        "cardioid" => Ok(MindaFunction::cardioid()),
        "sqrt_plus" => Ok(MindaFunction::sqrt_plus()),
        "sqrt_minus" => Ok(MindaFunction::sqrt_minus()),
        "linear" => MindaFunction::linear(param("beta")?),
        "booth" => MindaFunction::booth(param("alpha")?),
        "lemniscate" => Ok(MindaFunction::lemniscate()),
        _ => Err(Error::UnknownId(id.to_string())),
    }
}

/// Names and admissible ranges of the parameters an id takes.
pub fn parameter_ranges(id: &str) -> Result<Vec<(&'static str, &'static str)>> {
    Ok(match id.replace('-', "_").as_str() {
        "janowski" => vec![("D", "-1 <= E < D <= 1"), ("E", "-1 <= E < D <= 1")],
        "order_alpha" => vec![("alpha", "0 <= alpha < 1")],
        "power_eta" => vec![("eta", "0 < eta <= 1")],
        "ab_power" => vec![("a", "a >= 1"), ("b", "b >= 1/2")],
        "linear" => vec![("beta", "0 < beta <= 1")],
        "booth" => vec![("alpha", "0 < alpha < 1")],
        "rl_crescent" | "exp" | "crescent" | "sigmoid" | "sine" | "cardioid" | "sqrt_plus"
        | "sqrt_minus" | "lemniscate" => vec![],
        _ => return Err(Error::UnknownId(id.to_string())),
    })
}

/// A representative admissible parameter set for each id, used when the
/// whole catalog is swept.
pub fn default_params(id: &str) -> Result<Params> {
    let pairs: &[(&str, f64)] = match id.replace('-', "_").as_str() {
        "janowski" => &[("D", 0.5), ("E", -0.5)],
        "order_alpha" => &[("alpha", 0.0)],
        "power_eta" => &[("eta", 0.5)],
        "ab_power" => &[("a", 2.0), ("b", 1.0)],
        "linear" => &[("beta", 0.5)],
        "booth" => &[("alpha", 0.5)],
        "rl_crescent" | "exp" | "crescent" | "sigmoid" | "sine" | "cardioid" | "sqrt_plus"
        | "sqrt_minus" | "lemniscate" => &[],
        _ => return Err(Error::UnknownId(id.to_string())),
    };
    Ok(pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect())
}

/// Every catalog entry with its default parameters.
pub fn all_default() -> Vec<MindaFunction> {
    IDS.iter()
        .map(|id| get(id, &default_params(id).expect("known id")).expect("defaults are admissible"))
        .collect()
}

impl MindaFunction {
    fn entry(
        id: &str,
        params: &[(&str, f64)],
        shape: Shape,
        orientation: Orientation,
        min_modulus_form: MinModulusForm,
        convex: bool,
        label: &str,
    ) -> Self {
        Self {
            id: id.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            shape,
            orientation,
            min_modulus_form,
            domain_radius: 1.0,
            convex,
            label: label.to_string(),
        }
    }

    /// `(1 + Dz)/(1 + Ez)` with `-1 ≤ E < D ≤ 1`.
    pub fn janowski(d: f64, e: f64) -> Result<Self> {
        check_range("E", e, (-1.0..=1.0).contains(&e), "-1 <= E < D <= 1")?;
        check_range("D", d, d > e && d <= 1.0, "-1 <= E < D <= 1")?;
        Ok(Self::entry(
            "janowski",
            &[("D", d), ("E", e)],
            Shape::Janowski { d, e },
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            true,
            "Janowski starlike S*[D,E]",
        ))
    }

    /// `(1 + (1-2α)z)/(1 - z)`, starlike of order `α`.
    pub fn order_alpha(alpha: f64) -> Result<Self> {
        check_range("alpha", alpha, (0.0..1.0).contains(&alpha), "0 <= alpha < 1")?;
        Ok(Self::entry(
            "order_alpha",
            &[("alpha", alpha)],
            Shape::Janowski {
                d: 1.0 - 2.0 * alpha,
                e: -1.0,
            },
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            true,
            "starlike of order alpha S*(alpha)",
        ))
    }

    /// `((1+z)/(1-z))^η`, strongly starlike of order `η`.
    pub fn power_eta(eta: f64) -> Result<Self> {
        check_range("eta", eta, eta > 0.0 && eta <= 1.0, "0 < eta <= 1")?;
        Ok(Self::entry(
            "power_eta",
            &[("eta", eta)],
            Shape::PowerEta { eta },
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            true,
            "strongly starlike SS*(eta)",
        ))
    }

    /// `√2 - (√2-1) √((1-z)/(1+2(√2-1)z))`.
    pub fn rl_crescent() -> Self {
        Self::entry(
            "rl_crescent",
            &[],
            Shape::RlCrescent,
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            false,
            "left-half lemniscate S*_RL",
        )
    }

    /// `(b(1+z))^{1/a}` with `a ≥ 1`, `b ≥ 1/2`. Only `b = 1` is normalized
    /// (`ψ(0) = 1`); other values are accepted but rejected by operations
    /// that need the normalization.
    pub fn ab_power(a: f64, b: f64) -> Result<Self> {
        check_range("a", a, a >= 1.0, "a >= 1")?;
        check_range("b", b, b >= 0.5, "b >= 1/2")?;
        Ok(Self::entry(
            "ab_power",
            &[("a", a), ("b", b)],
            Shape::AbPower { a, b },
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            true,
            "power of a shifted disk (b(1+z))^(1/a)",
        ))
    }

    pub fn exp() -> Self {
        Self::entry(
            "exp",
            &[],
            Shape::Exp,
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            true,
            "exponential S*_e",
        )
    }

    /// `z + √(1 + z²)`.
    pub fn crescent() -> Self {
        Self::entry(
            "crescent",
            &[],
            Shape::Crescent,
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            false,
            "crescent S*_q",
        )
    }

    /// `2/(1 + e^{-z})`.
    pub fn sigmoid() -> Self {
        Self::entry(
            "sigmoid",
            &[],
            Shape::Sigmoid,
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            false,
            "modified sigmoid S*_SG",
        )
    }

    /// `1 + sin z`.
    pub fn sine() -> Self {
        Self::entry(
            "sine",
            &[],
            Shape::Sine,
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            false,
            "sine S*_s",
        )
    }

    /// `1 + z e^z`.
    pub fn cardioid() -> Self {
        Self::entry(
            "cardioid",
            &[],
            Shape::Cardioid,
            Orientation::Positive,
            MinModulusForm::AtMinusRUpTo {
                threshold: cardioid_real_axis_threshold(),
            },
            false,
            "cardioid S*_p",
        )
    }

    /// `√(1 + z)`.
    pub fn sqrt_plus() -> Self {
        Self::entry(
            "sqrt_plus",
            &[],
            Shape::SqrtPlus,
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            true,
            "positively oriented sqrt(1+z)",
        )
    }

    /// `√(1 - z)`, negatively oriented: `|ψ|` is smallest at `z = +r`.
    pub fn sqrt_minus() -> Self {
        Self::entry(
            "sqrt_minus",
            &[],
            Shape::SqrtMinus,
            Orientation::Negative,
            MinModulusForm::AtPlusR,
            true,
            "negatively oriented sqrt(1-z)",
        )
    }

    /// `1 + βz` with `0 < β ≤ 1`.
    pub fn linear(beta: f64) -> Result<Self> {
        check_range("beta", beta, beta > 0.0 && beta <= 1.0, "0 < beta <= 1")?;
        Ok(Self::entry(
            "linear",
            &[("beta", beta)],
            Shape::Linear { beta },
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            true,
            "disk 1+beta z",
        ))
    }

    /// Booth lemniscate `1 + z/(1 - αz²)`, `0 < α < 1`; only usable for
    /// `|z| < r_α`.
    pub fn booth(alpha: f64) -> Result<Self> {
        check_range("alpha", alpha, alpha > 0.0 && alpha < 1.0, "0 < alpha < 1")?;
        let mut f = Self::entry(
            "booth",
            &[("alpha", alpha)],
            Shape::Booth { alpha },
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            false,
            "Booth lemniscate BS(alpha)",
        );
        f.domain_radius = booth_domain_radius(alpha);
        Ok(f)
    }

    /// `√(1 + z)`, the lemniscate of Bernoulli class.
    pub fn lemniscate() -> Self {
        Self::entry(
            "lemniscate",
            &[],
            Shape::SqrtPlus,
            Orientation::Positive,
            MinModulusForm::AtMinusR,
            true,
            "lemniscate of Bernoulli SL*",
        )
    }

    /// Injects a function given by its Taylor series. `eval`, when given,
    /// is used instead of summing the series; `min_modulus_form` defaults
    /// to numeric.
    pub fn custom(
        id: &str,
        series: PowerSeries,
        eval: Option<Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>>,
    ) -> Self {
        let orientation = Orientation::of(series.coeff(1).re);
        Self {
            id: id.to_string(),
            params: Vec::new(),
            shape: Shape::Custom { series, eval },
            orientation,
            min_modulus_form: MinModulusForm::Numeric,
            domain_radius: 1.0,
            convex: false,
            label: format!("injected {id}"),
        }
    }

    /// `ψ ≡ 1`, the degenerate generator of the identity map.
    pub fn constant_one() -> Self {
        let mut f = Self::custom(
            "one",
            PowerSeries::one(crate::series::DEFAULT_ORDER),
            Some(Arc::new(|_| Complex64::new(1.0, 0.0))),
        );
        f.convex = true;
        f.min_modulus_form = MinModulusForm::AtMinusR;
        f
    }

    pub fn with_convex(mut self, convex: bool) -> Self {
        self.convex = convex;
        self
    }

    pub fn with_min_modulus_form(mut self, form: MinModulusForm) -> Self {
        self.min_modulus_form = form;
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn params(&self) -> &[(String, f64)] {
        &self.params
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn min_modulus_form(&self) -> MinModulusForm {
        self.min_modulus_form
    }

    /// Largest `r ≤ 1` on which `Re ψ > 0` is guaranteed.
    pub fn domain_radius(&self) -> f64 {
        self.domain_radius
    }

    /// True when the entry is convex univalent (usable as the generator
    /// `φ` of the convex-class radii).
    pub fn is_convex(&self) -> bool {
        self.convex
    }

    /// True when the domain is cut short of the unit disk.
    pub fn is_restricted(&self) -> bool {
        self.domain_radius < 1.0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Human-readable formula.
    pub fn formula(&self) -> String {
        match &self.shape {
            Shape::Janowski { d, e } => format!("(1 + {d} z)/(1 + {e} z)"),
            Shape::PowerEta { eta } => format!("((1+z)/(1-z))^{eta}"),
            Shape::RlCrescent => "sqrt2 - (sqrt2-1) sqrt((1-z)/(1+2(sqrt2-1)z))".into(),
            Shape::AbPower { a, b } => format!("({b}(1+z))^(1/{a})"),
            Shape::Exp => "exp(z)".into(),
            Shape::Crescent => "z + sqrt(1+z^2)".into(),
            Shape::Sigmoid => "2/(1+exp(-z))".into(),
            Shape::Sine => "1 + sin(z)".into(),
            Shape::Cardioid => "1 + z exp(z)".into(),
            Shape::SqrtPlus => "sqrt(1+z)".into(),
            Shape::SqrtMinus => "sqrt(1-z)".into(),
            Shape::Linear { beta } => format!("1 + {beta} z"),
            Shape::Booth { alpha } => format!("1 + z/(1 - {alpha} z^2)"),
            Shape::Custom { .. } => format!("custom {}", self.id),
        }
    }

    /// Returns the catalog formula for `ψ(z)` without domain checks.
    pub fn eval_raw(&self, z: Complex64) -> Complex64 {
        let one = c(1.0);
        let w = match &self.shape {
            Shape::Janowski { d, e } => (one + z * d) / (one + z * e),
            Shape::PowerEta { eta } => (((one + z) / (one - z)).ln() * eta).exp(),
            Shape::RlCrescent => {
                let k = SQRT_2 - 1.0;
                c(SQRT_2) - ((one - z) / (one + z * (2.0 * k))).sqrt() * k
            }
            Shape::AbPower { a, b } => ((one + z) * b).powf(1.0 / a),
            Shape::Exp => z.exp(),
            Shape::Crescent => z + (one + z * z).sqrt(),
            Shape::Sigmoid => c(2.0) / (one + (-z).exp()),
            Shape::Sine => one + z.sin(),
            Shape::Cardioid => one + z * z.exp(),
            Shape::SqrtPlus => (one + z).sqrt(),
            Shape::SqrtMinus => (one - z).sqrt(),
            Shape::Linear { beta } => one + z * beta,
            Shape::Booth { alpha } => one + z / (one - z * z * alpha),
            Shape::Custom { series, eval } => match eval {
                Some(f) => f(z),
                None => series.eval(z),
            },
        };
        if z.im == 0.0 {
            Complex64::new(w.re, 0.0)
        } else {
            w
        }
    }

    /// Principal-branch evaluation of `ψ(z)` for `|z| ≤ 1`
    /// (`|z| < r_α` for Booth).
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let modulus = z.norm();
        if modulus > 1.0 + 1e-12 {
            return Err(Error::Domain {
                r: modulus,
                limit: 1.0,
            });
        }
        if self.is_restricted() && modulus >= self.domain_radius {
            return Err(Error::Domain {
                r: modulus,
                limit: self.domain_radius,
            });
        }
        let w = self.eval_raw(z);
        if !(w.re.is_finite() && w.im.is_finite()) {
            return Err(Error::BranchContact { z });
        }
        Ok(w)
    }

    /// Real-valued `ψ(x)` on the real segment.
    pub fn eval_real(&self, x: f64) -> Result<f64> {
        self.eval(c(x)).map(|w| w.re)
    }

    /// Taylor series of `ψ` to order `order` (≥ 2).
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        if order < 2 {
            return Err(Error::Precondition(format!(
                "series order must be >= 2, got {order}"
            )));
        }
        let z = PowerSeries::variable(order);
        let one = PowerSeries::one(order);
        let linear = |a: f64, b: f64| PowerSeries::from_real(&[a, b]).truncate(order);
        let s = match &self.shape {
            Shape::Janowski { d, e } => linear(1.0, *d).div(&linear(1.0, *e))?,
            Shape::PowerEta { eta } => {
                // η · log((1+z)/(1-z)) = 2η Σ_{n odd} z^n / n
                let log = PowerSeries::from_fn(order, |n| {
                    if n % 2 == 1 {
                        2.0 * eta / n as f64
                    } else {
                        0.0
                    }
                });
                log.exp()?
            }
            Shape::RlCrescent => {
                let k = SQRT_2 - 1.0;
                let root = linear(1.0, -1.0).div(&linear(1.0, 2.0 * k))?.powf(0.5)?;
                &PowerSeries::one(order).scale(c(SQRT_2)) - &root.scale(c(k))
            }
            Shape::AbPower { a, b } => linear(1.0, 1.0).powf(1.0 / a)?.scale(c(b.powf(1.0 / a))),
            Shape::Exp => z.exp()?,
            Shape::Crescent => &z + &(&one + &(&z * &z)).powf(0.5)?,
            Shape::Sigmoid => {
                let e_minus = (-&z).exp()?;
                one.scale(c(2.0)).div(&(&one + &e_minus))?
            }
            Shape::Sine => {
                let mut fact = 1.0;
                PowerSeries::from_fn(order, |n| {
                    if n > 0 {
                        fact *= n as f64;
                    }
                    match n {
                        0 => 1.0,
                        n if n % 4 == 1 => 1.0 / fact,
                        n if n % 4 == 3 => -1.0 / fact,
                        _ => 0.0,
                    }
                })
            }
            Shape::Cardioid => {
                let mut fact = 1.0;
                PowerSeries::from_fn(order, |n| match n {
                    0 | 1 => 1.0,
                    n => {
                        fact *= (n - 1) as f64;
                        1.0 / fact
                    }
                })
            }
            Shape::SqrtPlus => linear(1.0, 1.0).powf(0.5)?,
            Shape::SqrtMinus => linear(1.0, -1.0).powf(0.5)?,
            Shape::Linear { beta } => linear(1.0, *beta),
            Shape::Booth { alpha } => PowerSeries::from_fn(order, |n| match n {
                0 => 1.0,
                n if n % 2 == 1 => alpha.powi((n as i32 - 1) / 2),
                _ => 0.0,
            }),
            Shape::Custom { series, .. } => series.truncate(order.min(series.order())),
        };
        Ok(s)
    }

    /// `ψ(±r)` when the entry's minimum modulus on `|z| = r` is known to sit
    /// on the real axis; returns `(θ*, value)`.
    pub fn closed_min_modulus(&self, r: f64) -> Option<(f64, f64)> {
        let at = |theta: f64, x: f64| self.eval_real(x).ok().map(|v| (theta, v.abs()));
        match self.min_modulus_form {
            MinModulusForm::AtMinusR => at(PI, -r),
            MinModulusForm::AtPlusR => at(0.0, r),
            MinModulusForm::AtMinusRUpTo { threshold } if r <= threshold => at(PI, -r),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(pairs: &[(&str, f64)]) -> Params {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn all_ids_build_with_defaults() {
        let all = all_default();
        assert_eq!(all.len(), 15);
        for f in &all {
            let s = f.series(16).unwrap();
            assert!((s.coeff(0).re - 1.0).abs() < 1e-15, "{}", f.id());
            assert!(s.is_real(1e-15));
            assert_eq!(Orientation::of(s.coeff(1).re), f.orientation(), "{}", f.id());
        }
    }

    #[test]
    fn half_plane_entry() {
        let f = get("janowski", &params(&[("D", 1.0), ("E", -1.0)])).unwrap();
        assert_eq!(f.orientation(), Orientation::Positive);
        assert_eq!(f.min_modulus_form(), MinModulusForm::AtMinusR);
        let r = 0.4;
        let (theta, m) = f.closed_min_modulus(r).unwrap();
        assert_eq!(theta, PI);
        assert!((m - (1.0 - r) / (1.0 + r)).abs() < 1e-15);
        let w = f.eval(Complex64::new(0.2, 0.1)).unwrap();
        let z = Complex64::new(0.2, 0.1);
        assert!((w - (1.0 + z) / (1.0 - z)).norm() < 1e-15);
    }

    #[test]
    fn negatively_oriented_root() {
        let f = get("sqrt-minus", &Params::new()).unwrap();
        assert_eq!(f.orientation(), Orientation::Negative);
        let (theta, m) = f.closed_min_modulus(0.36).unwrap();
        assert_eq!(theta, 0.0);
        assert!((m - 0.8).abs() < 1e-15);
    }

    #[test]
    fn cardioid_switches_to_numeric() {
        let f = MindaFunction::cardioid();
        assert!(f.closed_min_modulus(0.3).is_some());
        assert!(f.closed_min_modulus(0.5).is_none());
        let (_, m) = f.closed_min_modulus(0.3).unwrap();
        assert!((m - (1.0 - 0.3 * (-0.3f64).exp())).abs() < 1e-15);
    }

    #[test]
    fn cardioid_modulus_identity() {
        let f = MindaFunction::cardioid();
        for &(r, theta) in &[(0.5, 1.0), (0.9, 2.3), (1.0, 1.88438)] {
            let z = Complex64::from_polar(r, theta);
            let erc = r * (r * theta.cos()).exp();
            let expected = (1.0 + erc * (erc + 2.0 * (theta + r * theta.sin()).cos())).sqrt();
            assert!((f.eval(z).unwrap().norm() - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn normalization_at_origin() {
        for f in all_default() {
            assert_eq!(f.eval(Complex64::default()).unwrap(), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn crescent_on_negative_axis() {
        let f = MindaFunction::crescent();
        let r: f64 = 0.7;
        assert!((f.eval_real(-r).unwrap() - ((1.0 + r * r).sqrt() - r)).abs() < 1e-15);
    }

    #[test]
    fn sine_series() {
        let s = MindaFunction::sine().series(6).unwrap();
        let expected = [1.0, 1.0, 0.0, -1.0 / 6.0, 0.0, 1.0 / 120.0, 0.0];
        for (n, e) in expected.iter().enumerate() {
            assert!((s.coeff(n).re - e).abs() < 1e-16);
        }
    }

    #[test]
    fn janowski_series_matches_long_division() {
        let (d, e) = (0.7, -0.4);
        let s = MindaFunction::janowski(d, e).unwrap().series(8).unwrap();
        // (1+Dz)/(1+Ez) = 1 + (D-E) Σ_{n≥1} (-E)^{n-1} z^n
        for n in 1..=8 {
            let expected = (d - e) * (-e).powi(n as i32 - 1);
            assert!((s.coeff(n).re - expected).abs() < 1e-15);
        }
        assert!((s.coeff(2).re - (-e * (d - e))).abs() < 1e-15);
    }

    #[test]
    fn linear_series() {
        let s = MindaFunction::linear(0.3).unwrap().series(4).unwrap();
        assert_eq!(s, PowerSeries::from_real(&[1.0, 0.3, 0.0, 0.0, 0.0]));
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            MindaFunction::janowski(-0.5, -0.5),
            Err(Error::ParameterRange { .. })
        ));
        assert!(MindaFunction::order_alpha(1.0).is_err());
        assert!(MindaFunction::power_eta(0.0).is_err());
        assert!(MindaFunction::ab_power(0.5, 1.0).is_err());
        assert!(MindaFunction::ab_power(1.0, 0.4).is_err());
        assert!(MindaFunction::linear(1.5).is_err());
        assert!(MindaFunction::booth(0.0).is_err());
        assert!(matches!(get("nope", &Params::new()), Err(Error::UnknownId(_))));
        assert!(matches!(
            get("janowski", &params(&[("D", 1.0)])),
            Err(Error::MissingParameter { .. })
        ));
    }

    #[test]
    fn booth_domain() {
        let f = MindaFunction::booth(0.5).unwrap();
        let r_alpha = f.domain_radius();
        assert!((r_alpha - (3f64.sqrt() - 1.0)).abs() < 1e-15);
        assert!((0.5 * r_alpha * r_alpha + r_alpha - 1.0).abs() < 1e-15);
        assert!(f.eval(Complex64::new(-r_alpha, 0.0)).is_err());
        assert!(f.eval(Complex64::new(-0.7, 0.0)).is_ok());
    }

    #[test]
    fn pole_contact_is_reported() {
        let f = MindaFunction::janowski(1.0, -1.0).unwrap();
        assert!(matches!(
            f.eval(Complex64::new(1.0, 0.0)),
            Err(Error::BranchContact { .. })
        ));
    }

    #[test]
    fn real_points_give_real_values() {
        for f in all_default() {
            let w = f.eval(Complex64::new(-0.4, 0.0)).unwrap();
            assert_eq!(w.im, 0.0, "{}", f.id());
        }
    }
}
