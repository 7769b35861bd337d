//! Numeric probes of subordination, majorization sharpness and the
//! coefficient inequality behind the Bohr radius.
//!
//! Subordination `g ≺ f` for univalent `f` is tested as containment: the
//! samples of `g` on `|z| = r` must fall strictly inside the polygon traced
//! by `f` on (or just inside) the unit circle.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::catalog::MindaFunction;
use crate::error::{Error, Result};
use crate::extremal::{extremal_series, ExtremalFunction};
use crate::quad;
use crate::series::{self, PowerSeries};

/// Boundary samples used for containment tests.
pub const DEFAULT_GRID: usize = 4096;
/// Margins below this are reported as inconclusive.
pub const MARGIN_FLOOR: f64 = 1e-6;
/// Circles tried, in order, when tracing the image of the unit disk.
pub const BOUNDARY_RADII: [f64; 3] = [1.0, 0.9999, 0.999];
/// Seed of [`bohr_coefficient_stress`] unless another is given.
pub const DEFAULT_SEED: u64 = 0x5eed_b0a2;

const MAX_REFINE_DEPTH: u32 = 6;
const MAX_MODULUS: f64 = 1e12;

type Eval = Arc<dyn Fn(Complex64) -> Complex64 + Send + Sync>;

/// `n` points `w(r e^{iθ_k})`, `θ_k = 2πk/n`, with their angles.
pub fn sample_circle(
    eval: impl Fn(Complex64) -> Complex64,
    r: f64,
    n: usize,
) -> Vec<(f64, Complex64)> {
    (0..n)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / n as f64;
            (theta, eval(Complex64::from_polar(r, theta)))
        })
        .collect()
}

/// A closed polygon approximating the image of a circle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryCurve {
    pub r: f64,
    pub samples: Vec<Complex64>,
    pub closed: bool,
}

fn finite(w: Complex64) -> bool {
    w.re.is_finite() && w.im.is_finite() && w.norm() < MAX_MODULUS
}

impl BoundaryCurve {
    /// Traces `eval` on `|z| = r` from `n` uniform angles, then bisects any
    /// chord longer than four times the median chord. Returns `None` when a
    /// sample is not finite.
    pub fn trace(eval: impl Fn(Complex64) -> Complex64, r: f64, n: usize) -> Option<Self> {
        let n = n.max(8);
        let at = |theta: f64| eval(Complex64::from_polar(r, theta));
        let coarse = sample_circle(&eval, r, n);
        if coarse.iter().any(|(_, w)| !finite(*w)) {
            return None;
        }
        let mut chords: Vec<f64> = (0..n)
            .map(|k| (coarse[(k + 1) % n].1 - coarse[k].1).norm())
            .collect();
        chords.sort_by(f64::total_cmp);
        let bound = (4.0 * chords[n / 2]).max(1e-12);

        let mut samples = Vec::with_capacity(2 * n);
        for k in 0..n {
            let (t0, w0) = coarse[k];
            let (t1, w1) = if k + 1 == n {
                (2.0 * PI, coarse[0].1)
            } else {
                coarse[k + 1]
            };
            samples.push(w0);
            refine(&at, t0, w0, t1, w1, bound, 0, &mut samples)?;
        }
        Some(Self {
            r,
            samples,
            closed: true,
        })
    }

    /// Traces the image of the unit disk, retreating to the next circle of
    /// [`BOUNDARY_RADII`] when the function blows up on the current one.
    pub fn trace_disk_image(eval: impl Fn(Complex64) -> Complex64, n: usize) -> Option<Self> {
        BOUNDARY_RADII
            .iter()
            .find_map(|&rho| Self::trace(&eval, rho, n))
    }

    fn edges(&self) -> impl Iterator<Item = (Complex64, Complex64)> + '_ {
        let n = self.samples.len();
        (0..n).map(move |k| (self.samples[k], self.samples[(k + 1) % n]))
    }

    /// Even-odd point-in-polygon test.
    pub fn contains(&self, w: Complex64) -> bool {
        let mut inside = false;
        for (a, b) in self.edges() {
            if (a.im > w.im) != (b.im > w.im) {
                let x = a.re + (w.im - a.im) * (b.re - a.re) / (b.im - a.im);
                if w.re < x {
                    inside = !inside;
                }
            }
        }
        inside
    }

    /// Distance from `w` to the polygon.
    pub fn distance(&self, w: Complex64) -> f64 {
        self.edges()
            .map(|(a, b)| segment_distance(w, a, b))
            .fold(f64::INFINITY, f64::min)
    }

    /// True when no two non-adjacent edges cross.
    pub fn is_simple(&self) -> bool {
        let n = self.samples.len();
        if n < 4 {
            return false;
        }
        let edges: Vec<_> = self.edges().collect();
        let boxes: Vec<_> = edges
            .iter()
            .map(|(a, b)| (a.re.min(b.re), a.re.max(b.re), a.im.min(b.im), a.im.max(b.im)))
            .collect();
        for i in 0..n {
            for j in i + 2..n {
                if i == 0 && j == n - 1 {
                    continue;
                }
                let (bi, bj) = (boxes[i], boxes[j]);
                if bi.1 < bj.0 || bj.1 < bi.0 || bi.3 < bj.2 || bj.3 < bi.2 {
                    continue;
                }
                if segments_cross(edges[i], edges[j]) {
                    return false;
                }
            }
        }
        true
    }
}

#[allow(clippy::too_many_arguments)]
fn refine(
    at: &impl Fn(f64) -> Complex64,
    t0: f64,
    w0: Complex64,
    t1: f64,
    w1: Complex64,
    bound: f64,
    depth: u32,
    out: &mut Vec<Complex64>,
) -> Option<()> {
    if (w1 - w0).norm() <= bound || depth >= MAX_REFINE_DEPTH {
        return Some(());
    }
    let tm = 0.5 * (t0 + t1);
    let wm = at(tm);
    if !finite(wm) {
        return None;
    }
    refine(at, t0, w0, tm, wm, bound, depth + 1, out)?;
    out.push(wm);
    refine(at, tm, wm, t1, w1, bound, depth + 1, out)
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn segments_cross((p, q): (Complex64, Complex64), (r, s): (Complex64, Complex64)) -> bool {
    let d1 = cross(q - p, r - p);
    let d2 = cross(q - p, s - p);
    let d3 = cross(s - r, p - r);
    let d4 = cross(s - r, q - r);
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

fn segment_distance(w: Complex64, a: Complex64, b: Complex64) -> f64 {
    let ab = b - a;
    let len2 = ab.norm_sqr();
    if len2 == 0.0 {
        return (w - a).norm();
    }
    let t = ((w - a).re * ab.re + (w - a).im * ab.im) / len2;
    (w - (a + ab * t.clamp(0.0, 1.0))).norm()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SubordinationReport {
    pub verdict: Verdict,
    /// Smallest distance from a sample of `g` to the polygon of `f`.
    pub margin: f64,
    /// Circle the samples of `g` were taken on.
    pub r: f64,
    /// Circle the polygon of `f` was traced on.
    pub boundary_radius: f64,
    pub vertices: usize,
    pub simple: bool,
}

/// Tests `g ≺ f` by checking that `g(r e^{iθ})` stays strictly inside the
/// traced image of the unit disk under `f`.
pub fn is_subordinate_numeric(
    g: impl Fn(Complex64) -> Complex64,
    f: impl Fn(Complex64) -> Complex64,
    r: f64,
    grid: usize,
) -> Result<SubordinationReport> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::Domain { r, limit: 1.0 });
    }
    let origin = Complex64::default();
    if (g(origin) - f(origin)).norm() > 1e-9 {
        return Err(Error::Precondition("subordination needs g(0) = f(0)".into()));
    }
    let Some(curve) = BoundaryCurve::trace_disk_image(&f, grid) else {
        return Err(Error::Precondition(
            "f is not finite on any boundary circle".into(),
        ));
    };
    let simple = curve.is_simple();
    let mut margin = f64::INFINITY;
    // Distance of the deepest sample outside the polygon.
    let mut outside = f64::NEG_INFINITY;
    for (_, w) in sample_circle(&g, r, grid) {
        if !finite(w) {
            outside = f64::INFINITY;
            margin = 0.0;
            continue;
        }
        let d = curve.distance(w);
        margin = margin.min(d);
        if !curve.contains(w) {
            outside = outside.max(d);
        }
    }
    let verdict = if !simple {
        Verdict::Inconclusive
    } else if outside >= MARGIN_FLOOR {
        Verdict::Fails
    } else if margin < MARGIN_FLOOR {
        Verdict::Inconclusive
    } else {
        Verdict::Holds
    };
    Ok(SubordinationReport {
        verdict,
        margin,
        r,
        boundary_radius: curve.r,
        vertices: curve.samples.len(),
        simple,
    })
}

/// The function `h` of the Bulboacă-Tuneski condition.
#[derive(Clone)]
pub enum HInput {
    Series(PowerSeries),
    Eval(Eval),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BulboacaReport {
    pub subordination: SubordinationReport,
    /// `Re(1 + z h''/h) ≥ -1/2` on the sampled circle, when `h` is a series.
    pub hypothesis_as_printed: Option<bool>,
    /// `Re(1 + z h''/h') ≥ -1/2` on the sampled circle, when `h` is a series.
    pub hypothesis_standard: Option<bool>,
}

/// Radius on which `(1/z) ∫_0^z h` and the hypotheses are sampled.
pub const BULBOACA_RADIUS: f64 = 0.999;

/// Checks `(1/z) ∫_0^z h(t) dt ≺ (ψ(z) - 1)/ψ(z)`.
pub fn bulboaca_condition_check(
    h: &HInput,
    f: &MindaFunction,
    grid: usize,
) -> Result<BulboacaReport> {
    let r = BULBOACA_RADIUS;
    let (mean, printed, standard): (Eval, Option<bool>, Option<bool>) = match h {
        HInput::Series(s) => {
            if s.coeff(0).norm() > 1e-14 || s.coeff(1).norm() < 1e-14 {
                return Err(Error::Precondition("h needs h(0) = 0 and h'(0) != 0".into()));
            }
            let m = s.mean_integral();
            let d1 = s.derivative();
            let d2 = d1.derivative();
            let check = |den: &PowerSeries| {
                sample_circle(|z| 1.0 + z * d2.eval_adaptive(z) / den.eval_adaptive(z), r, 512)
                    .iter()
                    .all(|(_, w)| w.re >= -0.5)
            };
            (
                Arc::new(move |z| m.eval_adaptive(z)),
                Some(check(s)),
                Some(check(&d1)),
            )
        }
        HInput::Eval(h) => {
            let eps = 1e-6;
            let origin = Complex64::default();
            if h(origin).norm() > 1e-14 || (h(Complex64::new(eps, 0.0)) / eps).norm() < 1e-10 {
                return Err(Error::Precondition("h needs h(0) = 0 and h'(0) != 0".into()));
            }
            let h = h.clone();
            let rule = Arc::new(quad::gauss_legendre(16));
            (
                Arc::new(move |z| quad::integrate_unit_complex(|s| h(z * s), &rule, 8)),
                None,
                None,
            )
        }
    };
    let psi = f.clone();
    let target = move |z: Complex64| {
        let w = psi.eval_raw(z);
        (w - 1.0) / w
    };
    let subordination = is_subordinate_numeric(|z| mean(z), target, r, grid)?;
    Ok(BulboacaReport {
        subordination,
        hypothesis_as_printed: printed,
        hypothesis_standard: standard,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessReport {
    pub r_psi: f64,
    pub epsilon: f64,
    /// Some `α` gives `h(r_ψ + ε, α) > 1`; `None` when `ε = 0`.
    pub outer_holds: Option<bool>,
    pub alpha_star: Option<f64>,
    /// `h(r_ψ + ε, α*) - 1`.
    pub outer_excess: Option<f64>,
    /// `h(r_ψ - ε, α) ≤ 1 + 1e-9` for every probed `α`.
    pub inner_holds: bool,
    /// Largest `h(r_ψ - ε, α) - 1` seen.
    pub inner_max_excess: f64,
    pub verdict: bool,
}

/// The `α` values probed: a uniform grid on `[0, 1)` and points
/// accumulating at 1.
pub fn sharpness_alphas() -> Vec<f64> {
    let mut alphas: Vec<f64> = (0..200).map(|k| k as f64 / 200.0).collect();
    alphas.extend((1..=12).map(|j| 1.0 - 10f64.powi(-j)));
    alphas
}

/// Extremal series for the kernel `ψ(σz)`, with `σ = ±1` pointing at the
/// minimum of `|ψ|`.
fn rotated_extremal(f: &MindaFunction, sigma: f64, r: f64) -> Result<PowerSeries> {
    series::escalate(
        &format!("rotated extremal of {}", f.id()),
        r,
        series::DEFAULT_ORDER,
        |n| extremal_series(&f.series(n)?.dilate(Complex64::new(sigma, 0.0))),
    )
}

/// `h(r, α) = (r + α)/(1 + αr) + (1 - α²)/(1 + αr)² · f(r)/f'(r)`.
pub fn sharpness_h(r: f64, alpha: f64, ratio: f64) -> f64 {
    let den = 1.0 + alpha * r;
    (r + alpha) / den + (1.0 - alpha * alpha) / (den * den) * ratio
}

/// Probes the majorization radius `r_ψ` from both sides with the
/// Möbius-type majorants `(z + α)/(1 + αz)`.
pub fn majorization_sharpness_probe(
    f: &MindaFunction,
    r_psi: f64,
    epsilon: f64,
) -> Result<SharpnessReport> {
    if !(epsilon >= 0.0) || !(r_psi > epsilon) {
        return Err(Error::Precondition(format!(
            "need 0 <= epsilon < r_psi, got epsilon = {epsilon}, r_psi = {r_psi}"
        )));
    }
    let theta = f
        .closed_min_modulus(r_psi)
        .map(|(t, _)| t)
        .unwrap_or_else(|| crate::circle::numeric(f, r_psi, crate::ExtremumKind::MinMod).theta_star);
    let sigma = if theta > PI / 2.0 { -1.0 } else { 1.0 };
    let ratio_at = |r: f64| -> Result<f64> {
        let s = rotated_extremal(f, sigma, r)?;
        let z = Complex64::new(r, 0.0);
        Ok((s.eval(z) / s.derivative().eval(z)).re)
    };
    let alphas = sharpness_alphas();

    let r_in = r_psi - epsilon;
    let ratio_in = ratio_at(r_in)?;
    let inner_max_excess = alphas
        .iter()
        .map(|&a| sharpness_h(r_in, a, ratio_in) - 1.0)
        .fold(f64::NEG_INFINITY, f64::max);
    let inner_holds = inner_max_excess <= 1e-9;

    let (outer_holds, alpha_star, outer_excess) = if epsilon > 0.0 {
        let r_out = r_psi + epsilon;
        let ratio_out = ratio_at(r_out)?;
        let best = alphas
            .iter()
            .map(|&a| (a, sharpness_h(r_out, a, ratio_out) - 1.0))
            .fold((f64::NAN, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
        (Some(best.1 > 0.0), Some(best.0), Some(best.1))
    } else {
        (None, None, None)
    };
    Ok(SharpnessReport {
        r_psi,
        epsilon,
        outer_holds,
        alpha_star,
        outer_excess,
        inner_holds,
        inner_max_excess,
        verdict: inner_holds && outer_holds.unwrap_or(true),
    })
}

/// Schwarz functions used by the coefficient probe.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Schwarz {
    /// `z (z + a)/(1 + ā z)`, `|a| ≤ 1`.
    Blaschke { re: f64, im: f64 },
    /// `z^m`, `m ≥ 1`.
    Power { m: usize },
}

impl Schwarz {
    pub fn series(&self, order: usize) -> Result<PowerSeries> {
        match *self {
            Schwarz::Blaschke { re, im } => {
                let a = Complex64::new(re, im);
                if a.norm() > 1.0 + 1e-12 {
                    return Err(Error::ParameterRange {
                        name: "a".into(),
                        value: a.norm(),
                        range: "|a| <= 1".into(),
                    });
                }
                let zero = Complex64::default();
                let one = Complex64::new(1.0, 0.0);
                let mut num = vec![zero; order + 1];
                num[1] = a;
                num[2] = one;
                let mut den = vec![zero; order + 1];
                den[0] = one;
                den[1] = a.conj();
                PowerSeries::new(num).div(&PowerSeries::new(den))
            }
            Schwarz::Power { m } => {
                if m == 0 || m > order {
                    return Err(Error::ParameterRange {
                        name: "m".into(),
                        value: m as f64,
                        range: format!("1 <= m <= {order}"),
                    });
                }
                let mut s = PowerSeries::zero(order);
                let mut coeffs = s.coeffs().to_vec();
                coeffs[m] = Complex64::new(1.0, 0.0);
                s = PowerSeries::new(coeffs);
                Ok(s)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BohrProbe {
    pub omega: Schwarz,
    pub r: f64,
    /// `Σ |b_k| r^k` for `g = f ∘ ω`.
    pub lhs: f64,
    /// `Σ |a_n| r^n` for `f`.
    pub rhs: f64,
    pub holds: bool,
}

/// Compares the majorant series of `f ∘ ω` and `f` at radius `r ≤ 1/3`.
pub fn bohr_coefficient_probe(e: &ExtremalFunction, omega: Schwarz, r: f64) -> Result<BohrProbe> {
    if !(0.0..=1.0 / 3.0 + 1e-12).contains(&r) {
        return Err(Error::Domain { r, limit: 1.0 / 3.0 });
    }
    let f = e.series();
    let g = f.compose(&omega.series(f.order())?)?;
    let lhs = g.abs_eval(r);
    let rhs = f.abs_eval(r);
    Ok(BohrProbe {
        omega,
        r,
        lhs,
        rhs,
        holds: lhs <= rhs * (1.0 + 1e-12),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StressReport {
    pub seed: u64,
    pub samples: usize,
    pub r: f64,
    pub violations: usize,
    /// Largest `lhs / rhs` seen.
    pub worst_ratio: f64,
}

/// Runs [`bohr_coefficient_probe`] on `samples` seeded random Schwarz
/// functions: Blaschke parameters uniform in the closed disk, and every
/// fifth sample a power `z^m`, `m ∈ 1..=5`.
pub fn bohr_coefficient_stress(
    e: &ExtremalFunction,
    samples: usize,
    r: f64,
    seed: u64,
) -> Result<StressReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    let mut worst_ratio: f64 = 0.0;
    for k in 0..samples {
        let omega = if k % 5 == 4 {
            Schwarz::Power {
                m: rng.random_range(1..=5),
            }
        } else {
            let rho = rng.random::<f64>().sqrt();
            let t = 2.0 * PI * rng.random::<f64>();
            Schwarz::Blaschke {
                re: rho * t.cos(),
                im: rho * t.sin(),
            }
        };
        let p = bohr_coefficient_probe(e, omega, r)?;
        if !p.holds {
            violations += 1;
        }
        worst_ratio = worst_ratio.max(p.lhs / p.rhs);
    }
    Ok(StressReport {
        seed,
        samples,
        r,
        violations,
        worst_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::synth_f0;

    fn koebe() -> ExtremalFunction {
        synth_f0(&MindaFunction::order_alpha(0.0).unwrap(), 64).unwrap()
    }

    #[test]
    fn polygon_basics() {
        let c = BoundaryCurve::trace(|z| z, 1.0, 256).unwrap();
        assert!(c.contains(Complex64::new(0.5, 0.2)));
        assert!(!c.contains(Complex64::new(1.1, 0.0)));
        assert!((c.distance(Complex64::new(0.5, 0.0)) - 0.5).abs() < 1e-3);
        assert!(c.is_simple());
        let figure_eight = BoundaryCurve::trace(|z| z * z + z.conj(), 1.0, 64).unwrap();
        assert!(!figure_eight.is_simple());
    }

    #[test]
    fn schwarz_composition_is_subordinate() {
        let e = koebe();
        let rep = is_subordinate_numeric(
            |z| e.eval(z / 2.0).unwrap(),
            |z| e.eval(z).unwrap_or(Complex64::new(f64::NAN, 0.0)),
            1.0,
            1024,
        )
        .unwrap();
        assert_eq!(rep.verdict, Verdict::Holds, "{rep:?}");
        assert!(rep.boundary_radius < 1.0);
    }

    #[test]
    fn scaled_function_is_not_subordinate() {
        let e = koebe();
        let rep = is_subordinate_numeric(
            |z| e.eval(z).unwrap() * 1.01,
            |z| e.eval(z).unwrap_or(Complex64::new(f64::NAN, 0.0)),
            0.99,
            1024,
        )
        .unwrap();
        assert_eq!(rep.verdict, Verdict::Fails, "{rep:?}");
    }

    #[test]
    fn bulboaca_linear_h() {
        let psi = MindaFunction::janowski(1.0, -1.0).unwrap();
        let h = |c: f64| HInput::Series(PowerSeries::from_real(&[0.0, c, 0.0]));
        let small = bulboaca_condition_check(&h(0.1), &psi, 1024).unwrap();
        assert_eq!(small.subordination.verdict, Verdict::Holds);
        assert_eq!(small.hypothesis_as_printed, Some(true));
        let large = bulboaca_condition_check(&h(3.0), &psi, 1024).unwrap();
        assert_eq!(large.subordination.verdict, Verdict::Fails);
        assert!(bulboaca_condition_check(&h(0.0), &psi, 256).is_err());
    }

    #[test]
    fn sharpness_half_plane() {
        let rep = majorization_sharpness_probe(
            &MindaFunction::janowski(1.0, -1.0).unwrap(),
            2.0 - 3f64.sqrt(),
            0.01,
        )
        .unwrap();
        assert!(rep.verdict, "{rep:?}");
        let rep = majorization_sharpness_probe(
            &MindaFunction::janowski(1.0, -1.0).unwrap(),
            2.0 - 3f64.sqrt(),
            0.0,
        )
        .unwrap();
        assert!(rep.inner_holds && rep.outer_holds.is_none());
    }

    #[test]
    fn identity_schwarz_gives_equality() {
        let e = koebe();
        let p = bohr_coefficient_probe(&e, Schwarz::Power { m: 1 }, 1.0 / 3.0).unwrap();
        assert!((p.lhs - p.rhs).abs() < 1e-12 * p.rhs);
        assert!(p.holds);
    }

    #[test]
    fn blaschke_series() {
        let s = Schwarz::Blaschke { re: 0.5, im: 0.0 }.series(8).unwrap();
        let z = Complex64::new(0.3, 0.2);
        let expected = z * (z + 0.5) / (1.0 + z * 0.5);
        assert!((s.eval(z) - expected).norm() < 1e-6);
    }
}
