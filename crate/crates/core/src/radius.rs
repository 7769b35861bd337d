//! Radius problems posed as residual functions of `r` and solved for their
//! least positive root.
//!
//! Every residual here is positive near `r = 0` (it starts from `ψ(0) = 1`)
//! and the solver returns the first sign change found by a uniform scan,
//! polished with Brent's method.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::catalog::{MinModulusForm, MindaFunction, Orientation};
use crate::circle::{self, CircleExtremum, CircleScan, ExtremumKind, Method};
use crate::error::{Error, Result};
use crate::extremal::{self, synth_f0, KoebeMethod};
use crate::quad;
use crate::series;
use crate::special::{gauss_2f1, kummer_1f1, HypergeometricQuery};

/// Left end of every root search.
pub const SCAN_START: f64 = 1e-6;
/// Number of scan intervals used to locate the first sign change.
pub const SCAN_POINTS: usize = 512;
/// Width of the final bracket around a root.
pub const ROOT_TOL: f64 = 1e-12;
/// Order of the series behind numerically synthesized `ψ`.
const SYNTH_ORDER: usize = 512;

/// Result of [`solve_least_positive_root`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootSolve {
    pub root: f64,
    /// Scan interval that first showed the sign change.
    pub bracket: (f64, f64),
    pub iterations: usize,
    pub residual: f64,
}

fn defined(x: f64, v: f64) -> Result<f64> {
    if v.is_nan() {
        Err(Error::Precondition(format!("residual undefined at r = {x}")))
    } else {
        Ok(v)
    }
}

/// Least root of `residual` on `(0, hi]`: a [`SCAN_POINTS`]-interval scan
/// from [`SCAN_START`] finds the first sign change, Brent's method narrows it
/// to `tol`.
pub fn solve_least_positive_root(
    residual: impl Fn(f64) -> f64,
    hi: f64,
    tol: f64,
) -> Result<RootSolve> {
    if !(hi > SCAN_START) {
        return Err(Error::NoRoot { hi });
    }
    let step = (hi - SCAN_START) / SCAN_POINTS as f64;
    let mut a = SCAN_START;
    let mut fa = defined(a, residual(a))?;
    if fa == 0.0 {
        return Ok(RootSolve {
            root: a,
            bracket: (a, a),
            iterations: 0,
            residual: 0.0,
        });
    }
    for k in 1..=SCAN_POINTS {
        let b = if k == SCAN_POINTS {
            hi
        } else {
            SCAN_START + k as f64 * step
        };
        let fb = defined(b, residual(b))?;
        if fb == 0.0 {
            return Ok(RootSolve {
                root: b,
                bracket: (a, b),
                iterations: 0,
                residual: 0.0,
            });
        }
        if fa.signum() != fb.signum() {
            let (root, value, iterations) = brent(&residual, a, b, fa, fb, tol);
            return Ok(RootSolve {
                root,
                bracket: (a, b),
                iterations,
                residual: value,
            });
        }
        a = b;
        fa = fb;
    }
    Err(Error::NoRoot { hi })
}

fn brent(
    f: &impl Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
    mut fa: f64,
    mut fb: f64,
    tol: f64,
) -> (f64, f64, usize) {
    let mut c = b;
    let mut fc = fb;
    let mut d = b - a;
    let mut e = d;
    for iter in 1..=200 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return (b, fb, iter);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = f(b);
    }
    (b, fb, 200)
}

/// A catalog key with its parameter values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassSpec {
    pub id: String,
    pub params: BTreeMap<String, f64>,
}

impl ClassSpec {
    pub fn of(f: &MindaFunction) -> Self {
        Self {
            id: f.id().to_string(),
            params: f.params().iter().cloned().collect(),
        }
    }
}

/// How `min |ψ|` was obtained for the convex-class majorization radius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvexPath {
    /// `1 / ₂F₁(1 - D/E, 1; 2; -Er/(1 - Er))`.
    Gauss,
    /// `1 / ₁F₁(1; 2; Dr)`.
    Kummer,
    /// Series synthesis of `ψ` and a circle scan.
    Numeric,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Problem {
    MajorizeStarlike {
        psi: ClassSpec,
    },
    MajorizeConvex {
        phi: ClassSpec,
        path: ConvexPath,
    },
    Hallenbeck {
        phi: ClassSpec,
    },
    SqrtVariant {
        phi: ClassSpec,
    },
    ProductMbeta {
        psi1: ClassSpec,
        psi2: ClassSpec,
        beta: f64,
    },
    ProductOrder {
        psi1: ClassSpec,
        psi2: ClassSpec,
        gamma: f64,
    },
    JanowskiBohr {
        d: f64,
        e: f64,
    },
}

type ResidualFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// The residual a [`RadiusResult`] was solved from.
#[derive(Clone)]
pub struct Residual(ResidualFn);

impl Residual {
    pub fn eval(&self, r: f64) -> f64 {
        (self.0)(r)
    }
}

impl fmt::Debug for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Residual(..)")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadiusResult {
    pub problem: Problem,
    pub root: f64,
    pub bracket: (f64, f64),
    pub residual_at_root: f64,
    /// Bracket width the root was narrowed to.
    pub tolerance: f64,
    pub iterations: usize,
    /// True when the reported radius is a cap (the domain edge or 1)
    /// rather than a root.
    pub capped: bool,
    #[serde(skip)]
    residual: Option<Residual>,
}

impl RadiusResult {
    pub fn residual(&self) -> Option<&Residual> {
        self.residual.as_ref()
    }

    /// Rescans `(SCAN_START, root - tolerance)` on `points` intervals and
    /// reports whether the residual keeps one sign there. Results without
    /// an attached residual (deserialized ones) report `false`.
    pub fn certify_least_root(&self, points: usize) -> bool {
        let Some(residual) = &self.residual else {
            return false;
        };
        let end = if self.capped {
            self.root
        } else {
            self.root - self.tolerance
        };
        if end <= SCAN_START {
            return true;
        }
        let first = residual.eval(SCAN_START).signum();
        (0..=points).all(|k| {
            let r = SCAN_START + (end - SCAN_START) * k as f64 / points as f64;
            let v = residual.eval(r);
            v != 0.0 && v.signum() == first
        })
    }
}

/// Solves `residual` on `(0, hi]`; when `cap` is set a residual without a
/// sign change yields `hi` with `capped = true`.
fn solve(problem: Problem, residual: ResidualFn, hi: f64, cap: bool) -> Result<RadiusResult> {
    let (solve, capped) = match solve_least_positive_root(|r| residual(r), hi, ROOT_TOL) {
        Ok(s) => (s, false),
        Err(Error::NoRoot { .. }) if cap => (
            RootSolve {
                root: hi,
                bracket: (hi, hi),
                iterations: 0,
                residual: residual(hi),
            },
            true,
        ),
        Err(e) => return Err(e),
    };
    Ok(RadiusResult {
        problem,
        root: solve.root,
        bracket: solve.bracket,
        residual_at_root: solve.residual,
        tolerance: ROOT_TOL,
        iterations: solve.iterations,
        capped,
        residual: Some(Residual(residual)),
    })
}

fn search_limit(f: &MindaFunction) -> f64 {
    if f.is_restricted() {
        f.domain_radius() - 1e-9
    } else {
        1.0
    }
}

fn min_modulus(f: &MindaFunction, r: f64) -> f64 {
    match f.closed_min_modulus(r) {
        Some((_, v)) => v,
        None => circle::numeric(f, r, ExtremumKind::MinMod).value,
    }
}

/// Least root of `(1 - r²) min_{|z|=r} |ψ(z)| - 2r`. For entries with a
/// restricted domain (Booth) the answer is `min{r_α, r₀}`.
pub fn majorization_radius_starlike(f: &MindaFunction) -> Result<RadiusResult> {
    let hi = search_limit(f);
    let psi = f.clone();
    let residual: ResidualFn = Arc::new(move |r| (1.0 - r * r) * min_modulus(&psi, r) - 2.0 * r);
    solve(
        Problem::MajorizeStarlike {
            psi: ClassSpec::of(f),
        },
        residual,
        hi,
        f.is_restricted(),
    )
}

fn require_convex(phi: &MindaFunction) -> Result<()> {
    if phi.is_convex() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{} is not a convex Carathéodory function",
            phi.id()
        )))
    }
}

/// `ψ = h / ∫_0^z h(t)/t dt` with `h = z exp ∫ (φ - 1)/t`, the solution of
/// `ψ + zψ'/ψ = φ` with `ψ(0) = 1`.
pub fn briot_bouquet_psi(phi: &MindaFunction) -> Result<MindaFunction> {
    let h_over_z = extremal::extremal_series(&phi.series(SYNTH_ORDER - 1)?)?.div_z()?;
    let psi = h_over_z.div(&h_over_z.mean_integral())?;
    let eval_series = psi.clone();
    Ok(MindaFunction::custom(
        &format!("briot_{}", phi.id()),
        psi,
        Some(Arc::new(move |z| eval_series.eval_adaptive(z))),
    ))
}

/// `ψ(z) = (1/z) ∫_0^z φ(t) dt`. When `φ` is convex so is `ψ`, and its
/// minimum modulus and real part sit on the real axis on the side given by
/// the orientation.
pub fn mean_value_psi(phi: &MindaFunction) -> Result<MindaFunction> {
    let series = phi.series(series::DEFAULT_ORDER)?.mean_integral();
    let inner = phi.clone();
    let rule = Arc::new(quad::gauss_legendre(16));
    let f = MindaFunction::custom(
        &format!("mean_{}", phi.id()),
        series,
        Some(Arc::new(move |z| {
            if z.norm() == 0.0 {
                return inner.eval_raw(z);
            }
            quad::integrate_unit_complex(|s| inner.eval_raw(z * s), &rule, 8)
        })),
    );
    if !phi.is_convex() {
        return Ok(f);
    }
    let form = match f.orientation() {
        Orientation::Negative => MinModulusForm::AtPlusR,
        _ => MinModulusForm::AtMinusR,
    };
    Ok(f.with_convex(true).with_min_modulus_form(form))
}

fn janowski_path(phi: &MindaFunction) -> Option<(ConvexPath, f64, f64)> {
    if phi.id() != "janowski" && phi.id() != "order_alpha" {
        return None;
    }
    let (d, e) = match phi.id() {
        "janowski" => (phi.param("D")?, phi.param("E")?),
        _ => (1.0 - 2.0 * phi.param("alpha")?, -1.0),
    };
    if e == 0.0 {
        Some((ConvexPath::Kummer, d, e))
    } else if (-1.0..0.0).contains(&e) && 1.0 + d / e >= 0.0 {
        Some((ConvexPath::Gauss, d, e))
    } else {
        None
    }
}

/// `ψ(-r) = 1/q(-r)` for the Janowski generator `φ = (1 + Dz)/(1 + Ez)`.
pub fn janowski_convex_min(d: f64, e: f64, r: f64) -> Result<f64> {
    let q = if e == 0.0 {
        kummer_1f1(HypergeometricQuery::confluent(1.0, 2.0, d * r))?
    } else {
        gauss_2f1(HypergeometricQuery::new(1.0 - d / e, 1.0, 2.0, -e * r / (1.0 - e * r)))?
    };
    Ok(1.0 / q)
}

/// Majorization radius for the convex class `C(φ)`: the least root of
/// `(1 - r²) min |ψ| - 2r` for the Briot-Bouquet partner `ψ` of `φ`.
/// Janowski generators use their hypergeometric closed form.
pub fn majorization_radius_convex(phi: &MindaFunction) -> Result<RadiusResult> {
    require_convex(phi)?;
    match janowski_path(phi) {
        Some((path, d, e)) => {
            let residual: ResidualFn = Arc::new(move |r| {
                let m = janowski_convex_min(d, e, r).unwrap_or(f64::NAN);
                (1.0 - r * r) * m - 2.0 * r
            });
            solve(
                Problem::MajorizeConvex {
                    phi: ClassSpec::of(phi),
                    path,
                },
                residual,
                1.0,
                false,
            )
        }
        None => majorization_radius_convex_numeric(phi),
    }
}

/// [`majorization_radius_convex`] through series synthesis and a circle
/// scan, whatever the generator.
pub fn majorization_radius_convex_numeric(phi: &MindaFunction) -> Result<RadiusResult> {
    require_convex(phi)?;
    let psi = briot_bouquet_psi(phi)?;
    let residual: ResidualFn = Arc::new(move |r| {
        (1.0 - r * r) * circle::numeric(&psi, r, ExtremumKind::MinMod).value - 2.0 * r
    });
    solve(
        Problem::MajorizeConvex {
            phi: ClassSpec::of(phi),
            path: ConvexPath::Numeric,
        },
        residual,
        1.0,
        false,
    )
}

fn min_re(psi: &MindaFunction, r: f64) -> f64 {
    match psi.closed_min_modulus(r) {
        Some((_, v)) => v,
        None => CircleScan::default()
            .extremum(|z| psi.eval_raw(z), r, ExtremumKind::MinRe)
            .value,
    }
}

/// Least root of `(1 - r²) min Re ψ - 2r` with `ψ = (1/z) ∫_0^z φ`.
pub fn hallenbeck_radius(phi: &MindaFunction) -> Result<RadiusResult> {
    require_convex(phi)?;
    let psi = mean_value_psi(phi)?;
    let residual: ResidualFn = Arc::new(move |r| (1.0 - r * r) * min_re(&psi, r) - 2.0 * r);
    solve(
        Problem::Hallenbeck {
            phi: ClassSpec::of(phi),
        },
        residual,
        1.0,
        false,
    )
}

/// Least root of `(1 - r²) min |√ψ| - 2r` with `ψ = (1/z) ∫_0^z φ`.
pub fn sqrt_variant_radius(phi: &MindaFunction) -> Result<RadiusResult> {
    require_convex(phi)?;
    let psi = mean_value_psi(phi)?;
    let residual: ResidualFn =
        Arc::new(move |r| (1.0 - r * r) * min_modulus(&psi, r).sqrt() - 2.0 * r);
    solve(
        Problem::SqrtVariant {
            phi: ClassSpec::of(phi),
        },
        residual,
        1.0,
        false,
    )
}

/// Checks on a few circles up to `upto` that the extremum of `Re ψ` of the
/// given kind sits at `ψ(x)`, `x = ±r`.
fn check_axis_extremum(psi: &MindaFunction, kind: ExtremumKind, upto: f64) -> Result<()> {
    let upto = upto.min(1.0 - 1e-6);
    for k in 1..=8 {
        let r = upto * k as f64 / 8.0;
        let x = if kind == ExtremumKind::MaxRe { r } else { -r };
        let on_axis = psi.eval_raw(Complex64::new(x, 0.0)).re;
        let ext = CircleScan::default().extremum(|z| psi.eval_raw(z), r, kind);
        if (ext.value - on_axis).abs() > 1e-9 * (1.0 + on_axis.abs()) {
            let what = if kind == ExtremumKind::MaxRe {
                "max Re ψ is not attained at ψ(r)"
            } else {
                "min Re ψ is not attained at ψ(-r)"
            };
            return Err(Error::Precondition(format!(
                "{what} for {} on |z| = {r:.6} (θ* = {:.6})",
                psi.id(),
                ext.theta_star
            )));
        }
    }
    Ok(())
}

/// Least root of `ψ₁(r) + ψ₂(r) - 1 - β`, capped at 1.
pub fn product_mbeta_radius(
    psi1: &MindaFunction,
    psi2: &MindaFunction,
    beta: f64,
) -> Result<RadiusResult> {
    if !(beta > 1.0) {
        return Err(Error::ParameterRange {
            name: "beta".into(),
            value: beta,
            range: "beta > 1".into(),
        });
    }
    let (p1, p2) = (psi1.clone(), psi2.clone());
    let residual: ResidualFn = Arc::new(move |r| {
        let at = |f: &MindaFunction| f.eval_raw(Complex64::new(r, 0.0)).re;
        1.0 + beta - at(&p1) - at(&p2)
    });
    let hi = search_limit(psi1).min(search_limit(psi2));
    let result = solve(
        Problem::ProductMbeta {
            psi1: ClassSpec::of(psi1),
            psi2: ClassSpec::of(psi2),
            beta,
        },
        residual,
        hi,
        true,
    )?;
    check_axis_extremum(psi1, ExtremumKind::MaxRe, result.root)?;
    check_axis_extremum(psi2, ExtremumKind::MaxRe, result.root)?;
    Ok(result)
}

/// Least root of `ψ₁(-r) + ψ₂(-r) - 1 - γ`, capped at 1.
pub fn product_order_radius(
    psi1: &MindaFunction,
    psi2: &MindaFunction,
    gamma: f64,
) -> Result<RadiusResult> {
    if !(0.0..1.0).contains(&gamma) {
        return Err(Error::ParameterRange {
            name: "gamma".into(),
            value: gamma,
            range: "0 <= gamma < 1".into(),
        });
    }
    let (p1, p2) = (psi1.clone(), psi2.clone());
    let residual: ResidualFn = Arc::new(move |r| {
        let at = |f: &MindaFunction| f.eval_raw(Complex64::new(-r, 0.0)).re;
        at(&p1) + at(&p2) - 1.0 - gamma
    });
    let hi = search_limit(psi1).min(search_limit(psi2));
    let result = solve(
        Problem::ProductOrder {
            psi1: ClassSpec::of(psi1),
            psi2: ClassSpec::of(psi2),
            gamma,
        },
        residual,
        hi,
        true,
    )?;
    check_axis_extremum(psi1, ExtremumKind::MinRe, result.root)?;
    check_axis_extremum(psi2, ExtremumKind::MinRe, result.root)?;
    Ok(result)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BohrResult {
    pub psi: ClassSpec,
    /// `r* = -f₀(-1)`.
    pub koebe: f64,
    pub koebe_method: KoebeMethod,
    /// Least root of `f̂₀(r) = r*`.
    pub root_r0: f64,
    /// Least root of `max_{|z|=r} |f₀(z)| = r*`; equals `root_r0` when every
    /// `t_n ≥ 0`.
    pub root_f0: f64,
    /// `min{r₀, 1/3}`.
    pub bohr_radius: f64,
    /// True when the `1/3` cap is the active bound.
    pub sharp_flag: bool,
    pub tolerance: f64,
    pub iterations: usize,
}

/// Bohr radius `min{r₀, 1/3}` of the subordination class of `f₀`.
pub fn bohr_radius(f: &MindaFunction) -> Result<BohrResult> {
    bohr_radius_with_order(f, series::DEFAULT_ORDER)
}

/// [`bohr_radius`] with `f₀` synthesized from `order` terms.
pub fn bohr_radius_with_order(f: &MindaFunction, order: usize) -> Result<BohrResult> {
    let e = synth_f0(f, order)?;
    let koebe = e.koebe_radius();
    // f̂₀(r) ≥ r, so the root lies in (0, r*].
    let hi = koebe.min(search_limit(f));
    let solve = solve_least_positive_root(
        |r| e.f0_hat(r).map(|v| koebe - v).unwrap_or(f64::NAN),
        hi,
        ROOT_TOL,
    )?;
    let growth = solve_least_positive_root(
        |r| e.max_growth(r).map(|v| koebe - v).unwrap_or(f64::NAN),
        hi,
        ROOT_TOL,
    )?;
    let third = 1.0 / 3.0;
    Ok(BohrResult {
        psi: ClassSpec::of(f),
        koebe,
        koebe_method: e.koebe_method(),
        root_r0: solve.root,
        root_f0: growth.root,
        bohr_radius: solve.root.min(third),
        sharp_flag: solve.root > third,
        tolerance: ROOT_TOL,
        iterations: solve.iterations,
    })
}

/// Sharp Bohr radius of the Janowski class, the root of
/// `1 - r e^{D(1+r)} = 0` when `E = 0` (needs `D ≥ (3/4) log 3`) or of
/// `(1-E)^k - r(1+Er)^k = 0`, `k = (D-E)/E`, when
/// `3(1-E)^k ≤ (1+E/3)^k`.
pub fn janowski_bohr_special(d: f64, e: f64) -> Result<RadiusResult> {
    MindaFunction::janowski(d, e)?;
    let residual: ResidualFn = if e == 0.0 {
        let bound = 0.75 * 3f64.ln();
        if d < bound - 1e-15 {
            return Err(Error::Precondition(format!(
                "E = 0 requires D >= (3/4) log 3 = {bound:.12}, got D = {d}"
            )));
        }
        Arc::new(move |r| 1.0 - r * (d * (1.0 + r)).exp())
    } else {
        let k = (d - e) / e;
        let lhs = 3.0 * (1.0 - e).powf(k);
        let rhs = (1.0 + e / 3.0).powf(k);
        if lhs > rhs * (1.0 + 1e-15) {
            return Err(Error::Precondition(format!(
                "3(1-E)^k <= (1+E/3)^k fails: {lhs:.12} > {rhs:.12}"
            )));
        }
        Arc::new(move |r| (1.0 - e).powf(k) - r * (1.0 + e * r).powf(k))
    };
    solve(Problem::JanowskiBohr { d, e }, residual, 1.0, false)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistortionRow {
    pub r: f64,
    /// Angle of `min |ψ|` on `|z| = r`.
    pub theta1: f64,
    /// Angle of `max |ψ|` on `|z| = r`.
    pub theta2: f64,
    pub min_modulus: f64,
    pub max_modulus: f64,
    /// `min |ψ| · (-f₀(-r)/r)`.
    pub lower: f64,
    /// `max |ψ| · f₀(r)/r`.
    pub upper: f64,
    pub min_method: Method,
}

impl DistortionRow {
    /// True when both extrema sit on the real axis, in which case the bounds
    /// reduce to `f₀'(-r)` and `f₀'(r)`.
    pub fn on_real_axis(&self) -> bool {
        let axis = |t: f64| t < 1e-9 || PI - t < 1e-9;
        axis(self.theta1) && axis(self.theta2)
    }
}

/// Bounds `lower ≤ |f'(z)| ≤ upper` on `|z| = r` for `f ∈ S*(ψ)`.
pub fn distortion_bounds(f: &MindaFunction, r: f64) -> Result<DistortionRow> {
    distortion_rows(f, &[r], series::DEFAULT_ORDER).map(|mut rows| rows.remove(0))
}

/// Distortion rows at each radius, sharing one synthesis of `f₀`.
pub fn distortion_rows(f: &MindaFunction, radii: &[f64], order: usize) -> Result<Vec<DistortionRow>> {
    let e = synth_f0(f, order)?;
    radii.iter().map(|&r| distortion_with(f, &e, r)).collect()
}

fn distortion_with(
    f: &MindaFunction,
    e: &extremal::ExtremalFunction,
    r: f64,
) -> Result<DistortionRow> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::Domain { r, limit: 1.0 });
    }
    let min: CircleExtremum = circle::min_modulus_on_circle(f, r)?;
    let max = circle::max_modulus_on_circle(f, r)?;
    let growth_lo = -e.eval_real(-r)? / r;
    let growth_hi = e.eval_real(r)? / r;
    Ok(DistortionRow {
        r,
        theta1: min.theta_star,
        theta2: max.theta_star,
        min_modulus: min.value,
        max_modulus: max.value,
        lower: min.value * growth_lo,
        upper: max.value * growth_hi,
        min_method: min.method,
    })
}

/// Radii of the lower-bound table for the cardioid `1 + z e^z`.
pub const TABLE1_RADII: [f64; 5] = [1.0, 0.8, 2.0 / 3.0, 0.5, 0.3];

/// Distortion rows for the cardioid at [`TABLE1_RADII`]; the last row lies
/// below the threshold where the minimum sits at `θ = π`.
pub fn table1_reproduce() -> Result<Vec<DistortionRow>> {
    distortion_rows(&MindaFunction::cardioid(), &TABLE1_RADII, series::DEFAULT_ORDER)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_residual() {
        let s = solve_least_positive_root(|r| 1.0 - 3.0 * r, 1.0, 1e-14).unwrap();
        assert!((s.root - 1.0 / 3.0).abs() < 1e-14);
        assert!(s.bracket.0 < s.root && s.root <= s.bracket.1);
    }

    #[test]
    fn quadratic_residual() {
        let s = solve_least_positive_root(|r| (1.0 - r) * (1.0 - r) - 2.0 * r, 1.0, 1e-13).unwrap();
        assert!((s.root - (2.0 - 3f64.sqrt())).abs() < 1e-13);
    }

    #[test]
    fn sine_residual() {
        let s = solve_least_positive_root(
            |r: f64| (1.0 - r * r) * (1.0 - r.sin()) - 2.0 * r,
            1.0,
            1e-12,
        )
        .unwrap();
        assert!((s.root - 0.312_478).abs() < 1e-6);
    }

    #[test]
    fn least_root_is_returned() {
        // Roots at 0.2, 0.5 and 0.8.
        let s = solve_least_positive_root(
            |r| -(r - 0.2) * (r - 0.5) * (r - 0.8),
            1.0,
            1e-13,
        )
        .unwrap();
        assert!((s.root - 0.2).abs() < 1e-13);
    }

    #[test]
    fn no_root() {
        assert_eq!(
            solve_least_positive_root(|r| 1.0 + r, 1.0, 1e-12),
            Err(Error::NoRoot { hi: 1.0 })
        );
    }

    #[test]
    fn starlike_janowski() {
        let res = majorization_radius_starlike(&MindaFunction::janowski(1.0, -1.0).unwrap()).unwrap();
        assert!((res.root - (2.0 - 3f64.sqrt())).abs() < 1e-12);
        assert!(!res.capped);
        assert!(res.certify_least_root(4096));
    }

    #[test]
    fn convex_janowski_paths_agree() {
        let phi = MindaFunction::janowski(1.0, -1.0).unwrap();
        let closed = majorization_radius_convex(&phi).unwrap();
        assert!((closed.root - 1.0 / 3.0).abs() < 1e-12);
        let numeric = majorization_radius_convex_numeric(&phi).unwrap();
        assert!((numeric.root - 1.0 / 3.0).abs() < 1e-9, "{}", numeric.root);
    }

    #[test]
    fn convex_exponential_janowski() {
        let d = 0.8;
        let phi = MindaFunction::janowski(d, 0.0).unwrap();
        let res = majorization_radius_convex(&phi).unwrap();
        assert!(matches!(
            res.problem,
            Problem::MajorizeConvex {
                path: ConvexPath::Kummer,
                ..
            }
        ));
        let r = res.root;
        let printed = (1.0 - r * r) * (d * r * (-d * r).exp() / ((-d * r).exp() - 1.0)) + 2.0 * r;
        assert!(printed.abs() < 1e-11);
    }

    #[test]
    fn hallenbeck_constant() {
        let res = hallenbeck_radius(&MindaFunction::constant_one()).unwrap();
        assert!((res.root - (2f64.sqrt() - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn bohr_starlike() {
        let b = bohr_radius(&MindaFunction::order_alpha(0.0).unwrap()).unwrap();
        assert!((b.root_r0 - (3.0 - 2.0 * 2f64.sqrt())).abs() < 1e-11);
        assert!(!b.sharp_flag);
    }

    #[test]
    fn janowski_bohr_hypotheses() {
        assert!(janowski_bohr_special(0.5, 0.0).is_err());
        assert!(janowski_bohr_special(0.75 * 3f64.ln(), 0.0).is_ok());
        let r = janowski_bohr_special(1.0, 0.0).unwrap();
        assert!((1.0 - r.root * (1.0 + r.root).exp()).abs() < 1e-12);
        assert!((r.root - 0.278_465).abs() < 1e-6);
    }

    #[test]
    fn product_rejects_off_axis_maximum() {
        let sine = MindaFunction::sine();
        let err = product_mbeta_radius(&sine, &sine, 2.9).unwrap_err();
        assert!(matches!(err, Error::Precondition(_)), "{err:?}");
    }

    #[test]
    fn problem_serializes_with_kind_tag() {
        let p = Problem::ProductMbeta {
            psi1: ClassSpec::of(&MindaFunction::exp()),
            psi2: ClassSpec::of(&MindaFunction::exp()),
            beta: 2.0,
        };
        let text = serde_json::to_string(&p).unwrap();
        assert!(text.contains(r#""kind":"product-mbeta""#), "{text}");
        let back: Problem = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }
}
