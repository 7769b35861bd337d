//! Small quadrature toolkit: adaptive Gauss–Kronrod (7/15) for real
//! integrands and fixed Gauss–Legendre rules for complex integrands on rays.

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    (kronrod * half, ((kronrod - gauss) * half).abs())
}

/// Adaptive Gauss–Kronrod integration of `f` over `[a, b]` to absolute
/// tolerance `tol`.
pub fn integrate(mut f: impl FnMut(f64) -> f64, a: f64, b: f64, tol: f64) -> Result<f64> {
    let mut stack = vec![(a, b, tol, 0usize)];
    let mut total = 0.0;
    while let Some((lo, hi, budget, depth)) = stack.pop() {
        let (value, err) = gk15(&mut f, lo, hi);
        if !value.is_finite() {
            return Err(Error::NonConvergence {
                what: format!("quadrature on [{lo}, {hi}] (non-finite integrand)"),
                order: depth,
            });
        }
        if err <= budget.max(1e-15 * value.abs()) || (hi - lo).abs() < 1e-12 {
            total += value;
        } else if depth >= 60 {
            return Err(Error::NonConvergence {
                what: "adaptive quadrature".into(),
                order: depth,
            });
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((lo, mid, 0.5 * budget, depth + 1));
            stack.push((mid, hi, 0.5 * budget, depth + 1));
        }
    }
    Ok(total)
}

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let step = p1 / dp;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule
}

/// `∫_0^1 f(s) ds` for a complex integrand with a fixed composite
/// Gauss–Legendre rule (`panels` panels of `rule.len()` points).
pub fn integrate_unit_complex(
    f: impl Fn(f64) -> Complex64,
    rule: &[(f64, f64)],
    panels: usize,
) -> Complex64 {
    let width = 1.0 / panels as f64;
    let mut acc = Complex64::default();
    for p in 0..panels {
        let center = (p as f64 + 0.5) * width;
        for &(x, w) in rule {
            acc += f(center + 0.5 * width * x) * (0.5 * width * w);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_transcendental() {
        let v = integrate(|x| x * x, 0.0, 3.0, 1e-13).unwrap();
        assert!((v - 9.0).abs() < 1e-12);
        let v = integrate(f64::exp, 0.0, 1.0, 1e-13).unwrap();
        assert!((v - (1f64.exp() - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn endpoint_root_singularity() {
        let v = integrate(f64::sqrt, 0.0, 1.0, 1e-12).unwrap();
        assert!((v - 2.0 / 3.0).abs() < 1e-10);
    }

    #[test]
    fn legendre_rule_is_exact_for_degree_2n_minus_1() {
        let rule = gauss_legendre(8);
        let sum_w: f64 = rule.iter().map(|(_, w)| w).sum();
        assert!((sum_w - 2.0).abs() < 1e-14);
        let x14: f64 = rule.iter().map(|(x, w)| w * x.powi(14)).sum();
        assert!((x14 - 2.0 / 15.0).abs() < 1e-14);
    }

    #[test]
    fn complex_unit_integral() {
        let rule = gauss_legendre(16);
        let z = Complex64::new(0.3, 0.4);
        let v = integrate_unit_complex(|s| (z * s).exp(), &rule, 2);
        let expected = (z.exp() - 1.0) / z;
        assert!((v - expected).norm() < 1e-14);
    }
}
