use std::f64::consts::PI;

use minda_core::catalog::{self, MindaFunction};
use minda_core::circle::{self, ExtremumKind};
use minda_core::extremal::synth_f0;
use minda_core::radius;
use minda_core::PowerSeries;
use num_complex::Complex64;
use proptest::prelude::*;

const ORDER: usize = 12;

fn series() -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64), ORDER + 1)
        .prop_map(|v| PowerSeries::new(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()))
}

fn close(a: &PowerSeries, b: &PowerSeries, tol: f64) -> bool {
    (0..=a.order().min(b.order())).all(|n| (a.coeff(n) - b.coeff(n)).norm() <= tol)
}

proptest! {
    #[test]
    fn product_commutes(a in series(), b in series()) {
        prop_assert!(close(&(&a * &b), &(&b * &a), 1e-12));
    }

    #[test]
    fn product_associates(a in series(), b in series(), c in series()) {
        prop_assert!(close(&(&(&a * &b) * &c), &(&a * &(&b * &c)), 1e-10));
    }

    #[test]
    fn product_distributes(a in series(), b in series(), c in series()) {
        let lhs = &(&a + &b) * &c;
        let rhs = &(&a * &c) + &(&b * &c);
        prop_assert!(close(&lhs, &rhs, 1e-11));
    }

    #[test]
    fn division_recovers_the_factor(a in series(), b in series(), b0 in 0.5..2.0f64) {
        let mut coeffs = b.coeffs().to_vec();
        coeffs[0] = Complex64::new(b0, 0.0);
        let b = PowerSeries::new(coeffs);
        let q = (&a * &b).div(&b).unwrap();
        let scale = a.coeffs().iter().map(|c| c.norm()).fold(1.0, f64::max);
        prop_assert!(close(&q, &a, 1e-6 * scale));
    }

    #[test]
    fn log_inverts_exp(a in series()) {
        let mut coeffs: Vec<Complex64> = a.coeffs().iter().map(|c| c * 0.3).collect();
        coeffs[0] = Complex64::default();
        let a = PowerSeries::new(coeffs);
        prop_assert!(close(&a.exp().unwrap().ln().unwrap(), &a, 1e-10));
    }

    #[test]
    fn powers_add(a in series(), p in -1.5..1.5f64, q in -1.5..1.5f64) {
        let mut coeffs: Vec<Complex64> = a.coeffs().iter().map(|c| c * 0.2).collect();
        coeffs[0] = Complex64::new(1.0, 0.0);
        let a = PowerSeries::new(coeffs);
        let lhs = &a.powf(p).unwrap() * &a.powf(q).unwrap();
        prop_assert!(close(&lhs, &a.powf(p + q).unwrap(), 1e-9));
    }

    #[test]
    fn min_modulus_bounds_every_point(idx in 0usize..15, r in 0.05..0.95f64, theta in 0.0..PI) {
        let f = &catalog::all_default()[idx];
        let r = r.min(f.domain_radius() * 0.95);
        let m = circle::min_modulus_on_circle(f, r).unwrap();
        let w = f.eval_raw(Complex64::from_polar(r, theta)).norm();
        prop_assert!(m.value <= w + 1e-12, "{} {m:?} vs {w}", f.id());
    }

    #[test]
    fn closed_min_modulus_matches_scan(idx in 0usize..15, r in 0.05..0.95f64) {
        let f = &catalog::all_default()[idx];
        let r = r.min(f.domain_radius() * 0.95);
        if let Some((_, closed)) = f.closed_min_modulus(r) {
            let scanned = circle::numeric(f, r, ExtremumKind::MinMod).value;
            prop_assert!((closed - scanned).abs() < 1e-8, "{} at {r}", f.id());
        }
    }

    #[test]
    fn janowski_starlike_root_is_certified(d in -0.9..1.0f64, gap in 0.05..1.0f64) {
        let e = (d - gap).max(-1.0);
        let f = MindaFunction::janowski(d, e).unwrap();
        let res = radius::majorization_radius_starlike(&f).unwrap();
        prop_assert!(res.root > 0.0 && res.root <= 1.0);
        prop_assert!(res.certify_least_root(512));
        prop_assert!(res.residual_at_root.abs() < 1e-10);
    }

    #[test]
    fn closed_forms_match_series(idx in 0usize..4, rho in 0.0..0.9f64, theta in 0.0..(2.0 * PI)) {
        let f = [
            MindaFunction::janowski(0.7, -0.4).unwrap(),
            MindaFunction::cardioid(),
            MindaFunction::lemniscate(),
            MindaFunction::order_alpha(0.3).unwrap(),
        ][idx].clone();
        let e = synth_f0(&f, 512).unwrap();
        let z = Complex64::from_polar(rho, theta);
        let closed = e.eval(z).unwrap();
        prop_assert!((closed - e.series().eval(z)).norm() < 1e-8);
    }

    #[test]
    fn growth_sandwich_for_rotations(idx in 0usize..15, r in 0.05..0.9f64, phi in 0.0..(2.0 * PI), theta in 0.0..(2.0 * PI)) {
        let f = &catalog::all_default()[idx];
        if f.id() == "ab_power" || f.is_restricted() {
            return Ok(());
        }
        let e = synth_f0(f, 64).unwrap();
        // e^{-iφ} f₀(e^{iφ} z) is again in the class.
        let rot = Complex64::from_polar(1.0, phi);
        let value = (e.eval(rot * Complex64::from_polar(r, theta)).unwrap() / rot).norm();
        let lower = e.eval_real(-r).unwrap().abs().min(e.eval_real(r).unwrap().abs());
        let upper = e.max_growth(r).unwrap();
        prop_assert!(lower <= value + 1e-12 && value <= upper + 1e-12, "{}", f.id());
    }
}

#[test]
fn koebe_growth_is_increasing() {
    for f in catalog::all_default() {
        if f.id() == "ab_power" {
            continue;
        }
        let e = synth_f0(&f, 64).unwrap();
        let limit = f.domain_radius().min(1.0);
        let values: Vec<f64> = (1..=20)
            .map(|k| e.eval_real(-(k as f64) / 20.0 * limit * 0.999).unwrap().abs())
            .collect();
        assert!(values.windows(2).all(|w| w[0] < w[1]), "{}", f.id());
        assert!(e.koebe_radius() <= 1.0, "{}", f.id());
    }
}
