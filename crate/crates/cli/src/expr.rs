//! The small expression language accepted by `verify --g`:
//! `[c*]f0(z)`, `f0(z/k)`, `f0(k*z)`, `f0(z*k)` and `f0(z^m)`.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Inner {
    Scale(f64),
    Power(u32),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GExpr {
    pub factor: f64,
    pub inner: Inner,
}

impl GExpr {
    pub fn parse(src: &str) -> Result<Self, String> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || format!("cannot parse g = `{src}`; expected forms like f0(z/2), 1.01*f0(z), f0(z^2)");
        let (factor, call) = match s.split_once("*f0(") {
            Some((c, rest)) => (c.parse::<f64>().map_err(|_| bad())?, rest),
            None => (1.0, s.strip_prefix("f0(").ok_or_else(bad)?),
        };
        let arg = call.strip_suffix(')').ok_or_else(bad)?;
        let num = |t: &str| t.parse::<f64>().map_err(|_| bad());
        let inner = if arg == "z" {
            Inner::Scale(1.0)
        } else if let Some(k) = arg.strip_prefix("z/") {
            Inner::Scale(1.0 / num(k)?)
        } else if let Some(k) = arg.strip_prefix("z*") {
            Inner::Scale(num(k)?)
        } else if let Some(k) = arg.strip_suffix("*z") {
            Inner::Scale(num(k)?)
        } else if let Some(m) = arg.strip_prefix("z^") {
            Inner::Power(m.parse::<u32>().ok().filter(|&m| m >= 1).ok_or_else(bad)?)
        } else {
            return Err(bad());
        };
        if let Inner::Scale(k) = inner {
            if !(k.abs() <= 1.0) || k == 0.0 {
                return Err(format!("g = `{src}`: the inner map must send the disk into itself"));
            }
        }
        if !factor.is_finite() {
            return Err(bad());
        }
        Ok(Self { factor, inner })
    }

    /// Point at which `f₀` is evaluated.
    pub fn inner_at(&self, z: Complex64) -> Complex64 {
        match self.inner {
            Inner::Scale(k) => z * k,
            Inner::Power(m) => z.powu(m),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        assert_eq!(
            GExpr::parse("f0(z/2)").unwrap(),
            GExpr { factor: 1.0, inner: Inner::Scale(0.5) }
        );
        assert_eq!(
            GExpr::parse(" 1.01 * f0(z) ").unwrap(),
            GExpr { factor: 1.01, inner: Inner::Scale(1.0) }
        );
        assert_eq!(GExpr::parse("f0(z^2)").unwrap().inner, Inner::Power(2));
        assert_eq!(GExpr::parse("f0(0.5*z)").unwrap().inner, Inner::Scale(0.5));
        let g = GExpr::parse("f0(z^3)").unwrap();
        let z = Complex64::new(0.5, 0.5);
        assert!((g.inner_at(z) - z * z * z).norm() < 1e-15);
    }

    #[test]
    fn rejects() {
        for s in ["f0(2*z)", "g(z)", "f0(z^0)", "f0(z", "x*f0(z)", "f0(z/0)"] {
            assert!(GExpr::parse(s).is_err(), "{s}");
        }
    }
}
