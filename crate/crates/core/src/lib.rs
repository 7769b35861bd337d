//! Radius problems for Ma-Minda starlike and convex function classes.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`]: truncated complex power series (products, quotients,
//!   `exp`, `log`, powers, composition).
//! - [`catalog`]: the registry of Ma-Minda functions `ψ`.
//! - [`special`]: Gauss and Kummer hypergeometric series.
//! - [`circle`]: extrema of `|ψ|` and `Re ψ` over circles `|z| = r`.
//! - [`extremal`]: the extremal function `f₀` with `z f₀'/f₀ = ψ` and the
//!   Koebe radius `-f₀(-1)`.
//! - [`radius`]: majorization, product, distortion and Bohr radii.
//! - [`verify`]: numeric probes of subordination and sharpness claims.

pub mod catalog;
pub mod circle;
pub mod error;
pub mod extremal;
pub mod quad;
pub mod radius;
pub mod series;
pub mod special;
pub mod verify;

pub use catalog::{MindaFunction, MinModulusForm, Orientation, Params};
pub use circle::{CircleExtremum, ExtremumKind, Method};
pub use error::{Error, Result};
pub use extremal::ExtremalFunction;
pub use radius::{BohrResult, RadiusResult};
pub use series::PowerSeries;
