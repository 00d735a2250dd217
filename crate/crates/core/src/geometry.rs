//! Closed-form math of the native hyperbolic disk model.
//!
//! All logarithms are natural. Angles live in `[0, 2π)`. Everything here is
//! exact up to floating point; the asymptotic estimates are separate
//! functions with `leading`/`bound` in their names.

use alloc::format;
use core::f64::consts::{PI, TAU};

use libm::{acosh, asin, asinh, cosh, exp, fabs, fmod, log, sin, sinh, sqrt};

use crate::quad::{self, DEFAULT_MAX_EVALS, DEFAULT_REL_TOL};
use crate::{Error, Result};

/// Slack on the distance threshold that absorbs rounding at ties, so that a
/// pair placed at exactly the connection angle is adjacent.
pub const EDGE_TOLERANCE: f64 = 1e-10;

/// Configuration of the hyperbolic random graph model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    n: usize,
    alpha: f64,
    kappa_bar: f64,
    radius: f64,
}

impl ModelParams {
    /// Validates `1/2 < alpha < 1`, `kappa_bar > 0` and `8n / (π kappa_bar) > 1`
    /// and derives the disk radius.
    pub fn new(n: usize, alpha: f64, kappa_bar: f64) -> Result<Self> {
        if !(alpha > 0.5 && alpha < 1.0) {
            return Err(Error::InvalidParams(format!(
                "alpha must lie in (1/2, 1), got {alpha}"
            )));
        }
        if !(kappa_bar > 0.0 && kappa_bar.is_finite()) {
            return Err(Error::InvalidParams(format!(
                "kappa_bar must be positive, got {kappa_bar}"
            )));
        }
        if n == 0 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        let radius = disk_radius(n, kappa_bar).map_err(|e| match e {
            Error::Domain(msg) => Error::InvalidParams(msg),
            other => other,
        })?;
        Ok(ModelParams {
            n,
            alpha,
            kappa_bar,
            radius,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn kappa_bar(&self) -> f64 {
        self.kappa_bar
    }

    /// Disk radius `R`, which is also the connection threshold.
    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Power-law exponent `β = 2α + 1` of the degree distribution.
    pub fn power_law_exponent(&self) -> f64 {
        2.0 * self.alpha + 1.0
    }

    pub fn with_n(&self, n: usize) -> Result<Self> {
        ModelParams::new(n, self.alpha, self.kappa_bar)
    }
}

/// A point in polar coordinates around the disk center.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    pub r: f64,
    pub phi: f64,
}

impl PolarPoint {
    /// Builds a point, reducing the angle modulo 2π.
    pub fn new(r: f64, phi: f64) -> Self {
        PolarPoint {
            r,
            phi: normalize_angle(phi),
        }
    }
}

/// Reduces an angle into `[0, 2π)`.
pub fn normalize_angle(phi: f64) -> f64 {
    let mut a = fmod(phi, TAU);
    if a < 0.0 {
        a += TAU;
    }
    if a >= TAU {
        a -= TAU;
    }
    a
}

/// Angular distance `π − |π − |a − b||` in `[0, π]`.
pub fn angular_distance(a: f64, b: f64) -> f64 {
    let d = fabs(normalize_angle(a) - normalize_angle(b));
    PI - fabs(PI - d)
}

/// `R = 2 ln(8n / (π κ̄))`.
pub fn disk_radius(n: usize, kappa_bar: f64) -> Result<f64> {
    let arg = 8.0 * n as f64 / (PI * kappa_bar);
    if !(arg > 1.0) {
        return Err(Error::Domain(format!(
            "8n/(pi kappa_bar) = {arg} must exceed 1 for a positive disk radius"
        )));
    }
    Ok(2.0 * log(arg))
}

/// Hyperbolic distance between two points.
///
/// Evaluated as `acosh(cosh(r1 − r2) + 2 sinh r1 sinh r2 sin²(Δφ/2))`, which is
/// the textbook `acosh(cosh r1 cosh r2 − sinh r1 sinh r2 cos Δφ)` rewritten to
/// avoid cancellation between the two large products.
pub fn hyp_distance(p: PolarPoint, q: PolarPoint) -> f64 {
    let half = 0.5 * angular_distance(p.phi, q.phi);
    let s = sin(half);
    let x = cosh(p.r - q.r) + 2.0 * sinh(p.r) * sinh(q.r) * s * s;
    acosh(x.max(1.0))
}

/// The edge rule of the model: distance at most `radius` (ties included).
pub fn within_connection_range(p: PolarPoint, q: PolarPoint, radius: f64) -> bool {
    hyp_distance(p, q) <= radius + EDGE_TOLERANCE
}

/// `θ(r1, r2)`: the largest angular distance at which points with radii `r1`
/// and `r2` are within distance `radius` of each other.
///
/// Returns π when every angle connects (including points at the origin) and 0
/// when none does. Uses the half-angle form
/// `sin²(θ/2) = (cosh R − cosh(r1 − r2)) / (2 sinh r1 sinh r2)`.
pub fn connection_angle(r1: f64, r2: f64, radius: f64) -> f64 {
    let num = cosh(radius) - cosh(r1 - r2);
    let den = 2.0 * sinh(r1) * sinh(r2);
    if den <= 0.0 {
        return if num >= 0.0 { PI } else { 0.0 };
    }
    let s = num / den;
    if s >= 1.0 {
        PI
    } else if s <= 0.0 {
        0.0
    } else {
        2.0 * asin(sqrt(s))
    }
}

/// `δ(r_u, r_v) = θ(r_u, R) − θ(r_v, R)`: the angular half-width of the
/// dominance area of a vertex at radius `r_u`, evaluated at radius `r_v`.
pub fn dominance_angle(r_u: f64, r_v: f64, radius: f64) -> Result<f64> {
    if r_u > r_v {
        return Err(Error::Precondition(format!(
            "dominance angle needs r_u <= r_v, got {r_u} > {r_v}"
        )));
    }
    Ok((connection_angle(r_u, radius, radius) - connection_angle(r_v, radius, radius)).max(0.0))
}

fn check_radius(r: f64, params: &ModelParams) -> Result<()> {
    if !(r >= 0.0 && r <= params.radius) {
        return Err(Error::Domain(format!(
            "radius {r} outside [0, {}]",
            params.radius
        )));
    }
    Ok(())
}

/// `cosh(x) − 1` without cancellation near zero.
fn cosh_m1(x: f64) -> f64 {
    let s = sinh(0.5 * x);
    2.0 * s * s
}

/// CDF of the radial coordinate: `(cosh(αr) − 1) / (cosh(αR) − 1)`.
pub fn radial_cdf(r: f64, params: &ModelParams) -> Result<f64> {
    check_radius(r, params)?;
    let a = params.alpha;
    Ok((cosh_m1(a * r) / cosh_m1(a * params.radius)).min(1.0))
}

/// Exact inverse of [`radial_cdf`].
pub fn radial_quantile(u: f64, params: &ModelParams) -> Result<f64> {
    if !(0.0..=1.0).contains(&u) {
        return Err(Error::Domain(format!("probability {u} outside [0, 1]")));
    }
    Ok(radial_quantile_unchecked(u, params.alpha, params.radius))
}

/// `(2/α) asinh(sqrt(u (cosh(αR) − 1) / 2))`, clamped into `[0, R]`.
pub(crate) fn radial_quantile_unchecked(u: f64, alpha: f64, radius: f64) -> f64 {
    let r = 2.0 / alpha * asinh(sqrt(0.5 * u * cosh_m1(alpha * radius)));
    r.clamp(0.0, radius)
}

/// Joint density per unit radius and unit angle:
/// `α sinh(αr) / (2π (cosh(αR) − 1))`.
pub fn radial_density(r: f64, params: &ModelParams) -> f64 {
    if !(0.0..=params.radius).contains(&r) {
        return 0.0;
    }
    let a = params.alpha;
    a * sinh(a * r) / (TAU * cosh_m1(a * params.radius))
}

/// Probability that a random vertex falls in the dominance area of a vertex
/// at radius `r_u`: `2 ∫_{r_u}^R δ(r_u, r) f(r) dr`, by adaptive quadrature.
pub fn mu_dominance_area(r_u: f64, params: &ModelParams) -> Result<f64> {
    let big_r = params.radius;
    if !(r_u >= 0.5 * big_r && r_u <= big_r) {
        return Err(Error::Precondition(format!(
            "dominance measure needs R/2 <= r_u <= R, got r_u = {r_u}, R = {big_r}"
        )));
    }
    let theta_u = connection_angle(r_u, big_r, big_r);
    let integrand = |r: f64| {
        let delta = (theta_u - connection_angle(r, big_r, big_r)).max(0.0);
        2.0 * delta * radial_density(r, params)
    };
    quad::integrate(integrand, r_u, big_r, DEFAULT_REL_TOL, DEFAULT_MAX_EVALS)
}

/// Leading-order estimate `(2/π) e^{−r_u/2} (1 − e^{−α(R − r_u)})`.
pub fn mu_dominance_area_leading(r_u: f64, params: &ModelParams) -> f64 {
    let a = params.alpha;
    2.0 / PI * exp(-0.5 * r_u) * (1.0 - exp(-a * (params.radius - r_u)))
}

/// The leading term together with the `Θ(1/n)` correction
/// `− 2α / ((α − 1/2) π) e^{−R/2} (1 − e^{−(α − 1/2)(R − r_u)})`, both without
/// their multiplicative `1 + Θ(e^{−αR})` factors.
pub fn mu_dominance_area_two_term(r_u: f64, params: &ModelParams) -> f64 {
    let a = params.alpha;
    let big_r = params.radius;
    let correction =
        2.0 * a / ((a - 0.5) * PI) * exp(-0.5 * big_r) * (1.0 - exp(-(a - 0.5) * (big_r - r_u)));
    mu_dominance_area_leading(r_u, params) - correction
}

/// Probability that a random vertex has radius at least `r` and an arc
/// (half-width `θ(x, x)`) covering a fixed angle: `2 ∫_r^R θ(x, x) f(x) dx`.
pub fn mu_arc_region(r: f64, params: &ModelParams) -> Result<f64> {
    let big_r = params.radius;
    if !(r >= 0.5 * big_r && r <= big_r) {
        return Err(Error::Precondition(format!(
            "arc-region measure needs R/2 <= r <= R, got r = {r}, R = {big_r}"
        )));
    }
    let integrand = |x: f64| 2.0 * connection_angle(x, x, big_r) * radial_density(x, params);
    quad::integrate(integrand, r, big_r, DEFAULT_REL_TOL, DEFAULT_MAX_EVALS)
}

/// Closed-form leading term `2α / ((1 − α) π) e^{−(α − 1/2) R − (1 − α) r}`.
pub fn mu_arc_region_bound(r: f64, params: &ModelParams) -> f64 {
    let a = params.alpha;
    2.0 * a / ((1.0 - a) * PI) * exp(-(a - 0.5) * params.radius - (1.0 - a) * r)
}

/// Default constant for [`rho_threshold`]: `8 / κ̄`.
pub fn default_rho_constant(params: &ModelParams) -> f64 {
    8.0 / params.kappa_bar
}

/// `ρ = R − 2 ln ln(n^c)`, floored at zero. Vertices of radius at most `ρ`
/// are dominant with high probability.
pub fn rho_threshold(params: &ModelParams, c: f64) -> Result<f64> {
    let log_nc = c * log(params.n as f64);
    if !(c > 0.0) || !(log_nc > 1.0) {
        return Err(Error::Domain(format!(
            "ln(n^c) = {log_nc} must exceed 1 (n = {}, c = {c})",
            params.n
        )));
    }
    Ok((params.radius - 2.0 * log(log_nc)).max(0.0))
}

/// Degree above which vertices are expected to be dominant:
/// `α / (α − 1/2) · ln n`.
pub fn high_degree_threshold(params: &ModelParams) -> f64 {
    high_degree_threshold_for(params.n, params.alpha)
}

/// [`high_degree_threshold`] for graphs without model parameters.
pub fn high_degree_threshold_for(n: usize, alpha: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    alpha / (alpha - 0.5) * log(n as f64)
}

/// Leading-order expected degree of a vertex at radius `r`:
/// `2α / ((α − 1/2) π) · n · e^{−r/2}`.
pub fn expected_degree_at_radius(r: f64, params: &ModelParams) -> f64 {
    let a = params.alpha;
    2.0 * a / ((a - 0.5) * PI) * params.n as f64 * exp(-0.5 * r)
}
