//! Progression angle Λ^Θ: the azimuth gained about the Killing axis during
//! one period of the curvature, computed by quadrature, by complete elliptic
//! integrals of the third kind, and by series.

use std::f64::consts::{FRAC_PI_2, PI, SQRT_2};

use serde::Serialize;

use crate::cubic::{admissible_lower_bound, solve_cubic, CubicRoots, CurveParams};
use crate::error::{Error, Result};
use crate::par;
use crate::quad;
use crate::specfun::{
    complete_elliptic_pi, elliptic_pi_quadrature, elliptic_pi_series, series_domain_ok, EllipticArgs,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleMethod {
    Quadrature,
    Elliptic,
    Series,
}

impl std::fmt::Display for AngleMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            AngleMethod::Quadrature => "quadrature",
            AngleMethod::Elliptic => "elliptic",
            AngleMethod::Series => "series",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngleResult {
    pub lambda_theta: f64,
    /// Euclidean arc length of one period of B.
    pub period: f64,
    pub method: AngleMethod,
    pub error_estimate: f64,
}

/// Quadrature failures are reported above this absolute error estimate.
pub const QUADRATURE_MAX_ERROR: f64 = 1e-8;

/// Relative distance to the threshold below which the raw quadrature is
/// replaced by the extrapolated limit.
pub const NEAR_THRESHOLD: f64 = 1e-6;

/// Arc length of one period, T = 2∫_{A₂}^{A₁} dB / √(C₂ − B²/R² − 4/B + C₁B).
pub fn period(params: &CurveParams) -> Result<f64> {
    let roots = solve_cubic(params)?;
    period_from_roots(params, &roots)
}

fn period_from_roots(params: &CurveParams, roots: &CubicRoots) -> Result<f64> {
    let CubicRoots { a1, a2, a3, .. } = *roots;
    let width = a1 - a2;
    // B = A₂ + (A₁ − A₂)sin²φ removes both square-root endpoint singularities.
    let q = quad::integrate(
        |phi| {
            let b = a2 + width * phi.sin().powi(2);
            (b / (b - a3)).sqrt()
        },
        0.0,
        FRAC_PI_2,
        0.0,
        1e-13,
    )?;
    Ok(4.0 * params.radius * q.value)
}

/// Λ^Θ from the partial-fraction form
/// (2/√R)∫_b^a [1/(r−B̃) + 1/(r+B̃)] dB̃ / √((a−B̃)(B̃−b)(B̃−c)).
pub fn angle_quadrature(params: &CurveParams) -> Result<AngleResult> {
    let roots = solve_cubic(params)?;
    let gap = distance_above_threshold(params);
    if gap < NEAR_THRESHOLD {
        return near_threshold(params, &roots);
    }
    raw_quadrature(params, &roots)
}

fn distance_above_threshold(params: &CurveParams) -> f64 {
    let d = admissible_lower_bound(params.c1, params.radius);
    (params.c2 - d) / d.abs().max(1.0)
}

fn raw_quadrature(params: &CurveParams, roots: &CubicRoots) -> Result<AngleResult> {
    let CubicRoots { a, b, c, r, .. } = *roots;
    let width = a - b;
    let r_minus_a = roots.r_minus_a();
    let q = quad::integrate(
        |phi| {
            let (s, co) = phi.sin_cos();
            let bt = b + width * s * s;
            let minus = r_minus_a + width * co * co; // r − B̃
            let plus = r + bt;
            2.0 * (1.0 / minus + 1.0 / plus) / (bt - c).sqrt()
        },
        0.0,
        FRAC_PI_2,
        1e-15,
        1e-13,
    )?;
    let scale = 2.0 / params.radius.sqrt();
    let error_estimate = scale * q.error;
    if error_estimate > QUADRATURE_MAX_ERROR {
        return Err(Error::QuadratureFailure { estimate: error_estimate });
    }
    Ok(AngleResult {
        lambda_theta: scale * q.value,
        period: period_from_roots(params, roots)?,
        method: AngleMethod::Quadrature,
        error_estimate,
    })
}

// Close to the threshold a = b pinches and the quadrature loses accuracy, so
// Λ is extrapolated quadratically from the closed-form limit and two
// quadratures further out.
fn near_threshold(params: &CurveParams, roots: &CubicRoots) -> Result<AngleResult> {
    let d = admissible_lower_bound(params.c1, params.radius);
    let scale = d.abs().max(1.0);
    let h = NEAR_THRESHOLD * scale;
    let limit = limit_at_threshold(params.c1, params.radius);
    let sample = |offset: f64| -> Result<f64> {
        let p = CurveParams { c2: d + offset, ..*params };
        Ok(raw_quadrature(&p, &solve_cubic(&p)?)?.lambda_theta)
    };
    let l1 = sample(h)?;
    let l2 = sample(2.0 * h)?;
    let t = (params.c2 - d) / h;
    // Quadratic through (0, limit), (1, l1), (2, l2) in units of h.
    let beta = (l2 - limit - 2.0 * (l1 - limit)) / 2.0;
    let alpha = l1 - limit - beta;
    let quadratic = limit + alpha * t + beta * t * t;
    let linear = limit + (l1 - limit) * t;
    Ok(AngleResult {
        lambda_theta: quadratic,
        period: period_from_roots(params, roots)?,
        method: AngleMethod::Quadrature,
        error_estimate: (quadratic - linear).abs(),
    })
}

/// Closed form used for the elliptic evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EllipticForm {
    /// Three Π terms with characteristics (a−b)/(a+r), (a−b)(c−r)/((a−c)(b−r)), 0.
    ThreeTerm,
    /// Two Π terms with characteristics (a−b)/(a+r), (a−b)/(a−r); needs r > a.
    TwoTerm,
}

/// Λ^Θ in closed form, choosing the two-term form when r > a.
pub fn angle_elliptic(params: &CurveParams) -> Result<AngleResult> {
    let roots = solve_cubic(params)?;
    let form = if roots.r > roots.a { EllipticForm::TwoTerm } else { EllipticForm::ThreeTerm };
    angle_elliptic_form(params, &roots, form)
}

/// Λ^Θ with an explicitly chosen closed form.
pub fn angle_elliptic_with(params: &CurveParams, form: EllipticForm) -> Result<AngleResult> {
    let roots = solve_cubic(params)?;
    angle_elliptic_form(params, &roots, form)
}

fn angle_elliptic_form(params: &CurveParams, roots: &CubicRoots, form: EllipticForm) -> Result<AngleResult> {
    let CubicRoots { a, b, c, r, .. } = *roots;
    let m = (a - b) / (a - c);
    let root = (params.radius * (a - c)).sqrt();
    let r_minus_a = roots.r_minus_a();
    let terms: Vec<(f64, f64)> = match form {
        EllipticForm::TwoTerm => {
            vec![(4.0 / ((a + r) * root), (a - b) / (a + r)), (4.0 / (r_minus_a * root), -(a - b) / r_minus_a)]
        }
        EllipticForm::ThreeTerm => {
            let r_minus_b = r_minus_a + (a - b);
            let r_minus_c = r - c;
            vec![
                (4.0 / ((a + r) * root), (a - b) / (a + r)),
                (4.0 * (b - c) / (r_minus_c * r_minus_b * root), (a - b) * r_minus_c / ((a - c) * r_minus_b)),
                (4.0 / (r_minus_c * root), 0.0),
            ]
        }
    };
    let mut total = 0.0;
    let mut magnitude = 0.0;
    for (weight, n) in terms {
        let args = EllipticArgs { n, m };
        let value = match complete_elliptic_pi(args) {
            Ok(v) => v,
            Err(Error::Domain(msg)) => {
                log::warn!("elliptic characteristic out of range ({msg}); using quadrature");
                return angle_quadrature(params);
            }
            Err(e) => return Err(e),
        };
        total += weight * value;
        magnitude += (weight * value).abs();
    }
    Ok(AngleResult {
        lambda_theta: total,
        period: period_from_roots(params, roots)?,
        method: AngleMethod::Elliptic,
        error_estimate: 64.0 * f64::EPSILON * magnitude,
    })
}

/// Limit of Λ^Θ as C₂ decreases to the admissibility threshold.
pub fn limit_at_threshold(c1: f64, radius: f64) -> f64 {
    let d = admissible_lower_bound(c1, radius);
    let rc1 = radius * c1;
    let r0 = (d + rc1 * rc1 / 4.0).sqrt();
    let d0 = (3.0 * d + rc1 * rc1).sqrt();
    let p = 6.0 * r0 + 4.0 * d0 + rc1;
    12.0 * PI / (radius * d0).sqrt()
        * (1.0 / (2.0 * d0 + 6.0 * r0 - rc1) + 1.0 / p + 6.0 * d0 / (p * (6.0 * r0 - 2.0 * d0 + rc1)))
}

/// Coefficients of the large-r expansion Λ ≈ π(1 + k₁r^{−3/2} + k₂r^{−9/2} + k₃r^{−15/2}).
pub fn large_c2_coefficients() -> [f64; 3] {
    [(280.0 - 49.0 * SQRT_2) / 128.0, -(350.0 - 35.0 * SQRT_2) / 64.0, (4193.0 - 735.0 * SQRT_2) / 128.0]
}

/// r beyond which the expansion is monotone: (6√3)^{1/3}.
pub fn large_c2_min_r() -> f64 {
    (6.0 * 3f64.sqrt()).cbrt()
}

/// Large-C₂ expansion of Λ^Θ, derived for C₁ = 0 on the unit sphere.
///
/// The error estimate is the size of the first neglected order, π r^{−9}.
/// The coefficients come from four terms of the Π series, so the actual
/// deviation from the exact angle is larger (≈ 7e-4 relative at C₂ = 100).
pub fn angle_series_large_c2(params: &CurveParams) -> Result<AngleResult> {
    if params.c1 != 0.0 || (params.radius - 1.0).abs() > 1e-15 {
        return Err(Error::Domain("the large-C2 expansion is only available for C1 = 0, R = 1".into()));
    }
    let r = params.c2.max(0.0).sqrt();
    if !(r > large_c2_min_r()) {
        return Err(Error::Domain(format!("r = sqrt(C2) = {r} must exceed (6*sqrt(3))^(1/3) = {}", large_c2_min_r())));
    }
    let [k1, k2, k3] = large_c2_coefficients();
    let lambda_theta = PI * (1.0 + k1 * r.powf(-1.5) + k2 * r.powf(-4.5) + k3 * r.powf(-7.5));
    // The truncation error has no useful a priori bound at moderate r, so the
    // distance from the closed form is reported.
    let exact = angle_elliptic(params)?;
    Ok(AngleResult {
        lambda_theta,
        period: exact.period,
        method: AngleMethod::Series,
        error_estimate: (lambda_theta - exact.lambda_theta).abs(),
    })
}

/// Λ^Θ from the two-term closed form with each Π replaced by the first
/// `terms` terms of its series in the parameter. Terms whose characteristic
/// falls outside the series validity region are integrated directly.
pub fn angle_series_truncated(params: &CurveParams, terms: usize) -> Result<AngleResult> {
    let roots = solve_cubic(params)?;
    let CubicRoots { a, b, c, r, .. } = roots;
    let m = (a - b) / (a - c);
    let root = (params.radius * (a - c)).sqrt();
    let r_minus_a = roots.r_minus_a();
    let parts = [(4.0 / ((a + r) * root), (a - b) / (a + r)), (4.0 / (r_minus_a * root), -(a - b) / r_minus_a)];
    let mut total = 0.0;
    for (weight, alpha) in parts {
        let value = if series_domain_ok(alpha, m) {
            elliptic_pi_series(alpha, m, terms)?
        } else {
            log::warn!("series not valid at alpha={alpha}, k={m}; integrating directly");
            elliptic_pi_quadrature(EllipticArgs::new(alpha, m)?)?
        };
        total += weight * value;
    }
    // Truncation error of the series, measured against the closed form.
    let exact = angle_elliptic_form(params, &roots, EllipticForm::TwoTerm)?.lambda_theta;
    Ok(AngleResult {
        lambda_theta: total,
        period: period_from_roots(params, &roots)?,
        method: AngleMethod::Series,
        error_estimate: (total - exact).abs(),
    })
}

/// Evaluates Λ^Θ by the requested method.
pub fn angle(params: &CurveParams, method: AngleMethod) -> Result<AngleResult> {
    match method {
        AngleMethod::Quadrature => angle_quadrature(params),
        AngleMethod::Elliptic => angle_elliptic(params),
        AngleMethod::Series => angle_series_large_c2(params),
    }
}

/// Λ^Θ at fixed (C₁, R) for each C₂, in input order, evaluated in parallel
/// when the `parallel` feature is on.
pub fn sweep_c2(c1: f64, radius: f64, c2_values: &[f64], method: AngleMethod) -> Vec<Result<AngleResult>> {
    par::map(c2_values, |&c2| angle(&CurveParams::new(radius, c1, c2)?, method))
}

/// Single-threaded [`sweep_c2`].
pub fn sweep_c2_sequential(c1: f64, radius: f64, c2_values: &[f64], method: AngleMethod) -> Vec<Result<AngleResult>> {
    par::map_sequential(c2_values, |&c2| angle(&CurveParams::new(radius, c1, c2)?, method))
}
