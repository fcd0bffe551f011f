//! First and second variation of the equi-centro-affine arc length of curves
//! on a sphere, mode-by-mode analysis for circles and the stability window
//! under an area constraint.

use std::f64::consts::{PI, TAU};

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::trace::CurvatureProfile;

/// Profiles with a larger extremality residual are rejected by the second
/// variation.
pub const CRITICAL_TOLERANCE: f64 = 1e-8;

/// Largest Fourier mode kept when projecting a sampled perturbation.
pub const MAX_MODES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Mode {
    pub m: u32,
    pub a: f64,
    pub b: f64,
}

/// U(x) = a₀/2 + Σ (a_m cos mx + b_m sin mx), x ∈ [0, 2π).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FourierPerturbation {
    pub a0: f64,
    pub modes: Vec<Mode>,
}

impl FourierPerturbation {
    pub fn new(a0: f64, modes: Vec<Mode>) -> Result<Self> {
        if !a0.is_finite() || modes.iter().any(|m| !m.a.is_finite() || !m.b.is_finite()) {
            return Err(Error::Domain("Fourier coefficients must be finite".into()));
        }
        if modes.iter().any(|m| m.m == 0) {
            return Err(Error::Domain("mode numbers start at 1; use a0 for the mean".into()));
        }
        if a0 == 0.0 && modes.iter().all(|m| m.a == 0.0 && m.b == 0.0) {
            return Err(Error::Domain("perturbation is identically zero".into()));
        }
        Ok(Self { a0, modes })
    }

    /// Parses "a0,a1,b1,a2,b2,…".
    pub fn from_coefficients(coeffs: &[f64]) -> Result<Self> {
        let (&a0, rest) = coeffs.split_first().ok_or_else(|| Error::Domain("at least a0 is required".into()))?;
        let modes = rest
            .chunks(2)
            .enumerate()
            .map(|(i, c)| Mode { m: i as u32 + 1, a: c[0], b: c.get(1).copied().unwrap_or(0.0) })
            .collect();
        Self::new(a0, modes)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.a0 / 2.0
            + self
                .modes
                .iter()
                .map(|m| {
                    let (s, c) = (m.m as f64 * x).sin_cos();
                    m.a * c + m.b * s
                })
                .sum::<f64>()
    }

    /// Samples U at the profile's arc-length grid with x = 2πs/L, L the
    /// profile's total length.
    pub fn sample_on(&self, profile: &CurvatureProfile) -> Vec<f64> {
        let length = span(profile);
        profile.samples.iter().map(|p| self.eval(TAU * p.s / length)).collect()
    }
}

fn span(profile: &CurvatureProfile) -> f64 {
    profile.samples.last().map_or(0.0, |p| p.s) - profile.samples[0].s
}

/// max |B_ss − 2B⁻² + B/R² − C₁/2| over the profile samples.
pub fn extremal_residual(profile: &CurvatureProfile) -> f64 {
    let CurvatureProfile { params, .. } = profile;
    let r2 = params.radius * params.radius;
    profile.samples.iter().map(|p| (p.b_ss - 2.0 / (p.b * p.b) + p.b / r2 - 0.5 * params.c1).abs()).fold(0.0, f64::max)
}

/// Coefficients (P₀, P₁, P₂) of the second variation integrand
/// P₂U_ss² + P₁U_s² + P₀U².
pub fn p_coefficients(b: f64, b_s: f64, radius: f64) -> (f64, f64, f64) {
    let r2 = radius * radius;
    let sqrt_b = b.sqrt();
    let b52 = b * b * sqrt_b;
    let bs2 = b_s * b_s;
    let p0 = b52 / (r2 * r2) - 2.5 / r2 * sqrt_b * bs2 - 9.0 / (sqrt_b * r2) - 2.0 * bs2 / b52 + 2.0 / (b52 * b);
    let p1 = 4.0 / (3.0 * r2) * b52 + 10.0 / (3.0 * sqrt_b);
    let p2 = -2.0 / 3.0 * b52;
    (p0, p1, p2)
}

/// Sampled U with its first two arc-length derivatives, obtained from the
/// least-squares trigonometric fit on the uniform grid.
struct SpectralField {
    u: Vec<f64>,
    u_s: Vec<f64>,
    u_ss: Vec<f64>,
}

fn spectral_fit(u: &[f64], length: f64) -> SpectralField {
    // The last sample repeats the first one.
    let n = u.len() - 1;
    let modes = MAX_MODES.min((n - 1) / 2);
    let omega = TAU / n as f64;
    let mean = u[..n].iter().sum::<f64>() / n as f64;
    let coeffs: Vec<(f64, f64)> = (1..=modes)
        .map(|k| {
            let (mut a, mut b) = (0.0, 0.0);
            for (j, &v) in u[..n].iter().enumerate() {
                let (s, c) = (omega * (k * j) as f64).sin_cos();
                a += v * c;
                b += v * s;
            }
            (2.0 * a / n as f64, 2.0 * b / n as f64)
        })
        .collect();
    let mut field = SpectralField { u: vec![mean; u.len()], u_s: vec![0.0; u.len()], u_ss: vec![0.0; u.len()] };
    for (idx, &(a, b)) in coeffs.iter().enumerate() {
        let k = (idx + 1) as f64;
        let w = TAU * k / length;
        for j in 0..u.len() {
            let (s, c) = (omega * k * j as f64).sin_cos();
            field.u[j] += a * c + b * s;
            field.u_s[j] += w * (b * c - a * s);
            field.u_ss[j] -= w * w * (a * c + b * s);
        }
    }
    field
}

/// (R^{1/3}/3) ∫ (P₂U_ss² + P₁U_s² + P₀U²) ds over the profile, with U
/// sampled on the profile grid and periodic over its length.
pub fn second_variation_quadrature(profile: &CurvatureProfile, u: &[f64]) -> Result<f64> {
    let residual = extremal_residual(profile);
    if residual > CRITICAL_TOLERANCE {
        return Err(Error::NotCritical { residual });
    }
    if u.len() != profile.samples.len() || u.len() < 4 {
        return Err(Error::Domain(format!("U has {} samples, the profile {}", u.len(), profile.samples.len())));
    }
    let scale = u.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if (u[u.len() - 1] - u[0]).abs() > 1e-8 * scale.max(1.0) {
        return Err(Error::Domain("U must be periodic over the profile".into()));
    }
    let field = spectral_fit(u, span(profile));
    let radius = profile.params.radius;
    let integrand: Vec<f64> = profile
        .samples
        .iter()
        .enumerate()
        .map(|(j, p)| {
            let (p0, p1, p2) = p_coefficients(p.b, p.b_s, radius);
            p2 * field.u_ss[j].powi(2) + p1 * field.u_s[j].powi(2) + p0 * field.u[j].powi(2)
        })
        .collect();
    let integral: f64 = profile
        .samples
        .windows(2)
        .zip(integrand.windows(2))
        .map(|(s, f)| 0.5 * (s[1].s - s[0].s) * (f[0] + f[1]))
        .sum();
    Ok(radius.cbrt() / 3.0 * integral)
}

/// −2^{5/6}√6/(6R), the common factor of the circle's second variation.
pub fn circle_factor(radius: f64) -> f64 {
    -(2f64.powf(5.0 / 6.0) * 6f64.sqrt()) / (6.0 * radius)
}

/// Closed-form second variation at the critical circle κ_g = √2/(2R):
/// −(2^{5/6}√6/(6R))(a₀²π + πΣ(m² − 2)(m² − 1)(a_m² + b_m²)).
pub fn circle_second_variation(radius: f64, pert: &FourierPerturbation) -> f64 {
    let modes: f64 = pert
        .modes
        .iter()
        .map(|m| {
            let m2 = (m.m as f64).powi(2);
            (m2 - 2.0) * (m2 - 1.0) * (m.a * m.a + m.b * m.b)
        })
        .sum();
    circle_factor(radius) * PI * (pert.a0 * pert.a0 + modes)
}

/// The critical circle profile B³ = 2R² with C₁ = 0.
pub fn critical_circle(radius: f64, samples: usize) -> Result<CurvatureProfile> {
    CurvatureProfile::circle(radius, 0.0, (2.0 * radius * radius).cbrt(), samples)
}

/// Q(m, z) = (2m⁴−4m²−3)z² + (4m⁴−14m²+27)z + (2m⁴−10m²−6), z = B³/R².
pub fn area_preserving_q(m: u32, z: f64) -> f64 {
    let [c2, c1, c0] = q_coefficients(m as i64);
    (c2 as f64 * z + c1 as f64) * z + c0 as f64
}

fn q_coefficients(m: i64) -> [i64; 3] {
    let m2 = m * m;
    let m4 = m2 * m2;
    [2 * m4 - 4 * m2 - 3, 4 * m4 - 14 * m2 + 27, 2 * m4 - 10 * m2 - 6]
}

/// Q(m, z) in exact rational arithmetic.
pub fn area_preserving_q_exact(m: u32, z: Ratio<i64>) -> Ratio<i64> {
    let [c2, c1, c0] = q_coefficients(m as i64).map(Ratio::from_integer);
    (c2 * z + c1) * z + c0
}

/// Highest mode number scanned by the stability tests.
pub const SCANNED_MODES: u32 = 50;

/// Q(m, z) ≥ 0 for every m in 1..=50.
pub fn is_area_stable(z: f64) -> bool {
    (1..=SCANNED_MODES).all(|m| area_preserving_q(m, z) >= 0.0)
}

/// The interval of z = B³/R² on which every scanned mode is stable, located
/// on a grid over (0, 4] and refined by bisection.
pub fn stability_window() -> (f64, f64) {
    let grid: Vec<f64> = (1..=4000).map(|i| i as f64 * 1e-3).collect();
    let first = grid.iter().position(|&z| is_area_stable(z)).expect("stable points exist");
    let last = grid.iter().rposition(|&z| is_area_stable(z)).expect("stable points exist");
    let refine = |mut stable: f64, mut unstable: f64| {
        for _ in 0..80 {
            let mid = 0.5 * (stable + unstable);
            if is_area_stable(mid) {
                stable = mid;
            } else {
                unstable = mid;
            }
        }
        stable
    };
    let lo = if first == 0 { grid[0] } else { refine(grid[first], grid[first - 1]) };
    let hi = if last + 1 == grid.len() { grid[last] } else { refine(grid[last], grid[last + 1]) };
    (lo, hi)
}
