//! Complete elliptic integrals of the first and third kind.
//!
//! Closed-form values go through Carlson's symmetric integrals R_F and R_J
//! (duplication algorithm). The power series of Π(α, π/2, m) in the
//! parameter m is provided separately, together with its coefficient
//! recurrence, for the large-C₂ analysis of the progression angle.
//!
//! Parameter convention throughout: `m = k²`.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::quad;

/// Characteristic `n` and parameter `m` of a complete integral of the third kind.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticArgs {
    pub n: f64,
    pub m: f64,
}

impl EllipticArgs {
    pub fn new(n: f64, m: f64) -> Result<Self> {
        let args = Self { n, m };
        args.validate()?;
        Ok(args)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.n.is_finite() && self.m.is_finite()) {
            return Err(Error::Domain(format!("non-finite arguments n={}, m={}", self.n, self.m)));
        }
        if !(0.0..1.0).contains(&self.m) {
            return Err(Error::Domain(format!("parameter m={} outside [0, 1)", self.m)));
        }
        if self.n >= 1.0 {
            return Err(Error::Domain(format!("characteristic n={} must be < 1", self.n)));
        }
        Ok(())
    }
}

/// Carlson's R_F(x, y, z); at most one argument may be zero.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> f64 {
    const TOL: f64 = 1.0e-3;
    let (mut x, mut y, mut z) = (x, y, z);
    loop {
        let a = (x + y + z) / 3.0;
        let dx = (a - x) / a;
        let dy = (a - y) / a;
        let dz = (a - z) / a;
        if dx.abs().max(dy.abs()).max(dz.abs()) < TOL {
            let e2 = dx * dy - dz * dz;
            let e3 = dx * dy * dz;
            return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / a.sqrt();
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
}

/// R_C(1, 1 + t) for t > -1, with a series near t = 0.
fn carlson_rc_unit(t: f64) -> f64 {
    if t.abs() < 1e-4 {
        // 1 - t/3 + t²/5 - t³/7 + t⁴/9
        return 1.0 + t * (-1.0 / 3.0 + t * (1.0 / 5.0 + t * (-1.0 / 7.0 + t / 9.0)));
    }
    if t > 0.0 {
        let s = t.sqrt();
        s.atan() / s
    } else {
        let s = (-t).sqrt();
        s.atanh() / s
    }
}

/// Carlson's R_J(x, y, z, p) for p > 0; at most one of x, y, z may be zero.
pub fn carlson_rj(x: f64, y: f64, z: f64, p: f64) -> f64 {
    const TOL: f64 = 1.0e-3;
    let (mut x, mut y, mut z, mut p) = (x, y, z, p);
    let mut sum = 0.0;
    let mut scale = 1.0;
    loop {
        let a = (x + y + z + 2.0 * p) / 5.0;
        let dx = (a - x) / a;
        let dy = (a - y) / a;
        let dz = (a - z) / a;
        let dp = (a - p) / a;
        if dx.abs().max(dy.abs()).max(dz.abs()).max(dp.abs()) < TOL {
            let pp = -(dx + dy + dz) / 2.0;
            let e2 = dx * dy + dx * dz + dy * dz - 3.0 * pp * pp;
            let e3 = dx * dy * dz + 2.0 * e2 * pp + 4.0 * pp * pp * pp;
            let e4 = (2.0 * dx * dy * dz + e2 * pp + 3.0 * pp * pp * pp) * pp;
            let e5 = dx * dy * dz * pp * pp;
            let series =
                1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0
                    + 3.0 * e5 / 26.0;
            return scale * series / (a * a.sqrt()) + 6.0 * sum;
        }
        let (sx, sy, sz, sp) = (x.sqrt(), y.sqrt(), z.sqrt(), p.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        let d = (sp + sx) * (sp + sy) * (sp + sz);
        let e = (p - x) * (p - y) * (p - z) / (d * d);
        sum += scale * carlson_rc_unit(e) / d;
        scale *= 0.25;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        p = 0.25 * (p + lambda);
    }
}

/// K(m) = ∫₀^{π/2} dθ / √(1 − m sin²θ).
pub fn complete_elliptic_k(m: f64) -> Result<f64> {
    if !(m < 1.0) || !m.is_finite() {
        return Err(Error::Domain(format!("parameter m={m} must be < 1")));
    }
    Ok(carlson_rf(0.0, 1.0 - m, 1.0))
}

/// Π(n, π/2, m) = ∫₀^{π/2} dθ / ((1 − n sin²θ) √(1 − m sin²θ)).
pub fn complete_elliptic_pi(args: EllipticArgs) -> Result<f64> {
    args.validate()?;
    let EllipticArgs { n, m } = args;
    let k = carlson_rf(0.0, 1.0 - m, 1.0);
    if n == 0.0 {
        return Ok(k);
    }
    Ok(k + n / 3.0 * carlson_rj(0.0, 1.0 - m, 1.0, 1.0 - n))
}

/// Π(n, π/2, m) by adaptive quadrature of the defining integral.
pub fn elliptic_pi_quadrature(args: EllipticArgs) -> Result<f64> {
    args.validate()?;
    let EllipticArgs { n, m } = args;
    let q = quad::integrate(
        |t| {
            let s2 = t.sin().powi(2);
            1.0 / ((1.0 - n * s2) * (1.0 - m * s2).sqrt())
        },
        0.0,
        FRAC_PI_2,
        0.0,
        1e-14,
    )?;
    Ok(q.value)
}

/// True when (α, k) lies in the region where the series is stated to hold:
/// α < −1 with 0 ≤ k < 1, or 0 < α < 1 with 0 ≤ k < α.
pub fn series_domain_ok(alpha: f64, k: f64) -> bool {
    (alpha < -1.0 && (0.0..1.0).contains(&k)) || (alpha > 0.0 && alpha < 1.0 && k >= 0.0 && k < alpha)
}

/// First `count` coefficients c_m of Π(α, π/2, k) = Σ c_m k^m.
///
/// c₀…c₃ use their closed forms; later terms use the three-term recurrence
/// 2(m+1)α c_{m+1} = π/(2(2m−1))·C(−½, m)² + (1−2m)c_{m−1} + (2m+1+2mα)c_m.
pub fn series_coefficients(alpha: f64, count: usize) -> Vec<f64> {
    use std::f64::consts::PI;
    if alpha.abs() < 1e-12 {
        return series_coefficients_near_zero(alpha, count);
    }
    let s = (1.0 - alpha).sqrt();
    let a = alpha;
    let head = [
        PI / (2.0 * s),
        PI / (4.0 * a) * (1.0 / s - 1.0),
        3.0 * PI / (32.0 * a * a) * (2.0 / s - 2.0 - a),
        5.0 * PI / (256.0 * a * a * a) * (-4.0 * a - 3.0 * a * a - 8.0 + 8.0 / s),
    ];
    let mut c: Vec<f64> = head.iter().copied().take(count).collect();
    // C(−½, m)² = ((2m−1)!!/(2m)!!)²
    let mut binom = 1.0;
    for m in 1..=3 {
        binom *= (2 * m - 1) as f64 / (2 * m) as f64;
    }
    let mut m = 3usize;
    while c.len() < count {
        let mf = m as f64;
        let next = (PI / (2.0 * (2.0 * mf - 1.0)) * binom * binom
            + (1.0 - 2.0 * mf) * c[m - 1]
            + (2.0 * mf + 1.0 + 2.0 * mf * a) * c[m])
            / (2.0 * (mf + 1.0) * a);
        c.push(next);
        m += 1;
        binom *= (2 * m - 1) as f64 / (2 * m) as f64;
    }
    c
}

// Π(α, k) ≈ K(k) + α ∂Π/∂α at α = 0: c_m = w_m (W_m + α W_{m+1}), with
// w_m = (½)_m/m! and W_j = ∫₀^{π/2} sin^{2j} = (π/2) w_j.
fn series_coefficients_near_zero(alpha: f64, count: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(count);
    let mut w = 1.0;
    for m in 0..count {
        let w_next = w * (2 * m + 1) as f64 / (2 * m + 2) as f64;
        out.push(w * FRAC_PI_2 * (w + alpha * w_next));
        w = w_next;
    }
    out
}

/// Partial sum Σ_{m<terms} c_m k^m of the series for Π(α, π/2, k).
pub fn elliptic_pi_series(alpha: f64, k: f64, terms: usize) -> Result<f64> {
    if terms == 0 {
        return Err(Error::Domain("series needs at least one term".into()));
    }
    if !series_domain_ok(alpha, k) {
        return Err(Error::Domain(format!("(alpha={alpha}, k={k}) outside the series validity region")));
    }
    let c = series_coefficients(alpha, terms);
    // Horner
    Ok(c.iter().rev().fold(0.0, |acc, &cm| acc * k + cm))
}
