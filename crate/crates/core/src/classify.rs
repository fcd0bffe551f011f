//! Elementary symmetric functions of principal-curvature spectra and the
//! enumeration of isoparametric hypersurfaces of S^{n+1}(1) that are extremal
//! for the equi-centro-affine area, S_{n−1} = (n + 1) S_n S_1.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Curvature {
    pub k: f64,
    pub mult: usize,
}

/// Distinct principal curvatures k₁ > … > k_g with multiplicities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrincipalSpectrum {
    pub entries: Vec<Curvature>,
    pub n: usize,
}

impl PrincipalSpectrum {
    pub fn new(entries: Vec<Curvature>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain("a spectrum needs at least one curvature".into()));
        }
        if entries.iter().any(|c| c.mult == 0 || !c.k.is_finite()) {
            return Err(Error::Domain("curvatures must be finite with positive multiplicity".into()));
        }
        if entries.windows(2).any(|w| w[0].k <= w[1].k) {
            return Err(Error::Domain("curvatures must be strictly decreasing".into()));
        }
        let n = entries.iter().map(|c| c.mult).sum();
        Ok(Self { entries, n })
    }

    /// k_α = cot(θ + (α − 1)π/g) with the given multiplicities, g = mults.len().
    pub fn from_angle(theta: f64, mults: &[usize]) -> Result<Self> {
        let g = mults.len() as f64;
        Self::new(
            mults
                .iter()
                .enumerate()
                .map(|(i, &mult)| Curvature { k: 1.0 / (theta + i as f64 * PI / g).tan(), mult })
                .collect(),
        )
    }

    pub fn g(&self) -> usize {
        self.entries.len()
    }

    /// Curvatures repeated by multiplicity.
    pub fn expanded(&self) -> impl Iterator<Item = f64> + '_ {
        self.entries.iter().flat_map(|c| std::iter::repeat_n(c.k, c.mult))
    }

    /// S₀, …, S_n as the coefficients of Π(1 + k_i t).
    pub fn elem_sym_all(&self) -> Vec<f64> {
        let mut coeffs = vec![0.0; self.n + 1];
        coeffs[0] = 1.0;
        for (deg, k) in self.expanded().enumerate() {
            for r in (1..=deg + 1).rev() {
                coeffs[r] += k * coeffs[r - 1];
            }
        }
        coeffs
    }
}

/// The r-th elementary symmetric function of the curvatures with multiplicity.
pub fn elem_sym(spec: &PrincipalSpectrum, r: usize) -> Result<f64> {
    if r > spec.n {
        return Err(Error::Index { index: r, max: spec.n });
    }
    Ok(spec.elem_sym_all()[r])
}

/// S_{n−1} − (n + 1) S_n S₁.
pub fn extremal_residual_iso(spec: &PrincipalSpectrum) -> f64 {
    let s = spec.elem_sym_all();
    let n = spec.n;
    s[n - 1] - (n as f64 + 1.0) * s[n] * s[1]
}

/// The residual divided by Π(1 + k_i²)^{1/2}, written in terms of the angles
/// φ_α = θ + (α − 1)π/g so that it stays bounded where a curvature vanishes.
fn angle_residual(theta: f64, mults: &[usize]) -> f64 {
    let g = mults.len();
    let n: usize = mults.iter().sum();
    let trig: Vec<(f64, f64)> = (0..g).map(|a| (theta + a as f64 * PI / g as f64).sin_cos()).collect();
    let cos_pow = |a: usize, p: usize| trig[a].1.powi(p as i32);
    // Π c_i and Σ_i s_i Π_{j≠i} c_j over curvatures with multiplicity.
    let prod_c: f64 = (0..g).map(|a| cos_pow(a, mults[a])).product();
    let sum_s: f64 = (0..g)
        .map(|a| {
            let others: f64 = (0..g).filter(|&b| b != a).map(|b| cos_pow(b, mults[b])).product();
            mults[a] as f64 * trig[a].0 * cos_pow(a, mults[a] - 1) * others
        })
        .sum();
    let s1: f64 = (0..g).map(|a| mults[a] as f64 * trig[a].1 / trig[a].0).sum();
    sum_s - (n as f64 + 1.0) * prod_c * s1
}

/// Number of grid cells used to bracket roots in θ.
pub const THETA_GRID: usize = 10_000;

/// All θ ∈ (0, π/g) at which the residual vanishes, without eligibility
/// filtering.
fn residual_roots(mults: &[usize]) -> Vec<f64> {
    let g = mults.len();
    let h = PI / (g as f64 * THETA_GRID as f64);
    let f = |t: f64| angle_residual(t, mults);
    let nodes: Vec<(f64, f64)> = (0..THETA_GRID)
        .map(|i| {
            let t = (i as f64 + 0.5) * h;
            (t, f(t))
        })
        .collect();
    let mut roots = Vec::new();
    for w in nodes.windows(2) {
        let ((mut lo, mut flo), (mut hi, _)) = (w[0], w[1]);
        if flo == 0.0 {
            roots.push(lo);
            continue;
        }
        if flo.signum() == w[1].1.signum() || w[1].1 == 0.0 {
            continue;
        }
        loop {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = f(mid);
            if fm == 0.0 {
                (lo, hi) = (mid, mid);
                break;
            }
            if fm.signum() == flo.signum() {
                (lo, flo) = (mid, fm);
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    roots
}

/// Curvatures this close to zero make S_n vanish.
pub const ZERO_CURVATURE: f64 = 1e-12;

/// S_n ≠ 0 and, for even n, S_n > 0. Decided from the curvatures rather than
/// the product, which underflows for large n.
pub fn sign_condition(spec: &PrincipalSpectrum) -> bool {
    if spec.entries.iter().any(|c| c.k.abs() <= ZERO_CURVATURE) {
        return false;
    }
    let negative: usize = spec.entries.iter().filter(|c| c.k < 0.0).map(|c| c.mult).sum();
    spec.n % 2 == 1 || negative.is_multiple_of(2)
}

/// All θ ∈ (0, π/g) giving extremal spectra that satisfy the sign condition
/// on S_n.
pub fn solve_theta(g: usize, mults: &[usize], n: usize) -> Result<Vec<f64>> {
    if mults.len() != g || g == 0 {
        return Err(Error::Domain(format!("{} multiplicities given for g = {g}", mults.len())));
    }
    if mults.iter().sum::<usize>() != n || mults.contains(&0) {
        return Err(Error::Domain(format!("multiplicities {mults:?} do not add up to n = {n}")));
    }
    Ok(residual_roots(mults)
        .into_iter()
        .filter(|&t| PrincipalSpectrum::from_angle(t, mults).is_ok_and(|s| sign_condition(&s)))
        .collect())
}

/// Radii (√((m+1)/(n+2)), √((n+1−m)/(n+2))) of S^m(r₁) × S^{n−m}(r₂).
pub fn clifford_radii(n: usize, m: usize) -> Result<(f64, f64)> {
    if m == 0 || m >= n {
        return Err(Error::Domain(format!("need 1 <= m <= n - 1, got n = {n}, m = {m}")));
    }
    if n == 2 * m && m % 2 == 1 {
        return Err(Error::IneligibleParity { n, m });
    }
    Ok(clifford_radii_unchecked(n, m))
}

fn clifford_radii_unchecked(n: usize, m: usize) -> (f64, f64) {
    let d = (n + 2) as f64;
    (((m + 1) as f64 / d).sqrt(), ((n + 1 - m) as f64 / d).sqrt())
}

/// Σ mult·(1 − (n+1)k²)/k, the integrand of the pinching argument.
pub fn pinching_sign(spec: &PrincipalSpectrum) -> Result<f64> {
    if spec.entries.iter().any(|c| c.k == 0.0) {
        return Err(Error::ZeroCurvature);
    }
    let n1 = spec.n as f64 + 1.0;
    Ok(spec.entries.iter().map(|c| c.mult as f64 * (1.0 - n1 * c.k * c.k) / c.k).sum())
}

/// Number of s in 1..=l with s ≡ 0, 1, 2, 4 (mod 8).
pub fn phi(l: usize) -> usize {
    (1..=l).filter(|s| matches!(s % 8, 0 | 1 | 2 | 4)).count()
}

/// Multiplicity pairs (m₁, m₂) admitted for g = 4 with 2(m₁ + m₂) ≤ n_max.
pub fn g4_multiplicities(n_max: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m1 in 1..=n_max / 2 {
        for m2 in 1..=n_max / 2 {
            if 2 * (m1 + m2) > n_max {
                continue;
            }
            let listed = (m1, m2) == (2, 2) || (m1, m2) == (4, 5);
            if listed || (m1 + m2 + 1) % (1usize << phi(m1 - 1)) == 0 {
                out.push((m1, m2));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Eligible,
    /// Extremal, but S_n < 0 with n even.
    Flagged,
    Excluded,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassEntry {
    pub g: usize,
    pub n: usize,
    pub multiplicities: Vec<usize>,
    pub curvatures: Vec<f64>,
    pub theta: f64,
    /// S_{n−1} − (n+1) S_n S₁ at the computed curvatures.
    pub residual: f64,
    pub s_n: f64,
    /// Largest deviation from the identities specific to this g.
    pub identity_error: f64,
    pub status: Status,
    pub notes: Vec<String>,
    /// Radii of the product of spheres (g = 2) or of the sphere (g = 1).
    pub radii: Vec<f64>,
    pub symbolic: Option<String>,
}

fn cells(n_max: usize) -> Vec<Vec<usize>> {
    let mut cells: Vec<Vec<usize>> = (1..=n_max).map(|n| vec![n]).collect();
    for n in 2..=n_max {
        for m in 1..=n / 2 {
            cells.push(vec![m, n - m]);
        }
    }
    for m in [1, 2, 4, 8] {
        if 3 * m <= n_max {
            cells.push(vec![m; 3]);
        }
    }
    for (m1, m2) in g4_multiplicities(n_max) {
        cells.push(vec![m1, m2, m1, m2]);
    }
    for m in [1, 2] {
        if 6 * m <= n_max {
            cells.push(vec![m; 6]);
        }
    }
    cells
}

fn entry(theta: f64, mults: &[usize]) -> Result<ClassEntry> {
    let spec = PrincipalSpectrum::from_angle(theta, mults)?;
    let g = mults.len();
    let n = spec.n;
    let s = spec.elem_sym_all();
    let s_n = s[n];
    let k: Vec<f64> = spec.entries.iter().map(|c| c.k).collect();
    let nf = n as f64;
    let mut notes = Vec::new();
    let mut radii = Vec::new();
    let mut symbolic = None;
    let mut status = if sign_condition(&spec) { Status::Eligible } else { Status::Excluded };
    let identity_error = match g {
        1 => {
            radii.push(((nf + 1.0) / (nf + 2.0)).sqrt());
            symbolic = Some(format!("k = 1/√{}", n + 1));
            (k[0] * k[0] - 1.0 / (nf + 1.0)).abs()
        }
        2 => {
            let m = mults[0];
            let (r1, r2) = clifford_radii_unchecked(n, m);
            radii.extend([r1, r2]);
            symbolic = Some(format!("k1² = {}/{}", n + 1 - m, m + 1));
            if n == 2 * m && m % 2 == 1 {
                status = Status::Excluded;
                notes.push(format!("n = 2m with m = {m} odd"));
            } else if n % 2 == 0 && s_n < 0.0 {
                status = Status::Flagged;
                notes.push(format!("S_n = (-1)^(n-m) = {s_n:.3} < 0 with n even"));
            }
            let predicted = (n + 1 - m) as f64 / (m + 1) as f64;
            (1.0 + k[0] * k[1]).abs().max((k[0] * k[0] - predicted).abs())
        }
        3 => {
            let m = mults[0] as f64;
            let sq: Vec<f64> = k.iter().map(|v| v * v).collect();
            let product = sq[0] * sq[1] * sq[2];
            let sum = sq[0] + sq[1] + sq[2];
            let pairs = sq[0] * sq[1] + sq[1] * sq[2] + sq[0] * sq[2];
            let poly = |x: f64| ((3.0 * m + 1.0) * x - 3.0 * (6.0 * m + 5.0)) * x * x + 3.0 * (9.0 * m + 5.0) * x - 1.0;
            [
                (product - 1.0 / (nf + 1.0)).abs(),
                (sum - 3.0 * (2.0 * nf + 5.0) / (nf + 1.0)).abs(),
                (pairs - 3.0 * (3.0 * nf + 5.0) / (nf + 1.0)).abs(),
                sq.iter().map(|&x| poly(x).abs()).fold(0.0, f64::max),
            ]
            .into_iter()
            .fold(0.0, f64::max)
        }
        4 => {
            let (m1, m2) = (mults[0], mults[1]);
            let a = k[0] + k[2];
            let b = k[1] + k[3];
            let ratio = m2 as f64 / m1 as f64;
            symbolic = Some(if m1 == m2 {
                "1+√2, √2−1, 1−√2, −(1+√2)".to_string()
            } else {
                format!("k1 = √({m2}/{m1}) + √({m2}/{m1} + 1)")
            });
            if status == Status::Excluded {
                notes.push(format!("S_n = (-1)^(m1+m2) = {s_n:.0} < 0"));
            }
            (a * b + 4.0).abs().max((a * a - 4.0 * ratio).abs())
        }
        6 => {
            symbolic = Some("2+√3, 1, 2−√3, −(2−√3), −1, −(2+√3)".to_string());
            if status == Status::Excluded {
                notes.push(format!("S_{n} = {s_n:.0} < 0"));
            }
            let expected = [2.0 + 3f64.sqrt(), 1.0, 2.0 - 3f64.sqrt()];
            (0..3).map(|i| (k[i] - expected[i]).abs().max((k[5 - i] + expected[i]).abs())).fold(0.0, f64::max)
        }
        _ => 0.0,
    };
    Ok(ClassEntry {
        g,
        n,
        multiplicities: mults.to_vec(),
        curvatures: k,
        theta,
        residual: extremal_residual_iso(&spec),
        s_n,
        identity_error,
        status,
        notes,
        radii,
        symbolic,
    })
}

/// Extremal isoparametric spectra for n ≤ n_max, one row per solution with
/// θ ≤ π/(2g). Reflection θ ↦ π/g − θ negates the spectrum and reverses the
/// multiplicities, so every hypersurface appears once up to orientation.
pub fn classify_all(n_max: usize) -> Result<Vec<ClassEntry>> {
    if n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    let cells = cells(n_max);
    let rows: Vec<Result<Vec<ClassEntry>>> = par::map(&cells, |mults| {
        let half = PI / (2.0 * mults.len() as f64);
        // Roots where a curvature vanishes have S_n = 0 and are not spectra
        // of the family.
        residual_roots(mults)
            .into_iter()
            .filter(|&t| t <= half * (1.0 + 1e-12))
            .filter(|&t| {
                PrincipalSpectrum::from_angle(t, mults)
                    .is_ok_and(|s| s.entries.iter().all(|c| c.k.abs() > ZERO_CURVATURE))
            })
            .map(|t| entry(t, mults))
            .collect()
    });
    let mut table = Vec::new();
    for row in rows {
        table.extend(row?);
    }
    Ok(table)
}
