//! Integration of the curvature profile B(s) and reconstruction of the curve
//! on the sphere, closure search for prescribed (p, q), and invariants of the
//! traced curve.

use std::f64::consts::{PI, TAU};

use serde::Serialize;

use crate::angle::{angle_elliptic, limit_at_threshold, period};
use crate::cubic::{admissible_lower_bound, solve_cubic, CurveParams};
use crate::error::{Error, Result};

type Vec3 = [f64; 3];

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn scale(a: Vec3, k: f64) -> Vec3 {
    [a[0] * k, a[1] * k, a[2] * k]
}

fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

/// Right-hand side of B'' = 2B⁻² − B/R² + C₁/2.
fn b_second(b: f64, radius: f64, c1: f64) -> f64 {
    2.0 / (b * b) - b / (radius * radius) + 0.5 * c1
}

/// The step must resolve a period with at least this many steps.
pub const MIN_STEPS_PER_PERIOD: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProfileSample {
    pub s: f64,
    pub b: f64,
    pub b_s: f64,
    pub b_ss: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileKind {
    /// B oscillates between the roots A₂ and A₁.
    Oscillating,
    /// B is constant; the curve is a circle.
    Constant,
}

/// Sampled solution B(s) of the curvature equation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvatureProfile {
    pub params: CurveParams,
    pub kind: ProfileKind,
    pub samples: Vec<ProfileSample>,
    /// Period of B (for a circle, its length).
    pub period_t: f64,
    /// Period measured from the samples by locating the last minimum of B.
    pub sampled_period: f64,
    pub step: f64,
    pub steps_per_period: usize,
    /// max |B_s² − (C₂ − B²/R² − 4/B + C₁B)| over the samples.
    pub first_integral_residual: f64,
}

impl CurvatureProfile {
    /// Right-hand side of the first integral at (B, B_s), minus B_s².
    fn first_integral_defect(params: &CurveParams, b: f64, b_s: f64) -> f64 {
        let r2 = params.radius * params.radius;
        (b_s * b_s - (params.c2 - b * b / r2 - 4.0 / b + params.c1 * b)).abs()
    }

    /// A constant profile B ≡ `b` over one circle length, sampled at
    /// `samples` points. C₂ is set so that the first integral holds; B is a
    /// solution of the curvature equation only when it is a double root of the
    /// cubic, see [`CurvatureProfile::circle`].
    pub fn constant(radius: f64, c1: f64, b: f64, samples: usize) -> Result<Self> {
        if !(b > 0.0) || !b.is_finite() {
            return Err(Error::Domain(format!("B must be positive, got {b}")));
        }
        if samples < 2 {
            return Err(Error::Domain("at least two samples are required".into()));
        }
        let c2 = b * b / (radius * radius) + 4.0 / b - c1 * b;
        let params = CurveParams::new(radius, c1, c2)?;
        let length = TAU * circle_radius(radius, b);
        let step = length / samples as f64;
        let samples: Vec<_> =
            (0..=samples).map(|i| ProfileSample { s: i as f64 * step, b, b_s: 0.0, b_ss: 0.0 }).collect();
        Ok(Self {
            params,
            kind: ProfileKind::Constant,
            period_t: length,
            sampled_period: length,
            step,
            steps_per_period: samples.len() - 1,
            first_integral_residual: 0.0,
            samples,
        })
    }

    /// A constant profile that solves the curvature equation, which requires
    /// 2B⁻² − B/R² + C₁/2 = 0.
    pub fn circle(radius: f64, c1: f64, b: f64, samples: usize) -> Result<Self> {
        let profile = Self::constant(radius, c1, b, samples)?;
        let residual = b_second(b, radius, c1).abs();
        if residual > 1e-12 * (1.0 + b / (radius * radius)) {
            return Err(Error::NotCritical { residual });
        }
        Ok(profile)
    }

    pub fn kappa_g(&self, i: usize) -> f64 {
        self.samples[i].b.powf(-1.5)
    }
}

/// Euclidean radius 1/√(R⁻² + κ_g²) of a circle with κ_g = B^{−3/2}.
pub fn circle_radius(radius: f64, b: f64) -> f64 {
    1.0 / (1.0 / (radius * radius) + b.powi(-3)).sqrt()
}

/// Largest h·ω of one RK4 step, ω = √(4/B³ + 1/R²) being the local rate of
/// the curvature equation at the smallest B (it also bounds κ_g = B^{−3/2}).
const MAX_STEP_RATE: f64 = 0.01;

/// RK4 steps per sample step `h` so that h·ω stays below [`MAX_STEP_RATE`].
fn substeps(h: f64, radius: f64, b_min: f64) -> usize {
    let omega = (4.0 / b_min.powi(3) + 1.0 / (radius * radius)).sqrt();
    ((h * omega / MAX_STEP_RATE).ceil() as usize).max(1)
}

fn rk4_profile(params: &CurveParams, b: f64, v: f64, h: f64) -> (f64, f64) {
    let f = |b: f64| b_second(b, params.radius, params.c1);
    let k1 = (v, f(b));
    let k2 = (v + 0.5 * h * k1.1, f(b + 0.5 * h * k1.0));
    let k3 = (v + 0.5 * h * k2.1, f(b + 0.5 * h * k2.0));
    let k4 = (v + h * k3.1, f(b + h * k3.0));
    (b + h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0), v + h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1))
}

/// Integrates B'' = 2B⁻² − B/R² + C₁/2 from B = A₂, B_s = 0 over `n_periods`
/// periods with a fixed RK4 step no larger than `step`.
pub fn integrate_profile(params: &CurveParams, n_periods: usize, step: f64) -> Result<CurvatureProfile> {
    let roots = solve_cubic(params)?;
    let t = period(params)?;
    let max = t / MIN_STEPS_PER_PERIOD as f64;
    if !(step > 0.0) || step > max {
        return Err(Error::StepTooLarge { step, max });
    }
    if n_periods == 0 {
        return Err(Error::Domain("at least one period is required".into()));
    }
    // A step of T/n gives n steps, despite rounding in T/(T/n).
    let per_period = (t / step * (1.0 - 1e-12)).ceil() as usize;
    let h = t / per_period as f64;
    let total = per_period * n_periods;
    let n_sub = substeps(h, params.radius, roots.a2);
    let hs = h / n_sub as f64;
    let advance = |(mut b, mut v): (f64, f64)| {
        for _ in 0..n_sub {
            (b, v) = rk4_profile(params, b, v, hs);
        }
        (b, v)
    };
    let mut samples = Vec::with_capacity(total + 1);
    let (mut b, mut v) = (roots.a2, 0.0);
    let mut residual: f64 = 0.0;
    for i in 0..=total {
        residual = residual.max(CurvatureProfile::first_integral_defect(params, b, v));
        samples.push(ProfileSample { s: i as f64 * h, b, b_s: v, b_ss: b_second(b, params.radius, params.c1) });
        if i < total {
            (b, v) = advance((b, v));
        }
    }
    // The final minimum sits at the last sample up to rounding, so a quarter
    // period on either side is searched.
    let quarter = per_period / 4;
    let mut window = samples[total - quarter..].to_vec();
    for i in 1..=quarter {
        (b, v) = advance((b, v));
        window.push(ProfileSample {
            s: (total + i) as f64 * h,
            b,
            b_s: v,
            b_ss: b_second(b, params.radius, params.c1),
        });
    }
    let sampled_period = first_minimum(&window)
        .map(|s| s / n_periods as f64)
        .ok_or_else(|| Error::NoConvergence("no minimum of B found near the final period".into()))?;
    Ok(CurvatureProfile {
        params: *params,
        kind: ProfileKind::Oscillating,
        samples,
        period_t: t,
        sampled_period,
        step: h,
        steps_per_period: per_period,
        first_integral_residual: residual,
    })
}

/// Arc length of the first upward zero crossing of B_s, located on the cubic
/// Hermite interpolant of B_s (with B_ss as slope).
fn first_minimum(samples: &[ProfileSample]) -> Option<f64> {
    samples.windows(2).find_map(|w| {
        let (p, q) = (w[0], w[1]);
        if !(p.b_s <= 0.0 && q.b_s > 0.0) {
            return None;
        }
        let h = q.s - p.s;
        let hermite = |t: f64| {
            let t2 = t * t;
            let t3 = t2 * t;
            (2.0 * t3 - 3.0 * t2 + 1.0) * p.b_s
                + (t3 - 2.0 * t2 + t) * h * p.b_ss
                + (-2.0 * t3 + 3.0 * t2) * q.b_s
                + (t3 - t2) * h * q.b_ss
        };
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if hermite(mid) <= 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Some(p.s + 0.5 * (lo + hi) * h)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TracePoint {
    pub s: f64,
    pub x: Vec3,
    /// Unit tangent.
    pub t: Vec3,
    /// Unit normal x̂ × T, tangent to the sphere.
    pub e: Vec3,
    pub b: f64,
    pub b_s: f64,
}

impl TracePoint {
    pub fn kappa_g(&self) -> f64 {
        self.b.powf(-1.5)
    }
}

/// Curve on the sphere placed so that the Killing axis is the z-axis.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SphereTrace {
    pub params: CurveParams,
    pub kind: ProfileKind,
    pub periods: usize,
    pub period_t: f64,
    pub points: Vec<TracePoint>,
    /// Azimuth about the z-axis accumulated along the curve, clockwise seen
    /// from +z.
    pub winding_theta: f64,
    /// |x(end) − x(0)|
    pub closure_gap: f64,
    /// Winding number about the axis when the trace is closed.
    pub rotation_index: Option<i64>,
    /// Largest departure from the sphere and from orthonormality before
    /// each projection step.
    pub max_frame_drift: f64,
}

/// Tolerance on orthonormality and on the sphere constraint.
pub const FRAME_TOLERANCE: f64 = 1e-8;

/// A trace counts as closed when its gap is at most this multiple of R.
pub const CLOSURE_TOLERANCE: f64 = 1e-6;

/// Allowed distance of winding/2π from an integer for a closed trace.
pub const WINDING_TOLERANCE: f64 = 1e-4;

type State = [f64; 11];

fn frame_rhs(y: &State, radius: f64, c1: f64) -> State {
    let b = y[0];
    let kappa = b.powf(-1.5);
    let r2 = radius * radius;
    let mut d = [0.0; 11];
    d[0] = y[1];
    d[1] = b_second(b, radius, c1);
    for k in 0..3 {
        let (x, t, e) = (y[2 + k], y[5 + k], y[8 + k]);
        d[2 + k] = t;
        d[5 + k] = kappa * e - x / r2;
        d[8 + k] = -kappa * t;
    }
    d
}

fn rk4_frame(y: &State, h: f64, radius: f64, c1: f64) -> State {
    let shift = |base: &State, k: &State, f: f64| -> State {
        let mut out = *base;
        for i in 0..11 {
            out[i] += f * k[i];
        }
        out
    };
    let k1 = frame_rhs(y, radius, c1);
    let k2 = frame_rhs(&shift(y, &k1, 0.5 * h), radius, c1);
    let k3 = frame_rhs(&shift(y, &k2, 0.5 * h), radius, c1);
    let k4 = frame_rhs(&shift(y, &k3, h), radius, c1);
    let mut out = *y;
    for i in 0..11 {
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    out
}

fn unpack(y: &State) -> (Vec3, Vec3, Vec3) {
    ([y[2], y[3], y[4]], [y[5], y[6], y[7]], [y[8], y[9], y[10]])
}

/// Projects (x, T, ε) back onto the sphere and an orthonormal frame, returning
/// the drift measured before the projection.
fn project(y: &mut State, radius: f64) -> f64 {
    let (x, t, e) = unpack(y);
    let rx = norm(x);
    let xh = scale(x, 1.0 / rx);
    let drift = [
        (rx - radius).abs() / radius,
        dot(xh, t).abs(),
        dot(xh, e).abs(),
        dot(t, e).abs(),
        (norm(t) - 1.0).abs(),
        (norm(e) - 1.0).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max);
    let t = sub(t, scale(xh, dot(t, xh)));
    let t = scale(t, 1.0 / norm(t));
    let e = cross(xh, t);
    let x = scale(xh, radius);
    y[2..5].copy_from_slice(&x);
    y[5..8].copy_from_slice(&t);
    y[8..11].copy_from_slice(&e);
    drift
}

/// Components (along x̂, along ε) of the unit Killing axis
/// w = (C₁/2 − B/R²) x̂ − (B_s/R) T − (2B^{−1/2}/R) ε at a point where B_s = 0.
fn axis_components(radius: f64, c1: f64, b: f64) -> (f64, f64) {
    let u = 0.5 * c1 - b / (radius * radius);
    let v = -2.0 / (b.sqrt() * radius);
    let n = u.hypot(v);
    (u / n, v / n)
}

/// Reconstructs the curve over `q` periods of the profile with the profile's
/// step, integrating B together with the frame.
pub fn trace_curve(profile: &CurvatureProfile, q: usize) -> Result<SphereTrace> {
    if q == 0 {
        return Err(Error::Domain("at least one period is required".into()));
    }
    let params = profile.params;
    let radius = params.radius;
    let b0 = profile.samples[0].b;
    let c1 = match profile.kind {
        ProfileKind::Oscillating => params.c1,
        // The C₁ for which B ≡ B₀ solves the curvature equation, so that
        // constant profiles trace circles whether or not they are critical.
        ProfileKind::Constant => 2.0 * (b0 / (radius * radius) - 2.0 / (b0 * b0)),
    };
    let (u, v) = axis_components(radius, c1, b0);
    // With x̂ = (−v, 0, u), T = (0, −1, 0) and ε = x̂ × T = (u, 0, v) the axis
    // u x̂ + v ε is the z-axis.
    let mut y: State = [0.0; 11];
    y[0] = b0;
    y[2..5].copy_from_slice(&[-v * radius, 0.0, u * radius]);
    y[5..8].copy_from_slice(&[0.0, -1.0, 0.0]);
    y[8..11].copy_from_slice(&[u, 0.0, v]);
    let h = profile.step;
    let b_min = profile.samples.iter().map(|p| p.b).fold(f64::INFINITY, f64::min);
    let n_sub = substeps(h, radius, b_min);
    let hs = h / n_sub as f64;
    let total = profile.steps_per_period * q;
    let mut points = Vec::with_capacity(total + 1);
    let mut max_drift: f64 = 0.0;
    let mut azimuth = 0.0;
    let mut last_angle = 0.0;
    for i in 0..=total {
        let (x, t, e) = unpack(&y);
        let angle = x[1].atan2(x[0]);
        if i > 0 {
            let mut delta = angle - last_angle;
            delta -= TAU * (delta / TAU).round();
            azimuth += delta;
        }
        last_angle = angle;
        points.push(TracePoint { s: i as f64 * h, x, t, e, b: y[0], b_s: y[1] });
        if i < total {
            for _ in 0..n_sub {
                y = rk4_frame(&y, hs, radius, c1);
                max_drift = max_drift.max(project(&mut y, radius));
            }
            if max_drift > FRAME_TOLERANCE {
                return Err(Error::FrameDrift { drift: max_drift });
            }
        }
    }
    let closure_gap = norm(sub(points[total].x, points[0].x));
    let winding_theta = -azimuth;
    Ok(SphereTrace {
        params,
        kind: profile.kind,
        periods: q,
        period_t: profile.period_t,
        rotation_index: closed_index(winding_theta, closure_gap, radius),
        points,
        winding_theta,
        closure_gap,
        max_frame_drift: max_drift,
    })
}

/// Winding number when the gap and the winding both indicate a closed curve.
pub fn closed_index(winding_theta: f64, closure_gap: f64, radius: f64) -> Option<i64> {
    let turns = winding_theta / TAU;
    let index = turns.round();
    (closure_gap <= CLOSURE_TOLERANCE * radius && (turns - index).abs() <= WINDING_TOLERANCE).then_some(index as i64)
}

/// Clockwise azimuth about the z-axis accumulated over a sequence of points.
pub fn azimuth_winding(points: impl IntoIterator<Item = Vec3>) -> f64 {
    let mut total = 0.0;
    let mut last: Option<f64> = None;
    for x in points {
        let angle = x[1].atan2(x[0]);
        if let Some(prev) = last {
            let mut delta = angle - prev;
            delta -= TAU * (delta / TAU).round();
            total += delta;
        }
        last = Some(angle);
    }
    -total
}

/// round(winding_theta / 2π) of a closed trace.
pub fn rotation_index(trace: &SphereTrace) -> Result<i64> {
    closed_index(trace.winding_theta, trace.closure_gap, trace.params.radius).ok_or_else(|| {
        Error::NotClosed(format!("gap {:e}, winding/2π = {}", trace.closure_gap, trace.winding_theta / TAU))
    })
}

/// ^{ec}L = R^{1/3} ∫ κ_g^{1/3} ds by the trapezoid rule; κ_g^{1/3} = B^{−1/2}.
pub fn eca_length(trace: &SphereTrace) -> f64 {
    let integral: f64 =
        trace.points.windows(2).map(|w| 0.5 * (w[1].s - w[0].s) * (w[0].b.powf(-0.5) + w[1].b.powf(-0.5))).sum();
    trace.params.radius.cbrt() * integral
}

/// Number of local maxima of κ_g along a closed trace, i.e. the lobes of the
/// curve. Points are treated cyclically with the duplicated endpoint dropped.
pub fn lobe_count(trace: &SphereTrace) -> Result<usize> {
    rotation_index(trace)?;
    let b: Vec<f64> = trace.points[..trace.points.len() - 1].iter().map(|p| p.b).collect();
    let n = b.len();
    if trace.kind == ProfileKind::Constant {
        return Ok(0);
    }
    // κ_g is largest where B is smallest.
    Ok((0..n).filter(|&i| b[i] < b[(i + n - 1) % n] && b[i] <= b[(i + 1) % n]).count())
}

/// Pointwise Killing-field residuals of J = −2B^{−1/2}T + B_s ε along the
/// trace: max |⟨∇_T J, T⟩| and max |⟨∇_T∇_T J, ε⟩ + ⟨J, ε⟩/R²|, with
/// derivatives taken by fourth-order central differences.
pub fn killing_residuals(trace: &SphereTrace) -> (f64, f64) {
    let pts = &trace.points;
    let n = pts.len();
    if n < 9 {
        return (0.0, 0.0);
    }
    let h = pts[1].s - pts[0].s;
    let j: Vec<Vec3> = pts
        .iter()
        .map(|p| {
            let f = -2.0 / p.b.sqrt();
            [f * p.t[0] + p.b_s * p.e[0], f * p.t[1] + p.b_s * p.e[1], f * p.t[2] + p.b_s * p.e[2]]
        })
        .collect();
    let diff = |v: &[Vec3], i: usize| -> Vec3 {
        let c = |k: usize| (v[i - 2][k] - 8.0 * v[i - 1][k] + 8.0 * v[i + 1][k] - v[i + 2][k]) / (12.0 * h);
        [c(0), c(1), c(2)]
    };
    // Covariant derivative along the curve: ambient derivative minus its
    // normal component.
    let mut nabla = vec![[0.0; 3]; n];
    for i in 2..n - 2 {
        let d = diff(&j, i);
        let xh = scale(pts[i].x, 1.0 / norm(pts[i].x));
        nabla[i] = sub(d, scale(xh, dot(d, xh)));
    }
    let r2 = trace.params.radius.powi(2);
    let mut first: f64 = 0.0;
    let mut second: f64 = 0.0;
    for i in 4..n - 4 {
        first = first.max(dot(nabla[i], pts[i].t).abs());
        let dd = diff(&nabla, i);
        second = second.max((dot(dd, pts[i].e) + dot(j[i], pts[i].e) / r2).abs());
    }
    (first, second)
}

/// max |b²(4/B + B_s²) − (x² + y²)| along the trace: the squared distance
/// from the axis predicted by the Killing field against the traced one.
pub fn axis_distance_residual(trace: &SphereTrace) -> f64 {
    let p = trace.params;
    let inv_b2 = p.c2 / (p.radius * p.radius) + 0.25 * p.c1 * p.c1;
    trace
        .points
        .iter()
        .map(|q| ((4.0 / q.b + q.b_s * q.b_s) / inv_b2 - (q.x[0] * q.x[0] + q.x[1] * q.x[1])).abs())
        .fold(0.0, f64::max)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Bounds of the open interval of admissible p/q for the given C₁ and R.
pub fn closure_ratio_bounds(c1: f64, radius: f64) -> (f64, f64) {
    (0.5, limit_at_threshold(c1, radius) / TAU)
}

/// Admissible parameters whose progression angle is 2πp/q.
pub fn closure_search(p: u64, q: u64, c1: f64, radius: f64) -> Result<CurveParams> {
    if p == 0 || q == 0 {
        return Err(Error::Domain("p and q must be positive".into()));
    }
    if gcd(p, q) != 1 {
        return Err(Error::Domain(format!("p = {p} and q = {q} are not coprime")));
    }
    if !(radius > 0.0) || !c1.is_finite() {
        return Err(Error::Domain("R must be positive and C1 finite".into()));
    }
    let ratio = p as f64 / q as f64;
    let (lower, upper) = closure_ratio_bounds(c1, radius);
    if 2 * p <= q {
        return Err(Error::OutOfRange(format!("p/q must exceed 1/2, got {p}/{q}")));
    }
    if ratio >= upper {
        return Err(Error::OutOfRange(format!(
            "p/q = {p}/{q} must be below {upper:.12} for C1 = {c1}, R = {radius} (lower bound {lower})"
        )));
    }
    let target = TAU * ratio;
    let d = admissible_lower_bound(c1, radius);
    let unit = d.abs().max(1.0);
    let excess =
        |c2: f64| -> Result<f64> { Ok(angle_elliptic(&CurveParams::new(radius, c1, c2)?)?.lambda_theta - target) };
    let mut lo = d + 1e-8 * unit;
    if excess(lo)? <= 0.0 {
        return Err(Error::OutOfRange(format!("p/q = {p}/{q} is too close to the upper bound {upper} to bracket")));
    }
    let mut span = unit;
    let mut hi = lo + span;
    while excess(hi)? > 0.0 {
        lo = hi;
        span *= 2.0;
        hi = lo + span;
        if !hi.is_finite() || span > 1e300 {
            return Err(Error::NoConvergence("could not bracket the closure condition".into()));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if excess(mid)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (f_lo, f_hi) = (excess(lo)?, excess(hi)?);
    let c2 = if f_lo.abs() <= f_hi.abs() { lo } else { hi };
    let residual = f_lo.abs().min(f_hi.abs());
    if residual > 1e-10 {
        return Err(Error::NoConvergence(format!("closure residual {residual:e} after bisection for {p}/{q}")));
    }
    CurveParams::new(radius, c1, c2)
}

/// ^{ec}L³ and (4π − A)(2π − A)A for the circle at colatitude ψ on the unit
/// sphere, with A = 2π(1 − cos ψ) the enclosed area.
pub fn isoperimetric_check(psi: f64) -> Result<(f64, f64)> {
    if !(psi > 0.0 && psi < 0.5 * PI) {
        return Err(Error::Domain(format!("colatitude must lie in (0, π/2), got {psi}")));
    }
    let kappa = 1.0 / psi.tan();
    let length = TAU * psi.sin();
    let lhs = (kappa.cbrt() * length).powi(3);
    let area = TAU * (1.0 - psi.cos());
    let rhs = (2.0 * TAU - area) * (TAU - area) * area;
    Ok((lhs, rhs))
}
