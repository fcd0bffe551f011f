//! Reference computations shared by the integration tests. Nothing here calls
//! the library's numerics.

#![allow(dead_code)]

use std::f64::consts::FRAC_PI_2;

/// Double-exponential (tanh-sinh) quadrature on [a, b], refined until two
/// successive levels agree to about 1e-15.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let node = |u: f64| {
        let s = FRAC_PI_2 * u.sinh();
        let ch = s.cosh();
        // 1 − |t| without cancellation
        let gap = 1.0 / (s.abs().exp() * ch);
        (gap, FRAC_PI_2 * u.cosh() / (ch * ch))
    };
    let pair = |u: f64| {
        let (gap, w) = node(u);
        if gap == 0.0 || w == 0.0 {
            return 0.0;
        }
        let left = a + half * gap;
        let right = b - half * gap;
        w * (f(left) + f(right))
    };
    let u_max = 6.5;
    let mut h = 0.5;
    let mut sum = FRAC_PI_2 * f(c);
    let mut k = 1;
    while k as f64 * h <= u_max {
        sum += pair(k as f64 * h);
        k += 1;
    }
    let mut estimate = half * h * sum;
    for _ in 0..12 {
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= u_max {
            sum += pair(k as f64 * h);
            k += 2;
        }
        let next = half * h * sum;
        let done = (next - estimate).abs() <= 1e-15 * next.abs().max(1e-300);
        estimate = next;
        if done {
            break;
        }
    }
    estimate
}

/// B ↦ B³/R² − C₁B² − C₂B + 4.
pub fn cubic(radius: f64, c1: f64, c2: f64) -> impl Fn(f64) -> f64 {
    let r2 = radius * radius;
    move |b: f64| ((b / r2 - c1) * b - c2) * b + 4.0
}

/// Cauchy bound on the absolute value of the cubic's roots.
pub fn root_bound(radius: f64, c1: f64, c2: f64) -> f64 {
    let r2 = radius * radius;
    1.0 + (c1.abs() * r2).max(c2.abs() * r2).max(4.0 * r2)
}

fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (f(mid) > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Real roots found as sign changes on a dense grid over [−bound, bound],
/// refined by bisection, in decreasing order.
pub fn brute_force_roots(radius: f64, c1: f64, c2: f64, cells: usize) -> Vec<f64> {
    let f = cubic(radius, c1, c2);
    let bound = root_bound(radius, c1, c2);
    // Geometric grids on each side of zero resolve small and large roots alike.
    let lo_exp = -8.0f64;
    let hi_exp = bound.log10();
    let mut grid: Vec<f64> =
        (0..=cells).map(|i| 10f64.powf(lo_exp + (hi_exp - lo_exp) * i as f64 / cells as f64)).collect();
    let neg: Vec<f64> = grid.iter().rev().map(|x| -x).collect();
    grid = neg.into_iter().chain(grid).collect();
    let mut roots: Vec<f64> =
        grid.windows(2).filter(|w| (f(w[0]) > 0.0) != (f(w[1]) > 0.0)).map(|w| bisect(&f, w[0], w[1])).collect();
    roots.sort_by(|a, b| b.total_cmp(a));
    roots
}

/// Number of distinct positive roots seen by the brute-force scan.
pub fn positive_root_count(radius: f64, c1: f64, c2: f64) -> usize {
    brute_force_roots(radius, c1, c2, 20_000).into_iter().filter(|&r| r > 0.0).count()
}

/// Roots A₁ > A₂ > 0 > A₃ of an admissible cubic, or None.
pub fn admissible_roots(radius: f64, c1: f64, c2: f64) -> Option<(f64, f64, f64)> {
    match brute_force_roots(radius, c1, c2, 20_000)[..] {
        [a1, a2, a3] if a2 > 0.0 && a3 < 0.0 => Some((a1, a2, a3)),
        _ => None,
    }
}

/// Sum of `tanh_sinh` over [0, π/2] split geometrically towards both ends,
/// so narrow endpoint peaks (small A₂ at φ = 0, a near-pole of the rate just
/// beyond A₁ at φ = π/2) are resolved.
fn split_quad<F: Fn(f64) -> f64>(f: F) -> f64 {
    let mut steps = vec![];
    let mut x = 1e-9;
    while x < 0.25 * FRAC_PI_2 {
        steps.push(x);
        x *= 6.0;
    }
    let mut edges = vec![0.0];
    edges.extend(steps.iter().copied());
    edges.extend(steps.iter().rev().map(|x| FRAC_PI_2 - x));
    edges.push(FRAC_PI_2);
    edges.windows(2).map(|w| tanh_sinh(&f, w[0], w[1])).sum()
}

/// Period of B: 2∫_{A₂}^{A₁} dB/√F(B), F = C₂ − B²/R² − 4/B + C₁B, with
/// B = A₂ + (A₁ − A₂) sin²φ.
pub fn period_oracle(radius: f64, c1: f64, c2: f64) -> f64 {
    let (a1, a2, a3) = admissible_roots(radius, c1, c2).expect("admissible");
    split_quad(|phi| {
        let b = a2 + (a1 - a2) * phi.sin().powi(2);
        4.0 * radius * (b / (b - a3)).sqrt()
    })
}

/// Azimuth about the Killing axis gained over one period, integrating the
/// angular rate dθ/ds = 2B^{−1/2} / (b (B_s² + 4/B)) with
/// 1/b = √(C₂/R² + C₁²/4) directly.
pub fn angle_oracle(radius: f64, c1: f64, c2: f64) -> f64 {
    let (a1, a2, a3) = admissible_roots(radius, c1, c2).expect("admissible");
    let r2 = radius * radius;
    let inv_b = (c2 / r2 + 0.25 * c1 * c1).sqrt();
    split_quad(|phi| {
        let (s2, c2phi) = (phi.sin().powi(2), phi.cos().powi(2));
        let b = a2 + (a1 - a2) * s2;
        // B_s² = (A₁ − B)(B − A₂)(B − A₃)/(R²B), free of cancellation near A₁
        let bs2 = (a1 - a2).powi(2) * c2phi * s2 * (b - a3) / (r2 * b);
        let rate = 2.0 * inv_b / (b.sqrt() * (bs2 + 4.0 / b));
        // ds = 2R√(B/(B − A₃)) dφ over half a period
        2.0 * rate * 2.0 * radius * (b / (b - a3)).sqrt()
    })
}

/// Π(n, π/2, m) from its defining integral.
pub fn pi_oracle(n: f64, m: f64) -> f64 {
    tanh_sinh(
        |t| {
            let s2 = t.sin().powi(2);
            1.0 / ((1.0 - n * s2) * (1.0 - m * s2).sqrt())
        },
        0.0,
        FRAC_PI_2,
    )
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Elementary symmetric polynomials of `xs` by expanding Π(1 + x t).
pub fn elementary_symmetric(xs: &[f64]) -> Vec<f64> {
    let mut e = vec![1.0];
    for &x in xs {
        e.push(0.0);
        for r in (1..e.len()).rev() {
            e[r] += x * e[r - 1];
        }
    }
    e
}

/// Elementary symmetric polynomials from power sums by Newton's identities.
pub fn newton_symmetric(xs: &[f64]) -> Vec<f64> {
    let p: Vec<f64> = (0..=xs.len()).map(|k| xs.iter().map(|x| x.powi(k as i32)).sum()).collect();
    let mut e = vec![1.0];
    for r in 1..=xs.len() {
        let s: f64 = (1..=r).map(|i| if i % 2 == 1 { 1.0 } else { -1.0 } * e[r - i] * p[i]).sum();
        e.push(s / r as f64);
    }
    e
}
