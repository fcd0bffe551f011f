//! The cubic B³ − μB² − λB + 4R² = 0 (μ = R²C₁, λ = R²C₂) whose two positive
//! roots bound the oscillation of B = κ_g^{−2/3}.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{Error, Result};

/// One member of the extremal-curve family: sphere radius and the two
/// integration constants of the curvature equation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveParams {
    pub radius: f64,
    pub c1: f64,
    pub c2: f64,
}

impl CurveParams {
    pub fn new(radius: f64, c1: f64, c2: f64) -> Result<Self> {
        if !(radius > 0.0) || !radius.is_finite() {
            return Err(Error::Domain(format!("sphere radius must be positive, got {radius}")));
        }
        if !c1.is_finite() || !c2.is_finite() {
            return Err(Error::Domain("C1 and C2 must be finite".into()));
        }
        Ok(Self { radius, c1, c2 })
    }

    pub fn mu(&self) -> f64 {
        self.radius * self.radius * self.c1
    }

    pub fn lambda(&self) -> f64 {
        self.radius * self.radius * self.c2
    }

    /// P(B) = B³ − μB² − λB + 4R².
    pub fn cubic(&self, b: f64) -> f64 {
        let r2 = self.radius * self.radius;
        ((b - self.mu()) * b - self.lambda()) * b + 4.0 * r2
    }

    fn cubic_prime(&self, b: f64) -> f64 {
        (3.0 * b - 2.0 * self.mu()) * b - self.lambda()
    }
}

/// Real roots A₁ > A₂ > 0 > A₃ and the shifted quantities used by the
/// progression-angle formulas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CubicRoots {
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    /// arccos argument angle of the trigonometric root formulas.
    pub theta: f64,
    /// Shifted roots Aᵢ/R − RC₁/2.
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// √(C₂ + (RC₁/2)²)
    pub r: f64,
    /// √(C₁²R² + 3C₂)
    pub d: f64,
}

impl CubicRoots {
    /// r − a, computed from r² − a² = 4/A₁ without cancellation.
    pub fn r_minus_a(&self) -> f64 {
        4.0 / (self.a1 * (self.r + self.a))
    }

    /// Largest |P(Aᵢ)| / max(1, |Aᵢ|³).
    pub fn residual(&self, params: &CurveParams) -> f64 {
        [self.a1, self.a2, self.a3]
            .iter()
            .map(|&x| params.cubic(x).abs() / x.abs().powi(3).max(1.0))
            .fold(0.0, f64::max)
    }
}

/// Separation below which A₁ and A₂ count as a double root, relative to R.
pub const DISTINCT_ROOT_SEPARATION: f64 = 1e-10;

// Below this, 1 − cos θ is at the rounding level of the arccos argument and
// θ carries no information about the root separation.
const THETA_RESOLUTION: f64 = 64.0 * f64::EPSILON;

/// Roots via the trigonometric closed form followed by one Newton step each.
pub fn solve_cubic(params: &CurveParams) -> Result<CubicRoots> {
    let CurveParams { radius: rr, c1, c2 } = *params;
    let d2 = c1 * c1 * rr * rr + 3.0 * c2;
    if !(d2 > 0.0) {
        return Err(Error::NotAdmissible(format!(
            "C1²R² + 3C2 = {d2} is not positive; the cubic has a single real root"
        )));
    }
    let d = d2.sqrt();
    let arg = (108.0 - 9.0 * c1 * c2 * rr * rr - 2.0 * c1.powi(3) * rr.powi(4)) / (2.0 * rr * d2 * d);
    if !(-1.0 - 1e-12..=1.0 + 1e-12).contains(&arg) {
        return Err(Error::NotAdmissible(format!(
            "arccos argument {arg} outside [-1, 1]; the cubic has a single real root"
        )));
    }
    let arg = arg.clamp(-1.0, 1.0);
    let theta = arg.acos();
    let base = c1 * rr * rr / 3.0;
    let amp = 2.0 * rr / 3.0 * d;
    let mut roots = [
        base + amp * ((theta - PI) / 3.0).cos(),
        base + amp * ((theta + PI) / 3.0).cos(),
        base - amp * (theta / 3.0).cos(),
    ];
    for x in roots.iter_mut() {
        let p = params.cubic(*x);
        let dp = params.cubic_prime(*x);
        if dp != 0.0 {
            let polished = *x - p / dp;
            if params.cubic(polished).abs() < p.abs() {
                *x = polished;
            }
        }
    }
    let [a1, a2, a3] = roots;
    if a1 - a2 < DISTINCT_ROOT_SEPARATION * rr || 1.0 - arg <= THETA_RESOLUTION {
        return Err(Error::Degenerate(format!("A1 = {a1} and A2 = {a2} coincide (double root)")));
    }
    if !(a2 > 0.0) {
        return Err(Error::NotAdmissible(format!(
            "the cubic has fewer than two positive roots (A1 = {a1}, A2 = {a2})"
        )));
    }
    let shift = rr * c1 / 2.0;
    Ok(CubicRoots {
        a1,
        a2,
        a3,
        theta,
        a: a1 / rr - shift,
        b: a2 / rr - shift,
        c: a3 / rr - shift,
        r: (c2 + shift * shift).sqrt(),
        d,
    })
}

/// Sign-preserving real cube root.
fn cbrt(x: f64) -> f64 {
    x.cbrt()
}

/// Which closed form the lower bound was taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundBranch {
    /// μ ≥ −3(2R)^{2/3}: single real root via Y₁, Y₂.
    Cardano,
    /// μ ≤ −3(2R)^{2/3}: largest of three real roots via the angle ϑ.
    Trigonometric,
}

/// Lower bound D/R² on C₂ from the closed form of the requested branch.
pub fn lower_bound_branch(c1: f64, radius: f64, branch: BoundBranch) -> f64 {
    let r2 = radius * radius;
    let mu = r2 * c1;
    let mu3 = mu.powi(3);
    let lambda = match branch {
        BoundBranch::Cardano => {
            let core = mu.powi(6) + 2160.0 * r2 * mu3 - 93312.0 * r2 * r2;
            let disc = (mu3 + 108.0 * r2).max(0.0);
            let tail = 48.0 * 3f64.sqrt() * radius * (disc * disc * disc).sqrt();
            (-mu * mu - (cbrt(core + tail) + cbrt(core - tail))) / 12.0
        }
        BoundBranch::Trigonometric => {
            let s = (mu * (mu3 - 864.0 * r2)).sqrt();
            let arg = (-mu.powi(6) - 2160.0 * r2 * mu3 + 93312.0 * r2 * r2) / (mu * (864.0 * r2 - mu3) * s);
            let vartheta = arg.clamp(-1.0, 1.0).acos();
            -mu * mu / 12.0 + s / 6.0 * ((vartheta - PI) / 3.0).cos()
        }
    };
    polish_bound(lambda, mu, r2) / r2
}

/// F(λ) = 4λ³ + μ²λ² + 72μR²λ + 16μ³R² − 432R⁴, whose largest real root is D.
fn bound_polynomial(lambda: f64, mu: f64, r2: f64) -> (f64, f64) {
    let f = ((4.0 * lambda + mu * mu) * lambda + 72.0 * mu * r2) * lambda + 16.0 * mu.powi(3) * r2 - 432.0 * r2 * r2;
    let df = (12.0 * lambda + 2.0 * mu * mu) * lambda + 72.0 * mu * r2;
    (f, df)
}

// The Cardano form subtracts nearly equal cube roots around μ = 0, so the
// closed form is refined by Newton steps that are kept only while they
// reduce |F|.
fn polish_bound(mut lambda: f64, mu: f64, r2: f64) -> f64 {
    for _ in 0..4 {
        let (f, df) = bound_polynomial(lambda, mu, r2);
        if f == 0.0 || df == 0.0 {
            break;
        }
        let next = lambda - f / df;
        if bound_polynomial(next, mu, r2).0.abs() >= f.abs() {
            break;
        }
        lambda = next;
    }
    lambda
}

/// μ at which the two branches meet: −3(2R)^{2/3}.
pub fn branch_switch_mu(radius: f64) -> f64 {
    -3.0 * (2.0 * radius).powf(2.0 / 3.0)
}

/// Lower bound D_C2 such that the cubic has two distinct positive roots iff C₂ > D_C2.
pub fn admissible_lower_bound(c1: f64, radius: f64) -> f64 {
    let mu = radius * radius * c1;
    let branch = if mu >= branch_switch_mu(radius) { BoundBranch::Cardano } else { BoundBranch::Trigonometric };
    lower_bound_branch(c1, radius, branch)
}

/// Outcome of the admissibility test with the reason for a rejection.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Admissibility {
    pub admissible: bool,
    pub lower_bound: f64,
    pub above_bound: bool,
    pub diagnostic: Option<String>,
}

/// True iff the cubic has two distinct positive roots. The closed-form bound is
/// reported alongside; when it disagrees with the root count (only possible at
/// the rounding level of the boundary) the root count decides.
pub fn is_admissible(params: &CurveParams) -> Admissibility {
    let lower_bound = admissible_lower_bound(params.c1, params.radius);
    let above_bound = params.c2 > lower_bound;
    let (admissible, mut diagnostic) = match solve_cubic(params) {
        Ok(_) => (true, None),
        Err(e) => (false, Some(e.to_string())),
    };
    if admissible != above_bound {
        let note = format!("closed-form bound {lower_bound} disagrees with the root count at C2 = {}", params.c2);
        diagnostic = Some(match diagnostic {
            Some(d) => format!("{d}; {note}"),
            None => note,
        });
    } else if !admissible && diagnostic.is_none() {
        diagnostic = Some(format!("C2 = {} is not above the bound {lower_bound}", params.c2));
    }
    Admissibility { admissible, lower_bound, above_bound, diagnostic }
}

/// Admissible C₂ offset: D + ε·max(|D|, 1). D may be negative.
pub fn offset_above_bound(c1: f64, radius: f64, eps: f64) -> f64 {
    let d = admissible_lower_bound(c1, radius);
    d + eps * d.abs().max(1.0)
}
