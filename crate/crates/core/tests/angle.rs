mod common;

use std::f64::consts::{PI, SQRT_2, TAU};

use common::{angle_oracle, period_oracle, rel};
use eca_core::angle::{
    angle, angle_elliptic, angle_elliptic_with, angle_quadrature, angle_series_large_c2, large_c2_coefficients,
    limit_at_threshold, period, sweep_c2, sweep_c2_sequential, EllipticForm,
};
use eca_core::cubic::{admissible_lower_bound, offset_above_bound, CurveParams};
use eca_core::{AngleMethod, Error};
use proptest::prelude::*;

fn params(r: f64, c1: f64, c2: f64) -> CurveParams {
    CurveParams::new(r, c1, c2).unwrap()
}

// 40-digit values of the defining integrals.
const PERIOD_1_0_6: f64 = 3.558_522_611_784_780_585_9;
const ANGLE_1_0_6: f64 = 4.295_079_863_973_930_674_6;
const ANGLE_1_5_20: f64 = 3.823_725_598_319_918_890_1;
const ANGLE_1_0_100: f64 = 3.306_898_905_034_386_534_6;

#[test]
fn oracle_agrees_with_high_precision_values() {
    assert!(rel(period_oracle(1.0, 0.0, 6.0), PERIOD_1_0_6) < 1e-14);
    assert!(rel(angle_oracle(1.0, 0.0, 6.0), ANGLE_1_0_6) < 1e-14);
    assert!(rel(angle_oracle(1.0, 5.0, 20.0), ANGLE_1_5_20) < 1e-14);
    assert!(rel(angle_oracle(1.0, 0.0, 100.0), ANGLE_1_0_100) < 1e-13);
}

#[test]
fn period_example() {
    let t = period(&params(1.0, 0.0, 6.0)).unwrap();
    assert!(rel(t, PERIOD_1_0_6) < 1e-13, "{t}");
}

#[test]
fn angle_examples() {
    let p = params(1.0, 0.0, 6.0);
    for method in [AngleMethod::Quadrature, AngleMethod::Elliptic] {
        let l = angle(&p, method).unwrap().lambda_theta;
        assert!(rel(l, ANGLE_1_0_6) < 1e-13, "{method}: {l}");
        assert!(l > PI && l < SQRT_2 * PI);
    }
    let p = params(1.0, 5.0, 20.0);
    let q = angle_quadrature(&p).unwrap().lambda_theta;
    let e = angle_elliptic(&p).unwrap().lambda_theta;
    assert!(rel(q, e) < 1e-8 && rel(e, ANGLE_1_5_20) < 1e-13);
    let three = angle_elliptic_with(&p, EllipticForm::ThreeTerm).unwrap().lambda_theta;
    assert!(rel(three, ANGLE_1_5_20) < 1e-12);
}

#[test]
fn limits_in_c2() {
    // The approach to π is like πk₁C₂^{−3/4}: about 5.2e-3 at C₂ = 10⁴.
    let at_1e4 = angle_quadrature(&params(1.0, 0.0, 1e4)).unwrap().lambda_theta;
    assert!(rel(at_1e4, angle_oracle(1.0, 0.0, 1e4)) < 1e-10);
    assert!((at_1e4 - PI - 5.2e-3).abs() < 1e-4, "{at_1e4}");
    let large = angle_quadrature(&params(1.0, 0.0, 1e6)).unwrap().lambda_theta;
    assert!((large - PI).abs() < 1e-3, "{large}");
    let d = admissible_lower_bound(0.0, 1.0);
    let near = angle_quadrature(&params(1.0, 0.0, d * (1.0 + 1e-6))).unwrap().lambda_theta;
    assert!((near - SQRT_2 * PI).abs() < 1e-3, "{near}");
    let near_e = angle_elliptic(&params(1.0, 0.0, d * (1.0 + 1e-6))).unwrap().lambda_theta;
    assert!((near_e - near).abs() < 1e-6);
}

#[test]
fn limits_in_c1() {
    assert!(rel(limit_at_threshold(0.0, 1.0), SQRT_2 * PI) < 1e-12);
    assert!((limit_at_threshold(-1e3, 1.0) - PI).abs() < 5e-2);
    assert!((limit_at_threshold(1e3, 1.0) - TAU).abs() < 5e-2);
}

#[test]
fn approaches_threshold_limit() {
    for (r, c1) in [(1.0, 0.0), (1.0, 5.0), (2.0, -3.0), (0.5, 20.0)] {
        let limit = limit_at_threshold(c1, r);
        let mut last_gap = f64::INFINITY;
        for eps in [1e-2, 1e-3, 1e-4, 1e-5] {
            let l = angle_elliptic(&params(r, c1, offset_above_bound(c1, r, eps))).unwrap().lambda_theta;
            let gap = (limit - l).abs();
            assert!(gap < last_gap && l < limit, "R = {r}, C1 = {c1}, eps = {eps}");
            last_gap = gap;
        }
        assert!(last_gap < 1e-3);
    }
}

/// Double root of the cubic at the threshold: the equilibrium of
/// B'' = 2B⁻² − B/R² + C₁/2, by bisection.
fn equilibrium(r: f64, c1: f64) -> f64 {
    let f = |b: f64| 2.0 / (b * b) - b / (r * r) + 0.5 * c1;
    let (mut lo, mut hi) = (1e-6f64, 1e6f64);
    for _ in 0..200 {
        let mid = (lo * hi).sqrt();
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[test]
fn period_continuous_at_threshold() {
    for (r, c1) in [(1.0, 0.0), (1.0, 5.0), (2.0, -1.0)] {
        let b0 = equilibrium(r, c1);
        let small_oscillation = TAU / (4.0 / b0.powi(3) + 1.0 / (r * r)).sqrt();
        let d = admissible_lower_bound(c1, r);
        let t0 = period(&params(r, c1, d + 1e-6)).unwrap();
        assert!(rel(t0, small_oscillation) < 1e-4, "{t0} vs {small_oscillation}");
        let mut prev = t0;
        for k in 0..=100 {
            let c2 = d + 1e-4 + (1e-2 - 1e-4) * k as f64 / 100.0;
            let t = period(&params(r, c1, c2)).unwrap();
            assert!((t - prev).abs() < 1e-3 * t, "jump at C2 = {c2}");
            prev = t;
        }
    }
}

#[test]
fn degenerate_inputs_rejected() {
    let d = admissible_lower_bound(0.0, 1.0);
    let at = params(1.0, 0.0, d);
    assert!(matches!(period(&at), Err(Error::Degenerate(_))));
    assert!(matches!(angle_elliptic(&at), Err(Error::Degenerate(_))));
    assert!(matches!(angle_quadrature(&params(1.0, 0.0, 4.0)), Err(Error::NotAdmissible(_))));
}

#[test]
fn large_c2_expansion() {
    let [k1, _, _] = large_c2_coefficients();
    assert!((k1 - (280.0 - 49.0 * SQRT_2) / 128.0).abs() < 1e-15);
    assert!((k1 - 1.646121).abs() < 1e-6);
    let far = angle_series_large_c2(&params(1.0, 0.0, 1e8)).unwrap().lambda_theta;
    assert!((far - PI).abs() < 1e-5);
    assert!(angle_series_large_c2(&params(1.0, 1.0, 50.0)).is_err());
    assert!(angle_series_large_c2(&params(2.0, 0.0, 50.0)).is_err());
    // r > (6√3)^{1/3} is the same as C₂ > 108^{1/3}, the threshold itself.
    assert!(angle_series_large_c2(&params(1.0, 0.0, 4.7)).is_err());
    assert!(angle_series_large_c2(&params(1.0, 0.0, admissible_lower_bound(0.0, 1.0) + 1e-3)).is_ok());
}

#[test]
fn sweeps_are_ordered_and_match_sequential() {
    let c2s: Vec<f64> = (0..64).map(|i| 5.0 + i as f64 * 1.5).collect();
    let par = sweep_c2(0.0, 1.0, &c2s, AngleMethod::Elliptic);
    let seq = sweep_c2_sequential(0.0, 1.0, &c2s, AngleMethod::Elliptic);
    for ((c2, a), b) in c2s.iter().zip(&par).zip(&seq) {
        let (a, b) = (a.as_ref().unwrap(), b.as_ref().unwrap());
        assert_eq!(a.lambda_theta.to_bits(), b.lambda_theta.to_bits());
        assert_eq!(a.lambda_theta, angle_elliptic(&params(1.0, 0.0, *c2)).unwrap().lambda_theta);
    }
}

fn admissible() -> impl Strategy<Value = CurveParams> {
    (0.3f64..3.0, -10.0f64..30.0, -7.0f64..4.0)
        .prop_map(|(r, c1, log_eps)| params(r, c1, offset_above_bound(c1, r, 10f64.powf(log_eps))))
}

proptest! {
    #[test]
    fn range_and_sandwich(p in admissible()) {
        let l = angle_elliptic(&p).unwrap().lambda_theta;
        prop_assert!(l > PI && l < TAU);
        prop_assert!(l < limit_at_threshold(p.c1, p.radius));
    }

    #[test]
    fn quadrature_and_closed_form_agree(p in admissible()) {
        let q = angle_quadrature(&p).unwrap().lambda_theta;
        let e = angle_elliptic(&p).unwrap().lambda_theta;
        prop_assert!((q - e).abs() <= 1e-8 * e, "{q} vs {e} at {p:?}");
    }

    #[test]
    fn closed_form_matches_direct_rate_integral(r in 0.3f64..3.0, c1 in -10.0f64..30.0, log_eps in -3.0f64..3.0) {
        let p = params(r, c1, offset_above_bound(c1, r, 10f64.powf(log_eps)));
        let e = angle_elliptic(&p).unwrap().lambda_theta;
        prop_assert!(rel(e, angle_oracle(r, c1, p.c2)) < 1e-10);
        prop_assert!(rel(period(&p).unwrap(), period_oracle(r, c1, p.c2)) < 1e-10);
    }

    #[test]
    fn strictly_decreasing_in_c2(r in 0.3f64..3.0, c1 in -10.0f64..30.0) {
        let d = admissible_lower_bound(c1, r);
        let unit = d.abs().max(1.0);
        let c2s: Vec<f64> = (0..100).map(|k| d + unit * 1e-5 * 1.2f64.powi(k)).collect();
        let values: Vec<f64> = sweep_c2(c1, r, &c2s, AngleMethod::Elliptic)
            .into_iter()
            .map(|x| x.unwrap().lambda_theta)
            .collect();
        for (k, w) in values.windows(2).enumerate() {
            prop_assert!(w[1] < w[0], "not decreasing between C2 = {} and {}", c2s[k], c2s[k + 1]);
        }
    }

    #[test]
    fn threshold_limit_increasing_in_c1(r in 0.3f64..3.0, c1 in -50.0f64..49.0, dc in 1e-3f64..1.0) {
        prop_assert!(limit_at_threshold(c1 + dc, r) > limit_at_threshold(c1, r));
    }
}
