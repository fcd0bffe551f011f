mod common;

use common::{brute_force_roots, cubic, positive_root_count, rel};
use eca_core::cubic::{
    admissible_lower_bound, branch_switch_mu, is_admissible, lower_bound_branch, offset_above_bound, solve_cubic,
    BoundBranch, CubicRoots, CurveParams,
};
use eca_core::Error;
use proptest::prelude::*;

#[test]
fn threshold_and_intercepts() {
    assert!((admissible_lower_bound(0.0, 1.0) - 3.0 * 4f64.cbrt()).abs() < 1e-12);
    for r in [0.5f64, 1.0, 2.0] {
        let c1_axis = 3.0 * r.powf(-4.0 / 3.0);
        assert!(admissible_lower_bound(c1_axis, r).abs() < 1e-10, "R = {r}");
        let c2_axis = 3.0 * (2.0 / r).powf(2.0 / 3.0);
        assert!((admissible_lower_bound(0.0, r) - c2_axis).abs() < 1e-10, "R = {r}");
    }
}

#[test]
fn branches_meet_at_switch() {
    for r in [0.5f64, 1.0, 2.0] {
        let c1 = branch_switch_mu(r) / (r * r);
        let a = lower_bound_branch(c1, r, BoundBranch::Cardano);
        let b = lower_bound_branch(c1, r, BoundBranch::Trigonometric);
        assert!((a - b).abs() < 1e-9, "R = {r}: {a} vs {b}");
    }
    let expected = 15.0 / 2f64.powf(2.0 / 3.0);
    assert!((admissible_lower_bound(branch_switch_mu(1.0), 1.0) - expected).abs() < 1e-9);
}

#[test]
fn roots_match_brute_force() {
    for (r, c1, c2) in [(1.0, 0.0, 6.0), (1.0, 5.0, 20.0), (2.0, -1.0, 8.0), (0.5, 8.0, 2.0), (1.0, -8.0, 40.0)] {
        let p = CurveParams::new(r, c1, c2).unwrap();
        let roots = solve_cubic(&p).unwrap();
        let oracle = brute_force_roots(r, c1, c2, 20_000);
        assert_eq!(oracle.len(), 3);
        for (x, y) in [roots.a1, roots.a2, roots.a3].iter().zip(&oracle) {
            assert!((x - y).abs() <= 1e-12 * y.abs().max(1.0), "{x} vs {y} at {:?}", (r, c1, c2));
        }
    }
}

#[test]
fn boundary_cases() {
    let at = CurveParams::new(1.0, 0.0, 3.0 * 4f64.cbrt()).unwrap();
    assert!(matches!(solve_cubic(&at), Err(Error::Degenerate(_))));
    let below = CurveParams::new(1.0, 0.0, 4.0).unwrap();
    assert!(matches!(solve_cubic(&below), Err(Error::NotAdmissible(_))));
    assert!(is_admissible(&CurveParams::new(1.0, 0.0, 5.0).unwrap()).admissible);
    assert!(!is_admissible(&CurveParams::new(1.0, 0.0, 4.7622).unwrap()).admissible);
    let deep = is_admissible(&CurveParams::new(1.0, -10.0, 1.0).unwrap());
    assert!(!deep.admissible && deep.lower_bound > 1.0);
    assert_eq!(positive_root_count(1.0, -10.0, 1.0), 0);
}

#[test]
fn admissibility_agrees_with_root_count_on_grid() {
    let mut checked = 0;
    for r in [0.5, 1.0, 2.0] {
        for i in 0..50 {
            let c1 = -6.0 + 12.0 * i as f64 / 49.0;
            let d = admissible_lower_bound(c1, r);
            for j in 0..50 {
                let c2 = d - 5.0 + 10.0 * j as f64 / 49.0;
                if (c2 - d).abs() < 1e-6 * d.abs().max(1.0) {
                    continue;
                }
                let p = CurveParams::new(r, c1, c2).unwrap();
                let expected = positive_root_count(r, c1, c2) == 2;
                assert_eq!(is_admissible(&p).admissible, expected, "R = {r}, C1 = {c1}, C2 = {c2}");
                checked += 1;
            }
        }
    }
    assert!(checked > 7000);
}

fn cross_ratio(x: &CubicRoots) -> f64 {
    (x.a - x.b) * (x.c - x.r) / ((x.a - x.c) * (x.b - x.r))
}

#[test]
fn cross_ratio_not_monotone_for_large_c1() {
    // Counterexample to monotonicity in C₂ once C₁R^{4/3} exceeds about 12.5;
    // 40-digit root finding gives 1 − ratio = 2.2423e-5 at C₂ = 0 and
    // 3.6205e-5 at C₂ = 100 for R = 1, C₁ = 20.
    let at = |c2| cross_ratio(&solve_cubic(&CurveParams::new(1.0, 20.0, c2).unwrap()).unwrap());
    let (lo, hi) = (at(0.0), at(100.0));
    assert!((1.0 - lo - 2.24234939786e-5).abs() < 1e-12, "{}", 1.0 - lo);
    assert!((1.0 - hi - 3.62045840512e-5).abs() < 1e-12, "{}", 1.0 - hi);
    assert!(hi < lo && hi < 1.0);
}

fn admissible_params() -> impl Strategy<Value = CurveParams> {
    (0.3f64..3.0, -10.0f64..30.0, -7.0f64..2.5).prop_map(|(r, c1, log_eps)| {
        let c2 = offset_above_bound(c1, r, 10f64.powf(log_eps));
        CurveParams::new(r, c1, c2).unwrap()
    })
}

proptest! {
    #[test]
    fn vieta_relations(p in admissible_params()) {
        let roots = solve_cubic(&p).unwrap();
        let (mu, lambda, r2) = (p.mu(), p.lambda(), p.radius * p.radius);
        let scale = roots.a1.abs().max(roots.a3.abs()).max(1.0);
        prop_assert!(((roots.a1 + roots.a2 + roots.a3) - mu).abs() <= 1e-9 * scale);
        let pair = roots.a1 * roots.a2 + roots.a1 * roots.a3 + roots.a2 * roots.a3;
        prop_assert!((pair + lambda).abs() <= 1e-9 * scale * scale);
        prop_assert!(rel(roots.a1 * roots.a2 * roots.a3, -4.0 * r2) <= 1e-9);
        prop_assert!(roots.a1 > roots.a2 && roots.a2 > 0.0 && roots.a3 < 0.0);
        let f = cubic(p.radius, p.c1, p.c2);
        prop_assert!(f(roots.a1).abs() <= 1e-9 * scale.powi(3) / r2);
    }

    #[test]
    fn shifted_roots_monotone_in_c2(r in 0.3f64..3.0, c1 in -10.0f64..30.0) {
        let d = admissible_lower_bound(c1, r);
        let unit = d.abs().max(1.0);
        let mut prev: Option<CubicRoots> = None;
        for k in 0..40 {
            let c2 = d + unit * 1e-4 * 1.35f64.powi(k);
            let now = solve_cubic(&CurveParams::new(r, c1, c2).unwrap()).unwrap();
            prop_assert!(now.a > now.b && now.b > now.c && now.r > now.b);
            prop_assert!(cross_ratio(&now) < 1.0);
            if let Some(p) = prev {
                prop_assert!(now.a > p.a && now.r > p.r && now.d > p.d, "a, r, d increase at C2 = {c2}");
                prop_assert!(now.b < p.b && now.c < p.c, "b, c decrease at C2 = {c2}");
            }
            prev = Some(now);
        }
    }

    #[test]
    fn cross_ratio_increasing_for_moderate_c1(r in 0.3f64..3.0, scaled in -10.0f64..12.0) {
        // C₁R^{4/3} is invariant under rescaling the sphere.
        let c1 = scaled * r.powf(-4.0 / 3.0);
        let d = admissible_lower_bound(c1, r);
        let unit = d.abs().max(1.0);
        let mut prev = f64::NEG_INFINITY;
        for k in 0..60 {
            let c2 = d + unit * 1e-4 * 1.35f64.powi(k);
            let x = cross_ratio(&solve_cubic(&CurveParams::new(r, c1, c2).unwrap()).unwrap());
            prop_assert!(x > prev, "not increasing at C2 = {c2}");
            prev = x;
        }
    }

    #[test]
    fn lower_bound_is_the_double_root_threshold(r in 0.3f64..3.0, c1 in -10.0f64..30.0) {
        let d = admissible_lower_bound(c1, r);
        let unit = d.abs().max(1.0);
        prop_assert!(is_admissible(&CurveParams::new(r, c1, d + 1e-3 * unit).unwrap()).admissible);
        prop_assert!(!is_admissible(&CurveParams::new(r, c1, d - 1e-3 * unit).unwrap()).admissible);
    }
}
