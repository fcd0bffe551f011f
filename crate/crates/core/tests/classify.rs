mod common;

use std::f64::consts::PI;

use common::{elementary_symmetric, newton_symmetric};
use eca_core::classify::{
    classify_all, clifford_radii, elem_sym, extremal_residual_iso, pinching_sign, solve_theta, ClassEntry, Curvature,
    PrincipalSpectrum, Status,
};
use eca_core::Error;
use proptest::prelude::*;

fn spec(pairs: &[(f64, usize)]) -> PrincipalSpectrum {
    PrincipalSpectrum::new(pairs.iter().map(|&(k, mult)| Curvature { k, mult }).collect()).unwrap()
}

fn rows(table: &[ClassEntry], g: usize, mults: &[usize]) -> Vec<ClassEntry> {
    table.iter().filter(|e| e.g == g && e.multiplicities == mults).cloned().collect()
}

#[test]
fn elem_sym_examples() {
    let s = spec(&[(1.0, 2), (-1.0, 2)]);
    assert_eq!(elem_sym(&s, 4).unwrap(), 1.0);
    assert_eq!(elem_sym(&s, 0).unwrap(), 1.0);
    assert!(matches!(elem_sym(&s, 5), Err(Error::Index { .. })));
    let r2 = 2f64.sqrt();
    let g4 = spec(&[(1.0 + r2, 2), (r2 - 1.0, 2), (1.0 - r2, 2), (-(1.0 + r2), 2)]);
    assert!(elem_sym(&g4, 1).unwrap().abs() < 1e-14);
}

#[test]
fn residual_examples() {
    let k = 1.0 / 3f64.sqrt();
    assert!(extremal_residual_iso(&spec(&[(k, 2)])).abs() < 1e-15);
    let r2 = 2f64.sqrt();
    let g4 = spec(&[(1.0 + r2, 2), (r2 - 1.0, 2), (1.0 - r2, 2), (-(1.0 + r2), 2)]);
    assert!(extremal_residual_iso(&g4).abs() < 1e-12);
    let s = spec(&[(1.0, 2), (-1.0, 2)]);
    assert_eq!(elem_sym(&s, 3).unwrap(), 0.0);
    assert_eq!(extremal_residual_iso(&s), 0.0);
    // Not extremal: a sphere of the wrong radius.
    assert!(extremal_residual_iso(&spec(&[(1.0, 2)])).abs() > 0.1);
}

#[test]
fn solve_theta_examples() {
    // cot θ = ±1/√3: the same sphere with either orientation.
    let t = solve_theta(1, &[2], 2).unwrap();
    assert_eq!(t.len(), 2);
    assert!((t[0] - PI / 3.0).abs() < 1e-12 && (t[1] - 2.0 * PI / 3.0).abs() < 1e-12);
    let t = solve_theta(2, &[2, 2], 4).unwrap();
    assert!(t.iter().any(|&t| (t - PI / 4.0).abs() < 1e-12), "{t:?}");
    let t = solve_theta(6, &[2; 6], 12).unwrap();
    assert!(t.iter().any(|&t| (t - PI / 12.0).abs() < 1e-12), "{t:?}");
    assert!(solve_theta(2, &[1, 2], 4).is_err());
}

#[test]
fn clifford_examples() {
    let (a, b) = clifford_radii(4, 2).unwrap();
    assert!((a - 0.5f64.sqrt()).abs() < 1e-15 && (b - 0.5f64.sqrt()).abs() < 1e-15);
    assert!(matches!(clifford_radii(2, 1), Err(Error::IneligibleParity { n: 2, m: 1 })));
    let (a, b) = clifford_radii(3, 1).unwrap();
    assert!((a - 0.4f64.sqrt()).abs() < 1e-15 && (b - 0.6f64.sqrt()).abs() < 1e-15);
    for n in 2..20 {
        for m in 1..n {
            if let Ok((a, b)) = clifford_radii(n, m) {
                assert!((a * a + b * b - 1.0).abs() < 1e-14);
            }
        }
    }
}

#[test]
fn pinching_examples() {
    for n in 1..10usize {
        let k = 1.0 / ((n + 1) as f64).sqrt();
        assert!(pinching_sign(&spec(&[(k, n)])).unwrap().abs() < 1e-14);
    }
    assert!((pinching_sign(&spec(&[(0.3, 2)])).unwrap() - 4.866_666_666_666_667).abs() < 1e-12);
    assert!((pinching_sign(&spec(&[(0.8, 2)])).unwrap() + 2.3).abs() < 1e-12);
    assert!(matches!(pinching_sign(&spec(&[(0.5, 1), (0.0, 1)])), Err(Error::ZeroCurvature)));
}

#[test]
fn table_reproduces_the_classification() {
    let table = classify_all(24).unwrap();
    // g = 1: totally umbilic, radius √((n+1)/(n+2)).
    let g1 = rows(&table, 1, &[2]);
    assert_eq!(g1.len(), 1);
    assert!((g1[0].radii[0] - 3f64.sqrt() / 2.0).abs() < 1e-15);
    assert!((g1[0].curvatures[0] - 1.0 / 3f64.sqrt()).abs() < 1e-12);
    // g = 2: 1 + k₁k₂ = 0 and k₁² = (n+1−m)/(m+1).
    for e in table.iter().filter(|e| e.g == 2) {
        let (n, m) = (e.n, e.multiplicities[0]);
        assert!((1.0 + e.curvatures[0] * e.curvatures[1]).abs() < 1e-10);
        assert!((e.curvatures[0].powi(2) - (n + 1 - m) as f64 / (m + 1) as f64).abs() < 1e-9);
        if n == 2 * m && m % 2 == 1 {
            assert_eq!(e.status, Status::Excluded);
        }
        if n % 2 == 0 && e.s_n < 0.0 {
            assert_ne!(e.status, Status::Eligible);
        }
    }
    // g = 3 only for n ∈ {3, 6, 12, 24}.
    let g3: Vec<usize> = table.iter().filter(|e| e.g == 3).map(|e| e.n).collect();
    assert!(g3.iter().all(|n| [3, 6, 12, 24].contains(n)) && g3.contains(&3));
    // g = 4: AB = −4.
    let g4 = rows(&table, 4, &[2, 2, 2, 2]);
    assert!(!g4.is_empty());
    for e in table.iter().filter(|e| e.g == 4) {
        let (a, b) = (e.curvatures[0] + e.curvatures[2], e.curvatures[1] + e.curvatures[3]);
        assert!((a * b + 4.0).abs() < 1e-10, "{:?}", e.multiplicities);
    }
    let r2 = 2f64.sqrt();
    let expected = [1.0 + r2, r2 - 1.0, 1.0 - r2, -(1.0 + r2)];
    assert!(g4.iter().any(|e| e.curvatures.iter().zip(expected).all(|(k, x)| (k - x).abs() < 1e-12)));
    // g = 6: n = 6 excluded, n = 12 with k₁ = 2 + √3.
    let six = rows(&table, 6, &[1; 6]);
    assert!(!six.is_empty() && six.iter().all(|e| e.status == Status::Excluded && e.s_n < 0.0));
    let twelve = rows(&table, 6, &[2; 6]);
    assert!(twelve
        .iter()
        .any(|e| e.status == Status::Eligible && (e.curvatures[0] - (2.0 + 3f64.sqrt())).abs() < 1e-12));
}

#[test]
fn g3_identities_and_polynomial_roots() {
    let table = classify_all(3).unwrap();
    let g3 = rows(&table, 3, &[1, 1, 1]);
    assert!(!g3.is_empty());
    // x = k² solves 4x³ − 33x² + 42x − 1 = 0; its roots by bisection.
    let p = |x: f64| ((4.0 * x - 33.0) * x + 42.0) * x - 1.0;
    let mut roots = Vec::new();
    let grid: Vec<f64> = (0..=100_000).map(|i| i as f64 * 1e-4).collect();
    for w in grid.windows(2) {
        if (p(w[0]) > 0.0) != (p(w[1]) > 0.0) {
            let (mut lo, mut hi) = (w[0], w[1]);
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if (p(mid) > 0.0) == (p(lo) > 0.0) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            roots.push(lo);
        }
    }
    assert_eq!(roots.len(), 3);
    for e in &g3 {
        let mut sq: Vec<f64> = e.curvatures.iter().map(|k| k * k).collect();
        sq.sort_by(f64::total_cmp);
        for (x, r) in sq.iter().zip(&roots) {
            assert!((x - r).abs() < 1e-9 * r.max(1.0), "{x} vs {r}");
        }
        assert!((sq.iter().product::<f64>() - 0.25).abs() < 1e-10);
        assert!((sq.iter().sum::<f64>() - 33.0 / 4.0).abs() < 1e-10);
        let pairs = sq[0] * sq[1] + sq[1] * sq[2] + sq[0] * sq[2];
        assert!((pairs - 42.0 / 4.0).abs() < 1e-10);
        assert!(e.identity_error < 1e-10);
    }
}

#[test]
fn every_row_is_extremal_and_labelled() {
    let table = classify_all(24).unwrap();
    for e in &table {
        assert!(e.residual.abs() <= 1e-10, "{:?}: {:e}", e.multiplicities, e.residual);
        let positive_even = e.n % 2 == 1 || e.s_n > 0.0;
        if e.status == Status::Eligible {
            assert!(e.s_n != 0.0 && positive_even);
        }
    }
}

#[test]
fn classification_is_deterministic() {
    let a = serde_json::to_string(&classify_all(16).unwrap()).unwrap();
    let b = serde_json::to_string(&classify_all(16).unwrap()).unwrap();
    assert_eq!(a, b);
}

proptest! {
    #[test]
    fn newton_identities(ks in prop::collection::vec(-2.0f64..2.0, 1..=12)) {
        let mut pairs: Vec<f64> = ks.clone();
        pairs.sort_by(|a, b| b.total_cmp(a));
        pairs.dedup();
        let s = PrincipalSpectrum::new(pairs.iter().map(|&k| Curvature { k, mult: 1 }).collect()).unwrap();
        let lib = s.elem_sym_all();
        let expanded = elementary_symmetric(&pairs);
        let newton = newton_symmetric(&pairs);
        // Size of the terms r·S_r = Σ ±S_{r−i}p_i sums, which bounds its rounding.
        let abs: Vec<f64> = pairs.iter().map(|k| k.abs()).collect();
        let abs_e = elementary_symmetric(&abs);
        let power = |i: usize| abs.iter().map(|x| x.powi(i as i32)).sum::<f64>();
        for r in 0..=s.n {
            prop_assert!((lib[r] - expanded[r]).abs() <= 1e-12 * expanded[r].abs().max(1.0));
            let terms = (1..=r).map(|i| abs_e[r - i] * power(i)).sum::<f64>() / r.max(1) as f64;
            prop_assert!(
                (lib[r] - newton[r]).abs() <= 1e-12 * terms.max(1.0),
                "S_{r}: {} vs {}", lib[r], newton[r]
            );
        }
    }
}
