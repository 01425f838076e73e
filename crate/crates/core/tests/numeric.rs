use std::f64::consts::{PI, TAU};

use nalgebra::DVector;
use num_complex::Complex64;

use orbifold_degree::exact::{preimages, ExactConfig};
use orbifold_degree::maps::{CircleMap, MonomialMap};
use orbifold_degree::numeric::{
    act, circle_degree2, circle_eval, numeric_jacobian, slice_lift, NumericConfig, SliceChart,
};
use orbifold_degree::orbifold::WpsOrbifold;
use orbifold_degree::verify::{run_suite, underlying_distance, VerifyConfig, AGREEMENT_PAIRS};

fn wps(q: &[u64]) -> WpsOrbifold {
    WpsOrbifold::new(q.to_vec()).unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn correction_phase_shrinks_with_the_step() {
    let f = MonomialMap::f_q(&wps(&[1, 3]));
    let cfg = NumericConfig::default();
    let chart = SliceChart::new(f.source().weights(), &[c(0.6, 0.3), c(-0.2, 0.7)]).unwrap();
    let dir = DVector::from_vec(vec![0.6, -0.8]);
    let phases: Vec<f64> = [1e-2, 1e-3, 1e-4]
        .iter()
        .map(|&h| {
            let y = chart.point_at(&(&dir * h));
            slice_lift(&f, &chart.base, &y, &cfg).unwrap().phase.abs()
        })
        .collect();
    assert!(phases[0] > 0.0, "{phases:?}");
    for w in phases.windows(2) {
        // At least linear decay: a tenfold smaller step shrinks φ by ≥ ~10.
        assert!(w[1] <= 0.12 * w[0], "{phases:?}");
    }
}

#[test]
fn isotropy_leaves_the_phase_unchanged() {
    // q = r = (k, k, 1), e = (k, k, k): equivariant with d = k; Z_k fixes
    // [1:1:0] and acts on its slice through the last coordinate.
    let cfg = NumericConfig::default();
    for k in [2u64, 3] {
        let w = [k, k, 1];
        let f = MonomialMap::new(w.to_vec(), w.to_vec(), vec![k; 3]).unwrap();
        let x = [c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)];
        let chart = SliceChart::new(&w, &x).unwrap();
        let y = chart.point_at(&DVector::from_vec(vec![0.02, -0.01, 0.015, 0.01]));
        let gy = act(&w, TAU / k as f64, &y);
        assert!((gy[2] - y[2]).norm() > 1e-3);
        assert!(chart.residual(&gy).abs() < 1e-15);
        let a = slice_lift(&f, &chart.base, &y, &cfg).unwrap();
        let b = slice_lift(&f, &chart.base, &gy, &cfg).unwrap();
        assert!(a.phase.abs() > 1e-6, "phase {}", a.phase);
        assert!((a.phase - b.phase).abs() < 1e-9);
    }
}

#[test]
fn lift_residual_from_direct_substitution() {
    // Recompute ⟨k(y) f̂(y) − f̂(x), i·R·f̂(x)⟩ from the returned corrected point.
    let f = MonomialMap::f_q(&wps(&[1, 3]));
    let cfg = NumericConfig::default();
    let chart = SliceChart::new(&[1, 1], &[c(0.3, -0.4), c(0.8, 0.1)]).unwrap();
    let y = chart.point_at(&DVector::from_vec(vec![1e-3, 2e-3]));
    let ev = slice_lift(&f, &chart.base, &y, &cfg).unwrap();
    let fx: Vec<Complex64> = orbifold_degree::numeric::hat_map(&f, &chart.base).unwrap();
    let tangent: Vec<Complex64> = fx
        .iter()
        .zip([1.0, 3.0])
        .map(|(z, w)| Complex64::i() * z * w)
        .collect();
    let r: f64 = ev
        .corrected
        .iter()
        .zip(&fx)
        .zip(&tangent)
        .map(|((p, a), t)| ((c(p[0], p[1]) - a).conj() * t).re)
        .sum();
    assert!(r.abs() < 1e-9, "{r:e}");
}

#[test]
fn preimages_of_ones_have_positive_sign() {
    let f = MonomialMap::f_q(&wps(&[1, 3]));
    let y = f.target().ones();
    let pre = preimages(&f, &y, &ExactConfig::default()).unwrap();
    assert_eq!(pre.len(), 3);
    for p in pre {
        let jac = numeric_jacobian(&f, &p.point.to_complex(), &NumericConfig::default()).unwrap();
        assert_eq!(jac.sign, p.sign);
        assert!(jac.smallest_singular_value > 1e-6);
    }
}

#[test]
fn essential_pair_evaluations_coincide_on_the_quotient() {
    let f = CircleMap::essential_f();
    let g = CircleMap::essential_g();
    assert!(underlying_distance(&f, &g, 10_000) < 1e-12);
    // Upstairs they differ on the lower half circle.
    assert!((circle_eval(&f, 4.0) - circle_eval(&g, 4.0)).abs() > 0.1);
}

#[test]
fn essential_values_at_y_zero() {
    for m in [
        CircleMap::essential_f(),
        CircleMap::essential_g(),
        CircleMap::half_fold(),
    ] {
        assert_eq!(circle_eval(&m, 0.0), 0.0);
        assert!((circle_eval(&m, PI) - PI).abs() < 1e-15);
    }
}

#[test]
fn half_fold_preimage_off_the_seed_grid() {
    let f = CircleMap::half_fold();
    let target = 1.0f64;
    let d = circle_degree2(&f, target, &NumericConfig::default()).unwrap();
    assert_eq!(d.weighted_count, 1);
    // Independent oracle: y² / x = tan(target) with x² + y² = 1 gives
    // x² + t x - 1 = 0 for t = tan(target), x > 0.
    let t = target.tan();
    let x = (-t + (t * t + 4.0).sqrt()) / 2.0;
    let theta = x.acos();
    assert!((d.preimages[0].angle - theta).abs() < 1e-10);
}

#[test]
fn numeric_agreement_covers_enough_pairs() {
    let reports = run_suite("numeric_agreement", &VerifyConfig::default()).unwrap();
    assert_eq!(AGREEMENT_PAIRS, 100);
    assert!(reports[0].passed(), "{:?}", reports[0].failures);
    assert!(reports[0].cases >= AGREEMENT_PAIRS);
}
