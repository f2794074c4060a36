use std::f64::consts::PI;

use rindler_core::boundary_spectrum::*;

#[test]
fn residual_examples() {
    let p0 = BoundaryProblem::new(2.0 * PI, 0.0).unwrap();
    assert_eq!(eigen_residual(&p0, 0.0).unwrap(), 0.0);
    let pp = BoundaryProblem::new(2.0 * PI, PI).unwrap();
    // G(0) = K_{1/2}(2π) = e^{-2π}/2
    assert!((eigen_residual(&pp, 0.0).unwrap() - 0.5 * (-2.0 * PI).exp()).abs() < 1e-12);
}

#[test]
fn roots_are_refined() {
    for th in [0.0, 1.0, PI] {
        let p = BoundaryProblem::new(2.0 * PI, th).unwrap();
        let r = solve_spectrum(&p, 50.0, 0.1).unwrap();
        assert!(r.residuals.iter().all(|&x| x < 1e-8), "{:?}", r.residuals);
    }
}

#[test]
fn pairing_under_negation() {
    for th in [0.0, PI] {
        let p = BoundaryProblem::new(2.0 * PI, th).unwrap();
        let r = solve_spectrum_on(&p, -40.0, 40.0, 0.1).unwrap().roots;
        let mut neg: Vec<f64> = r.iter().map(|x| -x).collect();
        neg.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(r.len(), neg.len());
        for (a, b) in r.iter().zip(&neg) {
            assert!((a - b).abs() < 1e-9);
        }
    }
}

#[test]
fn count_drift() {
    let p = BoundaryProblem::new(2.0 * PI, PI).unwrap();
    let r = solve_spectrum(&p, 50.0, 0.1).unwrap();
    for i in 0..=40 {
        let e = 10.0 + i as f64;
        let n = r.roots.iter().filter(|&&x| x <= e).count() as f64;
        assert!((n - count_formula(&p, e)).abs() <= 2.0, "E = {e}");
    }
}

#[test]
fn roots_crowd_as_mass_shrinks() {
    let gap = |m: f64| {
        let p = BoundaryProblem::new(m, PI).unwrap();
        let r = solve_spectrum_on(&p, 20.0, 30.0, 0.05).unwrap().roots;
        r.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min)
    };
    assert!(gap(0.01) < gap(2.0 * PI));
}

#[test]
fn smooth_count_examples() {
    let t = 1000.0f64;
    let asym = t / (2.0 * PI) * ((t / (2.0 * PI)).ln() - 1.0) + 7.0 / 8.0;
    assert!((average_zero_count(t).unwrap() - asym).abs() < 0.01);
}
