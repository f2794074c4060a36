//! Spectrum of a massive fermion confined to `ρ > ℓ₁` in Rindler space by a
//! boundary condition with phase `ϑ`. Eigenenergies solve
//! `e^{iϑ} K_{1/2-iE}(mℓ₁) = K_{1/2+iE}(mℓ₁)`.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::numkit::roots::{bisect, sign_change_brackets, uniform_grid};
use crate::numkit::{bessel_k_complex_order, riemann_siegel_theta};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryProblem {
    pub m_ell1: f64,
    pub vartheta: f64,
}

impl BoundaryProblem {
    pub fn new(m_ell1: f64, vartheta: f64) -> Result<Self> {
        if !(m_ell1 > 0.0 && m_ell1.is_finite()) {
            return domain(format!("m*l1 must be positive, got {m_ell1}"));
        }
        if !vartheta.is_finite() {
            return domain("boundary phase must be finite");
        }
        Ok(BoundaryProblem { m_ell1, vartheta: vartheta.rem_euclid(2.0 * PI) })
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RootList {
    pub roots: Vec<f64>,
    pub residuals: Vec<f64>,
    /// Set when the root count falls short of the counting formula by more
    /// than 2, a sign that the grid merged two roots into one cell.
    pub missed_bracket_suspected: bool,
}

fn k_minus(problem: &BoundaryProblem, e: f64) -> Result<Complex64> {
    bessel_k_complex_order(Complex64::new(0.5, -e), problem.m_ell1)
}

/// `G(E) = Im(e^{iϑ/2} K_{1/2-iE}(mℓ₁))`.
pub fn eigen_residual(problem: &BoundaryProblem, e: f64) -> Result<f64> {
    let k = k_minus(problem, e)?;
    Ok((Complex64::from_polar(1.0, problem.vartheta / 2.0) * k).im)
}

/// `|e^{iϑ} K_{1/2-iE} - K_{1/2+iE}| / |K_{1/2-iE}|`.
pub fn relative_residual(problem: &BoundaryProblem, e: f64) -> Result<f64> {
    let km = k_minus(problem, e)?;
    let kp = bessel_k_complex_order(Complex64::new(0.5, e), problem.m_ell1)?;
    Ok((Complex64::from_polar(1.0, problem.vartheta) * km - kp).norm() / km.norm())
}

/// `n(E) = (E/π)(log(2E/mℓ₁) - 1) - ϑ/2π`.
pub fn count_formula(problem: &BoundaryProblem, e: f64) -> f64 {
    if e <= 0.0 {
        return 0.0;
    }
    e / PI * ((2.0 * e / problem.m_ell1).ln() - 1.0) - problem.vartheta / (2.0 * PI)
}

/// Largest grid spacing accepted by [`solve_spectrum`] up to `e_max`.
pub fn max_grid_step(problem: &BoundaryProblem, e_max: f64) -> f64 {
    let l = (2.0 * e_max.abs() / problem.m_ell1).ln();
    if l <= 1.0 {
        0.5 * PI
    } else {
        PI / (2.0 * l)
    }
}

/// Roots of `G` on `[0, e_max]`.
pub fn solve_spectrum(problem: &BoundaryProblem, e_max: f64, grid: f64) -> Result<RootList> {
    solve_spectrum_on(problem, 0.0, e_max, grid)
}

/// Roots of `G` on `[lo, hi]`, refined by bisection to `1e-10`.
pub fn solve_spectrum_on(problem: &BoundaryProblem, lo: f64, hi: f64, grid: f64) -> Result<RootList> {
    if !(hi >= lo) || !(grid > 0.0) {
        return domain(format!("bad scan range [{lo}, {hi}] with step {grid}"));
    }
    let limit = max_grid_step(problem, lo.abs().max(hi.abs()));
    if grid > limit {
        return domain(format!("grid step {grid} coarser than {limit:.4} needed near E = {hi}"));
    }
    let xs = uniform_grid(lo, hi, grid);
    let ys = xs
        .iter()
        .map(|&e| eigen_residual(problem, e))
        .collect::<Result<Vec<f64>>>()?;
    let mut out = RootList::default();
    for br in sign_change_brackets(&xs, &ys) {
        let root = if br.lo == br.hi {
            br.lo
        } else {
            bisect(|e| eigen_residual(problem, e), br.lo, br.hi, 1e-11)?
        };
        if k_minus(problem, root)?.norm() <= 1e-300 {
            continue;
        }
        out.roots.push(root);
        out.residuals.push(relative_residual(problem, root)?);
    }
    if lo >= 0.0 {
        let expected = count_formula(problem, hi) - count_formula(problem, lo);
        out.missed_bracket_suspected = (out.roots.len() as f64) < expected - 2.0;
    }
    Ok(out)
}

/// Smooth zero-counting function `θ(t)/π + 1`.
pub fn average_zero_count(t: f64) -> Result<f64> {
    Ok(riemann_siegel_theta(t)? / PI + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_mode_only_for_periodic_phase() {
        let p0 = BoundaryProblem::new(2.0 * PI, 0.0).unwrap();
        assert_eq!(eigen_residual(&p0, 0.0).unwrap(), 0.0);
        let pp = BoundaryProblem::new(2.0 * PI, PI).unwrap();
        assert!(eigen_residual(&pp, 0.0).unwrap().abs() > 1e-6);
    }

    #[test]
    fn parity_of_root_function() {
        for (th, sgn) in [(0.0, -1.0), (PI, 1.0)] {
            let p = BoundaryProblem::new(2.0 * PI, th).unwrap();
            for e in [0.7, 3.3, 11.0] {
                let a = eigen_residual(&p, e).unwrap();
                let b = eigen_residual(&p, -e).unwrap();
                assert!((b - sgn * a).abs() < 1e-12 * a.abs().max(1e-30), "th={th} e={e}");
            }
        }
    }

    #[test]
    fn count_and_residuals() {
        let p = BoundaryProblem::new(2.0 * PI, PI).unwrap();
        let r = solve_spectrum(&p, 30.0, 0.25).unwrap();
        let want = count_formula(&p, 30.0);
        assert!((r.roots.len() as f64 - want).abs() <= 1.0, "{} vs {want}", r.roots.len());
        assert!(r.residuals.iter().all(|&x| x < 1e-8));
        assert!(!r.missed_bracket_suspected);
    }

    #[test]
    fn rejects_coarse_grid() {
        let p = BoundaryProblem::new(2.0 * PI, PI).unwrap();
        assert!(solve_spectrum(&p, 30.0, 1.0).is_err());
    }

    #[test]
    fn smooth_count() {
        // the smooth count sits below the step of N(t) at the first zero
        assert!((average_zero_count(14.134725).unwrap() - 0.449747152247131).abs() < 1e-10);
        let t: f64 = 1000.0;
        let asym = t / (2.0 * PI) * ((t / (2.0 * PI)).ln() - 1.0) + 7.0 / 8.0;
        assert!((average_zero_count(t).unwrap() - asym).abs() < 0.01);
        assert!((average_zero_count(100.0).unwrap() - 29.00240990227181678).abs() < 1e-10);
    }
}
