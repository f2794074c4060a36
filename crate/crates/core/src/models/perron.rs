//! Truncated Möbius sums `Σ*_{n≤x} μ(n) n^{-z}` and their residue expansion.

use num_complex::Complex64;

use crate::arith::moebius_cached;
use crate::error::{domain, Result};
use crate::numkit::{zeta, zeta_derivative, zeta_derivative_at_trivial_zero, zeta_second_derivative};

const ZERO_DETECT: f64 = 1e-9;

/// `Σ*_{n≤x} μ(n) n^{-z}`, the last term halved.
pub fn perron_partial_sum(z: Complex64, x: u64) -> Result<Complex64> {
    Ok(perron_partial_sums_at(z, &[x])?[0])
}

/// [`perron_partial_sum`] at several cut-offs in one pass. `xs` must be
/// non-decreasing.
pub fn perron_partial_sums_at(z: Complex64, xs: &[u64]) -> Result<Vec<Complex64>> {
    if xs.is_empty() {
        return Ok(Vec::new());
    }
    if xs[0] < 1 {
        return domain("perron sums need x >= 1");
    }
    if xs.windows(2).any(|w| w[1] < w[0]) {
        return domain("perron checkpoints must be non-decreasing");
    }
    let top = *xs.last().unwrap();
    let mu = moebius_cached(top)?;
    let mut out = Vec::with_capacity(xs.len());
    let mut acc = Complex64::new(0.0, 0.0);
    let mut next = 0;
    for n in 1..=top {
        let m = mu.mu(n);
        let term = if m == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            (-z * (n as f64).ln()).exp() * m as f64
        };
        while next < xs.len() && xs[next] == n {
            out.push(acc + term * 0.5);
            next += 1;
        }
        acc += term;
    }
    Ok(out)
}

/// Residue series for [`perron_partial_sum`]: the pole at the origin, the
/// zeros `1/2 ± iE_m` for each listed ordinate, and `n_trivial` trivial
/// zeros. When `ζ(z)` vanishes the origin is a double pole with residue
/// `log x/ζ'(z) - ζ''(z)/(2ζ'(z)²)`, and the matching zero is skipped.
pub fn perron_residue_expansion(
    z: Complex64,
    x: f64,
    zeros: &[f64],
    n_trivial: u32,
) -> Result<Complex64> {
    if !(x >= 1.0) {
        return domain("perron expansion needs x >= 1");
    }
    let lx = x.ln();
    let zz = zeta(z)?;
    let at_zero = zz.norm() < ZERO_DETECT;
    let mut total = if at_zero {
        let d1 = zeta_derivative(z)?;
        let d2 = zeta_second_derivative(z)?;
        lx / d1 - d2 / (2.0 * d1 * d1)
    } else {
        1.0 / zz
    };
    for &e in zeros {
        for rho in [Complex64::new(0.5, e), Complex64::new(0.5, -e)] {
            let s = rho - z;
            if s.norm() < 1e-6 {
                continue;
            }
            let d = zeta_derivative(rho)?;
            total += (s * lx).exp() / (s * d);
        }
    }
    for n in 1..=n_trivial {
        let s = Complex64::new(-2.0 * n as f64, 0.0) - z;
        let d = zeta_derivative_at_trivial_zero(n)?;
        total += (s * lx).exp() / (s * d);
    }
    Ok(total)
}
