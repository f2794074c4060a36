//! Boundary phases that tune a mirror array onto a zero.

use std::f64::consts::PI;

use crate::arith::DirichletCharacter;
use crate::error::{Error, Result};
use crate::numkit::{l_phase_split, riemann_siegel_theta};

/// Wraps an angle into `(-π, π]`.
pub fn wrap_phase(x: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut y = x.rem_euclid(two_pi);
    if y > PI {
        y -= two_pi;
    }
    y
}

fn sign(n: i64) -> f64 {
    if n > 0 {
        1.0
    } else {
        -1.0
    }
}

/// `sign Z'(E_n) = (-1)^{n + (1 + sign n)/2}`.
pub fn z_prime_sign(n: i64) -> i8 {
    let e = n + if n > 0 { 1 } else { 0 };
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// `π(n + sign(n)/2) - θ(E_n)` before wrapping.
pub fn theta_star_riemann_unwrapped(n: i64, e_n: f64) -> f64 {
    let theta = riemann_siegel_theta(e_n).expect("θ is defined on the real line");
    PI * (n as f64 + 0.5 * sign(n)) - theta
}

/// Boundary phase for the `n`-th zero, in `(-π, π]`.
pub fn theta_star_riemann(n: i64, e_n: f64) -> f64 {
    wrap_phase(theta_star_riemann_unwrapped(n, e_n))
}

/// `π(n + (1 + b_χ + sign n)/2) - θ_χ(E_n)` with `b_χ = sign Z_χ(0)`,
/// wrapped into `(-π, π]`.
pub fn theta_star_dirichlet(chi: &DirichletCharacter, n: i64, e_n: f64) -> Result<f64> {
    if !chi.is_primitive() {
        return Err(Error::NonPrimitive { modulus: chi.modulus() });
    }
    let b = if l_phase_split(chi, 0.0)?.z_chi < 0.0 { -1.0 } else { 1.0 };
    let theta = l_phase_split(chi, e_n)?.theta_chi;
    Ok(wrap_phase(PI * (n as f64 + 0.5 * (1.0 + b + sign(n))) - theta))
}
