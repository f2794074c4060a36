use num_complex::Complex64;
use std::f64::consts::PI;

use super::gamma::log_gamma;
use crate::error::{domain, Error, Result};

// B_{2k} / (2k)! for k = 1..8
const EM_COEFF: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
];

const MIN_RE: f64 = -1.0;
const MAX_IM: f64 = 1.0e7;

fn check_domain(s: Complex64, a: f64) -> Result<()> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return domain(format!("non-finite argument {s}"));
    }
    if s.re <= MIN_RE {
        return domain(format!("Re s = {} is not above {MIN_RE}", s.re));
    }
    if s.im.abs() > MAX_IM {
        return domain(format!("|Im s| = {} too large", s.im.abs()));
    }
    if !(a > 0.0 && a <= 1.0) {
        return domain(format!("Hurwitz shift a = {a} not in (0, 1]"));
    }
    Ok(())
}

// Euler-Maclaurin; with `regular` the pole part 1/(s-1) is removed.
fn hurwitz_em(s: Complex64, a: f64, regular: bool) -> Complex64 {
    let n = 30usize.max(s.im.abs().ceil() as usize);
    let mut head = Complex64::new(0.0, 0.0);
    for k in 0..n {
        head += (-s * (k as f64 + a).ln()).exp();
    }
    let x = n as f64 + a;
    let lx = x.ln();
    let xs = (-s * lx).exp();
    let sm1 = s - 1.0;
    let tail = if regular {
        // (x^{1-s} - 1)/(s-1), stable as s -> 1
        let w = -sm1 * lx;
        let q = if w.norm() < 1e-5 {
            w * (1.0 + w * (0.5 + w / 6.0))
        } else {
            w.exp() - 1.0
        };
        if sm1.norm() == 0.0 {
            Complex64::new(-lx, 0.0)
        } else {
            q / sm1
        }
    } else {
        xs * x / sm1
    };
    let mut corr = Complex64::new(0.0, 0.0);
    let inv_x2 = 1.0 / (x * x);
    let mut t = s * xs / x;
    for (k, c) in EM_COEFF.iter().enumerate() {
        corr += t * *c;
        let j = 2.0 * k as f64 + 1.0;
        t *= (s + j) * (s + j + 1.0) * inv_x2;
    }
    head + tail + xs * 0.5 + corr
}

/// Hurwitz zeta `ζ(s, a)` for `0 < a ≤ 1` and `Re s > -1`.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    check_domain(s, a)?;
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::ZetaPole);
    }
    Ok(hurwitz_em(s, a, false))
}

/// `ζ(s, a) - 1/(s-1)`, finite at `s = 1`.
pub fn hurwitz_zeta_regular(s: Complex64, a: f64) -> Result<Complex64> {
    check_domain(s, a)?;
    Ok(hurwitz_em(s, a, true))
}

pub fn zeta(s: Complex64) -> Result<Complex64> {
    hurwitz_zeta(s, 1.0)
}

// Cauchy integral on a circle of radius r around s.
fn zeta_taylor(s: Complex64, order: u32) -> Result<Complex64> {
    let dist_pole = (s - 1.0).norm();
    let dist_edge = s.re - MIN_RE;
    let r = 0.25f64.min(dist_pole / 2.0).min(dist_edge / 2.0);
    if r < 1e-4 {
        return domain(format!("derivative at {s} too close to pole or domain edge"));
    }
    const M: usize = 64;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..M {
        let phi = 2.0 * PI * (j as f64 + 0.5) / M as f64;
        let e = Complex64::from_polar(1.0, phi);
        let f = zeta(s + e * r)?;
        acc += f * e.powi(-(order as i32));
    }
    let fact = (1..=order).product::<u32>() as f64;
    Ok(acc * fact / (M as f64 * r.powi(order as i32)))
}

pub fn zeta_derivative(s: Complex64) -> Result<Complex64> {
    zeta_taylor(s, 1)
}

pub fn zeta_second_derivative(s: Complex64) -> Result<Complex64> {
    zeta_taylor(s, 2)
}

/// `ζ'(-2n)` for `n ≥ 1`.
pub fn zeta_derivative_at_trivial_zero(n: u32) -> Result<f64> {
    if n == 0 {
        return domain("trivial zeros start at n = 1");
    }
    let nn = n as f64;
    let z = zeta(Complex64::new(2.0 * nn + 1.0, 0.0))?.re;
    let ln_mag = log_gamma(Complex64::new(2.0 * nn + 1.0, 0.0))?.re
        - (2.0 * nn) * (2.0 * PI).ln()
        - 2f64.ln();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * z * ln_mag.exp())
}

/// Riemann–Siegel theta `θ(t) = Im log Γ(1/4 + it/2) - (t/2) log π`.
pub fn riemann_siegel_theta(t: f64) -> Result<f64> {
    Ok(log_gamma(Complex64::new(0.25, 0.5 * t))?.im - 0.5 * t * PI.ln())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RiemannSiegelPair {
    pub z: f64,
    pub theta: f64,
}

/// Hardy's `Z(t)` together with `θ(t)`.
pub fn riemann_siegel(t: f64) -> Result<RiemannSiegelPair> {
    let theta = riemann_siegel_theta(t)?;
    let zv = zeta(Complex64::new(0.5, t))?;
    let z = (Complex64::from_polar(1.0, theta) * zv).re;
    Ok(RiemannSiegelPair { z, theta })
}

pub fn hardy_z(t: f64) -> Result<f64> {
    Ok(riemann_siegel(t)?.z)
}

pub fn hardy_z_derivative(t: f64) -> Result<f64> {
    let h = 1e-4;
    let f = |x: f64| hardy_z(t + x * h);
    Ok((f(-2.0)? - 8.0 * f(-1.0)? + 8.0 * f(1.0)? - f(2.0)?) / (12.0 * h))
}
