use num_complex::Complex64;
use std::f64::consts::PI;

use super::gamma::log_gamma;
use super::quad::tanh_sinh;
use crate::error::{domain, Result};

pub const BESSEL_MAX_IMAG_ORDER: f64 = 1.0e3;

/// Modified Bessel function `K_ν(x)` for complex order and real `x > 0`.
pub fn bessel_k_complex_order(nu: Complex64, x: f64) -> Result<Complex64> {
    if !(x > 0.0 && x.is_finite()) {
        return domain(format!("bessel_k needs x > 0, got {x}"));
    }
    if !(nu.re.is_finite() && nu.im.is_finite()) || nu.im.abs() > BESSEL_MAX_IMAG_ORDER {
        return domain(format!("bessel_k order {nu} outside supported range"));
    }
    // K_ν = K_{-ν}
    let nu = if nu.re < 0.0 { -nu } else { nu };
    let loss = nu.im.abs() * PI / 2.0 - x;
    let near_integer = (nu.re - nu.re.round()).abs() < 1e-3 && nu.im.abs() < 1e-3;
    if loss < 3.0 || near_integer || nu.re > 30.0 {
        Ok(integral(nu, x))
    } else {
        series(nu, x)
    }
}

// K_ν(x) = ∫_0^∞ exp(-x cosh u) cosh(νu) du
fn integral(nu: Complex64, x: f64) -> Complex64 {
    let grow = nu.re.abs().max(nu.im.abs());
    let mut u_max = 1.0f64;
    while x * u_max.cosh() - grow * u_max - x < 40.0 {
        u_max *= 1.25;
    }
    let f = |u: f64| {
        let a = -x * u.cosh();
        let p = (a + nu * u).exp();
        let m = (a - nu * u).exp();
        (p + m) * 0.5
    };
    tanh_sinh(f, 0.0, u_max, 1e-14).0
}

// I_μ(x) / e^{shift}, with the overall scale returned separately.
fn bessel_i_scaled(mu: Complex64, x: f64) -> Result<(Complex64, f64)> {
    let half = 0.5 * x;
    let lead = mu * half.ln() - log_gamma(mu + 1.0)?;
    let shift = lead.re;
    let mut term = Complex64::from_polar(1.0, lead.im);
    let mut sum = term;
    let q = half * half;
    let mut k = 0.0f64;
    loop {
        k += 1.0;
        term *= q / (k * (k + mu));
        sum += term;
        if k > half && term.norm() < 1e-17 * sum.norm() {
            break;
        }
        if k > 10_000.0 {
            break;
        }
    }
    Ok((sum, shift))
}

// K_ν = π/(2 sin νπ) (I_{-ν} - I_ν), all factors carried in log scale.
fn series(nu: Complex64, x: f64) -> Result<Complex64> {
    let (s_minus, c_minus) = bessel_i_scaled(-nu, x)?;
    let (s_plus, c_plus) = bessel_i_scaled(nu, x)?;
    let b = nu.im.abs() * PI;
    let i = Complex64::new(0.0, 1.0);
    // sin(νπ) e^{-|Im ν| π}
    let sin_scaled =
        ((i * nu * PI - b).exp() - (-i * nu * PI - b).exp()) / (2.0 * i);
    let term = |s: Complex64, c: f64| s * (c - b).exp();
    Ok((term(s_minus, c_minus) - term(s_plus, c_plus)) * (PI / 2.0) / sin_scaled)
}
