use num_complex::Complex64;
use std::f64::consts::PI;

use super::gamma::log_gamma;
use super::zeta::{hurwitz_zeta, hurwitz_zeta_regular};
use crate::arith::{gauss_sum, DirichletCharacter};
use crate::error::{Error, Result};

/// `L(s, χ) = q^{-s} Σ_a χ(a) ζ(s, a/q)`.
pub fn dirichlet_l(chi: &DirichletCharacter, s: Complex64) -> Result<Complex64> {
    let q = chi.modulus();
    let qf = q as f64;
    let at_pole = s.re == 1.0 && s.im == 0.0;
    if at_pole && chi.is_principal() {
        return Err(Error::ZetaPole);
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for a in 1..=q {
        let v = chi.value(a);
        if v.norm_sqr() == 0.0 {
            continue;
        }
        let h = if at_pole {
            // characters sum to zero, so the pole parts cancel
            hurwitz_zeta_regular(s, a as f64 / qf)?
        } else {
            hurwitz_zeta(s, a as f64 / qf)?
        };
        acc += v * h;
    }
    Ok(acc * (-s * qf.ln()).exp())
}

/// Real-valued splitting `L(1/2 + it, χ) = e^{-iθ_χ(t)} Z_χ(t)` for a
/// primitive character.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LFunctionPair {
    pub z_chi: f64,
    pub theta_chi: f64,
    pub a_chi: u8,
    pub eps_chi: f64,
    pub imag_residual: f64,
}

pub fn l_phase_split(chi: &DirichletCharacter, t: f64) -> Result<LFunctionPair> {
    if !chi.is_primitive() {
        return Err(Error::NonPrimitive { modulus: chi.modulus() });
    }
    let q = chi.modulus() as f64;
    let a = chi.parity();
    let g = gauss_sum(chi);
    let i_pow = Complex64::new(0.0, -1.0).powi(a as i32);
    let root_phase = (i_pow * g / q.sqrt()).arg();
    let lg = log_gamma(Complex64::new((1.0 + 2.0 * a as f64) / 4.0, t / 2.0))?;
    let theta_chi = -root_phase / 2.0 - (t / 2.0) * (PI / q).ln() + lg.im;
    let l = dirichlet_l(chi, Complex64::new(0.5, t))?;
    let w = Complex64::from_polar(1.0, theta_chi) * l;
    Ok(LFunctionPair {
        z_chi: w.re,
        theta_chi,
        a_chi: a,
        eps_chi: root_phase,
        imag_residual: w.im.abs() / l.norm().max(1e-300),
    })
}

pub fn hardy_z_chi(chi: &DirichletCharacter, t: f64) -> Result<f64> {
    Ok(l_phase_split(chi, t)?.z_chi)
}
