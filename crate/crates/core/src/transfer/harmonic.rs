use num_complex::Complex64;
use std::f64::consts::PI;

use super::matrix::{AmplitudeVector, TransferMatrix};
use crate::error::{domain, Error, Result};

/// `(g, φ)` with `T = e^{-iφσz} e^{gσx} e^{iφσz}` for a real coupling `r`.
pub fn decompose_t(r: f64, ell: f64, e: f64) -> Result<(f64, f64)> {
    if !(r.abs() < 1.0) {
        return domain(format!("decomposition needs |r| < 1, got {r}"));
    }
    if !(ell > 0.0) {
        return domain(format!("mirror position must be positive, got {ell}"));
    }
    Ok((((1.0 + r) / (1.0 - r)).ln(), e * ell.ln()))
}

fn rot(a: f64) -> TransferMatrix {
    let z = Complex64::new(0.0, 0.0);
    TransferMatrix::new(Complex64::from_polar(1.0, a), z, z, Complex64::from_polar(1.0, -a))
}

fn boost(g: f64) -> TransferMatrix {
    let c = Complex64::new(g.cosh(), 0.0);
    let s = Complex64::new(g.sinh(), 0.0);
    TransferMatrix::new(c, s, s, c)
}

/// `e^{-iφσz} e^{gσx} e^{iφσz}`.
pub fn recompose_t(g: f64, phi: f64) -> TransferMatrix {
    rot(-phi) * boost(g) * rot(phi)
}

/// One step of the hatted recursion outward, `Â_k = e^{-gσx} e^{iΔσz} Â_{k-1}`.
pub fn kicked_step(a_hat: &AmplitudeVector, delta: f64, g: f64) -> AmplitudeVector {
    (boost(-g) * rot(delta)).apply(a_hat)
}

/// `S = e^{-gσx} e^{iEσz/2}`.
pub fn harmonic_s(e: f64, g: f64) -> TransferMatrix {
    boost(-g) * rot(e / 2.0)
}

/// Band structure of the harmonic array: continuum on `2π[n+δ, n+1-δ]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicBands {
    pub delta: f64,
    pub g: f64,
}

impl HarmonicBands {
    /// `|Tr S| < 2`.
    pub fn is_continuum(&self, e: f64) -> bool {
        (e / 2.0).sin().abs() > self.g.tanh().abs()
    }

    /// Distance from `E` to the nearest band edge.
    pub fn edge_distance(&self, e: f64) -> f64 {
        let x = e / (2.0 * PI);
        let frac = x - x.floor();
        let edges = [self.delta, 1.0 - self.delta];
        let d = edges
            .iter()
            .map(|&b| (frac - b).abs().min((frac - b + 1.0).abs()).min((frac - b - 1.0).abs()))
            .fold(f64::INFINITY, f64::min);
        2.0 * PI * d
    }
}

pub fn harmonic_bands(epsilon: f64) -> Result<HarmonicBands> {
    if !(epsilon.abs() < 1.0) {
        return domain(format!("harmonic bands need |eps| < 1, got {epsilon}"));
    }
    let t = 2.0 * epsilon.abs() / (1.0 + epsilon * epsilon);
    Ok(HarmonicBands { delta: t.asin() / PI, g: ((1.0 + epsilon) / (1.0 - epsilon)).ln() })
}

/// Bound-state energy in `[0, 2π)` for boundary phase `ϑ`:
/// `tan(E/2) = sin ϑ / (cos ϑ + coth g)`.
pub fn harmonic_theta_energy(g: f64, vartheta: f64) -> Result<f64> {
    if g == 0.0 || !g.is_finite() {
        return domain("harmonic_theta_energy needs finite nonzero g");
    }
    let coth = 1.0 / g.tanh();
    if !(1.0 + vartheta.cos() * coth > 0.0) {
        return Err(Error::ConstraintViolation(format!(
            "1 + cos(theta) coth(g) = {} is not positive",
            1.0 + vartheta.cos() * coth
        )));
    }
    let half = (vartheta.sin() / (vartheta.cos() + coth)).atan();
    Ok((2.0 * half).rem_euclid(2.0 * PI))
}
