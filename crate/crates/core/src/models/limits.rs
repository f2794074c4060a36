use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numkit::{dirichlet_l, polylog, zeta};

use super::kinds::{ModelKind, ModelSpec};

/// `Σ_{n=0}^k q^n` with `q = e^{-(λ+iE)}`.
fn geometric(lambda: f64, e: f64, k: u64) -> Complex64 {
    let q = Complex64::new(-lambda, -e).exp();
    let one = Complex64::new(1.0, 0.0);
    if (one - q).norm() < 1e-12 {
        return Complex64::new((k + 1) as f64, 0.0);
    }
    (one - q.powf((k + 1) as f64)) / (one - q)
}

/// Closed form of `R_k e^{-iΦ_k}` for the harmonic families.
pub fn r_k_closed_form(model: &ModelSpec, e: f64, k: u64) -> Result<Complex64> {
    match model.kind {
        ModelKind::Harmonic | ModelKind::HarmonicDamped => {
            Ok(model.epsilon * geometric(model.lambda, e, k))
        }
        _ => Err(Error::Domain(format!("no finite-k closed form for the {} model", model.kind))),
    }
}

/// `R_∞ e^{-iΦ_∞}` where the defining series converges.
pub fn r_infinity(model: &ModelSpec, e: f64) -> Result<Complex64> {
    let eps = model.epsilon;
    match model.kind {
        ModelKind::Harmonic => Err(Error::DivergenceRegion(
            "undamped harmonic sums have no limit".into(),
        )),
        ModelKind::HarmonicDamped => {
            if model.lambda <= 0.0 {
                return Err(Error::DivergenceRegion("damped limit needs lambda > 0".into()));
            }
            let q = Complex64::new(-model.lambda, -e).exp();
            Ok(eps / (Complex64::new(1.0, 0.0) - q))
        }
        ModelKind::Polylog => {
            if model.lambda <= 0.0 {
                return Err(Error::DivergenceRegion("polylog limit needs lambda > 0".into()));
            }
            Ok(eps * polylog(Complex64::new(model.sigma, e), (-model.lambda).exp())?)
        }
        ModelKind::Riemann | ModelKind::Dirichlet => {
            if model.sigma <= 1.0 {
                return Err(Error::DivergenceRegion(format!(
                    "Möbius series limit needs sigma > 1, got {}",
                    model.sigma
                )));
            }
            let s = Complex64::new(model.sigma, e);
            let d = match &model.character {
                Some(chi) if model.kind == ModelKind::Dirichlet => dirichlet_l(chi, s)?,
                _ => zeta(s)?,
            };
            Ok(eps / d)
        }
    }
}
