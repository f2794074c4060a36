use num_complex::Complex64;
use std::sync::Arc;

use crate::arith::{moebius_cached, DirichletCharacter, MoebiusTable};
use crate::error::{domain, Result};
use crate::transfer::{GrowthScale, MirrorArray};

const DEFAULT_LABELS: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// `ℓ_n = e^{n/2}`, `ϱ_n = ε`.
    Harmonic,
    /// `ℓ_n = e^{n/2}`, `ϱ_n = ε e^{-λn}`.
    HarmonicDamped,
    /// `ℓ_n = √n`, `ϱ_n = ε e^{-λn} / n^σ`.
    Polylog,
    /// `ℓ_n = √n`, `ϱ_n = ε μ(n) / n^σ`.
    Riemann,
    /// `ℓ_n = √n`, `ϱ_n = ε μ(n) χ(n) / n^σ`.
    Dirichlet,
}

impl std::str::FromStr for ModelKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "harmonic" => Ok(ModelKind::Harmonic),
            "harmonic-damped" | "damped" => Ok(ModelKind::HarmonicDamped),
            "polylog" => Ok(ModelKind::Polylog),
            "riemann" => Ok(ModelKind::Riemann),
            "dirichlet" => Ok(ModelKind::Dirichlet),
            other => Err(format!("unknown model '{other}'")),
        }
    }
}

impl std::fmt::Display for ModelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ModelKind::Harmonic => "harmonic",
            ModelKind::HarmonicDamped => "harmonic-damped",
            ModelKind::Polylog => "polylog",
            ModelKind::Riemann => "riemann",
            ModelKind::Dirichlet => "dirichlet",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ModelSpec {
    pub kind: ModelKind,
    pub epsilon: f64,
    pub sigma: f64,
    pub lambda: f64,
    pub character: Option<Arc<DirichletCharacter>>,
    moebius: Option<Arc<MoebiusTable>>,
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps.abs() < 1.0) {
        return domain(format!("|epsilon| must be below 1, got {eps}"));
    }
    Ok(())
}

impl ModelSpec {
    pub fn harmonic(epsilon: f64) -> Result<Self> {
        check_eps(epsilon)?;
        Ok(ModelSpec { kind: ModelKind::Harmonic, epsilon, sigma: 0.0, lambda: 0.0, character: None, moebius: None })
    }

    pub fn harmonic_damped(epsilon: f64, lambda: f64) -> Result<Self> {
        check_eps(epsilon)?;
        if !(lambda >= 0.0) {
            return domain(format!("damping must be non-negative, got {lambda}"));
        }
        Ok(ModelSpec { kind: ModelKind::HarmonicDamped, epsilon, sigma: 0.0, lambda, character: None, moebius: None })
    }

    pub fn polylog(epsilon: f64, sigma: f64, lambda: f64) -> Result<Self> {
        check_eps(epsilon)?;
        if !(lambda >= 0.0) || !(sigma > 0.0) {
            return domain(format!("polylog model needs sigma > 0, lambda >= 0 (got {sigma}, {lambda})"));
        }
        Ok(ModelSpec { kind: ModelKind::Polylog, epsilon, sigma, lambda, character: None, moebius: None })
    }

    pub fn riemann(epsilon: f64, sigma: f64) -> Result<Self> {
        check_eps(epsilon)?;
        if !(sigma > 0.0) {
            return domain(format!("sigma must be positive, got {sigma}"));
        }
        Ok(ModelSpec {
            kind: ModelKind::Riemann,
            epsilon,
            sigma,
            lambda: 0.0,
            character: None,
            moebius: Some(moebius_cached(DEFAULT_LABELS)?),
        })
    }

    pub fn dirichlet(epsilon: f64, sigma: f64, chi: DirichletCharacter) -> Result<Self> {
        let mut m = ModelSpec::riemann(epsilon, sigma)?;
        m.kind = ModelKind::Dirichlet;
        m.character = Some(Arc::new(chi));
        Ok(m)
    }

    /// Make sure labels up to `n` can be generated.
    pub fn with_capacity(mut self, n: u64) -> Result<Self> {
        if let Some(t) = &self.moebius {
            if t.max() < n {
                self.moebius = Some(moebius_cached(n)?);
            }
        }
        Ok(self)
    }

    pub fn with_epsilon(&self, epsilon: f64) -> Result<Self> {
        check_eps(epsilon)?;
        let mut m = self.clone();
        m.epsilon = epsilon;
        Ok(m)
    }

    pub fn mu(&self, n: u64) -> i8 {
        self.moebius.as_ref().map(|t| t.mu(n)).unwrap_or(1)
    }
}

impl MirrorArray for ModelSpec {
    fn first_label(&self) -> u64 {
        match self.kind {
            ModelKind::Harmonic | ModelKind::HarmonicDamped => 0,
            _ => 1,
        }
    }

    fn log_ell(&self, n: u64) -> f64 {
        match self.kind {
            ModelKind::Harmonic | ModelKind::HarmonicDamped => 0.5 * n as f64,
            _ => 0.5 * (n as f64).ln(),
        }
    }

    fn varrho(&self, n: u64) -> Complex64 {
        let nf = n as f64;
        let v = match self.kind {
            ModelKind::Harmonic => self.epsilon,
            ModelKind::HarmonicDamped => self.epsilon * (-self.lambda * nf).exp(),
            ModelKind::Polylog => self.epsilon * (-self.lambda * nf - self.sigma * nf.ln()).exp(),
            ModelKind::Riemann | ModelKind::Dirichlet => {
                let mu = self.mu(n);
                if mu == 0 {
                    return Complex64::new(0.0, 0.0);
                }
                self.epsilon * mu as f64 * (-self.sigma * nf.ln()).exp()
            }
        };
        match (&self.kind, &self.character) {
            (ModelKind::Dirichlet, Some(chi)) => chi.value(n) * v,
            _ => Complex64::new(v, 0.0),
        }
    }

    fn growth_scale(&self) -> GrowthScale {
        match self.kind {
            ModelKind::Harmonic | ModelKind::HarmonicDamped => GrowthScale::Linear,
            _ => GrowthScale::Logarithmic,
        }
    }

    fn max_label(&self) -> u64 {
        self.moebius.as_ref().map(|t| t.max()).unwrap_or(u64::MAX)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::characters_mod;

    #[test]
    fn generators() {
        let h = ModelSpec::harmonic(0.3).unwrap();
        assert_eq!(h.first_label(), 0);
        assert_eq!(h.varrho(7), Complex64::new(0.3, 0.0));
        assert_eq!(h.log_ell(4), 2.0);
        let r = ModelSpec::riemann(0.25, 0.5).unwrap();
        assert_eq!(r.first_label(), 1);
        assert_eq!(r.varrho(4), Complex64::new(0.0, 0.0));
        assert!((r.varrho(6).re - 0.25 / 6f64.sqrt()).abs() < 1e-15);
        assert!((r.varrho(5).re + 0.25 / 5f64.sqrt()).abs() < 1e-15);
        let chi = characters_mod(4).unwrap().remove(1);
        let d = ModelSpec::dirichlet(0.25, 0.5, chi).unwrap();
        assert!((d.varrho(3).re - 0.25 / 3f64.sqrt()).abs() < 1e-15);
        assert_eq!(d.varrho(2), Complex64::new(0.0, 0.0));
        assert!(ModelSpec::harmonic(1.0).is_err());
    }
}
