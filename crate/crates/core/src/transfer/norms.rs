use num_complex::Complex64;

use super::matrix::AmplitudeVector;
use super::propagate::MirrorArray;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormVerdict {
    Convergent,
    Divergent,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NormEstimate {
    /// The truncated sum.
    pub value: f64,
    pub verdict: NormVerdict,
    /// Log-log slope of the summands over the last decade, with a 95% interval.
    pub tail_exponent: f64,
    pub tail_ci: (f64, f64),
}

/// `Σ_n log(ℓ_{n+1}/ℓ_n) ‖A_n‖²` with `norms_sq[i] = ‖A_{first+i}‖²`.
pub fn wavefunction_norm<M: MirrorArray + ?Sized>(model: &M, norms_sq: &[f64]) -> NormEstimate {
    let first = model.first_label();
    let terms: Vec<f64> = norms_sq
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let n = first + i as u64;
            (model.log_ell(n + 1) - model.log_ell(n)) * a
        })
        .collect();
    let value: f64 = terms.iter().sum();
    if !value.is_finite() {
        return NormEstimate {
            value,
            verdict: NormVerdict::Divergent,
            tail_exponent: f64::INFINITY,
            tail_ci: (f64::INFINITY, f64::INFINITY),
        };
    }
    // slope of ln(term) against ln(n + 1) on the last decade
    let len = terms.len();
    let lo = (len / 10).max(1);
    let pts: Vec<(f64, f64)> = (lo..len)
        .filter(|&i| terms[i] > 0.0)
        .map(|i| (((first + i as u64) as f64 + 1.0).ln(), terms[i].ln()))
        .collect();
    let fit = crate::models::fit::weighted_line(&pts, |x| (-x).exp());
    let (slope, ci) = match fit {
        Some(f) => (f.slope, (f.slope - f.half_width, f.slope + f.half_width)),
        None => (f64::NAN, (f64::NAN, f64::NAN)),
    };
    let verdict = if !slope.is_finite() {
        NormVerdict::Inconclusive
    } else if ci.1 < -1.0 {
        NormVerdict::Convergent
    } else if ci.0 > -1.0 {
        NormVerdict::Divergent
    } else {
        NormVerdict::Inconclusive
    };
    NormEstimate { value, verdict, tail_exponent: slope, tail_ci: ci }
}

/// `(1/iE₁₂) Σ_n {[ℓ_{n+1}^{iE₁₂} - ℓ_n^{iE₁₂}] A₋⁽¹⁾* A₋⁽²⁾ - [ℓ_{n+1}^{-iE₁₂} - ℓ_n^{-iE₁₂}] A₊⁽¹⁾* A₊⁽²⁾}`.
pub fn scalar_product<M: MirrorArray + ?Sized>(
    e1: f64,
    amps1: &[AmplitudeVector],
    e2: f64,
    amps2: &[AmplitudeVector],
    model: &M,
) -> Result<Complex64> {
    if e1 == e2 {
        return Err(Error::EqualEnergies);
    }
    if amps1.len() != amps2.len() {
        return Err(Error::Domain(format!(
            "amplitude sequences differ in length ({} vs {})",
            amps1.len(),
            amps2.len()
        )));
    }
    let e12 = e1 - e2;
    let first = model.first_label();
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, (a, b)) in amps1.iter().zip(amps2).enumerate() {
        let n = first + i as u64;
        let (l0, l1) = (model.log_ell(n), model.log_ell(n + 1));
        let up = Complex64::from_polar(1.0, e12 * l1) - Complex64::from_polar(1.0, e12 * l0);
        let dn = Complex64::from_polar(1.0, -e12 * l1) - Complex64::from_polar(1.0, -e12 * l0);
        acc += up * a.a_minus.conj() * b.a_minus - dn * a.a_plus.conj() * b.a_plus;
    }
    Ok(acc / Complex64::new(0.0, e12))
}
