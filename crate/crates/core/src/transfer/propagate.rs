use num_complex::Complex64;

use super::matrix::{boundary_vector, t_matrix_log, AmplitudeVector};
use crate::error::{Error, Result};

/// How `log ℓ_n` grows with the label: linearly (exponential arrays) or
/// logarithmically (power-law arrays).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrowthScale {
    Linear,
    Logarithmic,
}

/// Mirror positions `ℓ_n` and reflection amplitudes `ϱ_n`. The boundary sits
/// at label [`first_label`](MirrorArray::first_label) with `ℓ = 1`.
pub trait MirrorArray {
    fn first_label(&self) -> u64;
    fn log_ell(&self, n: u64) -> f64;
    fn varrho(&self, n: u64) -> Complex64;
    fn growth_scale(&self) -> GrowthScale;
    /// Largest label the array can produce.
    fn max_label(&self) -> u64 {
        u64::MAX
    }
}

fn check_range<M: MirrorArray + ?Sized>(model: &M, k: u64) -> Result<()> {
    if k > model.max_label() {
        return Err(Error::Capacity { requested: k, limit: model.max_label() });
    }
    if k < model.first_label() {
        return Err(Error::Domain(format!("label {k} precedes the boundary {}", model.first_label())));
    }
    Ok(())
}

/// Amplitudes `A_n` for labels `first..=last`, each stored as a unit-scale
/// vector times `e^{log_scale}`.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeTrace {
    pub first_label: u64,
    pub vectors: Vec<AmplitudeVector>,
    pub log_scales: Vec<f64>,
}

impl AmplitudeTrace {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn label(&self, i: usize) -> u64 {
        self.first_label + i as u64
    }

    /// `ln ‖A_n‖²` at position `i`.
    pub fn ln_norm_sq(&self, i: usize) -> f64 {
        self.vectors[i].norm_sq().ln() + 2.0 * self.log_scales[i]
    }

    pub fn ln_norms_sq(&self) -> Vec<f64> {
        (0..self.len()).map(|i| self.ln_norm_sq(i)).collect()
    }

    /// `‖A_n‖²`, overflowing to infinity where it must.
    pub fn norms_sq(&self) -> Vec<f64> {
        self.ln_norms_sq().into_iter().map(f64::exp).collect()
    }

    /// The actual vector, if representable.
    pub fn vector(&self, i: usize) -> AmplitudeVector {
        self.vectors[i].scale(self.log_scales[i].exp())
    }

    /// `σz`-charge relative to `‖A_n‖²`.
    pub fn relative_charge(&self, i: usize) -> f64 {
        let v = &self.vectors[i];
        v.charge() / v.norm_sq()
    }
}

const RESCALE_HI: f64 = 1e150;
const RESCALE_LO: f64 = 1e-150;

/// `A_first = (1, e^{iϑ})`, `A_k = T_k⁻¹ A_{k-1}` for `k ≤ last`.
pub fn propagate_exact<M: MirrorArray + ?Sized>(
    model: &M,
    e: f64,
    vartheta: f64,
    last: u64,
) -> Result<AmplitudeTrace> {
    let first = model.first_label();
    check_range(model, last)?;
    let n = (last - first + 1) as usize;
    let mut vectors = Vec::with_capacity(n);
    let mut log_scales = Vec::with_capacity(n);
    let mut v = boundary_vector(vartheta);
    let mut scale = 0.0f64;
    vectors.push(v);
    log_scales.push(scale);
    for k in first + 1..=last {
        let tinv = t_matrix_log(e, -model.varrho(k), model.log_ell(k))?;
        v = tinv.apply(&v);
        let big = v.a_minus.norm().max(v.a_plus.norm());
        if big > RESCALE_HI || (big < RESCALE_LO && big > 0.0) {
            v = v.scale(1.0 / big);
            scale += big.ln();
        }
        vectors.push(v);
        log_scales.push(scale);
    }
    Ok(AmplitudeTrace { first_label: first, vectors, log_scales })
}

/// `R_k e^{-iΦ_k} = Σ_{n ≤ k} ϱ_n ℓ_n^{-2iE}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiclassicalSum {
    pub k: u64,
    pub r_k: f64,
    pub phi_k: f64,
}

impl SemiclassicalSum {
    pub fn value(&self) -> Complex64 {
        Complex64::from_polar(self.r_k, -self.phi_k)
    }
}

fn running_sums<M: MirrorArray + ?Sized>(
    model: &M,
    e: f64,
    from: u64,
    last: u64,
    weight: f64,
    prefix: Option<u64>,
) -> Vec<SemiclassicalSum> {
    let mut s = Complex64::new(0.0, 0.0);
    let mut phi = 0.0f64;
    let mut out = Vec::new();
    let start = prefix.unwrap_or(from);
    for k in start..=last {
        if k >= from {
            s += model.varrho(k) * Complex64::from_polar(weight, -2.0 * e * model.log_ell(k));
        }
        let r = s.norm();
        if r > 0.0 {
            let raw = -s.arg();
            let two_pi = 2.0 * std::f64::consts::PI;
            phi = raw + two_pi * ((phi - raw) / two_pi).round();
        }
        out.push(SemiclassicalSum { k, r_k: r, phi_k: phi });
    }
    out
}

/// Running sums over labels `first..=last`, `Φ` unwrapped along `k`.
pub fn semiclassical_sums<M: MirrorArray + ?Sized>(
    model: &M,
    e: f64,
    last: u64,
) -> Result<Vec<SemiclassicalSum>> {
    check_range(model, last)?;
    let first = model.first_label();
    Ok(running_sums(model, e, first, last, 1.0, None))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BchAmplitude {
    /// `None` once `R` is too large for the vector to be stored directly.
    pub vector: Option<AmplitudeVector>,
    pub ln_norm_sq: f64,
}

/// `ln[e^{2R}(1 - cos(Φ-ϑ)) + e^{-2R}(1 + cos(Φ-ϑ))]`.
pub fn bch_ln_norm_sq(r: f64, phi: f64, vartheta: f64) -> f64 {
    let c = (phi - vartheta).cos();
    let a = 1.0 - c;
    let b = 1.0 + c;
    let (hi, lo) = if r >= 0.0 { (a, b) } else { (b, a) };
    let ar = r.abs();
    // e^{2|R|} hi + e^{-2|R|} lo
    if hi > 0.0 {
        2.0 * ar + hi.ln() + (lo / hi * (-4.0 * ar).exp()).ln_1p()
    } else {
        -2.0 * ar + lo.ln()
    }
}

/// `exp(-R(cos Φ σx + sin Φ σy)) (1, e^{iϑ})`.
pub fn bch_amplitude(sum: &SemiclassicalSum, vartheta: f64) -> BchAmplitude {
    let r = sum.r_k;
    let ln = bch_ln_norm_sq(r, sum.phi_k, vartheta);
    if r.abs() > 300.0 {
        return BchAmplitude { vector: None, ln_norm_sq: ln };
    }
    let ch = r.cosh();
    let sh = r.sinh();
    let a1 = boundary_vector(vartheta);
    let e_m = Complex64::from_polar(1.0, -sum.phi_k);
    let e_p = Complex64::from_polar(1.0, sum.phi_k);
    let v = AmplitudeVector::new(
        a1.a_minus * ch - e_m * a1.a_plus * sh,
        a1.a_plus * ch - e_p * a1.a_minus * sh,
    );
    BchAmplitude { vector: Some(v), ln_norm_sq: ln }
}

/// BCH amplitudes built to match [`propagate_exact`] term by term: the
/// exponent sums `2ϱ_n ℓ_n^{-2iE}` over the mirrors past the boundary.
pub fn matched_bch_trace<M: MirrorArray + ?Sized>(
    model: &M,
    e: f64,
    vartheta: f64,
    last: u64,
) -> Result<Vec<BchAmplitude>> {
    check_range(model, last)?;
    let first = model.first_label();
    let sums = running_sums(model, e, first + 1, last, 2.0, Some(first));
    Ok(sums.iter().map(|s| bch_amplitude(s, vartheta)).collect())
}
