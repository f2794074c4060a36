use crate::error::{domain, Result};
use crate::transfer::{bch_ln_norm_sq, propagate_exact, semiclassical_sums, GrowthScale, MirrorArray};

use super::fit::weighted_line;
use super::kinds::ModelSpec;

/// Relative `‖A_k‖²` below which rounding noise is assumed to dominate.
pub const NUMERICAL_FLOOR: f64 = 1e-12;

const BOUNDED_RATIO: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Continuum,
    DiscreteCandidate,
    Gap,
    NonNormalizable,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Continuum => "continuum",
            Verdict::DiscreteCandidate => "discrete-candidate",
            Verdict::Gap => "gap",
            Verdict::NonNormalizable => "non-normalizable",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Which amplitudes the verdict was read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AmplitudeRoute {
    /// Products of exact transfer matrices.
    Exact,
    /// `‖A_k^T‖²` from the running sums `R_k`, `Φ_k`.
    Semiclassical,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumReport {
    pub energy: f64,
    pub theta_used: f64,
    pub verdict: Verdict,
    /// Slope of `ln ‖A_k‖²` against `k` or `ln k`.
    pub growth_exponent: f64,
    pub ci: (f64, f64),
    pub route: AmplitudeRoute,
    /// Same slope for the amplitudes of the other route.
    pub cross_check_exponent: f64,
    /// Labels spanned by the fit.
    pub window: (u64, u64),
    pub r_k: f64,
    pub phi_k: f64,
}

fn regressor(scale: GrowthScale, k: u64) -> f64 {
    match scale {
        GrowthScale::Linear => k as f64,
        GrowthScale::Logarithmic => (k as f64).ln(),
    }
}

fn weight(scale: GrowthScale, x: f64) -> f64 {
    let k = match scale {
        GrowthScale::Linear => x,
        GrowthScale::Logarithmic => x.exp(),
    };
    1.0 / k.max(1.0)
}

fn min_max(v: &[f64]) -> (f64, f64) {
    v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &x| (a.min(x), b.max(x)))
}

fn fit_window(scale: GrowthScale, labels: &[u64], ln: &[f64], lo: usize, end: usize) -> Option<super::fit::LineFit> {
    let pts: Vec<(f64, f64)> = (lo..=end).map(|i| (regressor(scale, labels[i]), ln[i])).collect();
    weighted_line(&pts, |x| weight(scale, x))
}

/// Fits the growth of `ln ‖A_k‖²` over the last decade of labels and sorts
/// the energy into a spectral class. Harmonic families are read from the
/// exact products, power-law families from `‖A_k^T‖²`.
pub fn classify_energy(model: &ModelSpec, e: f64, vartheta: f64, k_max: u64) -> Result<SpectrumReport> {
    let first = model.first_label();
    if k_max < first + 10 {
        return domain(format!("k_max must be at least {}", first + 10));
    }
    let model = model.clone().with_capacity(k_max)?;
    let scale = model.growth_scale();
    let trace = propagate_exact(&model, e, vartheta, k_max)?;
    let exact = trace.ln_norms_sq();
    let sums = semiclassical_sums(&model, e, k_max)?;
    let semi: Vec<f64> = sums.iter().map(|s| bch_ln_norm_sq(s.r_k, s.phi_k, vartheta)).collect();
    let labels: Vec<u64> = (first..=k_max).collect();
    let (route, ln, other) = match scale {
        GrowthScale::Linear => (AmplitudeRoute::Exact, &exact, &semi),
        GrowthScale::Logarithmic => (AmplitudeRoute::Semiclassical, &semi, &exact),
    };

    let floor = (2.0 * NUMERICAL_FLOOR).ln();
    let end = ln.iter().position(|&v| v < floor).unwrap_or(ln.len() - 1).max(10);
    let k_end = labels[end];
    let k_lo = (k_end / 10).max(first.max(1)).min(k_end - 5);
    let lo = (k_lo - first) as usize;

    let fit = fit_window(scale, &labels, ln, lo, end).expect("window holds at least six points");
    let (ci_lo, ci_hi) = fit.ci();
    let span = regressor(scale, k_end) - regressor(scale, k_lo);
    let tie = (ci_lo <= 0.0 && ci_hi >= 0.0) || (fit.slope * span).abs() < std::f64::consts::LN_2;

    let verdict = if tie {
        let (mn, mx) = min_max(&ln[lo..=end]);
        let mid = (lo + end) / 2;
        let (mn1, mx1) = min_max(&ln[lo..=mid]);
        let (mn2, mx2) = min_max(&ln[mid..=end]);
        let ln2 = std::f64::consts::LN_2;
        // ratio of norms, not squared norms
        if 0.5 * (mx - mn) < BOUNDED_RATIO.ln() {
            Verdict::Continuum
        } else if (mx2 - mx1).abs() < ln2 && (mn2 - mn1).abs() < ln2 {
            // wide but stationary envelope
            Verdict::Continuum
        } else {
            Verdict::Inconclusive
        }
    } else if fit.slope < 0.0 {
        Verdict::DiscreteCandidate
    } else {
        match scale {
            GrowthScale::Linear => Verdict::Gap,
            GrowthScale::Logarithmic => Verdict::NonNormalizable,
        }
    };
    let cross_check_exponent = fit_window(scale, &labels, other, lo, end).map(|f| f.slope).unwrap_or(f64::NAN);
    let last = sums.last().expect("non-empty range");

    Ok(SpectrumReport {
        energy: e,
        theta_used: vartheta,
        verdict,
        growth_exponent: fit.slope,
        ci: (ci_lo, ci_hi),
        route,
        cross_check_exponent,
        window: (k_lo, k_end),
        r_k: last.r_k,
        phi_k: last.phi_k,
    })
}
