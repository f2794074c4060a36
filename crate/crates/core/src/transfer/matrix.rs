use num_complex::Complex64;
use std::ops::Mul;

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A 2×2 complex matrix acting on `(A₋, A₊)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    pub m: [[Complex64; 2]; 2],
}

impl TransferMatrix {
    pub const IDENTITY: TransferMatrix = TransferMatrix { m: [[ONE, ZERO], [ZERO, ONE]] };

    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        TransferMatrix { m: [[a, b], [c, d]] }
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn dagger(&self) -> Self {
        let m = &self.m;
        TransferMatrix::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn inverse(&self) -> Self {
        let d = self.det();
        let m = &self.m;
        TransferMatrix::new(m[1][1] / d, -m[0][1] / d, -m[1][0] / d, m[0][0] / d)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let m = &self.m;
        TransferMatrix::new(m[0][0] * s, m[0][1] * s, m[1][0] * s, m[1][1] * s)
    }

    /// Largest entrywise deviation from `other`.
    pub fn max_diff(&self, other: &TransferMatrix) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                d = d.max((self.m[i][j] - other.m[i][j]).norm());
            }
        }
        d
    }

    /// Largest entry of `M† σz M - σz`.
    pub fn su11_defect(&self) -> f64 {
        let sz = sigma_z();
        (self.dagger() * sz * *self).max_diff(&sz)
    }

    pub fn apply(&self, v: &AmplitudeVector) -> AmplitudeVector {
        AmplitudeVector {
            a_minus: self.m[0][0] * v.a_minus + self.m[0][1] * v.a_plus,
            a_plus: self.m[1][0] * v.a_minus + self.m[1][1] * v.a_plus,
        }
    }
}

impl Mul for TransferMatrix {
    type Output = TransferMatrix;
    fn mul(self, o: TransferMatrix) -> TransferMatrix {
        let a = &self.m;
        let b = &o.m;
        let mut r = [[ZERO; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        TransferMatrix { m: r }
    }
}

pub(crate) fn sigma_z() -> TransferMatrix {
    TransferMatrix::new(ONE, ZERO, ZERO, -ONE)
}

/// `(A₋, A₊)`, the plane-wave amplitudes between two mirrors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AmplitudeVector {
    pub a_minus: Complex64,
    pub a_plus: Complex64,
}

impl AmplitudeVector {
    pub fn new(a_minus: Complex64, a_plus: Complex64) -> Self {
        AmplitudeVector { a_minus, a_plus }
    }

    pub fn norm_sq(&self) -> f64 {
        self.a_minus.norm_sqr() + self.a_plus.norm_sqr()
    }

    /// `|A₋|² - |A₊|²`.
    pub fn charge(&self) -> f64 {
        self.a_minus.norm_sqr() - self.a_plus.norm_sqr()
    }

    pub fn scale(&self, s: f64) -> Self {
        AmplitudeVector { a_minus: self.a_minus * s, a_plus: self.a_plus * s }
    }

    pub fn dist(&self, o: &AmplitudeVector) -> f64 {
        ((self.a_minus - o.a_minus).norm_sqr() + (self.a_plus - o.a_plus).norm_sqr()).sqrt()
    }
}

/// Mirror couplings `(r, r', r'')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReflectionParams {
    pub r: f64,
    pub r_prime: f64,
    pub r_dprime: f64,
}

impl ReflectionParams {
    pub fn new(r: f64, r_prime: f64, r_dprime: f64) -> Self {
        ReflectionParams { r, r_prime, r_dprime }
    }

    /// `ϱ = r - i r'`.
    pub fn varrho(&self) -> Complex64 {
        Complex64::new(self.r, -self.r_prime)
    }

    /// `det N± = 1 - r² - r'² + r''²`.
    pub fn det(&self) -> f64 {
        1.0 - self.r * self.r - self.r_prime * self.r_prime + self.r_dprime * self.r_dprime
    }
}

/// Matching matrices `(N₊, N₋)` with `N₊ χ(ℓ⁺) = N₋ χ(ℓ⁻)`.
pub fn n_matrices(p: &ReflectionParams) -> (TransferMatrix, TransferMatrix) {
    let i = Complex64::new(0.0, 1.0);
    let w = i * p.r + p.r_prime;
    let wb = -i * p.r + p.r_prime;
    let build = |s: f64| {
        TransferMatrix::new(1.0 + i * (s * p.r_dprime), w * s, wb * s, 1.0 - i * (s * p.r_dprime))
    };
    (build(1.0), build(-1.0))
}

/// `L = N₋⁻¹ N₊` in its general form (any `r''`).
pub fn l_matrix_general(p: &ReflectionParams) -> Result<TransferMatrix> {
    let d = p.det();
    if d.abs() < 1e-300 {
        return Err(Error::SingularCoupling { modulus_sq: p.r * p.r + p.r_prime * p.r_prime });
    }
    let i = Complex64::new(0.0, 1.0);
    let c = 1.0 + p.r * p.r + p.r_prime * p.r_prime - p.r_dprime * p.r_dprime;
    let w = i * p.r + p.r_prime;
    let wb = -i * p.r + p.r_prime;
    Ok(TransferMatrix::new(c + i * 2.0 * p.r_dprime, w * 2.0, wb * 2.0, c - i * 2.0 * p.r_dprime)
        .scale(Complex64::new(1.0 / d, 0.0)))
}

/// Gauge-reduced `L` (requires `r'' = 0` and `r² + r'² < 1`).
pub fn l_matrix(p: &ReflectionParams) -> Result<TransferMatrix> {
    let m2 = p.r * p.r + p.r_prime * p.r_prime;
    if m2 >= 1.0 {
        return Err(Error::SingularCoupling { modulus_sq: m2 });
    }
    if p.r_dprime != 0.0 {
        return Err(Error::ConstraintViolation(
            "l_matrix takes gauge-reduced parameters (r'' = 0); see gauge_reduce".into(),
        ));
    }
    l_matrix_general(p)
}

/// Phases `α_{n-1}, α_n` with `e^{iα_{n-1}σz} L e^{-iα_nσz}` in reduced form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaugeReduction {
    pub reduced: ReflectionParams,
    pub alpha_prev: f64,
    pub alpha_next: f64,
}

pub fn gauge_reduce(p: &ReflectionParams) -> Result<GaugeReduction> {
    let d = p.det();
    let m2 = p.r * p.r + p.r_prime * p.r_prime;
    if d <= 0.0 {
        return Err(Error::SingularCoupling { modulus_sq: m2 });
    }
    let c = 1.0 + m2 - p.r_dprime * p.r_dprime;
    let diag = Complex64::new(c, 2.0 * p.r_dprime);
    let a = diag.norm() / d;
    let rho = ((a - 1.0) / (a + 1.0)).sqrt();
    // keep the phase of i r + r'
    let w = Complex64::new(p.r_prime, p.r);
    let (r, rp) = if w.norm() == 0.0 { (0.0, 0.0) } else { (rho * w.im / w.norm(), rho * w.re / w.norm()) };
    let delta = -diag.arg();
    Ok(GaugeReduction {
        reduced: ReflectionParams::new(r, rp, 0.0),
        alpha_prev: delta / 2.0,
        alpha_next: -delta / 2.0,
    })
}

/// `T(E, ϱ, ℓ)`, relating `A_{n-1} = T_n A_n`.
pub fn t_matrix(e: f64, varrho: Complex64, ell: f64) -> Result<TransferMatrix> {
    if !(ell > 0.0) {
        return Err(Error::Domain(format!("mirror position must be positive, got {ell}")));
    }
    t_matrix_log(e, varrho, ell.ln())
}

pub(crate) fn t_matrix_log(e: f64, varrho: Complex64, log_ell: f64) -> Result<TransferMatrix> {
    let m2 = varrho.norm_sqr();
    if m2 >= 1.0 {
        return Err(Error::SingularCoupling { modulus_sq: m2 });
    }
    let inv = 1.0 / (1.0 - m2);
    let ph = Complex64::from_polar(1.0, -2.0 * e * log_ell);
    let diag = Complex64::new((1.0 + m2) * inv, 0.0);
    Ok(TransferMatrix::new(diag, varrho * ph * (2.0 * inv), varrho.conj() * ph.conj() * (2.0 * inv), diag))
}

/// `(1, e^{iϑ})`.
pub fn boundary_vector(vartheta: f64) -> AmplitudeVector {
    AmplitudeVector::new(ONE, Complex64::from_polar(1.0, vartheta))
}
