use num_complex::Complex64;

use crate::error::{Error, Result};

// B_{2k} / (2k (2k-1)) for k = 1..10
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

const SHIFT_TO: f64 = 15.0;

/// Principal branch of `log Γ(z)`, analytic off the non-positive real axis
/// and agreeing with the usual `loggamma` on it.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("log_gamma of non-finite {z}")));
    }
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() {
        return Err(Error::GammaPole { re: z.re, im: z.im });
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_TO {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

fn stirling(w: Complex64) -> Complex64 {
    let half_ln_2pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    let mut acc = (w - 0.5) * w.ln() - w + half_ln_2pi;
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut p = inv;
    for c in STIRLING {
        acc += p * c;
        p *= inv2;
    }
    acc
}

pub fn gamma(z: Complex64) -> Result<Complex64> {
    Ok(log_gamma(z)?.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn integer_factorials() {
        let mut f = 1.0f64;
        for n in 1..20 {
            let lg = log_gamma(c(n as f64, 0.0)).unwrap();
            assert!((lg.re - f.ln()).abs() < 1e-13 * f.ln().abs().max(1.0), "n={n}");
            assert_eq!(lg.im, 0.0);
            f *= n as f64;
        }
    }

    #[test]
    fn half_integer() {
        let lg = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((lg.re - 0.5 * std::f64::consts::PI.ln()).abs() < 1e-14);
    }

    #[test]
    fn mpmath_values() {
        let v = log_gamma(c(0.25, 7.0)).unwrap();
        assert!((v - c(-10.562953339040001933, 6.2301605005296513126)).norm() < 1e-12);
        let v = log_gamma(c(-0.5, -10.0)).unwrap();
        assert!((v - c(-17.092858267837632734, -11.40926531239425047)).norm() < 1e-12);
    }

    #[test]
    fn poles() {
        assert!(matches!(log_gamma(c(0.0, 0.0)), Err(Error::GammaPole { .. })));
        assert!(matches!(log_gamma(c(-3.0, 0.0)), Err(Error::GammaPole { .. })));
        assert!(log_gamma(c(-3.0, 1e-9)).is_ok());
    }

    #[test]
    fn negative_real_axis() {
        // Γ(-1/2) = -2√π
        let g = gamma(c(-0.5, 0.0)).unwrap();
        assert!((g.re + 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn conjugate_symmetry() {
        for &(x, y) in &[(0.3, 2.0), (-4.7, 0.4), (12.0, 100.0)] {
            let a = log_gamma(c(x, y)).unwrap();
            let b = log_gamma(c(x, -y)).unwrap();
            assert!((a - b.conj()).norm() < 1e-12);
        }
    }
}
