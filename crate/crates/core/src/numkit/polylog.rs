use num_complex::Complex64;

use crate::error::{domain, Result};

const MAX_TERMS: u64 = 50_000_000;

/// `Li_s(z) = Σ z^n / n^s` for real `0 ≤ z < 1`.
pub fn polylog(s: Complex64, z: f64) -> Result<Complex64> {
    if !(z >= 0.0 && z < 1.0) {
        return domain(format!("polylog needs 0 <= z < 1, got {z}"));
    }
    if z == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let lz = z.ln();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut n: u64 = 1;
    loop {
        let ln_n = (n as f64).ln();
        let term = (n as f64 * lz - s * ln_n).exp();
        sum += term;
        if n % 16 == 0 {
            let np1 = (n + 1) as f64;
            let tail = (np1 * lz - s.re * np1.ln()).exp() / (1.0 - z);
            if s.re >= 0.0 && tail < 1e-15 * sum.norm() {
                break;
            }
            if s.re < 0.0 && np1 > -s.re / -lz && tail < 1e-15 * sum.norm() {
                break;
            }
        }
        n += 1;
        if n > MAX_TERMS {
            return domain(format!("polylog at z = {z} converges too slowly"));
        }
    }
    Ok(sum)
}
