//! Bracketing root search for real functions.

use crate::error::Result;

/// Bisection on a sign-change bracket, to absolute tolerance `tol` in `x`.
pub fn bisect<F>(f: F, mut a: f64, mut b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let mut fa = f(a)?;
    if fa == 0.0 {
        return Ok(a);
    }
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a).abs() <= tol || m == a || m == b {
            return Ok(m);
        }
        let fm = f(m)?;
        if fm == 0.0 {
            return Ok(m);
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// A root located on a sampling grid: either bracketed by a sign change or
/// hit exactly at a grid point (`lo == hi`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

/// Sign changes of sampled values `ys` on abscissae `xs`.
pub fn sign_change_brackets(xs: &[f64], ys: &[f64]) -> Vec<Bracket> {
    let mut out = Vec::new();
    for i in 0..xs.len() {
        if ys[i] == 0.0 {
            out.push(Bracket { lo: xs[i], hi: xs[i] });
            continue;
        }
        if i + 1 < xs.len() && ys[i + 1] != 0.0 && (ys[i] < 0.0) != (ys[i + 1] < 0.0) {
            out.push(Bracket { lo: xs[i], hi: xs[i + 1] });
        }
    }
    out
}

/// Uniform grid from `lo` to `hi` inclusive with spacing at most `step`.
pub fn uniform_grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).ceil().max(1.0) as usize;
    (0..=n).map(|i| lo + (hi - lo) * i as f64 / n as f64).collect()
}
