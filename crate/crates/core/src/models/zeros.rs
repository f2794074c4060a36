//! Zero ordinates on the critical line from sign changes of the real
//! functions `Z(t)` and `Z_χ(t)`.

use std::f64::consts::PI;

use crate::arith::DirichletCharacter;
use crate::error::{domain, Error, Result};
use crate::numkit::roots::{bisect, sign_change_brackets};
use crate::numkit::{hardy_z, hardy_z_chi, riemann_siegel_theta};

/// Largest ordinate the zero scans accept.
pub const ZERO_TABLE_MAX: f64 = 1e4;

const ROOT_TOL: f64 = 1e-11;

// an eighth of the mean zero spacing near t, capped at 0.25
fn scan_step(q: f64, t: f64) -> f64 {
    let density = (q * t.abs().max(1.0) / (2.0 * PI)).ln().max(1.0) / (2.0 * PI);
    (1.0 / (8.0 * density)).min(0.25)
}

fn scan<F: Fn(f64) -> Result<f64>>(f: F, q: f64, lo: f64, hi: f64) -> Result<Vec<f64>> {
    let mut xs = Vec::new();
    let mut t = lo;
    while t < hi {
        xs.push(t);
        let step = scan_step(q, t.abs().max((t + 0.25).abs()));
        t += step;
    }
    xs.push(hi);
    let ys = xs.iter().map(|&x| f(x)).collect::<Result<Vec<f64>>>()?;
    let mut out = Vec::new();
    for b in sign_change_brackets(&xs, &ys) {
        if b.lo == b.hi {
            out.push(b.lo);
        } else {
            out.push(bisect(&f, b.lo, b.hi, ROOT_TOL)?);
        }
    }
    Ok(out)
}

fn check_range(lo: f64, hi: f64) -> Result<()> {
    if !(lo <= hi) || hi.abs().max(lo.abs()) > ZERO_TABLE_MAX {
        return domain(format!("zero scan range [{lo}, {hi}] outside |t| <= {ZERO_TABLE_MAX}"));
    }
    Ok(())
}

/// Positive zero ordinates of `ζ(1/2 + it)` up to `t_max`, ascending.
pub fn riemann_zeros_up_to(t_max: f64) -> Result<Vec<f64>> {
    check_range(0.0, t_max)?;
    let zs = scan(hardy_z, 1.0, 1.0, t_max)?;
    // ⟨N(t)⟩ = θ(t)/π + 1
    if t_max > 14.0 {
        let avg = riemann_siegel_theta(t_max)? / PI + 1.0;
        if (zs.len() as f64) < avg - 2.0 {
            return Err(Error::DivergenceRegion(format!(
                "found {} zeros below {t_max}, expected about {avg:.1}; grid too coarse",
                zs.len()
            )));
        }
    }
    Ok(zs)
}

/// The first `count` positive zero ordinates.
pub fn riemann_zeros(count: usize) -> Result<Vec<f64>> {
    if count == 0 {
        return Ok(Vec::new());
    }
    // smallest T with θ(T)/π + 1 ≥ count + 3
    let mut t = 20.0f64;
    while riemann_siegel_theta(t)? / PI + 1.0 < count as f64 + 3.0 {
        t *= 1.1;
        if t > ZERO_TABLE_MAX {
            return domain(format!("{count} zeros exceed the scan limit"));
        }
    }
    let mut zs = riemann_zeros_up_to(t)?;
    while zs.len() < count {
        let next = (t * 1.1).min(ZERO_TABLE_MAX);
        if next <= t {
            return domain(format!("{count} zeros exceed the scan limit"));
        }
        zs.extend(scan(hardy_z, 1.0, t, next)?.into_iter().filter(|&z| z > t));
        t = next;
    }
    zs.truncate(count);
    Ok(zs)
}

/// Zero ordinates of `L(1/2 + it, χ)` in `[lo, hi]`, ascending. Needs a
/// primitive character.
pub fn l_zeros_between(chi: &DirichletCharacter, lo: f64, hi: f64) -> Result<Vec<f64>> {
    check_range(lo, hi)?;
    if !chi.is_primitive() {
        return Err(Error::NonPrimitive { modulus: chi.modulus() });
    }
    scan(|t| hardy_z_chi(chi, t), chi.modulus() as f64, lo, hi)
}
