use std::f64::consts::PI;

use rayon::prelude::*;
use rindler_core::arith::{character_mod, DirichletCharacter};
use rindler_core::boundary_spectrum::{count_formula, max_grid_step, relative_residual, solve_spectrum, BoundaryProblem};
use rindler_core::mirrors::{classify_integer, enumerate_paths, proper_time};
use rindler_core::models::fit::weighted_line;
use rindler_core::models::*;
use rindler_core::numkit::{hardy_z_chi, hardy_z_derivative, l_phase_split, riemann_siegel_theta};
use rindler_core::transfer::{bch_ln_norm_sq, propagate_exact, semiclassical_sums, MirrorArray};
use rindler_core::Complex64;

use crate::output::{Cell, Table};
use crate::{CliError, Opts};

type Out = Result<Table, CliError>;

fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn character(o: &Opts) -> Result<DirichletCharacter, CliError> {
    let chi = character_mod(o.modulus, o.char_index).map_err(|e| config(e.to_string()))?;
    if !chi.is_primitive() {
        return Err(config(format!("character {} mod {} is not primitive", o.char_index, o.modulus)));
    }
    Ok(chi)
}

fn model(o: &Opts) -> Result<ModelSpec, CliError> {
    let m = match o.model {
        ModelKind::Harmonic => ModelSpec::harmonic(o.epsilon),
        ModelKind::HarmonicDamped => ModelSpec::harmonic_damped(o.epsilon, o.lambda),
        ModelKind::Polylog => ModelSpec::polylog(o.epsilon, o.sigma, o.lambda),
        ModelKind::Riemann => ModelSpec::riemann(o.epsilon, o.sigma),
        ModelKind::Dirichlet => ModelSpec::dirichlet(o.epsilon, o.sigma, character(o)?),
    };
    m.map_err(|e| config(e.to_string()))
}

/// `(E_n, ϑ*(E_n))` for the `n`-th zero of the model's zeta or `L`-function.
fn tuned_zero(o: &Opts, n: i64) -> Result<(f64, f64), CliError> {
    if n == 0 {
        return Err(config("zero index must be nonzero"));
    }
    let k = n.unsigned_abs() as usize;
    let sign = n.signum() as f64;
    match o.model {
        ModelKind::Riemann => {
            let e = riemann_zeros(k)?[k - 1] * sign;
            Ok((e, theta_star_riemann(n, e)))
        }
        ModelKind::Dirichlet => {
            let chi = character(o)?;
            let mut hi = 50.0;
            let zs = loop {
                let zs = l_zeros_between(&chi, 0.0, hi)?;
                if zs.len() >= k || hi >= ZERO_TABLE_MAX {
                    break zs;
                }
                hi = (hi * 2.0).min(ZERO_TABLE_MAX);
            };
            let e = *zs.get(k - 1).ok_or_else(|| config(format!("zero {k} lies beyond t = {ZERO_TABLE_MAX}")))?;
            if n < 0 && !chi.is_real() {
                return Err(config("negative zero indices need a real character"));
            }
            Ok((e * sign, theta_star_dirichlet(&chi, n, e * sign)?))
        }
        other => Err(config(format!("--zero-index needs the riemann or dirichlet model, not {other}"))),
    }
}

fn pool(o: &Opts) -> Result<rayon::ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = o.jobs {
        if j == 0 {
            return Err(config("--jobs must be positive"));
        }
        b = b.num_threads(j);
    }
    b.build().map_err(|e| config(e.to_string()))
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
    }
}

fn point_count(grid: Option<f64>, default: usize) -> Result<usize, CliError> {
    match grid {
        None => Ok(default),
        Some(g) if g >= 0.0 && g.fract() == 0.0 => Ok(g as usize),
        Some(g) => Err(config(format!("--grid must be a point count here, got {g}"))),
    }
}

pub fn scan(o: &Opts) -> Out {
    let m = model(o)?;
    let kmax = o.kmax.unwrap_or(2000);
    if kmax < m.first_label() + 10 {
        return Err(config(format!("--kmax must be at least {}", m.first_label() + 10)));
    }
    let (energies, theta) = match o.zero_index {
        Some(n) => {
            let (e, th) = tuned_zero(o, n)?;
            (vec![e], o.theta.unwrap_or(th))
        }
        None => {
            let lo = o.emin.unwrap_or(0.0);
            let hi = o.emax.unwrap_or(4.0 * PI);
            let pts = if hi < lo { 0 } else { point_count(o.grid, 400)? };
            (linspace(lo, hi, pts), o.theta.unwrap_or(0.0))
        }
    };
    let reports: Vec<_> =
        pool(o)?.install(|| energies.par_iter().map(|&e| classify_energy(&m, e, theta, kmax)).collect());
    let mut t = Table::new(&["E", "theta", "verdict", "growth_exponent", "ci_lo", "ci_hi", "R_K", "Phi_K"]);
    for r in reports {
        let r = r?;
        t.push(vec![
            r.energy.into(),
            r.theta_used.into(),
            r.verdict.to_string().into(),
            r.growth_exponent.into(),
            r.ci.0.into(),
            r.ci.1.into(),
            r.r_k.into(),
            r.phi_k.into(),
        ]);
    }
    Ok(t)
}

/// Sign of `Z_χ'` by a five-point central difference.
fn z_chi_prime_sign(chi: &DirichletCharacter, t: f64) -> Result<i64, CliError> {
    let h = 1e-4;
    let z = |x: f64| hardy_z_chi(chi, x);
    let d = (z(t - 2.0 * h)? - 8.0 * z(t - h)? + 8.0 * z(t + h)? - z(t + 2.0 * h)?) / (12.0 * h);
    Ok(if d >= 0.0 { 1 } else { -1 })
}

fn zero_table_max(o: &Opts, default: f64) -> Result<f64, CliError> {
    let hi = o.emax.unwrap_or(default);
    if !(hi > 0.0 && hi <= ZERO_TABLE_MAX) {
        return Err(config(format!("--emax must lie in (0, {ZERO_TABLE_MAX}], got {hi}")));
    }
    Ok(hi)
}

pub fn zeros(o: &Opts) -> Out {
    let hi = zero_table_max(o, 100.0)?;
    let mut t = Table::new(&["n", "E_n", "Zprime_sign", "theta_at_zero", "vartheta_star"]);
    match o.model {
        ModelKind::Riemann => {
            for (i, &e) in riemann_zeros_up_to(hi)?.iter().enumerate() {
                let n = i as i64 + 1;
                let sign = if hardy_z_derivative(e)? >= 0.0 { 1 } else { -1 };
                if sign != z_prime_sign(n) as i64 {
                    return Err(CliError::Numerical(format!(
                        "sign of Z' at E = {e} breaks the alternation at n = {n}; a zero was missed"
                    )));
                }
                t.push(vec![n.into(), e.into(), sign.into(), riemann_siegel_theta(e)?.into(), theta_star_riemann(n, e).into()]);
            }
        }
        ModelKind::Dirichlet => {
            let chi = character(o)?;
            for (i, &e) in l_zeros_between(&chi, 0.0, hi)?.iter().enumerate() {
                let n = i as i64 + 1;
                t.push(vec![
                    n.into(),
                    e.into(),
                    z_chi_prime_sign(&chi, e)?.into(),
                    l_phase_split(&chi, e)?.theta_chi.into(),
                    theta_star_dirichlet(&chi, n, e)?.into(),
                ]);
            }
        }
        other => return Err(config(format!("zeros needs the riemann or dirichlet model, not {other}"))),
    }
    Ok(t)
}

pub fn amp_trace(o: &Opts) -> Out {
    let (e, theta) = match (o.zero_index, o.energy) {
        (Some(n), None) => {
            let (e, th) = tuned_zero(o, n)?;
            (e, o.theta.unwrap_or(th))
        }
        (None, Some(e)) => (e, o.theta.unwrap_or(0.0)),
        (Some(_), Some(_)) => return Err(config("give either --energy or --zero-index, not both")),
        (None, None) => return Err(config("amp-trace needs --energy or --zero-index")),
    };
    let kmax = o.kmax.unwrap_or(2000);
    let m = model(o)?.with_capacity(kmax).map_err(|e| config(e.to_string()))?;
    let first = m.first_label();
    let kmin = o.kmin.unwrap_or(first);
    if kmin < first || kmin > kmax {
        return Err(config(format!("need {first} <= kmin <= kmax, got {kmin}..{kmax}")));
    }
    let trace = propagate_exact(&m, e, theta, kmax)?;
    let sums = semiclassical_sums(&m, e, kmax)?;
    let mut t = Table::new(&["k", "A2_exact", "A2_bch", "R_k", "Phi_k"]);
    for k in kmin..=kmax {
        let i = (k - first) as usize;
        let s = &sums[i];
        t.push(vec![
            k.into(),
            trace.ln_norm_sq(i).exp().into(),
            bch_ln_norm_sq(s.r_k, s.phi_k, theta).exp().into(),
            s.r_k.into(),
            s.phi_k.into(),
        ]);
    }
    Ok(t)
}

pub fn mirror_paths(o: &Opts) -> Out {
    let n = o.n.ok_or_else(|| config("mirror-paths needs --n"))?;
    if n < 2 {
        return Err(config(format!("--n must be at least 2, got {n}")));
    }
    let max_mirror = o.max_mirror.unwrap_or(4 * n);
    let paths = enumerate_paths(n, o.depth, max_mirror).map_err(|e| config(e.to_string()))?;
    let mut t = Table::new(&["path_id", "bounce_sequence", "tau", "tau_as_log_of"]);
    for (i, p) in paths.iter().enumerate() {
        let tau = proper_time(p)?;
        t.push(vec![(i as u64).into(), p.to_string().into(), tau.tau().into(), tau.to_string().into()]);
    }
    t.summary = Some(("class", classify_integer(n, o.depth)?.to_string()));
    Ok(t)
}

pub fn xp_spectrum(o: &Opts) -> Out {
    let problem = BoundaryProblem::new(o.mell, o.theta.unwrap_or(PI)).map_err(|e| config(e.to_string()))?;
    let hi = o.emax.unwrap_or(30.0);
    let step = o.grid.unwrap_or_else(|| 0.5 * max_grid_step(&problem, hi));
    let roots = solve_spectrum(&problem, hi, step).map_err(|e| config(e.to_string()))?;
    if roots.missed_bracket_suspected {
        return Err(CliError::Numerical(format!("root count below the counting formula; refine --grid {step}")));
    }
    let mut t = Table::new(&["E_root", "residual", "count_formula"]);
    for &e in &roots.roots {
        t.push(vec![e.into(), relative_residual(&problem, e)?.into(), count_formula(&problem, e).into()]);
    }
    Ok(t)
}

pub fn theta_of_zero(o: &Opts) -> Out {
    let rows: Vec<(i64, f64, f64)> = match o.model {
        ModelKind::Riemann => {
            let zs = match (o.count, o.emax) {
                (Some(c), _) => riemann_zeros(c)?,
                (None, Some(_)) => riemann_zeros_up_to(zero_table_max(o, 0.0)?)?,
                (None, None) => riemann_zeros(1000)?,
            };
            zs.iter().enumerate().map(|(i, &e)| (i as i64 + 1, e, theta_star_riemann(i as i64 + 1, e))).collect()
        }
        ModelKind::Dirichlet => {
            let chi = character(o)?;
            let mut zs = l_zeros_between(&chi, 0.0, zero_table_max(o, 1000.0)?)?;
            if let Some(c) = o.count {
                zs.truncate(c);
            }
            zs.iter()
                .enumerate()
                .map(|(i, &e)| Ok((i as i64 + 1, e, theta_star_dirichlet(&chi, i as i64 + 1, e)?)))
                .collect::<Result<_, rindler_core::Error>>()?
        }
        other => return Err(config(format!("theta-of-zero needs the riemann or dirichlet model, not {other}"))),
    };
    let mut t = Table::new(&["n", "E_n", "vartheta_star"]);
    let inside = rows.iter().filter(|r| r.2.abs() < 0.5 * PI).count();
    for (n, e, th) in rows.iter().copied() {
        t.push(vec![n.into(), e.into(), th.into()]);
    }
    if !rows.is_empty() {
        t.summary = Some(("mass_within_half_pi", format!("{:.6}", inside as f64 / rows.len() as f64)));
    }
    Ok(t)
}

pub fn perron(o: &Opts) -> Out {
    let z = Complex64::new(o.sigma, o.energy.unwrap_or(0.0));
    let lo = o.xmin.unwrap_or(1000);
    let hi = o.xmax.unwrap_or(1_000_000);
    if lo < 1 || hi < lo {
        return Err(config(format!("need 1 <= xmin <= xmax, got {lo}..{hi}")));
    }
    let pts = point_count(o.grid, 61)?;
    let mut xs: Vec<u64> = linspace((lo as f64).ln(), (hi as f64).ln(), pts)
        .into_iter()
        .map(|l| (l.exp().round() as u64).clamp(lo, hi))
        .collect();
    xs.dedup();
    let sums = perron_partial_sums_at(z, &xs)?;
    let line: Vec<(f64, f64)> = xs.iter().zip(&sums).map(|(&x, s)| ((x as f64).ln(), s.norm())).collect();
    let fit = weighted_line(&line, |_| 1.0);
    let mut t = Table::new(&["x", "re", "im", "modulus", "log_x_fit"]);
    for (&x, s) in xs.iter().zip(&sums) {
        let f = fit.as_ref().map(|f| f.intercept + f.slope * (x as f64).ln()).unwrap_or(f64::NAN);
        t.push(vec![x.into(), s.re.into(), s.im.into(), s.norm().into(), Cell::Float(f)]);
    }
    Ok(t)
}
