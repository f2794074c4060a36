//! One line per criterion: `PASS`/`FAIL`, the measured quantities, and the
//! wall time. Exits non-zero when any criterion fails.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use rindler_core::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rindler_core::arith::{characters_mod, num_characters};
use rindler_core::boundary_spectrum::{
    count_formula, relative_residual, solve_spectrum, solve_spectrum_on, BoundaryProblem,
};
use rindler_core::mirrors::{classify_integer, enumerate_paths, IntegerClass};
use rindler_core::models::fit::weighted_line;
use rindler_core::models::*;
use rindler_core::numkit::*;
use rindler_core::transfer::*;

const ZETA2_TOL: f64 = 1e-10;
const FIRST_ZERO_TOL: f64 = 1e-3;
const AVG_COUNT_SLACK: f64 = 2.0;
const PAIRING_TOL: f64 = 1e-9;
const EDGE_MARGIN: f64 = 0.05;
const DELTA_TOL: f64 = 1e-3;
const SU11_TOL: f64 = 1e-12;
const CHARGE_TOL: f64 = 1e-8;
const BCH_RATIO: (f64, f64) = (2.5, 6.0);
const R_SLOPE_TOL: f64 = 0.20;
const NORM_TOL: f64 = 0.25;
const BOUNDED_RATIO: f64 = 10.0;
const THETA_MASS: f64 = 0.60;
const BASEL_TOL: f64 = 1e-3;
const PERRON_TOL: f64 = 0.25;
const PHASE_TOL: f64 = 1e-8;
const CHI4_ZERO: (f64, f64) = (5.9, 6.1);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

fn run(id: &str, budget: Duration, f: fn() -> Outcome, failures: &mut Vec<String>) {
    let t0 = Instant::now();
    let o = f();
    let dt = t0.elapsed();
    let pass = o.pass && dt <= budget;
    println!(
        "{} {id}: {} [{:.2}s / {}s]",
        if pass { "PASS" } else { "FAIL" },
        o.detail,
        dt.as_secs_f64(),
        budget.as_secs()
    );
    if !pass {
        failures.push(id.to_string());
    }
}

fn c1_zeta_machinery() -> Outcome {
    let z2 = zeta(Complex64::new(2.0, 0.0)).unwrap();
    let e1 = (z2 - PI * PI / 6.0).norm();
    let zs = riemann_zeros_up_to(100.0).unwrap();
    let avg = riemann_siegel_theta(100.0).unwrap() / PI + 1.0;
    let first = zs[0];
    let pass = e1 < ZETA2_TOL
        && (first - 14.1347).abs() < FIRST_ZERO_TOL
        && zs.len() == 29
        && (zs.len() as f64 - avg).abs() < AVG_COUNT_SLACK;
    outcome(pass, format!("|zeta(2)-pi^2/6|={e1:.1e} first zero={first:.6} count(100)={} <N(100)>={avg:.4}", zs.len()))
}

fn c2_boundary_spectrum() -> Outcome {
    let p = BoundaryProblem::new(2.0 * PI, PI).unwrap();
    let roots = solve_spectrum(&p, 30.0, 0.1).unwrap();
    let want = count_formula(&p, 30.0);
    let count_ok = (roots.roots.len() as f64 - want).abs() <= 1.0;
    let mut worst_pair = 0.0f64;
    for th in [0.0, PI] {
        let q = BoundaryProblem::new(2.0 * PI, th).unwrap();
        let r = solve_spectrum_on(&q, -30.0, 30.0, 0.1).unwrap().roots;
        let mut neg: Vec<f64> = r.iter().map(|x| -x).collect();
        neg.sort_by(|a, b| a.partial_cmp(b).unwrap());
        if neg.len() != r.len() {
            worst_pair = f64::INFINITY;
        }
        for (a, b) in r.iter().zip(&neg) {
            worst_pair = worst_pair.max((a - b).abs());
        }
    }
    let mut zero_ok = true;
    for th in [0.0, PI, 1.0, 2.5, 4.0] {
        let q = BoundaryProblem::new(2.0 * PI, th).unwrap();
        let is_root = relative_residual(&q, 0.0).unwrap() < PAIRING_TOL;
        zero_ok &= is_root == (th == 0.0);
    }
    outcome(
        count_ok && worst_pair < PAIRING_TOL && zero_ok,
        format!(
            "roots on [0,30]={} formula={want:.3} pairing error={worst_pair:.1e} zero-mode rule={zero_ok}",
            roots.roots.len()
        ),
    )
}

fn c3_harmonic() -> Outcome {
    let mut agree = 0;
    let mut total = 0;
    let mut delta_err = 0.0f64;
    for eps in [0.1, 0.3, 0.6] {
        let m = ModelSpec::harmonic(eps).unwrap();
        let bands = harmonic_bands(eps).unwrap();
        // band edge from |Tr S| = 2, located independently of the closed form
        let edge = rindler_core::numkit::roots::bisect(
            |e| Ok(harmonic_s(e, bands.g).trace().re.abs() - 2.0),
            1e-9,
            PI,
            1e-13,
        )
        .unwrap();
        let delta_formula = (2.0 * eps / (1.0 + eps * eps)).asin() / PI;
        delta_err = delta_err.max((edge / (2.0 * PI) - delta_formula).abs());
        delta_err = delta_err.max((bands.delta - delta_formula).abs());
        for i in 0..800 {
            let e = 4.0 * PI * i as f64 / 799.0;
            if bands.edge_distance(e) < EDGE_MARGIN {
                continue;
            }
            let elliptic = (2.0 * bands.g.cosh() * (e / 2.0).cos()).abs() < 2.0;
            for th in [0.0, 1.0, PI] {
                let r = classify_energy(&m, e, th, 2000).unwrap();
                total += 1;
                if (r.verdict == Verdict::Continuum) == elliptic {
                    agree += 1;
                }
            }
        }
    }
    let mut discrete_ok = true;
    for eps in [0.1f64, -0.1, 0.3, -0.3, 0.6, -0.6] {
        let m = ModelSpec::harmonic(eps).unwrap();
        for n in 0..3 {
            for th in [0.0, PI, 0.5 * PI, 1.0] {
                let r = classify_energy(&m, 2.0 * PI * n as f64, th, 2000).unwrap();
                let want = (th == 0.0 && eps > 0.0) || (th == PI && eps < 0.0);
                discrete_ok &= (r.verdict == Verdict::DiscreteCandidate) == want;
            }
        }
    }
    outcome(
        agree == total && delta_err < DELTA_TOL && discrete_ok,
        format!("agreement {agree}/{total} max|delta err|={delta_err:.1e} discrete at 2pi n: {discrete_ok}"),
    )
}

fn c4_su11() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    let sz = TransferMatrix::new(
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        Complex64::new(-1.0, 0.0),
    );
    let (mut det, mut metric, mut inv) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..1000 {
        let e = rng.gen_range(-50.0..50.0);
        let rho = Complex64::from_polar(rng.gen_range(0.0..0.95), rng.gen_range(-PI..PI));
        let ell = rng.gen_range(0.1..1e3);
        let t = t_matrix(e, rho, ell).unwrap();
        det = det.max((t.det() - 1.0).norm());
        metric = metric.max((t.dagger() * sz * t).max_diff(&sz));
        let ti = t_matrix(e, -rho, ell).unwrap();
        inv = inv.max((ti * t).max_diff(&TransferMatrix::IDENTITY));
    }
    let chi5 = characters_mod(5).unwrap().remove(1);
    let models = [
        ModelSpec::harmonic(0.3).unwrap(),
        ModelSpec::harmonic_damped(0.4, 0.01).unwrap(),
        ModelSpec::polylog(0.5, 0.5, 0.001).unwrap(),
        ModelSpec::riemann(0.5, 0.5).unwrap(),
        ModelSpec::dirichlet(0.5, 0.5, chi5).unwrap(),
    ];
    let mut charge = 0.0f64;
    for i in 0..1000 {
        let m = &models[i % models.len()];
        let e = rng.gen_range(0.0..40.0);
        let th = rng.gen_range(0.0..2.0 * PI);
        let tr = propagate_exact(m, e, th, 1000).unwrap();
        for k in 0..tr.len() {
            charge = charge.max(tr.relative_charge(k).abs());
        }
    }
    outcome(
        det < SU11_TOL && metric < SU11_TOL && inv < SU11_TOL && charge < CHARGE_TOL,
        format!("det {det:.1e} metric {metric:.1e} inverse {inv:.1e} relative charge {charge:.1e}"),
    )
}

fn bch_deviation(m: &ModelSpec, e: f64, th: f64) -> f64 {
    let tr = propagate_exact(m, e, th, 100).unwrap();
    let bch = matched_bch_trace(m, e, th, 100).unwrap();
    (0..tr.len())
        .map(|i| tr.vector(i).dist(&bch[i].vector.expect("small R")))
        .fold(0.0, f64::max)
}

fn c5_bch_order() -> Outcome {
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    let cases: [(fn(f64) -> ModelSpec, f64); 4] = [
        (|e| ModelSpec::harmonic(e).unwrap(), 3.0),
        (|e| ModelSpec::harmonic(e).unwrap(), 5.5),
        (|e| ModelSpec::riemann(e, 0.5).unwrap(), 24.0),
        (|e| ModelSpec::riemann(e, 0.5).unwrap(), 14.134725),
    ];
    for (make, e) in cases {
        for th in [0.0, 1.0, PI] {
            let r = bch_deviation(&make(0.05), e, th) / bch_deviation(&make(0.025), e, th);
            lo = lo.min(r);
            hi = hi.max(r);
        }
    }
    outcome(lo >= BCH_RATIO.0 && hi <= BCH_RATIO.1, format!("deviation ratios in [{lo:.3}, {hi:.3}]"))
}

fn semi_ln_norms(m: &ModelSpec, e: f64, th: f64, k: u64) -> (Vec<SemiclassicalSum>, Vec<f64>) {
    let sums = semiclassical_sums(m, e, k).unwrap();
    let ln = sums.iter().map(|s| bch_ln_norm_sq(s.r_k, s.phi_k, th)).collect();
    (sums, ln)
}

fn log_fit(ln: &[f64], lo: usize, hi: usize) -> rindler_core::models::fit::LineFit {
    let pts: Vec<(f64, f64)> = (lo..=hi).map(|k| ((k as f64).ln(), ln[k - 1])).collect();
    weighted_line(&pts, |x| (-x).exp()).unwrap()
}

fn c6_riemann_at_zero() -> Outcome {
    let e1 = riemann_zeros(1).unwrap()[0];
    let th = theta_star_riemann(1, e1);
    let zp = hardy_z_derivative(e1).unwrap().abs();
    let m = ModelSpec::riemann(0.25, 0.5).unwrap().with_capacity(100_000).unwrap();
    let (sums, ln) = semi_ln_norms(&m, e1, th, 100_000);
    let decay = log_fit(&ln, 10, 2000);
    let decaying = decay.slope + decay.half_width < 0.0;

    let m24 = ModelSpec::riemann(0.5, 0.5).unwrap();
    let (_, ln24) = semi_ln_norms(&m24, 24.0, PI, 2000);
    let w = &ln24[9..2000];
    let (mn, mx) = w.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
    let ratio = (0.5 * (mx - mn)).exp();
    let bounded = ratio < BOUNDED_RATIO;

    let pts: Vec<(f64, f64)> =
        (1000..=100_000).map(|k| ((k as f64).ln(), sums[k - 1].r_k)).collect();
    let r_slope = weighted_line(&pts, |x| (-x).exp()).unwrap().slope;
    let r_rel = (r_slope / (0.25 / zp) - 1.0).abs();

    let norms: Vec<f64> = ln.iter().map(|v| v.exp()).collect();
    let norm = wavefunction_norm(&m, &norms).value;
    let target = zeta(Complex64::new(1.0 + 0.5 / zp, 0.0)).unwrap().re;
    let norm_rel = (norm / target - 1.0).abs();

    outcome(
        decaying && bounded && r_rel < R_SLOPE_TOL && norm_rel < NORM_TOL,
        format!(
            "decay exponent {:.4}±{:.4} (-2eps/|Z'|={:.4}); E=24 norm ratio {ratio:.2}; \
             R_k slope/(eps/|Z'|)-1={r_rel:.3}; norm(K=1e5)={norm:.4} vs zeta={target:.4} (rel {norm_rel:.3})",
            decay.slope,
            decay.half_width,
            -0.5 / zp
        ),
    )
}

fn c7_theta_histogram() -> Outcome {
    let zs = riemann_zeros(1000).unwrap();
    let inside = zs
        .iter()
        .enumerate()
        .filter(|(i, e)| theta_star_riemann(*i as i64 + 1, **e).abs() < 0.5 * PI)
        .count();
    let mass = inside as f64 / zs.len() as f64;
    outcome(
        zs.len() == 1000 && mass > THETA_MASS,
        format!("{} zeros up to {:.3}, mass in (-pi/2, pi/2) = {mass:.3}", zs.len(), zs[zs.len() - 1]),
    )
}

fn c8_perron() -> Outcome {
    let basel = perron_partial_sum(Complex64::new(2.0, 0.0), 1_000_000).unwrap();
    let basel_err = (basel - 6.0 / (PI * PI)).norm();
    let zs = riemann_zeros(50).unwrap();
    let z = Complex64::new(0.5, zs[0]);
    let zp = hardy_z_derivative(zs[0]).unwrap().abs();
    let xs: Vec<u64> = (0..=60).map(|i| (1e3 * 10f64.powf(i as f64 / 20.0)).round() as u64).collect();
    let ps = perron_partial_sums_at(z, &xs).unwrap();
    let pts: Vec<(f64, f64)> = xs.iter().zip(&ps).map(|(x, p)| ((*x as f64).ln(), p.norm())).collect();
    let slope = weighted_line(&pts, |_| 1.0).unwrap().slope;
    let slope_rel = (slope * zp - 1.0).abs();
    let direct = perron_partial_sum(z, 100_000).unwrap();
    let expansion = perron_residue_expansion(z, 1e5, &zs, 10).unwrap();
    let exp_rel = (expansion - direct).norm() / direct.norm();
    outcome(
        basel_err < BASEL_TOL && slope_rel < PERRON_TOL && exp_rel < PERRON_TOL,
        format!(
            "|S(1e6; 2)-6/pi^2|={basel_err:.1e}; slope*|Z'|-1={slope_rel:.4}; expansion vs direct at 1e5 rel {exp_rel:.4}"
        ),
    )
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn c9_mirror_sieve() -> Outcome {
    let mut mismatches = 0;
    for n in 2..=10_000u64 {
        let c = classify_integer(n, 4).unwrap();
        if (c == IntegerClass::Prime) != is_prime(n) {
            mismatches += 1;
        }
    }
    let four = enumerate_paths(4, 4, 16).unwrap().len();
    let primes_single = (2..=199u64).filter(|&p| is_prime(p)).all(|p| enumerate_paths(p, 4, 2 * p).unwrap().len() == 1);
    outcome(
        mismatches == 0 && four >= 2 && primes_single,
        format!("mismatches {mismatches} on [2, 1e4]; paths(4)={four}; primes <= 199 single path: {primes_single}"),
    )
}

fn c10_dirichlet() -> Outcome {
    let mut worst = 0.0f64;
    let mut worst_at = (0, 0);
    let mut count = 0;
    for q in 1..=12u64 {
        for idx in 0..num_characters(q) {
            let chi = rindler_core::arith::character_mod(q, idx).unwrap();
            if !chi.is_primitive() {
                continue;
            }
            count += 1;
            for i in 0..100 {
                let t = 0.5 + 0.5 * i as f64;
                let a = l_phase_split(&chi, t).unwrap();
                let b = l_phase_split(&chi, -t).unwrap();
                let lhs = Complex64::from_polar(1.0, 2.0 * (a.theta_chi + b.theta_chi));
                let d = (lhs - Complex64::from_polar(1.0, -a.eps_chi)).norm();
                if d > worst {
                    worst = d;
                    worst_at = (q, idx);
                }
            }
        }
    }
    let chi4 = characters_mod(4).unwrap().remove(1);
    let z = l_zeros_between(&chi4, CHI4_ZERO.0, CHI4_ZERO.1).unwrap();
    let (zero_ok, verdict) = match z.first() {
        Some(&e) => {
            let th = theta_star_dirichlet(&chi4, 1, e).unwrap();
            let m = ModelSpec::dirichlet(0.25, 0.5, chi4.clone()).unwrap();
            (true, classify_energy(&m, e, th, 2000).unwrap().verdict)
        }
        None => (false, Verdict::Inconclusive),
    };
    outcome(
        worst < PHASE_TOL && zero_ok && verdict == Verdict::DiscreteCandidate,
        format!(
            "phase residual max {worst:.3e} at q={} index={} over {count} primitive characters; \
             chi_4 zero {:?}, verdict {verdict}",
            worst_at.0, worst_at.1, z.first()
        ),
    )
}

fn main() {
    let mut failures = Vec::new();
    let s = Duration::from_secs;
    run("criterion 1 (zeta and Hardy Z)", s(10), c1_zeta_machinery, &mut failures);
    run("criterion 2 (boundary spectrum)", s(60), c2_boundary_spectrum, &mut failures);
    run("criterion 3 (harmonic exactness)", s(60), c3_harmonic, &mut failures);
    run("criterion 4 (SU(1,1) and charge)", s(10), c4_su11, &mut failures);
    run("criterion 5 (BCH order)", s(10), c5_bch_order, &mut failures);
    run("criterion 6 (Riemann model at a zero)", s(300), c6_riemann_at_zero, &mut failures);
    run("criterion 7 (boundary phase statistics)", s(600), c7_theta_histogram, &mut failures);
    run("criterion 8 (Perron oracle)", s(300), c8_perron, &mut failures);
    run("criterion 9 (mirror-path sieve)", s(60), c9_mirror_sieve, &mut failures);
    run("criterion 10 (Dirichlet extension)", s(120), c10_dirichlet, &mut failures);
    if !failures.is_empty() {
        println!("{} criteria failed: {}", failures.len(), failures.join(", "));
        std::process::exit(1);
    }
}
