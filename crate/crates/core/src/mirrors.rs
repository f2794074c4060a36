//! Light rays bouncing between uniformly accelerated mirrors.
//!
//! With mirrors at `ℓ_n = √n` (in units of `ℓ₁`), a ray leaving the observer
//! at mirror 1, reflecting off mirrors `n₁ > n₂ < n₃ > … < n_{2k-1}` and
//! returning is seen after proper time `log(n₁ n₃ ⋯ / n₂ n₄ ⋯)`. A single
//! echo at `log n` exists iff `n` is prime.

use num_integer::Integer;

use crate::arith::has_prime_factor_at_least;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MirrorLabeling {
    /// `ℓ_n = ℓ₁ √n`, boundary mirror `n = 1`.
    SquareRoot,
    /// `ℓ_n = ℓ₀ e^{n/2}`, boundary mirror `n = 0`.
    Harmonic,
}

impl MirrorLabeling {
    fn boundary(self) -> u64 {
        match self {
            MirrorLabeling::SquareRoot => 1,
            MirrorLabeling::Harmonic => 0,
        }
    }
}

/// Interior bounces `n₁, n₂, …, n_{2k-1}` of a ray that starts and ends at
/// the boundary mirror.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MirrorPath {
    bounces: Vec<u64>,
    labeling: MirrorLabeling,
}

fn labeling_rank(l: MirrorLabeling) -> u8 {
    match l {
        MirrorLabeling::SquareRoot => 0,
        MirrorLabeling::Harmonic => 1,
    }
}

impl PartialOrd for MirrorLabeling {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MirrorLabeling {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        labeling_rank(*self).cmp(&labeling_rank(*other))
    }
}

fn validate(bounces: &[u64], labeling: MirrorLabeling) -> Result<()> {
    let b = labeling.boundary();
    if bounces.len() % 2 == 0 {
        return Err(Error::InvalidPath(format!(
            "need an odd number of bounces, got {}",
            bounces.len()
        )));
    }
    if bounces.len() == 1 && labeling == MirrorLabeling::Harmonic {
        return Ok(());
    }
    for (i, &n) in bounces.iter().enumerate() {
        let odd_slot = i % 2 == 0;
        if odd_slot && n <= b {
            return Err(Error::InvalidPath(format!("bounce {} = {n} must exceed {b}", i + 1)));
        }
        if !odd_slot && n < b {
            return Err(Error::InvalidPath(format!("bounce {} = {n} below boundary {b}", i + 1)));
        }
        if i > 0 {
            let prev = bounces[i - 1];
            let ok = if odd_slot { n > prev } else { n < prev };
            if !ok {
                return Err(Error::InvalidPath(format!(
                    "bounces {prev}, {n} break the alternating order"
                )));
            }
        }
    }
    Ok(())
}

impl MirrorPath {
    /// A path on the `√n` array.
    pub fn new(bounces: Vec<u64>) -> Result<Self> {
        validate(&bounces, MirrorLabeling::SquareRoot)?;
        Ok(MirrorPath { bounces, labeling: MirrorLabeling::SquareRoot })
    }

    /// A path on the exponential array; a lone bounce at 0 is allowed.
    pub fn harmonic(bounces: Vec<u64>) -> Result<Self> {
        validate(&bounces, MirrorLabeling::Harmonic)?;
        Ok(MirrorPath { bounces, labeling: MirrorLabeling::Harmonic })
    }

    pub fn bounces(&self) -> &[u64] {
        &self.bounces
    }

    pub fn depth(&self) -> usize {
        (self.bounces.len() + 1) / 2
    }

    pub fn labeling(&self) -> MirrorLabeling {
        self.labeling
    }

    /// Join two paths through a touch of the boundary mirror.
    pub fn concat(&self, other: &MirrorPath) -> Result<MirrorPath> {
        if self.labeling != other.labeling {
            return Err(Error::InvalidPath("cannot join paths on different arrays".into()));
        }
        let mut b = self.bounces.clone();
        b.push(self.labeling.boundary());
        b.extend_from_slice(&other.bounces);
        validate(&b, self.labeling)?;
        Ok(MirrorPath { bounces: b, labeling: self.labeling })
    }
}

impl std::fmt::Display for MirrorPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.bounces.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Observer proper time between emission and reception.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProperTime {
    /// `τ = log(numerator / denominator)`, reduced.
    Log { numerator: u128, denominator: u128 },
    /// `τ` as an integer number of clock units.
    Linear(i64),
}

impl ProperTime {
    pub fn tau(&self) -> f64 {
        match *self {
            ProperTime::Log { numerator, denominator } => {
                (numerator as f64).ln() - (denominator as f64).ln()
            }
            ProperTime::Linear(t) => t as f64,
        }
    }

    /// The integer `n` with `τ = log n`, if there is one.
    pub fn as_log_of_integer(&self) -> Option<u128> {
        match *self {
            ProperTime::Log { numerator, denominator: 1 } => Some(numerator),
            _ => None,
        }
    }
}

impl std::fmt::Display for ProperTime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            ProperTime::Log { numerator, denominator: 1 } => write!(f, "{numerator}"),
            ProperTime::Log { numerator, denominator } => write!(f, "{numerator}/{denominator}"),
            ProperTime::Linear(t) => write!(f, "{t}"),
        }
    }
}

pub fn proper_time(path: &MirrorPath) -> Result<ProperTime> {
    if path.labeling != MirrorLabeling::SquareRoot {
        return Err(Error::InvalidPath("proper_time needs the square-root array".into()));
    }
    validate(&path.bounces, path.labeling)?;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (i, &n) in path.bounces.iter().enumerate() {
        if i % 2 == 0 {
            num = num
                .checked_mul(n as u128)
                .ok_or_else(|| Error::InvalidPath("proper time numerator overflows".into()))?;
        } else {
            den = den
                .checked_mul(n as u128)
                .ok_or_else(|| Error::InvalidPath("proper time denominator overflows".into()))?;
        }
        let g = num.gcd(&den);
        num /= g;
        den /= g;
    }
    Ok(ProperTime::Log { numerator: num, denominator: den })
}

pub fn harmonic_proper_time(path: &MirrorPath) -> Result<ProperTime> {
    if path.labeling != MirrorLabeling::Harmonic {
        return Err(Error::InvalidPath("harmonic_proper_time needs the exponential array".into()));
    }
    validate(&path.bounces, path.labeling)?;
    let mut tau: i64 = 0;
    for (i, &n) in path.bounces.iter().enumerate() {
        if i % 2 == 0 {
            tau += n as i64;
        } else {
            tau -= n as i64;
        }
    }
    Ok(ProperTime::Linear(tau))
}

struct Search {
    max_mirror: u64,
    limit: usize,
    found: Vec<Vec<u64>>,
    prefix: Vec<u64>,
}

impl Search {
    fn full(&self) -> bool {
        self.found.len() >= self.limit
    }

    // Choose the remaining `odd_left` odd bounces (with `odd_left - 1` evens
    // between them) so the rest of the product equals a/b. The next odd
    // bounce must be at least `lo`.
    fn run(&mut self, a: u128, b: u128, lo: u64, odd_left: usize) {
        if self.full() {
            return;
        }
        if odd_left == 1 {
            if b == 1 && a >= lo as u128 && a <= self.max_mirror as u128 {
                let mut p = self.prefix.clone();
                p.push(a as u64);
                self.found.push(p);
            }
            return;
        }
        // every remaining odd bounce is < a/b, and one of them carries the
        // largest prime factor of a
        if has_prime_factor_at_least(a, a.div_ceil(b)) {
            return;
        }
        let top = ((a - 1) / b).min(self.max_mirror as u128) as u64;
        for o in lo.max(2)..=top {
            for e in 1..o {
                let na = a * e as u128;
                let nb = b * o as u128;
                let g = na.gcd(&nb);
                self.prefix.push(o);
                self.prefix.push(e);
                self.run(na / g, nb / g, e + 1, odd_left - 1);
                self.prefix.pop();
                self.prefix.pop();
                if self.full() {
                    return;
                }
            }
        }
    }
}

fn search(n: u64, max_depth: u32, max_mirror: u64, limit: usize) -> Vec<MirrorPath> {
    let mut s = Search { max_mirror, limit, found: Vec::new(), prefix: Vec::new() };
    for depth in 1..=max_depth as usize {
        s.run(n as u128, 1, 2, depth);
        if s.full() {
            break;
        }
    }
    let mut paths: Vec<MirrorPath> = s
        .found
        .into_iter()
        .map(|bounces| MirrorPath { bounces, labeling: MirrorLabeling::SquareRoot })
        .collect();
    paths.sort();
    paths
}

/// All paths of depth at most `max_depth` on mirrors `≤ max_mirror` that
/// return after `τ = log n`, in lexicographic order of bounce sequence.
pub fn enumerate_paths(n: u64, max_depth: u32, max_mirror: u64) -> Result<Vec<MirrorPath>> {
    if n < 2 {
        return Err(Error::InvalidPath(format!("target n = {n} must be at least 2")));
    }
    if max_mirror < n {
        return Err(Error::InvalidPath(format!("max_mirror {max_mirror} below n = {n}")));
    }
    Ok(search(n, max_depth, max_mirror, usize::MAX))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegerClass {
    Prime,
    Composite,
}

impl std::fmt::Display for IntegerClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            IntegerClass::Prime => "prime",
            IntegerClass::Composite => "composite",
        })
    }
}

/// Prime iff exactly one echo arrives at `log n` (mirrors up to `4n`).
pub fn classify_integer(n: u64, max_depth: u32) -> Result<IntegerClass> {
    if n < 2 {
        return Err(Error::InvalidPath(format!("target n = {n} must be at least 2")));
    }
    if max_depth < 2 {
        return Err(Error::InvalidPath("classification needs max_depth >= 2".into()));
    }
    let paths = search(n, max_depth, 4 * n, 2);
    Ok(if paths.len() == 1 { IntegerClass::Prime } else { IntegerClass::Composite })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(b: &[u64]) -> MirrorPath {
        MirrorPath::new(b.to_vec()).unwrap()
    }

    // every alternating tuple with entries ≤ m, checked by cross-multiplying
    fn brute(n: u64, depth: usize, m: u64) -> Vec<Vec<u64>> {
        fn rec(cur: &mut Vec<u64>, len: usize, m: u64, n: u64, out: &mut Vec<Vec<u64>>) {
            if cur.len() == len {
                let num: u128 = cur.iter().step_by(2).map(|&x| x as u128).product();
                let den: u128 = cur.iter().skip(1).step_by(2).map(|&x| x as u128).product();
                if num == den * n as u128 {
                    out.push(cur.clone());
                }
                return;
            }
            let i = cur.len();
            let range: Vec<u64> = if i % 2 == 0 {
                let lo = if i == 0 { 2 } else { cur[i - 1] + 1 };
                (lo..=m).collect()
            } else {
                (1..cur[i - 1]).collect()
            };
            for x in range {
                cur.push(x);
                rec(cur, len, m, n, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        for d in 1..=depth {
            rec(&mut Vec::new(), 2 * d - 1, m, n, &mut out);
        }
        out.sort();
        out
    }

    #[test]
    fn proper_time_examples() {
        assert_eq!(proper_time(&p(&[5])).unwrap().as_log_of_integer(), Some(5));
        assert_eq!(proper_time(&p(&[2, 1, 2])).unwrap().as_log_of_integer(), Some(4));
        assert_eq!(proper_time(&p(&[3, 2, 4])).unwrap().as_log_of_integer(), Some(6));
        let t = proper_time(&p(&[5, 2, 3])).unwrap();
        assert_eq!(t, ProperTime::Log { numerator: 15, denominator: 2 });
        assert!((t.tau() - 7.5f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn invalid_paths() {
        assert!(MirrorPath::new(vec![1]).is_err());
        assert!(MirrorPath::new(vec![3, 3, 4]).is_err());
        assert!(MirrorPath::new(vec![3, 2]).is_err());
        assert!(MirrorPath::new(vec![3, 0, 4]).is_err());
        assert!(MirrorPath::new(vec![4, 2, 2]).is_err());
        assert!(MirrorPath::new(vec![4, 2, 3]).is_ok());
    }

    #[test]
    fn harmonic_times() {
        let t = |b: &[u64]| harmonic_proper_time(&MirrorPath::harmonic(b.to_vec()).unwrap()).unwrap();
        assert_eq!(t(&[5]), ProperTime::Linear(5));
        assert_eq!(t(&[3, 0, 4]), ProperTime::Linear(7));
        assert_eq!(t(&[0]), ProperTime::Linear(0));
        assert!(proper_time(&MirrorPath::harmonic(vec![3]).unwrap()).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let v = enumerate_paths(7, 3, 50).unwrap();
        assert_eq!(v, vec![p(&[7])]);
        let v = enumerate_paths(4, 2, 10).unwrap();
        assert!(v.contains(&p(&[4])) && v.contains(&p(&[2, 1, 2])));
        let v = enumerate_paths(6, 2, 10).unwrap();
        for want in [p(&[6]), p(&[2, 1, 3]), p(&[3, 1, 2])] {
            assert!(v.contains(&want));
        }
    }

    #[test]
    fn matches_brute_force() {
        for n in 2..=24u64 {
            for depth in 1..=3usize {
                let m = if depth == 3 { 14.min(2 * n) } else { 3 * n };
                let got: Vec<Vec<u64>> = enumerate_paths(n, depth as u32, m.max(n))
                    .unwrap()
                    .into_iter()
                    .map(|q| q.bounces().to_vec())
                    .collect();
                assert_eq!(got, brute(n, depth, m.max(n)), "n={n} depth={depth}");
            }
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_integer(13, 2).unwrap(), IntegerClass::Prime);
        assert_eq!(classify_integer(9, 2).unwrap(), IntegerClass::Composite);
        assert_eq!(classify_integer(2, 2).unwrap(), IntegerClass::Prime);
        let v = enumerate_paths(9, 2, 36).unwrap();
        assert!(v.contains(&p(&[3, 1, 3])));
    }

    #[test]
    fn concatenation_adds_times() {
        let a = p(&[3, 2, 5]);
        let b = p(&[7]);
        let c = a.concat(&b).unwrap();
        let sum = proper_time(&a).unwrap().tau() + proper_time(&b).unwrap().tau();
        assert!((proper_time(&c).unwrap().tau() - sum).abs() < 1e-12);
    }
}
