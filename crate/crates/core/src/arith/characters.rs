use num_complex::Complex64;
use num_integer::Integer;
use std::f64::consts::PI;

use super::sieve::{euler_totient, factorize};
use crate::error::{domain, Error, Result};

const NON_UNIT: u32 = u32::MAX;
const MAX_MODULUS: u64 = 50_000_000;

// One cyclic factor of (Z/p^k)^×: generator order and discrete-log table.
struct Cyclic {
    order: u64,
    logs: Vec<u32>,
}

struct Component {
    p: u64,
    k: u32,
    modulus: u64,
    gens: Vec<Cyclic>,
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r: u128 = 1 % m as u128;
    let mut b128 = (b % m) as u128;
    let m128 = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b128 % m128;
        }
        b128 = b128 * b128 % m128;
        e >>= 1;
    }
    b = r as u64;
    b
}

fn primitive_root_prime_power(p: u64, k: u32) -> u64 {
    let phi = p - 1;
    let fs = factorize(phi);
    let mut g = 2u64;
    loop {
        if g % p != 0 && fs.iter().all(|&(r, _)| pow_mod(g, phi / r, p) != 1) {
            break;
        }
        g += 1;
    }
    if k >= 2 && pow_mod(g, p - 1, p * p) == 1 {
        g += p;
    }
    g
}

fn cyclic_from(g: u64, order: u64, m: u64) -> Cyclic {
    let mut logs = vec![NON_UNIT; m as usize];
    let mut x = 1u64;
    for e in 0..order {
        logs[x as usize] = e as u32;
        x = ((x as u128 * g as u128) % m as u128) as u64;
    }
    Cyclic { order, logs }
}

fn component(p: u64, k: u32) -> Component {
    let modulus = p.pow(k);
    let mut gens = Vec::new();
    if p != 2 {
        let g = primitive_root_prime_power(p, k);
        gens.push(cyclic_from(g, modulus / p * (p - 1), modulus));
    } else if k == 2 {
        gens.push(cyclic_from(3, 2, 4));
    } else if k >= 3 {
        // n ≡ (-1)^a 5^b
        let m = modulus as usize;
        let ord5 = modulus / 4;
        let mut la = vec![NON_UNIT; m];
        let mut lb = vec![NON_UNIT; m];
        let mut x = 1u64;
        for b in 0..ord5 {
            la[x as usize] = 0;
            lb[x as usize] = b as u32;
            let neg = (modulus - x) as usize;
            la[neg] = 1;
            lb[neg] = b as u32;
            x = x * 5 % modulus;
        }
        gens.push(Cyclic { order: 2, logs: la });
        gens.push(Cyclic { order: ord5, logs: lb });
    }
    Component { p, k, modulus, gens }
}

/// A Dirichlet character modulo `q`, stored as exponents of a primitive
/// `order`-th root of unity.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletCharacter {
    modulus: u64,
    index: u64,
    order: u64,
    exps: Vec<u32>,
    values: Vec<Complex64>,
    primitive: bool,
    parity: u8,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// Order of the root of unity the values live in (a multiple of the
    /// character's own order).
    pub fn root_order(&self) -> u64 {
        self.order
    }

    pub fn value(&self, n: u64) -> Complex64 {
        self.values[(n % self.modulus) as usize]
    }

    pub fn value_signed(&self, n: i64) -> Complex64 {
        let q = self.modulus as i64;
        self.values[n.rem_euclid(q) as usize]
    }

    /// `χ(n) = e^{2πi e/order}`; `None` when `gcd(n, q) > 1`.
    pub fn exponent(&self, n: u64) -> Option<u32> {
        let e = self.exps[(n % self.modulus) as usize];
        (e != NON_UNIT).then_some(e)
    }

    pub fn is_principal(&self) -> bool {
        self.index == 0
    }

    pub fn is_real(&self) -> bool {
        self.exps
            .iter()
            .all(|&e| e == NON_UNIT || (2 * e as u64) % self.order == 0)
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    /// 0 for even characters, 1 for odd.
    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn conj(&self) -> DirichletCharacter {
        let mut c = self.clone();
        for e in c.exps.iter_mut() {
            if *e != NON_UNIT && *e != 0 {
                *e = (self.order - *e as u64) as u32;
            }
        }
        c.values = c.values.iter().map(|v| v.conj()).collect();
        c
    }
}

pub fn num_characters(q: u64) -> u64 {
    euler_totient(q)
}

fn components(q: u64) -> Vec<Component> {
    factorize(q).into_iter().map(|(p, k)| component(p, k)).collect()
}

fn build(q: u64, comps: &[Component], index: u64) -> DirichletCharacter {
    let orders: Vec<u64> = comps.iter().flat_map(|c| c.gens.iter().map(|g| g.order)).collect();
    let mut js = Vec::with_capacity(orders.len());
    let mut rest = index;
    for &o in &orders {
        js.push(rest % o);
        rest /= o;
    }
    let m = orders.iter().fold(1u64, |acc, &o| acc.lcm(&o));

    // primitivity, component by component
    let mut primitive = true;
    let mut slot = 0;
    for c in comps {
        let ok = match (c.p, c.k) {
            (2, 1) => false,
            (2, 2) => js[slot] == 1,
            (2, _) => js[slot + 1] % 2 == 1,
            (_, 1) => js[slot] != 0,
            (p, _) => js[slot] % p != 0,
        };
        primitive &= ok;
        slot += c.gens.len();
    }

    let mut exps = vec![NON_UNIT; q as usize];
    let mut values = vec![Complex64::new(0.0, 0.0); q as usize];
    let roots: Vec<Complex64> = (0..m)
        .map(|e| Complex64::from_polar(1.0, 2.0 * PI * e as f64 / m as f64))
        .collect();
    for n in 0..q {
        if n.gcd(&q) != 1 {
            continue;
        }
        let mut e: u64 = 0;
        let mut slot = 0;
        for c in comps {
            let r = (n % c.modulus) as usize;
            for g in &c.gens {
                e = (e + js[slot] * g.logs[r] as u64 % g.order * (m / g.order)) % m;
                slot += 1;
            }
        }
        exps[n as usize] = e as u32;
        values[n as usize] = roots[e as usize];
    }
    let parity = if q <= 2 {
        0
    } else if values[(q - 1) as usize].re > 0.0 {
        0
    } else {
        1
    };
    DirichletCharacter { modulus: q, index, order: m, exps, values, primitive, parity }
}

fn check_modulus(q: u64) -> Result<()> {
    if q == 0 {
        return domain("modulus must be positive");
    }
    if q > MAX_MODULUS {
        return Err(Error::Capacity { requested: q, limit: MAX_MODULUS });
    }
    Ok(())
}

/// All `φ(q)` characters modulo `q`; index 0 is the principal character.
pub fn characters_mod(q: u64) -> Result<Vec<DirichletCharacter>> {
    check_modulus(q)?;
    let n = euler_totient(q);
    if (n as u128) * (q as u128) > 50_000_000 {
        return Err(Error::Capacity { requested: n * q, limit: 50_000_000 });
    }
    let comps = components(q);
    Ok((0..n).map(|i| build(q, &comps, i)).collect())
}

/// The character with the given index, built on its own.
pub fn character_mod(q: u64, index: u64) -> Result<DirichletCharacter> {
    check_modulus(q)?;
    let n = euler_totient(q);
    if index >= n {
        return domain(format!("character index {index} out of range for modulus {q} ({n} characters)"));
    }
    Ok(build(q, &components(q), index))
}

/// `G(χ) = Σ_{a=1}^{q} χ(a) e^{2πi a/q}`.
pub fn gauss_sum(chi: &DirichletCharacter) -> Complex64 {
    let q = chi.modulus();
    (1..=q)
        .map(|a| chi.value(a) * Complex64::from_polar(1.0, 2.0 * PI * a as f64 / q as f64))
        .sum()
}
