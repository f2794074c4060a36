//! Multiplicative arithmetic: Möbius function and Dirichlet characters.

mod characters;
mod sieve;

pub use characters::{character_mod, characters_mod, gauss_sum, num_characters, DirichletCharacter};
pub use sieve::{
    euler_totient, factorize, has_prime_factor_at_least, moebius_cached, moebius_sieve,
    primes_up_to, MoebiusTable, SIEVE_LIMIT,
};
