//! Spectra of a massless Dirac fermion in Rindler space with an array of
//! partially reflecting mirrors, built around transfer matrices and the
//! number-theoretic special functions their couplings are drawn from.
//!
//! The layers, bottom up:
//!
//! * [`numkit`]: gamma, Hurwitz and Riemann zeta, Hardy's `Z`, Dirichlet
//!   `L`-functions, polylogarithms and Bessel `K` of imaginary order.
//! * [`arith`]: Möbius sieve and Dirichlet characters.
//! * [`mirrors`]: bounce paths and the multiplicative "prime sieve" they encode.
//! * [`boundary_spectrum`]: the single-boundary Rindler spectrum.
//! * [`transfer`]: SU(1,1) transfer matrices, propagation and the
//!   semiclassical (BCH) amplitude.
//! * [`models`]: concrete mirror arrays and spectral classification.

pub mod arith;
pub mod boundary_spectrum;
pub mod error;
pub mod mirrors;
pub mod models;
pub mod numkit;
pub mod transfer;

pub use error::{Error, Result};
pub use num_complex::Complex64;
