//! Special functions on complex arguments.

mod bessel;
mod dirichlet;
mod gamma;
mod polylog;
mod quad;
pub mod roots;
mod zeta;

pub use bessel::{bessel_k_complex_order, BESSEL_MAX_IMAG_ORDER};
pub use dirichlet::{dirichlet_l, hardy_z_chi, l_phase_split, LFunctionPair};
pub use gamma::{gamma, log_gamma};
pub use polylog::polylog;
pub use quad::tanh_sinh;
pub use zeta::{
    hardy_z, hardy_z_derivative, hurwitz_zeta, hurwitz_zeta_regular, riemann_siegel,
    riemann_siegel_theta, zeta, zeta_derivative, zeta_derivative_at_trivial_zero, RiemannSiegelPair,
    zeta_second_derivative,
};

pub use num_complex::Complex64 as ComplexScalar;
