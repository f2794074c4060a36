//! Concrete mirror arrays and their spectral analysis.

mod classify;
pub mod fit;
mod limits;
mod perron;
mod phases;
mod kinds;
mod zeros;

pub use classify::{classify_energy, AmplitudeRoute, SpectrumReport, Verdict, NUMERICAL_FLOOR};
pub use limits::{r_infinity, r_k_closed_form};
pub use perron::{perron_partial_sum, perron_partial_sums_at, perron_residue_expansion};
pub use phases::{theta_star_dirichlet, theta_star_riemann, theta_star_riemann_unwrapped, wrap_phase, z_prime_sign};
pub use kinds::{ModelKind, ModelSpec};
pub use zeros::{l_zeros_between, riemann_zeros, riemann_zeros_up_to, ZERO_TABLE_MAX};
