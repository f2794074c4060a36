//! Transfer matrices across the mirrors, amplitude propagation and the
//! semiclassical (Baker–Campbell–Hausdorff) approximation.

mod harmonic;
mod matrix;
mod norms;
mod propagate;

pub use harmonic::{
    decompose_t, recompose_t, harmonic_bands, harmonic_s, harmonic_theta_energy, kicked_step, HarmonicBands,
};
pub use matrix::{
    boundary_vector, gauge_reduce, l_matrix, l_matrix_general, n_matrices, t_matrix,
    AmplitudeVector, GaugeReduction, ReflectionParams, TransferMatrix,
};
pub use norms::{scalar_product, wavefunction_norm, NormEstimate, NormVerdict};
pub use propagate::{
    bch_amplitude, bch_ln_norm_sq, matched_bch_trace, propagate_exact, semiclassical_sums,
    AmplitudeTrace, BchAmplitude, GrowthScale, MirrorArray, SemiclassicalSum,
};
