//! Discrete fractional calculus and alpha-resolvent sequences.
//!
//! The crate solves `Δ^α x(n) = T x(n) + y(n)` for a dense complex matrix `T`
//! and `0 < α ≤ 1`, where `Δ^α` is the Riemann–Liouville fractional
//! difference. Around the solver sit the tools needed to study the long-time
//! behaviour of its resolvent sequence `S_α(n)`: three independent
//! constructions of `S_α`, Z-transforms, a unit-circle spectral condition
//! scan, growth-order fits, Katznelson–Tzafriri decay diagnostics and a
//! blow-up order scanner for truncated resolvents of sequences.
//!
//! Indexing starts at `n = 0` everywhere.

pub mod error;
pub mod kernel;
pub mod matrix;
pub mod resolvent;
pub mod sequence;
pub mod solver;
pub mod spectral;

pub use error::{Error, Result};
pub use kernel::{
    delta_alpha, forward_difference, kernel_k, log_gamma, nabla_inv, FractionalOrder,
    KernelSequence,
};
pub use matrix::{mat_power, CVector, ComplexMatrix, LuFactorization};
pub use num_complex::Complex64;
pub use resolvent::{
    choose_contour, s_alpha_contour, s_alpha_gamma_sum, s_alpha_recurrence, ContourQuadrature,
    ContourSpec,
};
pub use sequence::{MatrixSequence, SeqElement, VectorSequence};
pub use solver::{convolve, residual_frac, solve_frac, solve_linear};
pub use spectral::{
    ablv_check, g_symbol, growth_order_fit, kt_diagnostic, resolvent_scan, sigma_condition_check,
    weighted_sup_norm, z_transform_truncated, AblvResult, DecayDiagnostic, GrowthClass,
    GrowthReport, SingularityEstimate, SpectralScanReport, ZTransform,
};
