//! Numerical thresholds shared by every module.
//!
//! | Constant | Used for |
//! |----------|----------|
//! | [`EXACT_F64`] | norms, Gram matrices, density entries |
//! | [`CONCURRENCE`] | agreement between concurrence paths |
//! | [`PSD_FLOOR`] | smallest eigenvalue still accepted as zero |
//! | [`EDGE_THRESHOLD`] | numeric concurrence below which no edge is drawn |

/// Analytic quantities evaluated in f64 (norms, traces, density entries).
pub const EXACT_F64: f64 = 1e-12;

/// Agreement between closed-form, Jacobi and polynomial concurrence paths.
pub const CONCURRENCE: f64 = 1e-9;

/// Eigenvalues in `(-PSD_FLOOR, 0)` are clamped to zero; anything lower is an error.
pub const PSD_FLOOR: f64 = 1e-10;

/// Eigenvalues of `rho * rho_tilde` below this fraction of the largest one are
/// below working precision and are set to zero before taking square roots.
pub const RELATIVE_EIGEN_FLOOR: f64 = 1e-14;

/// A numeric edge exists iff its concurrence exceeds this value.
pub const EDGE_THRESHOLD: f64 = 1e-9;

/// Largest accepted residual |p(r)| of a characteristic-polynomial root.
pub const ROOT_RESIDUAL: f64 = 1e-8;

/// Default limit on N for paths that materialise the full 2^N vector.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 14;

/// Hard upper bound for any configured cap (2^20 complex entries = 16 MiB).
pub const MAX_BRUTE_FORCE_CAP: usize = 20;
