//! Numerical thresholds shared across the crate.

/// Unitarity, determinant and skew-Hermitian checks on constructed matrices.
pub const TAU_UNITARY: f64 = 1e-12;

/// Residuals of derived identities (brackets of projections, horizontality).
pub const TAU_RES: f64 = 1e-10;

/// Denominators of the closed-form certificate parameters below this are singular.
pub const TAU_DEN: f64 = 1e-9;

/// Minimum normalized Gram determinant (squared sine of the angle) for a plane.
pub const TAU_INDEPENDENT: f64 = 1e-8;

/// Vectors shorter than this are dropped during orthonormalization.
pub const TAU_RANK: f64 = 1e-9;
