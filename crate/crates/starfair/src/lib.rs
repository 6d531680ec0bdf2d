//! Robust joint beamforming for STAR-RIS aided downlinks.
//!
//! A base station with `M` antennas serves `K` single-antenna users through a
//! simultaneously-transmitting-and-reflecting surface with `N` elements. The
//! library maximizes a weighted sum of the normalized sum rate and Jain's
//! fairness index under bounded channel-estimation error, by alternating
//! semidefinite-relaxed subproblems for the transmit covariances and the
//! surface coefficients, with S-Procedure robustness and successive convex
//! approximation of the bilinear slack couplings.
//!
//! Module map:
//! - [`linalg`]: complex dense matrices, Kronecker/vec, Hermitian eigensolver
//! - [`channel`]: scenario geometry, path loss, Rician fading, cascaded
//!   channels, bounded perturbations
//! - [`metrics`]: rates, Jain index, bi-criterion objective, worst-case
//!   certification
//! - [`conic`]: solver-agnostic conic programs and the interior-point backend
//! - [`sca`]: convex/concave bounds for bilinear products
//! - [`builders`]: translation of the robust design into conic programs
//! - [`ao`]: the alternating optimization driver, rank-1 recovery, Gaussian
//!   randomization, baselines
//! - [`experiment`]: seeded Monte-Carlo campaigns, sweeps, CSV emission
//! - [`oracle`]: independent brute-force and closed-form references
//!
//! The numeric core is generic over the scalar type via [`scalar::Float`];
//! the aliases below fix `f64` for the full pipeline.

pub mod ao;
pub mod builders;
pub mod channel;
pub mod conic;
pub mod experiment;
pub mod linalg;
pub mod metrics;
pub mod oracle;
pub mod sca;
pub mod scalar;

mod error;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Scalar type used by the solver pipeline.
pub type Real = f64;
/// Complex scalar over [`Real`].
pub type C64 = num_complex::Complex<Real>;
/// Dense complex matrix over [`Real`].
pub type CMat = linalg::ComplexMatrix<Real>;
