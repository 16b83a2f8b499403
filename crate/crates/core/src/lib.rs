//! Transmission and reflection of carriers through a potential barrier whose
//! effective mass varies with position.
//!
//! The crate provides two independent solvers for the same problem:
//!
//! - [`analytic`]: the exact interior solution `m^{1/4}e^{±ik∫√m dz}` of the
//!   mass-gradient-corrected barrier, matched to the leads through a 4×4
//!   boundary solve, plus the equivalent closed forms in K± factors.
//! - [`oracle`]: a midpoint-sliced transfer-matrix solver that works for any
//!   potential, including the uncorrected barrier.
//!
//! [`profiles`] holds the mass catalog and the barrier description, [`units`]
//! the meV/Å/mₑ conventions, and [`cli`] the sweep and figure-data front end
//! used by the `pdm-tunnel` binary.
//!
//! ```
//! use pdm_tunnel::{analytic, oracle, BarrierSpec, ProfileKind, SliceConfig};
//!
//! let barrier = BarrierSpec::with_defaults(ProfileKind::quadratic()).unwrap();
//! let exact = analytic::boundary_solve(&barrier, 200.0).unwrap();
//! let sliced = oracle::transmit(&barrier, SliceConfig::new(4096), 200.0).unwrap();
//! assert!((exact.t - sliced.t).abs() < 1e-6);
//! assert!((exact.t + exact.r - 1.0).abs() < 1e-9);
//! ```

pub mod analytic;
pub mod cli;
pub mod error;
mod linalg;
pub mod oracle;
pub mod profiles;
pub mod quadrature;
pub mod reference;
pub mod scattering;
pub mod units;

pub use error::{Error, Result};
pub use oracle::SliceConfig;
pub use profiles::{BarrierSpec, MassProfile, PotentialMode, ProfileKind};
pub use scattering::{Engine, ScatteringResult};
pub use units::{wavenumber, MassRatio, Wavenumber, HBAR2_OVER_2ME};
