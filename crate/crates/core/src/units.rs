//! Unit conventions, physical constants and plane-wave wavenumbers.
//!
//! Energies are in meV, lengths in Å and masses in units of the free-electron
//! mass mₑ. The single constant [`HBAR2_OVER_2ME`] = ħ²/(2mₑ) in meV·Å² carries
//! every dimensional conversion, so a carrier of mass `m` (in mₑ) with kinetic
//! energy `ΔE` has wavenumber `k = √(m·ΔE / HBAR2_OVER_2ME)`.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// ħ²/(2mₑ) in meV·Å², from CODATA 2018 ħ, mₑ and the exact eV.
pub const HBAR2_OVER_2ME: f64 = 3809.982_111_485_961;

/// Energies throughout the crate are plain `f64` values in meV.
pub type Energy = f64;

/// Effective mass in units of the free-electron mass. Always strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct MassRatio(f64);

impl MassRatio {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Self(value))
        } else {
            Err(Error::domain(format!("mass ratio must be positive and finite, got {value}")))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for MassRatio {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

impl fmt::Display for MassRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mₑ", self.0)
    }
}

/// Wavenumber in Å⁻¹ of a plane wave in a region of constant mass and potential.
///
/// Either real and non-negative (propagating) or purely imaginary with a
/// positive imaginary part (evanescent), so that `e^{ikz}` decays for growing z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Wavenumber {
    Propagating(f64),
    Evanescent(f64),
}

impl Wavenumber {
    pub fn as_complex(self) -> Complex64 {
        match self {
            Wavenumber::Propagating(k) => Complex64::new(k, 0.0),
            Wavenumber::Evanescent(kappa) => Complex64::new(0.0, kappa),
        }
    }

    /// k², negative on the evanescent branch.
    pub fn squared(self) -> f64 {
        match self {
            Wavenumber::Propagating(k) => k * k,
            Wavenumber::Evanescent(kappa) => -kappa * kappa,
        }
    }

    pub fn magnitude(self) -> f64 {
        match self {
            Wavenumber::Propagating(k) | Wavenumber::Evanescent(k) => k,
        }
    }

    pub fn is_zero(self) -> bool {
        self.magnitude() == 0.0
    }

    pub fn is_propagating(self) -> bool {
        matches!(self, Wavenumber::Propagating(_))
    }
}

/// Wavenumber of a carrier of mass `m` with kinetic energy `delta_e` (meV).
pub fn wavenumber(delta_e: Energy, m: MassRatio) -> Result<Wavenumber> {
    if !delta_e.is_finite() {
        return Err(Error::domain(format!("kinetic energy must be finite, got {delta_e}")));
    }
    let k = (m.get() * delta_e.abs() / HBAR2_OVER_2ME).sqrt();
    Ok(if delta_e >= 0.0 {
        Wavenumber::Propagating(k)
    } else {
        Wavenumber::Evanescent(k)
    })
}
