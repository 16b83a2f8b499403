//! Textbook closed forms for piecewise-constant structures.
//!
//! These are independent of both solvers and serve as their reference in the
//! constant-mass limit.

use crate::error::{Error, Result};
use crate::units::HBAR2_OVER_2ME;

/// Transmission through a rectangular barrier of height `v0` and width `d`
/// holding a constant mass `m_in`, between leads of mass `m_out`, with ψ and
/// ψ′/m continuous at both walls.
pub fn square_barrier_transmission(e: f64, v0: f64, m_in: f64, m_out: f64, d: f64) -> Result<f64> {
    if !(e > 0.0 && m_in > 0.0 && m_out > 0.0 && d >= 0.0) {
        return Err(Error::domain("square barrier needs E > 0, positive masses and d >= 0"));
    }
    let lead = (m_out * e / HBAR2_OVER_2ME).sqrt() / m_out;
    let de = e - v0;
    let t = if de == 0.0 {
        // k → 0 limit of (1/η)·sin(kd)
        let x = lead * m_in * d;
        1.0 / (1.0 + 0.25 * x * x)
    } else {
        let k = (m_in * de.abs() / HBAR2_OVER_2ME).sqrt();
        let eta = (k / m_in) / lead;
        if de > 0.0 {
            let s = (k * d).sin();
            1.0 / (1.0 + 0.25 * (eta - 1.0 / eta).powi(2) * s * s)
        } else {
            let s = (k * d).sinh();
            1.0 / (1.0 + 0.25 * (eta + 1.0 / eta).powi(2) * s * s)
        }
    };
    Ok(t)
}

/// Reflection amplitude of a single abrupt junction between two propagating
/// media: r = (k₀/m₀ − k₁/m₁)/(k₀/m₀ + k₁/m₁).
pub fn step_reflection(k0: f64, m0: f64, k1: f64, m1: f64) -> f64 {
    let (u0, u1) = (k0 / m0, k1 / m1);
    (u0 - u1) / (u0 + u1)
}

/// Lower envelope of T for a mass-mismatched slab far above the barrier,
/// where the lead/slab velocity ratio tends to 1/√a with a = m_in/m_out.
pub fn slab_transmission_floor(mass_ratio: f64) -> f64 {
    (2.0 * mass_ratio.sqrt() / (1.0 + mass_ratio)).powi(2)
}
