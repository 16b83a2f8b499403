use std::fmt;

use num_complex::Complex64;

use crate::units::Energy;

/// Which solver produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Engine {
    /// 4×4 boundary-condition solve on the exact interior solution.
    BoundarySolve,
    /// Transfer-matrix composition over midpoint slices.
    Oracle,
    /// Closed-form amplitudes built from the K± factors.
    PaperFormula,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::BoundarySolve => "boundary",
            Engine::Oracle => "oracle",
            Engine::PaperFormula => "paper",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Transmission and reflection at one energy.
///
/// Amplitudes are normalised to a unit incident wave. Their phase reference
/// depends on the engine; T and R do not.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringResult {
    /// meV
    pub energy: Energy,
    pub t_amp: Complex64,
    pub r_amp: Complex64,
    pub t: f64,
    pub r: f64,
    /// |T + R − 1|
    pub residual: f64,
    pub engine: Engine,
}

impl ScatteringResult {
    /// Builds a result from the incident, reflected and transmitted amplitudes.
    /// Both leads share one mass, so no flux-ratio factor enters T.
    pub fn from_amplitudes(energy: Energy, engine: Engine, a1: Complex64, a2: Complex64, a5: Complex64) -> Self {
        let t_amp = a5 / a1;
        let r_amp = a2 / a1;
        let (t, r) = (t_amp.norm_sqr(), r_amp.norm_sqr());
        Self { energy, t_amp, r_amp, t, r, residual: (t + r - 1.0).abs(), engine }
    }

    /// (T, R)
    pub fn coefficients(&self) -> (f64, f64) {
        (self.t, self.r)
    }
}
