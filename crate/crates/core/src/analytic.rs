//! Exact amplitudes for a graded-mass barrier with the corrected potential.
//!
//! Inside the barrier the wavefunction is `m^{1/4}·(C₁e^{−ikf} + C₂e^{ikf})`
//! with `f(z) = ∫₀^z √m dz'` and `k = √((E − V₀)/C)`. Matching it to plane
//! waves in the leads (ψ and ψ′/m continuous) gives a 4×4 linear system, which
//! [`boundary_solve`] solves directly. [`paper_transmission`] and
//! [`paper_reflection`] evaluate the equivalent closed forms built from the
//! K± factors; [`printed_transmission`] and [`printed_reflection`] keep the
//! closed forms in the orientation they were originally published in, for
//! comparison only.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::solve_equilibrated;
use crate::profiles::{BarrierSpec, MassDerivs, PotentialMode};
use crate::scattering::{Engine, ScatteringResult};
use crate::units::{wavenumber, Energy, MassRatio, Wavenumber};

/// Ordering exponents of the kinetic operator `m^α p m^β p m^γ` (symmetrised).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchingExponents {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl MatchingExponents {
    /// α = γ = 0, β = −1: ψ and ψ′/m continuous at every interface.
    pub const BEN_DANIEL_DUKE: Self = Self { alpha: 0.0, beta: -1.0, gamma: 0.0 };

    /// α + β + γ = −1 and, for abrupt junctions, α = γ.
    pub fn is_admissible(&self) -> bool {
        self.alpha + self.beta + self.gamma == -1.0 && self.alpha == self.gamma
    }
}

/// Condition number above which a boundary solve is rejected.
pub const MAX_CONDITION: f64 = 1e12;

/// Below this |k·f(d)| the exponential pair C₁, C₂ is not reported.
const DEGENERATE_PHASE: f64 = 1e-8;

/// Amplitudes of the piecewise solution with the incident amplitude fixed to 1.
///
/// `a3`/`a4` multiply `e^{−ikf}`/`e^{ikf}` inside the barrier; they are `None`
/// at E ≈ V₀ where both exponentials coincide. `interior` always holds the
/// equivalent regular pair (B₁, B₂) of `cos(kf)` and `sin(kf)/k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryCoefficients {
    pub a1: Complex64,
    pub a2: Complex64,
    pub a3: Option<Complex64>,
    pub a4: Option<Complex64>,
    pub a5: Complex64,
    pub interior: (Complex64, Complex64),
}

/// K±(a) = 4k′m(a)² ± 4k·m₀·m(a)·f′(a) − i·m₀·m′(a) at both barrier edges.
///
/// The `bar` variants flip the sign of the imaginary mass-gradient term only;
/// for real k they are the complex conjugates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KFactors {
    pub k_plus_0: Complex64,
    pub k_minus_0: Complex64,
    pub k_plus_d: Complex64,
    pub k_minus_d: Complex64,
    pub bar_plus_0: Complex64,
    pub bar_minus_0: Complex64,
    pub bar_plus_d: Complex64,
    pub bar_minus_d: Complex64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Endpoint {
    Left,
    Right,
}

/// Everything the closed forms and the boundary solve need at one energy.
struct Setup {
    /// interior wavenumber for unit mass, paired with f in √mₑ·Å
    k: Wavenumber,
    /// lead wavenumber
    k_out: f64,
    m_out: f64,
    width: f64,
    left: MassDerivs,
    right: MassDerivs,
    /// f(d) with f(0) = 0
    phase: f64,
}

fn require_corrected(barrier: &BarrierSpec) -> Result<()> {
    match barrier.mode() {
        PotentialMode::Corrected => Ok(()),
        PotentialMode::Bare => Err(Error::UnsupportedMode(
            "the exact interior solution exists only for the corrected potential".into(),
        )),
    }
}

fn setup(barrier: &BarrierSpec, e: Energy) -> Result<Setup> {
    require_corrected(barrier)?;
    if !(e.is_finite() && e > 0.0) {
        return Err(Error::domain(format!("incident energy must be > 0, got {e}")));
    }
    let profile = barrier.profile();
    let d = barrier.width();
    let unit = MassRatio::new(1.0)?;
    Ok(Setup {
        k: wavenumber(e - barrier.v0(), unit)?,
        k_out: wavenumber(e, barrier.m_out())?.magnitude(),
        m_out: barrier.m_out().get(),
        width: d,
        left: profile.derivs(0.0)?,
        right: profile.derivs(d)?,
        phase: profile.phase_integral(0.0, d)?,
    })
}

/// cos(kF) and sin(kF)/k for k² of either sign; both are real and regular at k = 0.
fn regular_pair(k: Wavenumber, f: f64) -> (f64, f64) {
    let a = k.magnitude();
    let x = a * f;
    let small = x.abs() < 1e-4;
    match k {
        Wavenumber::Propagating(_) => (x.cos(), if small { f * (1.0 - x * x / 6.0) } else { x.sin() / a }),
        Wavenumber::Evanescent(_) => (x.cosh(), if small { f * (1.0 + x * x / 6.0) } else { x.sinh() / a }),
    }
}

/// Evaluates `m^{1/4}(C₁e^{−ikf(z)} + C₂e^{ikf(z)})` inside the barrier.
pub fn interior_wave(barrier: &BarrierSpec, e: Energy, z: f64, c1: Complex64, c2: Complex64) -> Result<Complex64> {
    require_corrected(barrier)?;
    if !e.is_finite() {
        return Err(Error::domain(format!("energy must be finite, got {e}")));
    }
    let profile = barrier.profile();
    let m = profile.mass_at(z)?.get();
    let f = profile.phase_integral(0.0, z)?;
    let k = wavenumber(e - barrier.v0(), MassRatio::new(1.0)?)?.as_complex();
    let i = Complex64::i();
    Ok((c1 * (-i * k * f).exp() + c2 * (i * k * f).exp()) * m.powf(0.25))
}

fn k_pair(s: &Setup, at: &MassDerivs) -> (Complex64, Complex64, Complex64, Complex64) {
    let k = s.k.as_complex();
    let m = at.m;
    let base = Complex64::new(4.0 * s.k_out * m * m, 0.0);
    let kinetic = 4.0 * k * s.m_out * m * m.sqrt();
    let gradient = Complex64::new(0.0, s.m_out * at.dm);
    (base + kinetic - gradient, base - kinetic - gradient, base + kinetic + gradient, base - kinetic + gradient)
}

/// K factors at both barrier edges.
pub fn k_factors(barrier: &BarrierSpec, e: Energy) -> Result<KFactors> {
    let s = setup(barrier, e)?;
    Ok(k_factors_of(&s))
}

fn k_factors_of(s: &Setup) -> KFactors {
    let (k_plus_0, k_minus_0, bar_plus_0, bar_minus_0) = k_pair(s, &s.left);
    let (k_plus_d, k_minus_d, bar_plus_d, bar_minus_d) = k_pair(s, &s.right);
    KFactors { k_plus_0, k_minus_0, k_plus_d, k_minus_d, bar_plus_0, bar_minus_0, bar_plus_d, bar_minus_d }
}

/// (K₊, K₋) at one edge.
pub fn kpm(barrier: &BarrierSpec, e: Energy, endpoint: Endpoint) -> Result<(Complex64, Complex64)> {
    let k = k_factors(barrier, e)?;
    Ok(match endpoint {
        Endpoint::Left => (k.k_plus_0, k.k_minus_0),
        Endpoint::Right => (k.k_plus_d, k.k_minus_d),
    })
}

fn closed_form_setup(barrier: &BarrierSpec, e: Energy) -> Result<(Setup, KFactors)> {
    let s = setup(barrier, e)?;
    if s.k.is_zero() {
        return Err(Error::Singularity(format!("E = {e} meV equals V0; use boundary_solve")));
    }
    let kf = k_factors_of(&s);
    Ok((s, kf))
}

/// 64·k·k′·m₀·m(0)^{7/4}·m(d)^{5/4}·f′(d) and e^{ik(f(0) − f(d))}.
fn transmission_parts(s: &Setup, kf: &KFactors) -> (Complex64, Complex64, Complex64) {
    let k = s.k.as_complex();
    let norm = 64.0 * k * s.k_out * s.m_out * s.left.m.powf(1.75) * s.right.m.powf(1.25) * s.right.m.sqrt();
    let phase = (-Complex64::i() * k * s.phase).exp();
    let bracket = kf.k_plus_0 * kf.bar_plus_d * phase - kf.k_minus_0 * kf.bar_minus_d / phase;
    (norm, bracket, Complex64::new(0.0, s.k_out * s.width).exp())
}

/// Transmitted amplitude A₅/A₁ from the K± closed form.
///
/// Referenced to `e^{ik′z}` at global z, so it equals the boundary-solve `a5`.
pub fn paper_transmission(barrier: &BarrierSpec, e: Energy) -> Result<Complex64> {
    let (s, kf) = closed_form_setup(barrier, e)?;
    let (norm, bracket, lead_phase) = transmission_parts(&s, &kf);
    Ok(norm / (bracket * lead_phase))
}

/// Reflected amplitude A₂/A₁ from the K± closed form.
pub fn paper_reflection(barrier: &BarrierSpec, e: Energy) -> Result<Complex64> {
    let (s, kf) = closed_form_setup(barrier, e)?;
    let two_ik = 2.0 * Complex64::i() * s.k.as_complex();
    let at_0 = Complex64::new(1.0, 0.0); // e^{2ikf(0)}, f(0) = 0
    let at_d = (two_ik * s.phase).exp();
    let num = kf.bar_minus_0 * kf.bar_plus_d * at_0 - kf.bar_plus_0 * kf.bar_minus_d * at_d;
    let den = kf.k_plus_0 * kf.bar_plus_d * at_0 - kf.k_minus_0 * kf.bar_minus_d * at_d;
    Ok(num / den)
}

/// The transmission closed form exactly as originally printed. This evaluates
/// to A₁/A₅, the reciprocal of [`paper_transmission`].
pub fn printed_transmission(barrier: &BarrierSpec, e: Energy) -> Result<Complex64> {
    let (s, kf) = closed_form_setup(barrier, e)?;
    let (norm, bracket, lead_phase) = transmission_parts(&s, &kf);
    Ok(lead_phase * bracket / norm)
}

/// The reflection closed form exactly as originally printed, including the
/// K̄₊(d)K̄₋(d) product in its denominator.
pub fn printed_reflection(barrier: &BarrierSpec, e: Energy) -> Result<Complex64> {
    let (s, kf) = closed_form_setup(barrier, e)?;
    let two_ik = 2.0 * Complex64::i() * s.k.as_complex();
    let at_0 = Complex64::new(1.0, 0.0);
    let at_d = (two_ik * s.phase).exp();
    let num = kf.k_minus_0 * kf.bar_minus_d * at_d - kf.k_plus_0 * kf.bar_plus_d * at_0;
    let den = kf.bar_plus_d * kf.bar_minus_d * at_d - kf.bar_minus_0 * kf.bar_plus_d * at_0;
    Ok(num / den)
}

/// Both closed-form amplitudes packaged as a result.
pub fn paper_solve(barrier: &BarrierSpec, e: Energy) -> Result<ScatteringResult> {
    let t = paper_transmission(barrier, e)?;
    let r = paper_reflection(barrier, e)?;
    Ok(ScatteringResult::from_amplitudes(e, Engine::PaperFormula, Complex64::new(1.0, 0.0), r, t))
}

/// Solves the four matching conditions for (A₂, B₁, B₂, A₅) with A₁ = 1.
pub fn boundary_coefficients(barrier: &BarrierSpec, e: Energy) -> Result<BoundaryCoefficients> {
    let s = setup(barrier, e)?;
    let i = Complex64::i();
    let c = |x: f64| Complex64::new(x, 0.0);
    let lead = i * s.k_out / s.m_out;
    let lead_phase = (i * s.k_out * s.width).exp();
    let k2 = s.k.squared();

    let (ml, dml) = (s.left.m, s.left.dm);
    let (mr, dmr) = (s.right.m, s.right.dm);
    let (cos_d, sin_d) = regular_pair(s.k, s.phase);
    // (1/m)·d/dz of m^{1/4}(B₁c + B₂s) = g·(B₁c + B₂s) + m^{−1/4}(−k²s·B₁ + c·B₂)
    let grad = |m: f64, dm: f64| dm / (4.0 * m.powf(1.75));

    let a = [
        [c(-1.0), c(ml.powf(0.25)), c(0.0), c(0.0)],
        [lead, c(grad(ml, dml)), c(ml.powf(-0.25)), c(0.0)],
        [c(0.0), c(mr.powf(0.25) * cos_d), c(mr.powf(0.25) * sin_d), -lead_phase],
        [
            c(0.0),
            c(grad(mr, dmr) * cos_d - mr.powf(-0.25) * k2 * sin_d),
            c(grad(mr, dmr) * sin_d + mr.powf(-0.25) * cos_d),
            -lead * lead_phase,
        ],
    ];
    let b = [c(1.0), lead, c(0.0), c(0.0)];

    let (x, cond) = solve_equilibrated(a, b)?;
    if !(cond <= MAX_CONDITION) {
        return Err(Error::numerical(format!("boundary system ill-conditioned at E = {e} meV (cond ≈ {cond:.3e})")));
    }
    let [a2, b1, b2, a5] = x;

    let (a3, a4) = if s.k.magnitude() * s.phase < DEGENERATE_PHASE {
        (None, None)
    } else {
        let odd = b2 / (2.0 * i * s.k.as_complex());
        (Some(0.5 * b1 - odd), Some(0.5 * b1 + odd))
    };
    Ok(BoundaryCoefficients { a1: c(1.0), a2, a3, a4, a5, interior: (b1, b2) })
}

/// Transmission and reflection from the boundary-condition solve.
pub fn boundary_solve(barrier: &BarrierSpec, e: Energy) -> Result<ScatteringResult> {
    let co = boundary_coefficients(barrier, e)?;
    Ok(ScatteringResult::from_amplitudes(e, Engine::BoundarySolve, co.a1, co.a2, co.a5))
}
