//! Transfer-matrix oracle.
//!
//! The barrier is cut into equal slices of constant mass and potential,
//! sampled at slice midpoints, and plane-wave coefficients are carried across
//! every interface and slice with 2×2 matrices. The composed matrix maps
//! right-lead coefficients to left-lead coefficients, so `t = 1/M₁₁` and
//! `r = M₂₁/M₁₁`. Midpoint sampling makes the error O(1/n²) for smooth
//! profiles and exact for piecewise-constant ones.
//!
//! Inside the stack the product of interface and propagation matrices,
//! `D(j−1→j)·P(j)·D(j→j+1)`, telescopes into the real transfer of the state
//! (ψ, ψ′/m) across each slice. [`transmit_layers`] composes in that basis,
//! which stays regular when a slice sits exactly at k = 0, and converts to
//! plane-wave coefficients only in the leads.

use std::ops::Mul;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::profiles::BarrierSpec;
use crate::scattering::{Engine, ScatteringResult};
use crate::units::{wavenumber, Energy, MassRatio, Wavenumber};

/// Largest |Im k|·thickness a single layer may carry before the growing
/// exponential is considered an overflow risk.
pub const MAX_EVANESCENT_PHASE: f64 = 50.0;

/// Default slice count for sweeps and cross-checks.
pub const DEFAULT_SLICES: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Layer {
    /// Å
    pub thickness: f64,
    pub m: MassRatio,
    /// meV
    pub v: Energy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Sampling {
    #[default]
    Midpoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SliceConfig {
    pub n_slices: usize,
    pub sampling: Sampling,
}

impl SliceConfig {
    pub fn new(n_slices: usize) -> Self {
        Self { n_slices, sampling: Sampling::Midpoint }
    }
}

impl Default for SliceConfig {
    fn default() -> Self {
        Self::new(DEFAULT_SLICES)
    }
}

/// 2×2 complex transfer matrix acting on (right-moving, left-moving) amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPort(pub [[Complex64; 2]; 2]);

impl TwoPort {
    pub fn identity() -> Self {
        let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::default());
        TwoPort([[one, zero], [zero, one]])
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    /// (t, r) for a unit wave incident from the left, equal leads.
    pub fn amplitudes(&self) -> Result<(Complex64, Complex64)> {
        let m11 = self.0[0][0];
        if !(m11.norm() >= 1e-300) || !m11.is_finite() {
            return Err(Error::numerical(format!("degenerate transfer matrix (M11 = {m11})")));
        }
        Ok((1.0 / m11, self.0[1][0] / m11))
    }
}

impl Mul for TwoPort {
    type Output = TwoPort;

    fn mul(self, rhs: TwoPort) -> TwoPort {
        let (a, b) = (&self.0, &rhs.0);
        TwoPort(std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j])))
    }
}

/// Matching matrix for an abrupt junction at a point: left coefficients as a
/// function of right coefficients, with ψ and ψ′/m continuous.
pub fn interface_transfer(m_l: MassRatio, m_r: MassRatio, k_l: Wavenumber, k_r: Wavenumber) -> Result<TwoPort> {
    if k_l.is_zero() {
        return Err(Error::Singularity("zero wavenumber on the left of an interface".into()));
    }
    let eta = (k_r.as_complex() / m_r.get()) / (k_l.as_complex() / m_l.get());
    let plus = 0.5 * (1.0 + eta);
    let minus = 0.5 * (1.0 - eta);
    Ok(TwoPort([[plus, minus], [minus, plus]]))
}

/// Phase evolution across a layer: diag(e^{−ikt}, e^{ikt}).
pub fn layer_propagation(k: Wavenumber, thickness: f64) -> Result<TwoPort> {
    if !(thickness >= 0.0) {
        return Err(Error::domain(format!("layer thickness must be >= 0, got {thickness}")));
    }
    if let Wavenumber::Evanescent(kappa) = k {
        if kappa * thickness > MAX_EVANESCENT_PHASE {
            return Err(Error::numerical(format!(
                "evanescent layer too thick for transfer matrices (κt = {:.1} > {MAX_EVANESCENT_PHASE})",
                kappa * thickness
            )));
        }
    }
    let phase = Complex64::i() * k.as_complex() * thickness;
    let zero = Complex64::default();
    Ok(TwoPort([[(-phase).exp(), zero], [zero, phase.exp()]]))
}

/// Equal-width slices over [0, d] with mass and potential taken at each midpoint.
pub fn slice(barrier: &BarrierSpec, cfg: SliceConfig) -> Result<Vec<Layer>> {
    let n = cfg.n_slices;
    if n == 0 {
        return Err(Error::domain("need at least one slice"));
    }
    let d = barrier.width();
    let edge = |i: usize| if i == n { d } else { d * i as f64 / n as f64 };
    let profile = barrier.profile();
    (0..n)
        .map(|i| {
            let (lo, hi) = (edge(i), edge(i + 1));
            let Sampling::Midpoint = cfg.sampling;
            let z = 0.5 * (lo + hi);
            Ok(Layer { thickness: hi - lo, m: profile.mass_at(z)?, v: barrier.effective_potential(z)? })
        })
        .collect()
}

/// Transfer of (ψ, ψ′/m) from the right edge of a layer back to its left edge.
/// Real for either branch of k and regular at k = 0.
fn state_transfer(k: Wavenumber, m: f64, thickness: f64) -> Result<[[f64; 2]; 2]> {
    let x = k.magnitude() * thickness;
    if !k.is_propagating() && x > MAX_EVANESCENT_PHASE {
        return Err(Error::numerical(format!(
            "evanescent layer too thick for transfer matrices (κt = {x:.1} > {MAX_EVANESCENT_PHASE})"
        )));
    }
    let small = x.abs() < 1e-4;
    // c = cos(kt), s = sin(kt)/k
    let (c, s) = match k {
        Wavenumber::Propagating(a) => (x.cos(), if small { thickness * (1.0 - x * x / 6.0) } else { x.sin() / a }),
        Wavenumber::Evanescent(a) => (x.cosh(), if small { thickness * (1.0 + x * x / 6.0) } else { x.sinh() / a }),
    };
    Ok([[c, -m * s], [k.squared() * s / m, c]])
}

fn mul_real(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]))
}

/// Scattering through an arbitrary layer stack between two leads of mass `m_out`
/// at zero potential.
pub fn transmit_layers(layers: &[Layer], m_out: MassRatio, e: Energy) -> Result<ScatteringResult> {
    if !(e.is_finite() && e > 0.0) {
        return Err(Error::domain(format!("incident energy must be > 0, got {e}")));
    }
    let k_lead = wavenumber(e, m_out)?.magnitude();

    let mut state = [[1.0, 0.0], [0.0, 1.0]];
    for layer in layers {
        let k = wavenumber(e - layer.v, layer.m)?;
        state = mul_real(&state, &state_transfer(k, layer.m.get(), layer.thickness)?);
    }

    // lead coefficients -> state: S = [[1, 1], [iu, −iu]] with u = k′/m₀
    let u = Complex64::new(0.0, k_lead / m_out.get());
    let half = Complex64::new(0.5, 0.0);
    let s_inv = [[half, half / u], [half, -half / u]];
    let s = [[Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)], [u, -u]];
    let mid: [[Complex64; 2]; 2] = std::array::from_fn(|i| std::array::from_fn(|j| Complex64::new(state[i][j], 0.0)));
    let total = TwoPort(s_inv) * TwoPort(mid) * TwoPort(s);

    let (t, r) = total.amplitudes()?;
    Ok(ScatteringResult::from_amplitudes(e, Engine::Oracle, Complex64::new(1.0, 0.0), r, t))
}

/// Oracle transmission through a sliced barrier. Works in either potential mode.
pub fn transmit(barrier: &BarrierSpec, cfg: SliceConfig, e: Energy) -> Result<ScatteringResult> {
    transmit_layers(&slice(barrier, cfg)?, barrier.m_out(), e)
}

/// Convergence order inferred from the last three refinements.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ObservedOrder {
    /// T does not change with refinement beyond round-off.
    Exact,
    Estimated(f64),
    /// Too few samples, or a difference vanished while another did not.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    /// (n_slices, T)
    pub samples: Vec<(usize, f64)>,
    /// Second-order Richardson extrapolation from the two finest samples.
    pub extrapolated: f64,
    pub observed_order: ObservedOrder,
}

/// T(n) for each slice count in `n_list` with Richardson extrapolation and
/// an observed-order estimate.
pub fn convergence(barrier: &BarrierSpec, e: Energy, n_list: &[usize]) -> Result<ConvergenceReport> {
    if n_list.len() < 2 {
        return Err(Error::domain("convergence study needs at least two slice counts"));
    }
    if n_list.iter().any(|&n| n < 2) || n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain("slice counts must be >= 2 and strictly increasing"));
    }
    let samples = n_list
        .iter()
        .map(|&n| Ok((n, transmit(barrier, SliceConfig::new(n), e)?.t)))
        .collect::<Result<Vec<_>>>()?;

    let scale = samples.iter().map(|s| s.1.abs()).fold(f64::MIN_POSITIVE, f64::max);
    // Round-off in the product grows roughly linearly with the slice count.
    let n_max = *n_list.last().unwrap() as f64;
    let noise = 16.0 * f64::EPSILON * n_max.max(32.0) * scale;
    let exact = samples.windows(2).all(|w| (w[1].1 - w[0].1).abs() <= noise);

    let [.., (n_prev, t_prev), (n_last, t_last)] = samples[..] else { unreachable!() };
    let extrapolated = if exact {
        t_last
    } else {
        let ratio = n_last as f64 / n_prev as f64;
        t_last + (t_last - t_prev) / (ratio * ratio - 1.0)
    };

    let observed_order = if exact {
        ObservedOrder::Exact
    } else if samples.len() < 3 {
        ObservedOrder::Undetermined
    } else {
        let [.., (_, t1), (_, t2), (_, t3)] = samples[..] else { unreachable!() };
        let (coarse, fine) = ((t2 - t1).abs(), (t3 - t2).abs());
        if coarse <= noise || fine <= noise {
            ObservedOrder::Undetermined
        } else {
            ObservedOrder::Estimated((coarse / fine).ln() / (n_last as f64 / n_prev as f64).ln())
        }
    };

    Ok(ConvergenceReport { samples, extrapolated, observed_order })
}
