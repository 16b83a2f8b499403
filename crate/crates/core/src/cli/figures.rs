//! Data behind the potential-profile, step-mass and profile-comparison plots.

use std::f64::consts::PI;
use std::io::Write;

use super::config::{uniform_grid, Params};
use super::output::{format_float, format_opt, write_csv};
use super::sweep::{evaluate, map_ordered};
use crate::error::{Error, Result};
use crate::oracle::SliceConfig;
use crate::profiles::{PotentialMode, ProfileKind};
use crate::scattering::{Engine, ScatteringResult};
use crate::units::{Energy, HBAR2_OVER_2ME};
use crate::{analytic, oracle};

pub const FIG1_POINTS: usize = 1001;
pub const FIG2_POINTS: usize = 2000;
pub const FIG2_OMEGA_MAX: f64 = 10.0;
pub const FIG2_MASS_RATIOS: [f64; 3] = [1.0, 0.5, 0.0665];
pub const FIG4_POINTS: usize = 2000;
pub const FIG4_OMEGA_MAX: f64 = 10.0;

pub const FIG1_HEADER: [&str; 4] = ["z_angstrom", "profile", "v_mev", "v_minus_v0_mev"];
pub const FIG2_HEADER: [&str; 3] = ["omega", "a", "t"];
pub const FIG4_HEADER: [&str; 8] =
    ["energy_mev", "omega", "profile", "t_boundary", "t_oracle", "abs_diff", "residual_boundary", "residual_oracle"];

/// π·√(2C/(m₀V₀)), the length πħ/√(m₀V₀). A uniform slab of mass m₀ this
/// wide has its first transmission resonance at E = 3V₀/2.
pub fn resonant_width(m0: f64, v0: Energy) -> f64 {
    PI * (2.0 * HBAR2_OVER_2ME / (m0 * v0)).sqrt()
}

/// Catalog profiles built from the run's σ and δ; the step uses `--m1`
/// (default σ) and the alloy keeps its fixed composition.
pub fn catalog_with(p: &Params) -> [ProfileKind; 6] {
    let (sigma, delta) = (p.sigma, p.delta);
    [
        ProfileKind::ConstantStep { m1: p.step_mass() },
        ProfileKind::Quadratic { sigma, delta },
        ProfileKind::Exponential { sigma, delta },
        ProfileKind::TanhStep { sigma, delta },
        ProfileKind::Rational { sigma, delta },
        ProfileKind::alloy(),
    ]
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig1Row {
    pub z: f64,
    pub profile: &'static str,
    pub v: Energy,
    pub v_minus_v0: Energy,
}

pub fn fig1(p: &Params) -> Result<Vec<Fig1Row>> {
    let n = p.points.unwrap_or(FIG1_POINTS);
    if n < 2 {
        return Err(Error::Config(format!("--points must be at least 2, got {n}")));
    }
    let mut rows = Vec::with_capacity(6 * n);
    for kind in catalog_with(p) {
        let barrier = p.barrier(kind, p.width())?;
        for s in barrier.potential_profile(n)? {
            rows.push(Fig1Row { z: s.z, profile: kind.name(), v: s.v, v_minus_v0: s.v - barrier.v0() });
        }
    }
    Ok(rows)
}

pub fn write_fig1<W: Write>(out: W, rows: &[Fig1Row]) -> Result<()> {
    write_csv(
        out,
        &FIG1_HEADER,
        rows.iter().map(|r| vec![format_float(r.z), r.profile.into(), format_float(r.v), format_float(r.v_minus_v0)]),
    )
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig2Row {
    pub omega: f64,
    pub a: f64,
    pub t: Option<f64>,
}

/// Energies above the barrier only: ω runs over (1, ω_max].
fn fig2_energies(p: &Params) -> Result<Vec<Energy>> {
    let v0 = p.v0;
    let e_max = p.emax.unwrap_or(FIG2_OMEGA_MAX * v0);
    let n = p.points.unwrap_or(FIG2_POINTS);
    if n < 2 || !(e_max > v0) {
        return Err(Error::Config(format!("fig2 needs emax > v0 and at least 2 points, got emax={e_max}, points={n}")));
    }
    match p.emin {
        Some(lo) if !(lo > v0 && lo < e_max) => {
            Err(Error::Config(format!("fig2 covers energies above the barrier: need v0 < emin < emax, got emin={lo}")))
        }
        Some(lo) => Ok(uniform_grid(lo, e_max, n)),
        None => Ok((1..=n).map(|i| if i == n { e_max } else { v0 + (e_max - v0) * i as f64 / n as f64 }).collect()),
    }
}

/// Constant-mass slab of mass a·m₀ between leads of mass m₀, where m₀ is
/// `--m-out`. The width defaults to [`resonant_width`].
pub fn fig2(p: &Params) -> Result<Vec<Fig2Row>> {
    let a_values = p.a_values.clone().unwrap_or_else(|| FIG2_MASS_RATIOS.to_vec());
    if let Some(bad) = a_values.iter().find(|a| !(a.is_finite() && **a > 0.0)) {
        return Err(Error::Config(format!("--a must be positive, got {bad}")));
    }
    if p.profile.is_some_and(|k| k != super::config::ProfileArg::Step) {
        return Err(Error::Config("fig2 uses the step profile only".into()));
    }
    let m0 = p.m_out;
    if !(m0 > 0.0) {
        return Err(Error::Config(format!("--m-out must be positive, got {m0}")));
    }
    let width = p.d.unwrap_or_else(|| resonant_width(m0, p.v0));
    let energies = fig2_energies(p)?;
    let mut rows = Vec::with_capacity(a_values.len() * energies.len());
    for a in a_values {
        // A uniform mass has no gradient correction, so the corrected barrier
        // is the bare one and the boundary engine covers both modes.
        let barrier = p.barrier(ProfileKind::step(a * m0), width)?.with_mode(PotentialMode::Corrected);
        let t = map_ordered(&energies, p.execution, |&e| analytic::boundary_solve(&barrier, e).ok().map(|r| r.t));
        rows.extend(energies.iter().zip(t).map(|(&e, t)| Fig2Row { omega: e / p.v0, a, t }));
    }
    Ok(rows)
}

pub fn write_fig2<W: Write>(out: W, rows: &[Fig2Row]) -> Result<()> {
    write_csv(out, &FIG2_HEADER, rows.iter().map(|r| vec![format_float(r.omega), format_float(r.a), format_opt(r.t)]))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fig4Row {
    pub energy_mev: Energy,
    pub omega: f64,
    pub profile: &'static str,
    pub boundary: Option<ScatteringResult>,
    pub oracle: Option<ScatteringResult>,
}

impl Fig4Row {
    pub fn abs_diff(&self) -> Option<f64> {
        Some((self.boundary?.t - self.oracle?.t).abs())
    }

    pub fn is_failure(&self) -> bool {
        self.boundary.is_none() || self.oracle.is_none()
    }
}

fn fig4_energies(p: &Params) -> Result<Vec<Energy>> {
    let e_max = p.emax.unwrap_or(FIG4_OMEGA_MAX * p.v0);
    let n = p.points.unwrap_or(FIG4_POINTS);
    if n < 2 || !(e_max > 0.0 && e_max.is_finite()) {
        return Err(Error::Config(format!("fig4 needs emax > 0 and at least 2 points, got emax={e_max}, points={n}")));
    }
    match p.emin {
        Some(lo) if !(lo > 0.0 && lo < e_max) => Err(Error::Config(format!("need 0 < emin < emax, got emin={lo}"))),
        Some(lo) => Ok(uniform_grid(lo, e_max, n)),
        None => Ok((1..=n).map(|i| if i == n { e_max } else { e_max * i as f64 / n as f64 }).collect()),
    }
}

/// The graded profiles and the alloy, each solved by the boundary engine and
/// the oracle side by side. Rows are grouped by profile, energy ascending.
pub fn fig4(p: &Params) -> Result<Vec<Fig4Row>> {
    if p.mode == PotentialMode::Bare {
        return Err(Error::Config("fig4 compares against the boundary engine and needs --potential-mode corrected".into()));
    }
    let energies = fig4_energies(p)?;
    let kinds: Vec<ProfileKind> = catalog_with(p).into_iter().filter(|k| k.is_graded() || *k == ProfileKind::alloy()).collect();
    let mut jobs = Vec::with_capacity(kinds.len() * energies.len());
    for kind in kinds {
        let barrier = p.barrier(kind, p.width())?;
        jobs.extend(energies.iter().map(|&e| (barrier, e)));
    }
    let cfg = SliceConfig::new(p.slices);
    Ok(map_ordered(&jobs, p.execution, |(barrier, e)| Fig4Row {
        energy_mev: *e,
        omega: e / p.v0,
        profile: barrier.profile().kind().name(),
        boundary: evaluate(barrier, Engine::BoundarySolve, p.slices, *e).ok(),
        oracle: oracle::transmit(barrier, cfg, *e).ok(),
    }))
}

pub fn write_fig4<W: Write>(out: W, rows: &[Fig4Row]) -> Result<()> {
    write_csv(
        out,
        &FIG4_HEADER,
        rows.iter().map(|r| {
            vec![
                format_float(r.energy_mev),
                format_float(r.omega),
                r.profile.into(),
                format_opt(r.boundary.map(|b| b.t)),
                format_opt(r.oracle.map(|o| o.t)),
                format_opt(r.abs_diff()),
                format_opt(r.boundary.map(|b| b.residual)),
                format_opt(r.oracle.map(|o| o.residual)),
            ]
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::super::config::{CommonArgs, FileConfig};
    use super::*;

    fn params(f: impl FnOnce(&mut CommonArgs)) -> Params {
        let mut a = CommonArgs::default();
        f(&mut a);
        Params::merge(&a, &[], FileConfig::default()).unwrap()
    }

    #[test]
    fn width_for_first_resonance() {
        assert!((resonant_width(0.0665, 100.0) - 106.3446181487).abs() < 1e-9);
    }

    #[test]
    fn fig1_shape() {
        let rows = fig1(&params(|_| {})).unwrap();
        assert_eq!(rows.len(), 6 * FIG1_POINTS);
        let max_for = |name| rows.iter().filter(|r| r.profile == name).map(|r| r.v_minus_v0.abs()).fold(0.0, f64::max);
        assert_eq!(max_for("step"), 0.0);
        assert!(max_for("exponential") <= 0.1);
        assert!((rows[FIG1_POINTS - 1].z - 100.0).abs() < 1e-12);
    }

    #[test]
    fn fig2_grid_above_barrier() {
        let rows = fig2(&params(|a| a.points = Some(50))).unwrap();
        assert_eq!(rows.len(), 150);
        assert!(rows.iter().all(|r| r.omega > 1.0 && r.omega <= 10.0 && r.t.is_some()));
        let rows = fig2(&params(|a| {
            a.emin = Some(101.0);
            a.emax = Some(150.0);
        }))
        .unwrap();
        let last = rows.iter().rfind(|r| r.a == 1.0).unwrap();
        assert_eq!(last.omega, 1.5);
        assert!((last.t.unwrap() - 1.0).abs() < 1e-12);
        assert!(fig2(&params(|a| a.emin = Some(50.0))).is_err());
    }

    #[test]
    fn fig4_small() {
        let rows = fig4(&params(|a| {
            a.points = Some(40);
            a.slices = Some(4096);
        }))
        .unwrap();
        assert_eq!(rows.len(), 5 * 40);
        for r in &rows {
            let tol = if r.profile == "tanh" { 1e-5 } else { 1e-6 };
            assert!(r.abs_diff().unwrap() <= tol, "{r:?}");
        }
        assert!(fig4(&params(|a| a.potential_mode = Some(super::super::config::ModeArg::Bare))).is_err());
    }
}
