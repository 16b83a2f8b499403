//! Command-line flags, the flat TOML config file, and their resolution into
//! run parameters. Precedence: flag, then config file, then built-in default.

use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::oracle::DEFAULT_SLICES;
use crate::profiles::{
    BarrierSpec, MassProfile, PotentialMode, ProfileKind, DEFAULT_DELTA, DEFAULT_M_OUT, DEFAULT_SIGMA, DEFAULT_V0,
    DEFAULT_WIDTH,
};
use crate::scattering::Engine;
use crate::units::Energy;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileArg {
    Step,
    Quadratic,
    Exponential,
    Tanh,
    Rational,
    Alloy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineArg {
    Paper,
    Boundary,
    Oracle,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Paper => Engine::PaperFormula,
            EngineArg::Boundary => Engine::BoundarySolve,
            EngineArg::Oracle => Engine::Oracle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Corrected,
    Bare,
}

impl From<ModeArg> for PotentialMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Corrected => PotentialMode::Corrected,
            ModeArg::Bare => PotentialMode::Bare,
        }
    }
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum)]
    pub profile: Option<ProfileArg>,
    #[arg(long)]
    pub sigma: Option<f64>,
    #[arg(long)]
    pub delta: Option<f64>,
    /// Barrier height, meV.
    #[arg(long)]
    pub v0: Option<f64>,
    /// Barrier width, Å.
    #[arg(long)]
    pub d: Option<f64>,
    /// Lead mass, in free-electron masses.
    #[arg(long = "m-out")]
    pub m_out: Option<f64>,
    /// Interior mass of the step profile.
    #[arg(long)]
    pub m1: Option<f64>,
    /// Lowest energy, meV.
    #[arg(long)]
    pub emin: Option<f64>,
    /// Highest energy, meV.
    #[arg(long)]
    pub emax: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    /// Repeat to select several engines.
    #[arg(long = "engine", value_enum)]
    pub engines: Vec<EngineArg>,
    /// Slice count of the transfer-matrix oracle.
    #[arg(long)]
    pub slices: Option<usize>,
    #[arg(long = "potential-mode", value_enum)]
    pub potential_mode: Option<ModeArg>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Flat TOML file with the same keys as the long flags.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Evaluate energies on one thread.
    #[arg(long)]
    pub serial: bool,
}

/// Contents of a `--config` file.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub profile: Option<ProfileArg>,
    pub sigma: Option<f64>,
    pub delta: Option<f64>,
    pub v0: Option<f64>,
    pub d: Option<f64>,
    pub m_out: Option<f64>,
    pub m1: Option<f64>,
    pub emin: Option<f64>,
    pub emax: Option<f64>,
    pub points: Option<usize>,
    pub engine: Option<EngineList>,
    pub slices: Option<usize>,
    pub potential_mode: Option<ModeArg>,
    pub out: Option<PathBuf>,
    pub a: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum EngineList {
    One(EngineArg),
    Many(Vec<EngineArg>),
}

impl EngineList {
    fn into_vec(self) -> Vec<EngineArg> {
        match self {
            EngineList::One(e) => vec![e],
            EngineList::Many(v) => v,
        }
    }
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(format!("config file: {}", e.message())))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

/// Flags merged with the config file, before any command-specific defaults.
#[derive(Debug, Clone)]
pub struct Params {
    pub profile: Option<ProfileArg>,
    pub sigma: f64,
    pub delta: f64,
    pub v0: Energy,
    pub d: Option<f64>,
    pub m_out: f64,
    pub m1: Option<f64>,
    pub emin: Option<f64>,
    pub emax: Option<f64>,
    pub points: Option<usize>,
    pub engines: Vec<Engine>,
    pub slices: usize,
    pub mode: PotentialMode,
    pub out: Option<PathBuf>,
    pub a_values: Option<Vec<f64>>,
    pub execution: Execution,
}

impl Params {
    pub fn resolve(args: &CommonArgs, a_values: &[f64]) -> Result<Self> {
        let file = match &args.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        Self::merge(args, a_values, file)
    }

    pub fn merge(args: &CommonArgs, a_values: &[f64], file: FileConfig) -> Result<Self> {
        let mut engines: Vec<EngineArg> = if args.engines.is_empty() {
            file.engine.map(EngineList::into_vec).unwrap_or_default()
        } else {
            args.engines.clone()
        };
        engines.sort_by_key(|e| Engine::from(*e));
        engines.dedup();
        let params = Params {
            profile: args.profile.or(file.profile),
            sigma: args.sigma.or(file.sigma).unwrap_or(DEFAULT_SIGMA),
            delta: args.delta.or(file.delta).unwrap_or(DEFAULT_DELTA),
            v0: args.v0.or(file.v0).unwrap_or(DEFAULT_V0),
            d: args.d.or(file.d),
            m_out: args.m_out.or(file.m_out).unwrap_or(DEFAULT_M_OUT),
            m1: args.m1.or(file.m1),
            emin: args.emin.or(file.emin),
            emax: args.emax.or(file.emax),
            points: args.points.or(file.points),
            engines: engines.into_iter().map(Engine::from).collect(),
            slices: args.slices.or(file.slices).unwrap_or(DEFAULT_SLICES),
            mode: args.potential_mode.or(file.potential_mode).map(PotentialMode::from).unwrap_or_default(),
            out: args.out.clone().or(file.out),
            a_values: if a_values.is_empty() { file.a } else { Some(a_values.to_vec()) },
            execution: if args.serial { Execution::Serial } else { Execution::Parallel },
        };
        for (name, value) in [("sigma", params.sigma), ("delta", params.delta), ("v0", params.v0), ("m-out", params.m_out)] {
            if !value.is_finite() {
                return Err(Error::Config(format!("--{name} must be finite, got {value}")));
            }
        }
        if params.slices == 0 {
            return Err(Error::Config("--slices must be at least 1".into()));
        }
        Ok(params)
    }

    pub fn width(&self) -> f64 {
        self.d.unwrap_or(DEFAULT_WIDTH)
    }

    /// Step interior mass; defaults to σ.
    pub fn step_mass(&self) -> f64 {
        self.m1.unwrap_or(self.sigma)
    }

    pub fn kind_of(&self, profile: ProfileArg) -> Result<ProfileKind> {
        if self.m1.is_some() && profile != ProfileArg::Step {
            return Err(Error::Config("--m1 applies only to --profile step".into()));
        }
        let (sigma, delta) = (self.sigma, self.delta);
        Ok(match profile {
            ProfileArg::Step => ProfileKind::ConstantStep { m1: self.step_mass() },
            ProfileArg::Quadratic => ProfileKind::Quadratic { sigma, delta },
            ProfileArg::Exponential => ProfileKind::Exponential { sigma, delta },
            ProfileArg::Tanh => ProfileKind::TanhStep { sigma, delta },
            ProfileArg::Rational => ProfileKind::Rational { sigma, delta },
            ProfileArg::Alloy => ProfileKind::alloy(),
        })
    }

    /// Barrier for `kind` with this run's width, height, lead mass and mode.
    pub fn barrier(&self, kind: ProfileKind, width: f64) -> Result<BarrierSpec> {
        let profile = MassProfile::new(kind, width).map_err(to_config)?;
        Ok(BarrierSpec::new(profile, self.v0, self.m_out).map_err(to_config)?.with_mode(self.mode))
    }
}

fn to_config(e: Error) -> Error {
    match e {
        Error::Domain(msg) => Error::Config(msg),
        other => other,
    }
}

/// A fully validated energy sweep request.
#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub barrier: BarrierSpec,
    pub e_min: Energy,
    pub e_max: Energy,
    pub n_points: usize,
    /// Sorted, without duplicates.
    pub engines: Vec<Engine>,
    pub n_slices: usize,
    pub execution: Execution,
    pub out: Option<PathBuf>,
}

pub const SWEEP_EMIN: f64 = 1.0;
pub const SWEEP_EMAX: f64 = 1000.0;
pub const SWEEP_POINTS: usize = 1000;

impl SweepConfig {
    pub fn from_params(p: &Params) -> Result<Self> {
        let kind = p.kind_of(p.profile.unwrap_or(ProfileArg::Quadratic))?;
        let barrier = p.barrier(kind, p.width())?;
        let engines = match (p.engines.is_empty(), barrier.mode()) {
            (false, PotentialMode::Bare) if p.engines.iter().any(|e| *e != Engine::Oracle) => {
                return Err(Error::Config("--potential-mode bare is only solvable by --engine oracle".into()));
            }
            (false, _) => p.engines.clone(),
            (true, PotentialMode::Bare) => vec![Engine::Oracle],
            (true, PotentialMode::Corrected) => vec![Engine::BoundarySolve, Engine::Oracle],
        };
        let cfg = SweepConfig {
            barrier,
            e_min: p.emin.unwrap_or(SWEEP_EMIN),
            e_max: p.emax.unwrap_or(SWEEP_EMAX),
            n_points: p.points.unwrap_or(SWEEP_POINTS),
            engines,
            n_slices: p.slices,
            execution: p.execution,
            out: p.out.clone(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.e_min > 0.0 && self.e_min < self.e_max && self.e_max.is_finite()) {
            return Err(Error::Config(format!(
                "energy range must satisfy 0 < emin < emax, got emin={} emax={}",
                self.e_min, self.e_max
            )));
        }
        if self.n_points < 2 {
            return Err(Error::Config(format!("--points must be at least 2, got {}", self.n_points)));
        }
        if self.engines.is_empty() {
            return Err(Error::Config("select at least one engine".into()));
        }
        Ok(())
    }

    /// Uniform grid over [e_min, e_max], both ends included.
    pub fn energies(&self) -> Vec<Energy> {
        uniform_grid(self.e_min, self.e_max, self.n_points)
    }
}

pub(crate) fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| if i + 1 == n { hi } else { lo + (hi - lo) * i as f64 / (n - 1) as f64 })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args() -> CommonArgs {
        CommonArgs::default()
    }

    #[test]
    fn defaults() {
        let p = Params::merge(&args(), &[], FileConfig::default()).unwrap();
        let cfg = SweepConfig::from_params(&p).unwrap();
        assert_eq!(cfg.barrier.profile().kind(), ProfileKind::quadratic());
        assert_eq!((cfg.barrier.v0(), cfg.barrier.width(), cfg.barrier.m_out().get()), (100.0, 100.0, 0.0665));
        assert_eq!(cfg.engines, vec![Engine::BoundarySolve, Engine::Oracle]);
        let e = cfg.energies();
        assert_eq!((e[0], *e.last().unwrap(), e.len()), (SWEEP_EMIN, SWEEP_EMAX, SWEEP_POINTS));
    }

    #[test]
    fn precedence_flag_file_default() {
        let file = FileConfig::parse("v0 = 150.0\nsigma = 0.07\nm-out = 0.1\nengine = [\"paper\", \"boundary\"]\n").unwrap();
        let mut a = args();
        a.v0 = Some(200.0);
        let p = Params::merge(&a, &[], file).unwrap();
        assert_eq!(p.v0, 200.0); // flag
        assert_eq!(p.sigma, 0.07); // file
        assert_eq!(p.m_out, 0.1); // file
        assert_eq!(p.delta, DEFAULT_DELTA); // default
        assert_eq!(p.engines, vec![Engine::BoundarySolve, Engine::PaperFormula]);
    }

    #[test]
    fn unknown_file_key_is_named() {
        let err = FileConfig::parse("sigmaa = 1.0\n").unwrap_err();
        assert!(err.to_string().contains("sigmaa"), "{err}");
        let err = FileConfig::parse("profile = \"cubic\"\n").unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn invalid_ranges() {
        let mut a = args();
        a.emax = Some(0.0);
        let p = Params::merge(&a, &[], FileConfig::default()).unwrap();
        assert!(matches!(SweepConfig::from_params(&p), Err(Error::Config(_))));

        let mut a = args();
        a.points = Some(1);
        let p = Params::merge(&a, &[], FileConfig::default()).unwrap();
        assert!(SweepConfig::from_params(&p).is_err());

        let mut a = args();
        a.profile = Some(ProfileArg::Quadratic);
        a.m1 = Some(0.2);
        let p = Params::merge(&a, &[], FileConfig::default()).unwrap();
        assert!(SweepConfig::from_params(&p).is_err());

        let mut a = args();
        a.sigma = Some(-1.0);
        let p = Params::merge(&a, &[], FileConfig::default()).unwrap();
        assert!(matches!(SweepConfig::from_params(&p), Err(Error::Config(_))));
    }

    #[test]
    fn composed_alloy_slope() {
        let mut a = args();
        a.profile = Some(ProfileArg::Quadratic);
        a.delta = Some(0.02672);
        let cfg = SweepConfig::from_params(&Params::merge(&a, &[], FileConfig::default()).unwrap()).unwrap();
        let alloy = MassProfile::new(ProfileKind::alloy(), 100.0).unwrap();
        for z in [0.0, 40.0, 100.0] {
            let m = cfg.barrier.profile().mass_at(z).unwrap().get();
            assert!((m - alloy.mass_at(z).unwrap().get()).abs() < 1e-15);
        }
    }

    #[test]
    fn bare_mode_engines() {
        let mut a = args();
        a.potential_mode = Some(ModeArg::Bare);
        let cfg = SweepConfig::from_params(&Params::merge(&a, &[], FileConfig::default()).unwrap()).unwrap();
        assert_eq!(cfg.engines, vec![Engine::Oracle]);
        a.engines = vec![EngineArg::Boundary];
        assert!(SweepConfig::from_params(&Params::merge(&a, &[], FileConfig::default()).unwrap()).is_err());
    }

    #[test]
    fn grid_is_inclusive() {
        let g = uniform_grid(0.1, 0.7, 7);
        assert_eq!(g[0], 0.1);
        assert_eq!(g[6], 0.7);
        assert!(g.windows(2).all(|w| w[1] > w[0]));
    }
}
