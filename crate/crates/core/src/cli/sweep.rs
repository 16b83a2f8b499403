use std::io::Write;

use rayon::prelude::*;

use super::config::{Execution, SweepConfig};
use super::output::{format_float, write_csv};
use crate::analytic;
use crate::error::Result;
use crate::oracle::{self, SliceConfig};
use crate::profiles::BarrierSpec;
use crate::scattering::{Engine, ScatteringResult};
use crate::units::Energy;

/// More than this fraction of failed points makes a run exit with status 2.
pub const FAILURE_BUDGET: f64 = 0.10;

pub const SWEEP_HEADER: [&str; 8] = ["energy_mev", "omega", "profile", "engine", "t", "r", "residual", "status"];

/// One (energy, engine) evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputRow {
    pub energy_mev: Energy,
    pub omega: f64,
    pub profile: &'static str,
    pub engine: Engine,
    pub outcome: std::result::Result<ScatteringResult, String>,
}

impl OutputRow {
    pub fn is_failure(&self) -> bool {
        self.outcome.is_err()
    }

    fn record(&self) -> Vec<String> {
        let mut rec = vec![
            format_float(self.energy_mev),
            format_float(self.omega),
            self.profile.to_string(),
            self.engine.name().to_string(),
        ];
        match &self.outcome {
            Ok(res) => {
                rec.extend([res.t, res.r, res.residual].map(format_float));
                rec.push("ok".into());
            }
            Err(msg) => {
                rec.extend([String::new(), String::new(), String::new()]);
                rec.push(format!("failed: {msg}"));
            }
        }
        rec
    }
}

/// Evaluates one engine at one energy.
pub fn evaluate(barrier: &BarrierSpec, engine: Engine, n_slices: usize, e: Energy) -> Result<ScatteringResult> {
    match engine {
        Engine::BoundarySolve => analytic::boundary_solve(barrier, e),
        Engine::PaperFormula => analytic::paper_solve(barrier, e),
        Engine::Oracle => oracle::transmit(barrier, SliceConfig::new(n_slices), e),
    }
}

/// Maps `f` over `items`, in parallel unless told otherwise; output order
/// always follows input order.
pub(crate) fn map_ordered<T, U, F>(items: &[T], execution: Execution, f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match execution {
        Execution::Serial => items.iter().map(f).collect(),
        Execution::Parallel => items.par_iter().map(f).collect(),
    }
}

/// Every selected engine at every grid energy, sorted by energy then engine
/// name. A point that fails becomes a marked row; the sweep carries on.
pub fn run_sweep(cfg: &SweepConfig) -> Vec<OutputRow> {
    let barrier = &cfg.barrier;
    let v0 = barrier.v0();
    let profile = barrier.profile().kind().name();
    let jobs: Vec<(Energy, Engine)> =
        cfg.energies().into_iter().flat_map(|e| cfg.engines.iter().map(move |&g| (e, g))).collect();
    map_ordered(&jobs, cfg.execution, |&(e, engine)| OutputRow {
        energy_mev: e,
        omega: e / v0,
        profile,
        engine,
        outcome: evaluate(barrier, engine, cfg.n_slices, e).map_err(|err| err.to_string()),
    })
}

pub fn failure_fraction(failures: usize, total: usize) -> f64 {
    if total == 0 {
        0.0
    } else {
        failures as f64 / total as f64
    }
}

pub fn write_sweep<W: Write>(out: W, rows: &[OutputRow]) -> Result<()> {
    write_csv(out, &SWEEP_HEADER, rows.iter().map(OutputRow::record))
}
