//! The sliced transfer-matrix solver: agreement with the exact solution,
//! second-order convergence, and the uncorrected barrier only it can solve.

use pdm_tunnel::analytic::boundary_solve;
use pdm_tunnel::oracle::{convergence, transmit};
use pdm_tunnel::{BarrierSpec, PotentialMode, ProfileKind, SliceConfig};

fn main() -> pdm_tunnel::Result<()> {
    let e = 200.0;
    for kind in ProfileKind::catalog() {
        let b = BarrierSpec::with_defaults(kind)?;
        let exact = boundary_solve(&b, e)?.t;
        let report = convergence(&b, e, &[256, 512, 1024, 2048, 4096])?;
        let bare = transmit(&b.with_mode(PotentialMode::Bare), SliceConfig::default(), e)?.t;
        println!(
            "{:<12} T = {exact:.12}  n=4096: {:.1e}  extrapolated: {:.1e}  order {:?}  bare - corrected = {:+.3e}",
            kind.name(),
            (report.samples.last().unwrap().1 - exact).abs(),
            (report.extrapolated - exact).abs(),
            report.observed_order,
            bare - exact,
        );
    }
    Ok(())
}
