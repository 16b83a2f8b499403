//! A small sweep through the library API, written as CSV to stdout. The
//! same thing from the shell: `pdm-tunnel sweep --profile tanh --points 11`.

use std::io;

use pdm_tunnel::cli::config::{CommonArgs, Params, ProfileArg, SweepConfig};
use pdm_tunnel::cli::sweep::{run_sweep, write_sweep};

fn main() -> pdm_tunnel::Result<()> {
    let args = CommonArgs { profile: Some(ProfileArg::Tanh), points: Some(11), ..Default::default() };
    let cfg = SweepConfig::from_params(&Params::resolve(&args, &[])?)?;
    let rows = run_sweep(&cfg);
    write_sweep(io::stdout().lock(), &rows)
}
