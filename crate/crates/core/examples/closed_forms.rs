//! The K± closed forms for t and r next to the boundary solve, and what the
//! uncorrected printed expressions give instead.

use pdm_tunnel::analytic::{
    boundary_solve, k_factors, paper_reflection, paper_transmission, printed_reflection, printed_transmission,
};
use pdm_tunnel::{BarrierSpec, ProfileKind};

fn main() -> pdm_tunnel::Result<()> {
    let e = 200.0;
    for kind in ProfileKind::catalog() {
        let b = BarrierSpec::with_defaults(kind)?;
        let exact = boundary_solve(&b, e)?;
        let t = paper_transmission(&b, e)?;
        let r = paper_reflection(&b, e)?;
        println!(
            "{:<12} |t - A5| = {:.1e}  |r - A2| = {:.1e}  |printed t|^2 = {:.4e} (T = {:.6})  |1/printed r - A2| = {:.1e}",
            kind.name(),
            (t - exact.t_amp).norm(),
            (r - exact.r_amp).norm(),
            printed_transmission(&b, e)?.norm_sqr(),
            exact.t,
            (1.0 / printed_reflection(&b, e)? - exact.r_amp).norm(),
        );
    }
    let kf = k_factors(&BarrierSpec::with_defaults(ProfileKind::quadratic())?, e)?;
    println!("quadratic K+(0) = {:.6e}, K-(d) = {:.6e}", kf.k_plus_0, kf.k_minus_d);
    Ok(())
}
