//! Exact transmission from the 4×4 matching problem, with every amplitude
//! of the piecewise solution.

use pdm_tunnel::analytic::{boundary_coefficients, boundary_solve};
use pdm_tunnel::{BarrierSpec, ProfileKind};

fn main() -> pdm_tunnel::Result<()> {
    let barrier = BarrierSpec::with_defaults(ProfileKind::quadratic())?;
    for e in [20.0, 100.0, 200.0, 600.0] {
        let res = boundary_solve(&barrier, e)?;
        println!("E = {e:>5} meV  T = {:.12}  R = {:.12}  |T+R-1| = {:.1e}", res.t, res.r, res.residual);
    }

    let co = boundary_coefficients(&barrier, 200.0)?;
    println!("A2 = {:.6}", co.a2);
    println!("A3 = {:?}", co.a3);
    println!("A4 = {:?}", co.a4);
    println!("A5 = {:.6}", co.a5);
    // at E = V0 the two interior exponentials coincide and only (B1, B2) is reported
    let flat = boundary_coefficients(&barrier, barrier.v0())?;
    println!("E = V0: A3 = {:?}, B = ({:.4}, {:.4})", flat.a3, flat.interior.0, flat.interior.1);
    Ok(())
}
