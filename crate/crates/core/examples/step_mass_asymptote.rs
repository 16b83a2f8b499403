//! A uniform slab whose mass differs from the leads never becomes fully
//! transparent: far above the barrier T oscillates down to (2√a/(1+a))².

use pdm_tunnel::analytic::boundary_solve;
use pdm_tunnel::cli::figures::resonant_width;
use pdm_tunnel::reference::slab_transmission_floor;
use pdm_tunnel::{BarrierSpec, MassProfile, ProfileKind};

fn main() -> pdm_tunnel::Result<()> {
    let (m0, v0) = (0.0665, 100.0);
    let d = resonant_width(m0, v0);
    println!("d = {d:.4} A");
    for a in [1.0, 0.5, 0.0665] {
        let slab = BarrierSpec::new(MassProfile::new(ProfileKind::step(a * m0), d)?, v0, m0)?;
        let t: Vec<f64> = (0..=20000)
            .map(|i| boundary_solve(&slab, v0 * (900.0 + 0.01 * i as f64)).map(|r| r.t))
            .collect::<pdm_tunnel::Result<_>>()?;
        let lowest = t.iter().copied().fold(f64::INFINITY, f64::min);
        println!("a = {a:<7} min T over omega in [900, 1100] = {lowest:.6}  floor = {:.6}", slab_transmission_floor(a));
    }
    Ok(())
}
