//! The mass catalog: m, m′ and m″ along the barrier, and the phase integral
//! f(z) = ∫₀ᶻ √m dz′.

use pdm_tunnel::{MassProfile, ProfileKind};

fn main() -> pdm_tunnel::Result<()> {
    let d = 100.0;
    for kind in ProfileKind::catalog() {
        let p = MassProfile::new(kind, d)?;
        println!("{kind}  f(d) = {:.6} A", p.phase_integral(0.0, d)?);
        for z in [0.0, 25.0, 50.0, 75.0, 100.0] {
            let m = p.derivs(z)?;
            println!("  z={z:>5}  m={:.6}  m'={:+.3e}  m''={:+.3e}", m.m, m.dm, m.d2m);
        }
    }

    let quad = MassProfile::new(ProfileKind::quadratic(), d)?;
    let flipped = quad.mirrored();
    println!("mirrored quadratic: m(0) = {}, m(d) = {}", flipped.mass_at(0.0)?, flipped.mass_at(d)?);
    Ok(())
}
