//! The gradient-corrected barrier V₀ + C/(4m²)(m″ − 7m′²/(4m)) across each
//! profile, against the bare constant V₀.

use pdm_tunnel::{BarrierSpec, PotentialMode, ProfileKind};

fn main() -> pdm_tunnel::Result<()> {
    for kind in ProfileKind::catalog() {
        let barrier = BarrierSpec::with_defaults(kind)?;
        let samples = barrier.potential_profile(1001)?;
        let (at, worst) = samples
            .iter()
            .map(|s| (s.z, s.v - barrier.v0()))
            .fold((0.0, 0.0f64), |acc, (z, dv)| if dv.abs() > acc.1.abs() { (z, dv) } else { acc });
        println!("{:<12} max |V - V0| = {:>9.4} meV at z = {at:>5.1} A", kind.name(), worst.abs());
    }
    let bare = BarrierSpec::with_defaults(ProfileKind::tanh_step())?.with_mode(PotentialMode::Bare);
    println!("bare tanh barrier at z=0: {} meV", bare.effective_potential(0.0)?);
    Ok(())
}
