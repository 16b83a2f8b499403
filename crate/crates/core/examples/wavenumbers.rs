//! Wavenumbers in the meV/Å/mₑ unit system and the adaptive quadrature used
//! for the tanh phase integral.

use pdm_tunnel::quadrature::{adaptive_quadrature, DEFAULT_TOL};
use pdm_tunnel::{wavenumber, MassRatio, HBAR2_OVER_2ME};

fn main() -> pdm_tunnel::Result<()> {
    println!("hbar^2/2m_e = {HBAR2_OVER_2ME} meV A^2");
    let gaas = MassRatio::new(0.0665)?;
    for de in [100.0, 1.0, 0.0, -50.0] {
        let k = wavenumber(de, gaas)?;
        println!("dE = {de:>6} meV  ->  k = {:?}  ({:.6e} 1/A)", k, k.magnitude());
    }

    // ∫₀¹ √(σ + tanh(√δ t)) dt, the tanh profile's phase integral per unit width
    let (sigma, delta) = (0.0665f64, 0.0835f64);
    let phase = adaptive_quadrature(|t| (sigma + (delta.sqrt() * t).tanh()).sqrt(), 0.0, 1.0, DEFAULT_TOL)?;
    println!("int_0^1 sqrt(m(zeta)) dzeta for tanh = {phase:.15}");
    Ok(())
}
