//! Position-dependent effective masses and the barrier they live in.
//!
//! Every catalog profile is written in the dimensionless coordinate
//! `ζ = z / d`, so that a profile parameter such as δ is the fractional mass
//! change across the barrier rather than a per-Å² rate. Derivatives reported
//! by [`MassProfile::derivs`] are with respect to the physical coordinate z.

use std::fmt;

use crate::error::{Error, Result};
use crate::quadrature::{adaptive_quadrature, DEFAULT_TOL};
use crate::units::{Energy, MassRatio, HBAR2_OVER_2ME};

/// GaAs conduction-band mass, also the default σ.
pub const DEFAULT_SIGMA: f64 = 0.0665;
pub const DEFAULT_DELTA: f64 = 0.0835;
/// Barrier height in meV.
pub const DEFAULT_V0: f64 = 100.0;
/// Barrier width in Å.
pub const DEFAULT_WIDTH: f64 = 100.0;
/// Outside (lead) mass: GaAs.
pub const DEFAULT_M_OUT: f64 = 0.0665;

/// Al mole-fraction law of the graded AlGaAs barrier: m(x) = base + slope·x.
pub const ALLOY_BASE: f64 = 0.0665;
pub const ALLOY_SLOPE: f64 = 0.0835;
/// Composition at the far edge; x(ζ) = xmax·ζ².
pub const ALLOY_XMAX: f64 = 0.32;

/// The mass laws available for the barrier interior.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileKind {
    /// Constant mass `m1` inside, discontinuous at both edges.
    ConstantStep { m1: f64 },
    /// σ + δζ²
    Quadratic { sigma: f64, delta: f64 },
    /// σ·exp(√δ ζ)
    Exponential { sigma: f64, delta: f64 },
    /// σ + tanh(√δ ζ)
    TanhStep { sigma: f64, delta: f64 },
    /// ((√σ + δζ²) / (1 + δζ²))²
    Rational { sigma: f64, delta: f64 },
    /// base + slope·x(ζ) with x(ζ) = xmax·ζ²
    AlloyGraded { base: f64, slope: f64, xmax: f64 },
}

impl ProfileKind {
    pub const fn quadratic() -> Self {
        ProfileKind::Quadratic { sigma: DEFAULT_SIGMA, delta: DEFAULT_DELTA }
    }

    pub const fn exponential() -> Self {
        ProfileKind::Exponential { sigma: DEFAULT_SIGMA, delta: DEFAULT_DELTA }
    }

    pub const fn tanh_step() -> Self {
        ProfileKind::TanhStep { sigma: DEFAULT_SIGMA, delta: DEFAULT_DELTA }
    }

    pub const fn rational() -> Self {
        ProfileKind::Rational { sigma: DEFAULT_SIGMA, delta: DEFAULT_DELTA }
    }

    pub const fn alloy() -> Self {
        ProfileKind::AlloyGraded { base: ALLOY_BASE, slope: ALLOY_SLOPE, xmax: ALLOY_XMAX }
    }

    pub const fn step(m1: f64) -> Self {
        ProfileKind::ConstantStep { m1 }
    }

    /// The four graded profiles of the catalog, in catalog order.
    pub fn graded() -> [ProfileKind; 4] {
        [Self::quadratic(), Self::exponential(), Self::tanh_step(), Self::rational()]
    }

    /// Every kind under default parameters, the step matching the lead mass.
    pub fn catalog() -> [ProfileKind; 6] {
        [
            Self::step(DEFAULT_SIGMA),
            Self::quadratic(),
            Self::exponential(),
            Self::tanh_step(),
            Self::rational(),
            Self::alloy(),
        ]
    }

    /// Short lowercase name, as used on the command line and in CSV output.
    pub fn name(&self) -> &'static str {
        match self {
            ProfileKind::ConstantStep { .. } => "step",
            ProfileKind::Quadratic { .. } => "quadratic",
            ProfileKind::Exponential { .. } => "exponential",
            ProfileKind::TanhStep { .. } => "tanh",
            ProfileKind::Rational { .. } => "rational",
            ProfileKind::AlloyGraded { .. } => "alloy",
        }
    }

    /// Whether the mass is twice continuously differentiable inside the barrier
    /// and actually varies.
    pub fn is_graded(&self) -> bool {
        !matches!(self, ProfileKind::ConstantStep { .. })
    }

    fn validate(&self) -> Result<()> {
        let check_sd = |sigma: f64, delta: f64| {
            if !(sigma.is_finite() && sigma > 0.0) {
                return Err(Error::domain(format!("{}: sigma must be > 0, got {sigma}", self.name())));
            }
            if !(delta.is_finite() && delta >= 0.0) {
                return Err(Error::domain(format!("{}: delta must be >= 0, got {delta}", self.name())));
            }
            Ok(())
        };
        match *self {
            ProfileKind::ConstantStep { m1 } => MassRatio::new(m1).map(|_| ()),
            ProfileKind::Quadratic { sigma, delta }
            | ProfileKind::Exponential { sigma, delta }
            | ProfileKind::Rational { sigma, delta } => check_sd(sigma, delta),
            ProfileKind::TanhStep { sigma, delta } => {
                check_sd(sigma, delta)?;
                // tanh(√δ ζ) is monotone, so the extremes sit at the edges
                if sigma.min(sigma + delta.sqrt().tanh()) <= 0.0 {
                    return Err(Error::domain("tanh: mass must stay positive"));
                }
                Ok(())
            }
            ProfileKind::AlloyGraded { base, slope, xmax } => {
                if !(base.is_finite() && base > 0.0 && slope.is_finite() && xmax.is_finite()) {
                    return Err(Error::domain("alloy: base must be > 0 and all parameters finite"));
                }
                if !(0.0..=1.0).contains(&xmax) {
                    return Err(Error::domain(format!("alloy: composition must lie in [0, 1], got {xmax}")));
                }
                if base.min(base + slope * xmax) <= 0.0 {
                    return Err(Error::domain("alloy: mass must stay positive"));
                }
                Ok(())
            }
        }
    }

    /// (m, dm/dζ, d²m/dζ²) at dimensionless position ζ.
    fn eval(&self, zeta: f64) -> (f64, f64, f64) {
        match *self {
            ProfileKind::ConstantStep { m1 } => (m1, 0.0, 0.0),
            ProfileKind::Quadratic { sigma, delta } => quadratic(sigma, delta, zeta),
            ProfileKind::AlloyGraded { base, slope, xmax } => quadratic(base, slope * xmax, zeta),
            ProfileKind::Exponential { sigma, delta } => {
                let m = sigma * (delta.sqrt() * zeta).exp();
                (m, delta.sqrt() * m, delta * m)
            }
            ProfileKind::TanhStep { sigma, delta } => {
                let a = delta.sqrt();
                let t = (a * zeta).tanh();
                let sech2 = 1.0 - t * t;
                (sigma + t, a * sech2, -2.0 * delta * t * sech2)
            }
            ProfileKind::Rational { sigma, delta } => {
                // g = √m = 1 + (√σ − 1)/(1 + δζ²)
                let c = sigma.sqrt() - 1.0;
                let q = 1.0 + delta * zeta * zeta;
                let g = 1.0 + c / q;
                let g1 = -2.0 * c * delta * zeta / (q * q);
                let g2 = -2.0 * c * delta * (1.0 - 3.0 * delta * zeta * zeta) / (q * q * q);
                (g * g, 2.0 * g * g1, 2.0 * (g1 * g1 + g * g2))
            }
        }
    }

    /// ∫₀^ζ √m dζ' where an elementary antiderivative exists.
    fn root_antiderivative(&self, zeta: f64) -> Option<f64> {
        match *self {
            ProfileKind::ConstantStep { m1 } => Some(m1.sqrt() * zeta),
            ProfileKind::Quadratic { sigma, delta } => Some(quadratic_root_integral(sigma, delta, zeta)),
            ProfileKind::AlloyGraded { base, slope, xmax } => {
                Some(quadratic_root_integral(base, slope * xmax, zeta))
            }
            ProfileKind::Exponential { sigma, delta } => {
                let a = delta.sqrt();
                if a == 0.0 {
                    Some(sigma.sqrt() * zeta)
                } else {
                    Some(sigma.sqrt() * 2.0 / a * (0.5 * a * zeta).exp_m1())
                }
            }
            ProfileKind::Rational { sigma, delta } => {
                let c = sigma.sqrt() - 1.0;
                let a = delta.sqrt();
                if a == 0.0 {
                    Some(sigma.sqrt() * zeta)
                } else {
                    Some(zeta + c * (a * zeta).atan() / a)
                }
            }
            ProfileKind::TanhStep { .. } => None,
        }
    }
}

fn quadratic(sigma: f64, delta: f64, zeta: f64) -> (f64, f64, f64) {
    (sigma + delta * zeta * zeta, 2.0 * delta * zeta, 2.0 * delta)
}

fn quadratic_root_integral(sigma: f64, delta: f64, zeta: f64) -> f64 {
    if delta == 0.0 {
        return sigma.sqrt() * zeta;
    }
    0.5 * zeta * (sigma + delta * zeta * zeta).sqrt()
        + sigma / (2.0 * delta.sqrt()) * (zeta * (delta / sigma).sqrt()).asinh()
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Mass and its z-derivatives at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassDerivs {
    pub m: f64,
    /// dm/dz in mₑ/Å
    pub dm: f64,
    /// d²m/dz² in mₑ/Å²
    pub d2m: f64,
}

/// A mass law placed on a barrier of width `d`, optionally mirrored (z → d − z).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassProfile {
    kind: ProfileKind,
    width: f64,
    mirrored: bool,
}

impl MassProfile {
    pub fn new(kind: ProfileKind, width: f64) -> Result<Self> {
        if !(width.is_finite() && width > 0.0) {
            return Err(Error::domain(format!("barrier width must be > 0, got {width}")));
        }
        kind.validate()?;
        Ok(Self { kind, width, mirrored: false })
    }

    pub fn kind(&self) -> ProfileKind {
        self.kind
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn is_mirrored(&self) -> bool {
        self.mirrored
    }

    /// The same profile reflected about the barrier centre.
    pub fn mirrored(&self) -> Self {
        Self { mirrored: !self.mirrored, ..*self }
    }

    fn zeta(&self, z: f64) -> Result<f64> {
        if !(0.0..=self.width).contains(&z) {
            return Err(Error::domain(format!("z = {z} Å outside the barrier [0, {}]", self.width)));
        }
        let zeta = z / self.width;
        Ok(if self.mirrored { 1.0 - zeta } else { zeta })
    }

    pub fn mass_at(&self, z: f64) -> Result<MassRatio> {
        let zeta = self.zeta(z)?;
        MassRatio::new(self.kind.eval(zeta).0)
    }

    pub fn derivs(&self, z: f64) -> Result<MassDerivs> {
        let zeta = self.zeta(z)?;
        let (m, m1, m2) = self.kind.eval(zeta);
        let sign = if self.mirrored { -1.0 } else { 1.0 };
        Ok(MassDerivs { m, dm: sign * m1 / self.width, d2m: m2 / (self.width * self.width) })
    }

    /// f(z2) − f(z1) with f(z) = ∫√(m/mₑ) dz, in √mₑ·Å.
    pub fn phase_integral(&self, z1: f64, z2: f64) -> Result<f64> {
        if z1 > z2 {
            return Err(Error::domain(format!("phase integral needs z1 <= z2, got {z1} > {z2}")));
        }
        let (zeta1, zeta2) = (self.zeta(z1)?, self.zeta(z2)?);
        if z1 == z2 {
            return Ok(0.0);
        }
        // mirrored profiles run the antiderivative backwards
        let (lo, hi) = if self.mirrored { (zeta2, zeta1) } else { (zeta1, zeta2) };
        match (self.kind.root_antiderivative(lo), self.kind.root_antiderivative(hi)) {
            (Some(a), Some(b)) => Ok(self.width * (b - a)),
            _ => adaptive_quadrature(|z| self.kind.eval(self.zeta_unchecked(z)).0.sqrt(), z1, z2, DEFAULT_TOL),
        }
    }

    fn zeta_unchecked(&self, z: f64) -> f64 {
        let zeta = z / self.width;
        if self.mirrored {
            1.0 - zeta
        } else {
            zeta
        }
    }
}

/// Interior potential used for the barrier region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PotentialMode {
    /// V₀ plus the mass-gradient term that makes the interior exactly solvable.
    #[default]
    Corrected,
    /// V₀ alone. Only the transfer-matrix engine can solve this case.
    Bare,
}

impl PotentialMode {
    pub fn name(self) -> &'static str {
        match self {
            PotentialMode::Corrected => "corrected",
            PotentialMode::Bare => "bare",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSample {
    /// Å
    pub z: f64,
    /// meV
    pub v: f64,
}

/// Square barrier of width d with a graded mass inside and a constant mass
/// `m_out` in both leads. The potential is zero outside.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BarrierSpec {
    profile: MassProfile,
    v0: Energy,
    m_out: MassRatio,
    mode: PotentialMode,
}

impl BarrierSpec {
    pub fn new(profile: MassProfile, v0: Energy, m_out: f64) -> Result<Self> {
        if !v0.is_finite() {
            return Err(Error::domain(format!("barrier height must be finite, got {v0}")));
        }
        Ok(Self { profile, v0, m_out: MassRatio::new(m_out)?, mode: PotentialMode::Corrected })
    }

    /// `kind` on a 100 Å, 100 meV barrier between GaAs leads.
    pub fn with_defaults(kind: ProfileKind) -> Result<Self> {
        Self::new(MassProfile::new(kind, DEFAULT_WIDTH)?, DEFAULT_V0, DEFAULT_M_OUT)
    }

    pub fn with_mode(self, mode: PotentialMode) -> Self {
        Self { mode, ..self }
    }

    pub fn mirrored(&self) -> Self {
        Self { profile: self.profile.mirrored(), ..*self }
    }

    pub fn width(&self) -> f64 {
        self.profile.width()
    }

    pub fn v0(&self) -> Energy {
        self.v0
    }

    pub fn m_out(&self) -> MassRatio {
        self.m_out
    }

    pub fn profile(&self) -> &MassProfile {
        &self.profile
    }

    pub fn mode(&self) -> PotentialMode {
        self.mode
    }

    /// Interior potential at z: V₀ + ħ²/(8m²)·(m″ − 7m′²/(4m)) in corrected mode.
    pub fn effective_potential(&self, z: f64) -> Result<Energy> {
        let MassDerivs { m, dm, d2m } = self.profile.derivs(z)?;
        Ok(match self.mode {
            PotentialMode::Bare => self.v0,
            PotentialMode::Corrected => {
                self.v0 + HBAR2_OVER_2ME / (4.0 * m * m) * (d2m - 7.0 * dm * dm / (4.0 * m))
            }
        })
    }

    /// `n_points` uniform samples of the interior potential, endpoints included.
    pub fn potential_profile(&self, n_points: usize) -> Result<Vec<PotentialSample>> {
        if n_points < 2 {
            return Err(Error::domain(format!("need at least 2 samples, got {n_points}")));
        }
        let d = self.width();
        (0..n_points)
            .map(|i| {
                let z = if i == n_points - 1 { d } else { d * i as f64 / (n_points - 1) as f64 };
                Ok(PotentialSample { z, v: self.effective_potential(z)? })
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn profile(kind: ProfileKind) -> MassProfile {
        MassProfile::new(kind, DEFAULT_WIDTH).unwrap()
    }

    #[test]
    fn catalog_values_at_edges() {
        let q = profile(ProfileKind::quadratic());
        assert_eq!(q.mass_at(0.0).unwrap().get(), 0.0665);
        assert!((q.mass_at(100.0).unwrap().get() - 0.15).abs() < 1e-15);
        let r = profile(ProfileKind::rational());
        assert!((r.mass_at(0.0).unwrap().get() - 0.0665).abs() < 1e-16);
        let a = profile(ProfileKind::alloy());
        assert!((a.mass_at(100.0).unwrap().get() - (0.0665 + 0.0835 * 0.32)).abs() < 1e-16);
    }

    #[test]
    fn alloy_equals_quadratic_with_composed_slope() {
        let a = profile(ProfileKind::alloy());
        let q = profile(ProfileKind::Quadratic { sigma: 0.0665, delta: 0.02672 });
        for z in [0.0, 13.0, 50.0, 77.7, 100.0] {
            assert!((a.mass_at(z).unwrap().get() - q.mass_at(z).unwrap().get()).abs() < 1e-16);
        }
    }

    #[test]
    fn rejects_out_of_range() {
        let q = profile(ProfileKind::quadratic());
        assert!(q.mass_at(-1e-9).is_err());
        assert!(q.mass_at(100.0 + 1e-9).is_err());
        assert!(q.derivs(f64::NAN).is_err());
        assert!(q.phase_integral(50.0, 40.0).is_err());
        assert!(MassProfile::new(ProfileKind::quadratic(), 0.0).is_err());
        assert!(MassProfile::new(ProfileKind::Quadratic { sigma: 0.0, delta: 0.1 }, 10.0).is_err());
        assert!(MassProfile::new(ProfileKind::Rational { sigma: 0.1, delta: -0.1 }, 10.0).is_err());
        assert!(MassProfile::new(ProfileKind::step(-1.0), 10.0).is_err());
        assert!(MassProfile::new(ProfileKind::AlloyGraded { base: 0.0665, slope: 0.0835, xmax: 1.5 }, 10.0).is_err());
    }

    #[test]
    fn exponential_and_quadratic_derivatives() {
        let e = profile(ProfileKind::exponential());
        let a = DEFAULT_DELTA.sqrt();
        for z in [0.0, 31.0, 100.0] {
            let d = e.derivs(z).unwrap();
            assert!((d.dm - a / 100.0 * d.m).abs() < 1e-18);
            assert!((d.d2m - DEFAULT_DELTA / 1e4 * d.m).abs() < 1e-20);
        }
        let q = profile(ProfileKind::quadratic()).derivs(0.0).unwrap();
        assert_eq!(q.dm, 0.0);
        assert!((q.d2m - 2.0 * DEFAULT_DELTA / 1e4).abs() < 1e-20);
    }

    #[test]
    fn positive_on_dense_grid() {
        for kind in ProfileKind::catalog() {
            let p = profile(kind);
            for i in 0..=10_000 {
                let z = 100.0 * i as f64 / 10_000.0;
                assert!(p.mass_at(z).unwrap().get() > 0.0, "{kind} at {z}");
            }
        }
    }

    #[test]
    fn constant_step_phase() {
        let p = profile(ProfileKind::step(0.0665));
        let f = p.phase_integral(0.0, 100.0).unwrap();
        assert!((f - 100.0 * 0.0665_f64.sqrt()).abs() < 1e-13);
        assert!((f - 25.7876).abs() < 1e-4);
        for kind in ProfileKind::catalog() {
            assert_eq!(profile(kind).phase_integral(42.0, 42.0).unwrap(), 0.0);
        }
    }

    #[test]
    fn quadratic_phase_matches_antiderivative() {
        let (s, dl) = (DEFAULT_SIGMA, DEFAULT_DELTA);
        let anti = |t: f64| 0.5 * t * (s + dl * t * t).sqrt() + s / (2.0 * dl.sqrt()) * (t * (dl / s).sqrt()).asinh();
        let expected = 100.0 * (anti(1.0) - anti(0.0));
        let f = profile(ProfileKind::quadratic()).phase_integral(0.0, 100.0).unwrap();
        assert!((f - expected).abs() < 1e-12);
        let q = adaptive_quadrature(|z| (s + dl * (z / 100.0).powi(2)).sqrt(), 0.0, 100.0, 1e-12).unwrap();
        assert!((f - q).abs() < 1e-10);
    }

    #[test]
    fn closed_forms_agree_with_quadrature() {
        for kind in ProfileKind::catalog() {
            for mirrored in [false, true] {
                let mut p = profile(kind);
                if mirrored {
                    p = p.mirrored();
                }
                for (z1, z2) in [(0.0, 100.0), (12.5, 60.0), (70.0, 99.0)] {
                    let f = p.phase_integral(z1, z2).unwrap();
                    let q = adaptive_quadrature(|z| p.mass_at(z).unwrap().get().sqrt(), z1, z2, 1e-12).unwrap();
                    assert!((f - q).abs() < 1e-10, "{kind} mirrored={mirrored} [{z1},{z2}]: {f} vs {q}");
                }
            }
        }
    }

    #[test]
    fn mirror_reflects_mass_and_flips_slope() {
        for kind in ProfileKind::catalog() {
            let p = profile(kind);
            let m = p.mirrored();
            for z in [0.0, 20.0, 64.0, 100.0] {
                let a = p.derivs(z).unwrap();
                let b = m.derivs(100.0 - z).unwrap();
                assert!((a.m - b.m).abs() < 1e-15);
                assert!((a.dm + b.dm).abs() < 1e-17);
                assert!((a.d2m - b.d2m).abs() < 1e-18);
            }
            assert_eq!(m.mirrored(), p);
        }
    }

    #[test]
    fn corrected_potential_examples() {
        let step = BarrierSpec::with_defaults(ProfileKind::step(0.3)).unwrap();
        for z in [0.0, 50.0, 100.0] {
            assert_eq!(step.effective_potential(z).unwrap(), 100.0);
        }

        // exponential: correction = −3δC/(16σd²) at z = 0
        let exp = BarrierSpec::with_defaults(ProfileKind::exponential()).unwrap();
        let expected = 100.0 - 3.0 * DEFAULT_DELTA * HBAR2_OVER_2ME / (16.0 * DEFAULT_SIGMA * 1e4);
        let v = exp.effective_potential(0.0).unwrap();
        assert!((v - expected).abs() < 1e-12);
        assert!((v - (100.0 - 0.0897)).abs() < 1e-4);

        // quadratic: correction = C·2δ/(4σ²d²) at z = 0
        let quad = BarrierSpec::with_defaults(ProfileKind::quadratic()).unwrap();
        let expected = 100.0 + HBAR2_OVER_2ME * 2.0 * DEFAULT_DELTA / (4.0 * DEFAULT_SIGMA.powi(2) * 1e4);
        let v = quad.effective_potential(0.0).unwrap();
        assert!((v - expected).abs() < 1e-12);
        assert!((v - 103.597).abs() < 1e-3);

        let bare = quad.with_mode(PotentialMode::Bare);
        assert_eq!(bare.effective_potential(0.0).unwrap(), 100.0);
    }

    #[test]
    fn potential_profile_sampling() {
        let step = BarrierSpec::with_defaults(ProfileKind::step(0.0665)).unwrap();
        let s = step.potential_profile(3).unwrap();
        assert_eq!(s.len(), 3);
        assert!(s.iter().all(|p| p.v == 100.0));
        assert_eq!(s[1].z, 50.0);
        let s = step.potential_profile(2).unwrap();
        assert_eq!((s[0].z, s[1].z), (0.0, 100.0));
        assert!(step.potential_profile(1).is_err());
    }

    fn fd_check(kind: ProfileKind, z: f64) -> std::result::Result<(), TestCaseError> {
        let p = profile(kind);
        let h = 1e-3;
        let lo = p.derivs(z - h).unwrap();
        let hi = p.derivs(z + h).unwrap();
        let at = p.derivs(z).unwrap();
        let dm_fd = (hi.m - lo.m) / (2.0 * h);
        let d2m_fd = (hi.dm - lo.dm) / (2.0 * h);
        let d = p.width();
        prop_assert!((dm_fd - at.dm).abs() <= 1e-6 * (at.dm.abs() + at.m / d), "{kind} m' at {z}: {dm_fd} vs {}", at.dm);
        prop_assert!((d2m_fd - at.d2m).abs() <= 1e-6 * (at.d2m.abs() + at.m / (d * d)), "{kind} m'' at {z}: {d2m_fd} vs {}", at.d2m);
        Ok(())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn derivatives_match_finite_differences(z in 0.01f64..99.99) {
            for kind in ProfileKind::catalog() {
                fd_check(kind, z)?;
            }
        }

        #[test]
        fn phase_integral_is_additive_and_monotone(a in 0.0f64..100.0, b in 0.0f64..100.0, c in 0.0f64..100.0) {
            let mut v = [a, b, c];
            v.sort_by(f64::total_cmp);
            let [a, b, c] = v;
            for kind in ProfileKind::catalog() {
                let p = profile(kind);
                let ab = p.phase_integral(a, b).unwrap();
                let bc = p.phase_integral(b, c).unwrap();
                let ac = p.phase_integral(a, c).unwrap();
                prop_assert!((ab + bc - ac).abs() < 1e-10);
                prop_assert!(ab >= 0.0 && bc >= 0.0);
                prop_assert!(p.phase_integral(0.0, b).unwrap() <= p.phase_integral(0.0, c).unwrap());
            }
        }
    }
}
