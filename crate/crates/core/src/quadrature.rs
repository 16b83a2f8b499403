//! Adaptive Gauss–Kronrod (7/15-point) quadrature.
//!
//! Used for phase integrals ∫√m dz of mass profiles without an elementary
//! antiderivative. The panel with the largest Kronrod/Gauss difference is
//! bisected until the summed difference drops below the absolute tolerance.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Default absolute tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Maximum bisection depth of any panel.
pub const MAX_DEPTH: u32 = 60;
/// Maximum number of bisections per integral.
pub const MAX_SUBDIVISIONS: usize = 2000;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd-indexed Kronrod nodes (XGK[1], XGK[3], XGK[5], XGK[7]).
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// One 15-point panel: (Kronrod estimate, |Kronrod − Gauss|, ∫|f| estimate).
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut abs = WGK[7] * fc.abs();

    for (j, (&x, &w)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let dx = half * x;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        kronrod += w * (f1 + f2);
        abs += w * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    (kronrod * half, ((kronrod - gauss) * half).abs(), abs * half.abs())
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    abs: f64,
    depth: u32,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error).then_with(|| other.a.total_cmp(&self.a))
    }
}

/// Integrates `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Deterministic: the subdivision pattern depends only on `f`, the interval
/// and `tol`. Fails with [`Error::QuadratureFailure`] carrying the best
/// estimate when the worst panel reaches [`MAX_DEPTH`] or the
/// [`MAX_SUBDIVISIONS`] budget runs out.
pub fn adaptive_quadrature<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(Error::domain(format!("quadrature needs finite a <= b, got [{a}, {b}]")));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!("quadrature tolerance must be positive, got {tol}")));
    }
    if a == b {
        return Ok(0.0);
    }

    let (value, error, mut abs) = gk15(&f, a, b);
    let mut total = value;
    let mut total_error = error;
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value, error, abs, depth: 0 });

    for _ in 0..MAX_SUBDIVISIONS {
        if !total.is_finite() {
            return Err(Error::numerical("non-finite integrand"));
        }
        // below 50ε·∫|f| the Kronrod/Gauss difference is round-off
        if total_error <= tol || total_error <= 50.0 * f64::EPSILON * abs {
            return Ok(total);
        }
        let worst = heap.pop().expect("at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if worst.depth >= MAX_DEPTH || mid <= worst.a || mid >= worst.b {
            heap.push(worst);
            break;
        }
        let (lv, le, la) = gk15(&f, worst.a, mid);
        let (rv, re, ra) = gk15(&f, mid, worst.b);
        total += lv + rv - worst.value;
        total_error += le + re - worst.error;
        abs += la + ra - worst.abs;
        heap.push(Panel { a: worst.a, b: mid, value: lv, error: le, abs: la, depth: worst.depth + 1 });
        heap.push(Panel { a: mid, b: worst.b, value: rv, error: re, abs: ra, depth: worst.depth + 1 });
    }

    // re-sum to shed the drift of the running totals
    let estimate: f64 = heap.iter().map(|p| p.value).sum();
    let error: f64 = heap.iter().map(|p| p.error).sum();
    if error <= tol {
        return Ok(estimate);
    }
    Err(Error::QuadratureFailure { estimate, error })
}
