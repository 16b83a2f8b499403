//! Dense complex LU with partial pivoting, sized for the small boundary systems.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub(crate) struct Lu<const N: usize> {
    lu: [[Complex64; N]; N],
    perm: [usize; N],
}

impl<const N: usize> Lu<N> {
    pub(crate) fn factor(mut a: [[Complex64; N]; N]) -> Result<Self> {
        let mut perm: [usize; N] = std::array::from_fn(|i| i);
        for col in 0..N {
            let pivot = (col..N)
                .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
                .expect("non-empty range");
            if a[pivot][col].norm() == 0.0 {
                return Err(Error::numerical("singular boundary system"));
            }
            a.swap(col, pivot);
            perm.swap(col, pivot);
            for row in col + 1..N {
                let factor = a[row][col] / a[col][col];
                a[row][col] = factor;
                for k in col + 1..N {
                    let sub = factor * a[col][k];
                    a[row][k] -= sub;
                }
            }
        }
        Ok(Self { lu: a, perm })
    }

    pub(crate) fn solve(&self, b: &[Complex64; N]) -> [Complex64; N] {
        let mut x: [Complex64; N] = std::array::from_fn(|i| b[self.perm[i]]);
        for i in 0..N {
            for k in 0..i {
                let sub = self.lu[i][k] * x[k];
                x[i] -= sub;
            }
        }
        for i in (0..N).rev() {
            for k in i + 1..N {
                let sub = self.lu[i][k] * x[k];
                x[i] -= sub;
            }
            x[i] /= self.lu[i][i];
        }
        x
    }

    /// ‖A⁻¹‖₁, by solving against each unit vector.
    pub(crate) fn inverse_norm1(&self) -> f64 {
        (0..N)
            .map(|j| {
                let e: [Complex64; N] = std::array::from_fn(|i| if i == j { Complex64::new(1.0, 0.0) } else { Complex64::default() });
                self.solve(&e).iter().map(|z| z.norm()).sum::<f64>()
            })
            .fold(0.0, f64::max)
    }
}

pub(crate) fn norm1<const N: usize>(a: &[[Complex64; N]; N]) -> f64 {
    (0..N).map(|j| (0..N).map(|i| a[i][j].norm()).sum::<f64>()).fold(0.0, f64::max)
}

/// Solves `a·x = b` after scaling every row to unit max-norm.
/// Returns the solution and the 1-norm condition number of the scaled system.
pub(crate) fn solve_equilibrated<const N: usize>(
    mut a: [[Complex64; N]; N],
    mut b: [Complex64; N],
) -> Result<([Complex64; N], f64)> {
    for (row, rhs) in a.iter_mut().zip(b.iter_mut()) {
        let scale = row.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if scale == 0.0 || !scale.is_finite() {
            return Err(Error::numerical("degenerate row in boundary system"));
        }
        row.iter_mut().for_each(|z| *z /= scale);
        *rhs /= scale;
    }
    let lu = Lu::factor(a)?;
    let cond = norm1(&a) * lu.inverse_norm1();
    Ok((lu.solve(&b), cond))
}
