use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{IntMatrix, MatrixError};

/// Positive semi-definiteness and rational rank of a symmetric matrix.
///
/// Symmetric Gaussian elimination with diagonal pivots. A negative pivot, or a
/// remaining block with zero diagonal but a nonzero off-diagonal entry, is a
/// witness of indefiniteness.
pub fn psd_rank(s: &IntMatrix) -> Result<(bool, usize), MatrixError> {
    if !s.is_symmetric() {
        return Err(MatrixError::NotSymmetric);
    }
    let n = s.rows();
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            s.row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut psd = true;
    while !alive.is_empty() {
        if alive.iter().any(|&i| a[i][i].is_negative()) {
            psd = false;
            break;
        }
        let Some(pos) = alive.iter().position(|&i| a[i][i].is_positive()) else {
            psd = alive
                .iter()
                .all(|&i| alive.iter().all(|&j| a[i][j].is_zero()));
            break;
        };
        let p = alive.swap_remove(pos);
        let piv = a[p][p].clone();
        for &j in &alive {
            if a[j][p].is_zero() {
                continue;
            }
            let f = &a[j][p] / &piv;
            for &k in &alive {
                let delta = &f * &a[p][k];
                a[j][k] -= delta;
            }
        }
    }
    Ok((psd, s.rank()))
}
