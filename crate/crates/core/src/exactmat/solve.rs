use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntMatrix, MatrixError};

fn to_rational(m: &IntMatrix) -> Vec<Vec<BigRational>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

/// Reduced row echelon form in place; returns pivot columns among the first `ncols`.
fn rref(a: &mut [Vec<BigRational>], ncols: usize) -> Vec<usize> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let (head, tail) = if i < r {
                    let (h, t) = a.split_at_mut(r);
                    (&mut h[i], &t[0])
                } else {
                    let (h, t) = a.split_at_mut(i);
                    (&mut t[0], &h[r])
                };
                for (x, y) in head.iter_mut().zip(tail.iter()) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(super) fn rational_rank(m: &IntMatrix) -> usize {
    let mut a = to_rational(m);
    rref(&mut a, m.cols()).len()
}

/// Solves `A·X = B` for the unique integer `X`.
///
/// `A` must have full column rank. A system that is consistent over the
/// rationals but whose solution has a non-integral entry is reported as
/// [`MatrixError::NonIntegerSolution`].
pub fn solve_exact(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix, MatrixError> {
    if a.rows() != b.rows() {
        return Err(MatrixError::ShapeMismatch(format!(
            "A has {} rows but B has {}",
            a.rows(),
            b.rows()
        )));
    }
    let n = a.cols();
    let k = b.cols();
    let mut aug: Vec<Vec<BigRational>> = (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .chain(b.row(i))
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() < n {
        return Err(MatrixError::Underdetermined);
    }
    // Rows below the pivots must have vanished on the right-hand side too.
    if aug[n..]
        .iter()
        .any(|row| row[n..].iter().any(|x| !x.is_zero()))
    {
        return Err(MatrixError::NoSolution);
    }
    let mut x = IntMatrix::zeros(n, k);
    for i in 0..n {
        for j in 0..k {
            let v = &aug[i][n + j];
            if !v.denom().is_one() {
                return Err(MatrixError::NonIntegerSolution);
            }
            x[(i, j)] = v.numer().clone();
        }
    }
    Ok(x)
}
