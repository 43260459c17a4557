use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Column-style Hermite normal form.
///
/// Returns `(H, U)` with `M·U = H`, `U` unimodular. Pivots of `H` are positive,
/// sit in strictly increasing rows as the column index grows, and every entry
/// to the left of a pivot lies in `[0, pivot)`. Zero columns come last.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (rows, cols) = m.shape();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(cols);
    let mut p = 0;
    for i in 0..rows {
        if p == cols {
            break;
        }
        for j in p + 1..cols {
            if h[(i, j)].is_zero() {
                continue;
            }
            let a = h[(i, p)].clone();
            let b = h[(i, j)].clone();
            if !a.is_zero() && b.is_multiple_of(&a) {
                let q = -(&b / &a);
                h.add_col_multiple(j, p, &q);
                u.add_col_multiple(j, p, &q);
                continue;
            }
            let e = a.extended_gcd(&b);
            let g = e.gcd;
            let (na, nb) = (-(&b / &g), &a / &g);
            let coeffs = [&e.x, &e.y, &na, &nb];
            h.combine_cols(p, j, coeffs);
            u.combine_cols(p, j, coeffs);
        }
        if h[(i, p)].is_zero() {
            continue;
        }
        if h[(i, p)].is_negative() {
            h.negate_col(p);
            u.negate_col(p);
        }
        let pivot = h[(i, p)].clone();
        for j in 0..p {
            let q: BigInt = -h[(i, j)].div_floor(&pivot);
            h.add_col_multiple(j, p, &q);
            u.add_col_multiple(j, p, &q);
        }
        p += 1;
    }
    (h, u)
}

/// Z-basis of the integer kernel `{x : M·x = 0}`, in Hermite normal form.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf(m);
    let first_zero = (0..h.cols())
        .find(|&j| (0..h.rows()).all(|i| h[(i, j)].is_zero()))
        .unwrap_or(h.cols());
    let k = u.columns_range(first_zero, u.cols());
    hnf(&k).0
}
