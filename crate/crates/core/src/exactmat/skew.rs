use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{IntMatrix, MatrixError};

/// Result of [`skew_normal_form`]: `Pᵀ·Z·P = d₁W₁ ⊕ … ⊕ d_rW₁ ⊕ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewNormalForm {
    pub p: IntMatrix,
    pub d: Vec<BigInt>,
}

/// `d₁W₁ ⊕ … ⊕ d_rW₁ ⊕ 0` of size `n`, with `W₁ = [[0,1],[-1,0]]`.
pub fn skew_block_form(d: &[BigInt], n: usize) -> IntMatrix {
    assert!(2 * d.len() <= n, "too many blocks for size {n}");
    let mut m = IntMatrix::zeros(n, n);
    for (t, dt) in d.iter().enumerate() {
        m[(2 * t, 2 * t + 1)] = dt.clone();
        m[(2 * t + 1, 2 * t)] = -dt;
    }
    m
}

struct Congruence {
    a: IntMatrix,
    p: IntMatrix,
}

impl Congruence {
    fn swap(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.a.swap_cols(i, j);
        self.p.swap_cols(i, j);
    }

    /// Column and row `dst += q · src`.
    fn add(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.a.add_col_multiple(dst, src, q);
        self.a.add_row_multiple(dst, src, q);
        self.p.add_col_multiple(dst, src, q);
    }

    fn min_entry(&self, from: usize) -> Option<(usize, usize)> {
        let n = self.a.rows();
        let mut best: Option<(usize, usize)> = None;
        for i in from..n {
            for j in from..n {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Clears rows/columns `b`, `b+1` beyond the pivot. Returns false when a
    /// nonzero remainder appeared, which means a smaller pivot is available.
    fn clear_pair(&mut self, b: usize) -> bool {
        let n = self.a.rows();
        let g = self.a[(b, b + 1)].clone();
        let mut clean = true;
        for k in b + 2..n {
            let q = -self.a[(b, k)].div_floor(&g);
            self.add(k, b + 1, &q);
            let q = self.a[(b + 1, k)].div_floor(&g);
            self.add(k, b, &q);
            clean &= self.a[(b, k)].is_zero() && self.a[(b + 1, k)].is_zero();
        }
        clean
    }
}

/// Unimodular congruence of a skew-symmetric matrix to its skew normal form.
///
/// Minimal-pivot reduction: the smallest nonzero entry is moved to `(b, b+1)`,
/// its rows and columns are cleared, and the step restarts whenever a smaller
/// remainder shows up. A pivot that fails to divide the trailing block is
/// pushed down by adding the offending row into row `b`.
pub fn skew_normal_form(z: &IntMatrix) -> Result<SkewNormalForm, MatrixError> {
    if !z.is_skew_symmetric() {
        return Err(MatrixError::NotSkewSymmetric);
    }
    let n = z.rows();
    let mut st = Congruence {
        a: z.clone(),
        p: IntMatrix::identity(n),
    };
    let mut d = Vec::new();
    let mut b = 0;
    while b + 1 < n {
        let Some((i, j)) = st.min_entry(b) else {
            break;
        };
        st.swap(b, i);
        let j = if j == b { i } else { j };
        st.swap(b + 1, j);
        if st.a[(b, b + 1)].is_negative() {
            st.swap(b, b + 1);
        }
        if !st.clear_pair(b) {
            continue;
        }
        let g = st.a[(b, b + 1)].clone();
        let bad = (b + 2..n).find_map(|r| {
            (b + 2..n)
                .find(|&c| !st.a[(r, c)].is_multiple_of(&g))
                .map(|_| r)
        });
        if let Some(r) = bad {
            st.add(b, r, &BigInt::one());
            continue;
        }
        d.push(g);
        b += 2;
    }
    debug_assert_eq!(st.a, skew_block_form(&d, n));
    Ok(SkewNormalForm { p: st.p, d })
}
