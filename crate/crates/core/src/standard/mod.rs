//! Standard `(π, d)`-extension quivers and their combinatorics.

mod partition;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactmat::{IntMatrix, IntVector};
use crate::quiver::{beta_vectors, xi_and_cycle_type, Quiver};

pub use partition::{
    count_classes, partitions, partitions_exact_parts, partitions_part1, Partition, PartitionError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StandardError {
    #[error("standard quivers need m = Σπ ≥ 2, got {0}")]
    InvalidShape(usize),
    #[error("Kronecker quivers need n ≥ 1")]
    EmptyKronecker,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Path-based representative.
    A,
    /// Star-based quiver, the inverse of the `A` variant.
    Star,
}

/// `v_t = m − (π₁ + … + π_t)` for `t = 0..=ℓ`.
pub(crate) fn break_vertices(pi: &Partition) -> Vec<usize> {
    let m = pi.sum();
    let mut acc = 0;
    let mut v = vec![m];
    for &p in pi.parts() {
        acc += p;
        v.push(m - acc);
    }
    v
}

/// Arrows `i_1..i_{m−1}`, then `j_1..j_{ℓ−1}`, then `k_1..k_{2d}`.
pub fn standard_quiver(
    pi: &Partition,
    d: usize,
    variant: Variant,
) -> Result<Quiver, StandardError> {
    let m = pi.sum();
    if m < 2 {
        return Err(StandardError::InvalidShape(m));
    }
    let l = pi.len();
    let v = break_vertices(pi);
    let mut arrows = Vec::with_capacity(m + l + 2 * d - 2);
    match variant {
        Variant::A => {
            arrows.extend((1..m).map(|t| (t, t + 1)));
            arrows.extend((1..l).map(|t| (v[t - 1], v[t])));
        }
        Variant::Star => {
            arrows.extend((1..m).map(|t| (1, t + 1)));
            arrows.extend((1..l).map(|t| (1, v[t] + 1)));
        }
    }
    let alpha = *arrows.last().expect("m ≥ 2 gives at least one arrow");
    for t in 1..=2 * d {
        let k = match variant {
            Variant::A if t % 2 == 1 => (alpha.1, alpha.0),
            _ => alpha,
        };
        arrows.push(k);
    }
    Ok(Quiver::new(m, arrows).expect("standard quivers are connected and loop-less"))
}

/// Generalized Kronecker quiver `K_n` (all arrows `1 → 2`), or its inverse
/// with alternating orientations starting from `1 → 2`.
pub fn kronecker(n: usize, inverse: bool) -> Result<Quiver, StandardError> {
    if n == 0 {
        return Err(StandardError::EmptyKronecker);
    }
    let arrows = (0..n)
        .map(|k| {
            if inverse && k % 2 == 1 {
                (2, 1)
            } else {
                (1, 2)
            }
        })
        .collect();
    Ok(Quiver::new(2, arrows).expect("two vertices, at least one arrow"))
}

/// Kernel matrix `K = [K′, K″]` of the standard quiver `A^d[π]`.
///
/// `K′` holds the `2d` Kronecker vectors on the last `2d + 1` arrows and
/// `K″` the orbit vectors of all but the last `ξ`-orbit. Returns `K` and the
/// split index `2d`.
pub fn standard_kernel(pi: &Partition, d: usize) -> Result<(IntMatrix, usize), StandardError> {
    let q = standard_quiver(pi, d, Variant::A)?;
    let n = q.arrow_count();
    let off = n - (2 * d + 1);
    let b = |t: usize| -> IntVector {
        // b_t = e_t + e_{t+1} in local coordinates 1..=2d+1
        let mut x = vec![BigInt::zero(); n];
        x[off + t - 1] = BigInt::one();
        x[off + t] = BigInt::one();
        x
    };
    let mut cols: Vec<IntVector> = Vec::with_capacity(2 * d + pi.len() - 1);
    for t in 1..=2 * d {
        let c = if t % 2 == 0 {
            b(t).into_iter().map(|x| -x).collect()
        } else {
            let mut acc = vec![BigInt::zero(); n];
            for r in (1..=t).step_by(2) {
                for (a, y) in acc.iter_mut().zip(b(r)) {
                    *a += y;
                }
            }
            acc
        };
        cols.push(c);
    }
    let mut betas = beta_vectors(&q);
    betas.pop();
    cols.extend(betas);
    Ok((IntMatrix::from_columns(n, &cols), 2 * d))
}

/// Cycle type and degeneracy of the unique standard quiver with the same
/// vertex count, arrow count and cycle type as `q`.
pub fn standard_for(q: &Quiver) -> (Partition, usize) {
    let (_, pi) = xi_and_cycle_type(q);
    let corank = q.arrow_count() + 1 - q.vertex_count();
    let twice_d = corank + 1 - pi.len();
    debug_assert!(twice_d.is_multiple_of(2));
    (pi, twice_d / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmat::skew_block_form;
    use crate::imat;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn example_standard_quivers() {
        let q = standard_quiver(&p(&[3]), 1, Variant::A).unwrap();
        assert_eq!(
            q.incidence(),
            imat![[1, 0, 0, 0], [-1, 1, -1, 1], [0, -1, 1, -1]]
        );
        let q = standard_quiver(&p(&[1, 1, 1]), 0, Variant::A).unwrap();
        assert_eq!(
            q.incidence(),
            imat![[1, 0, 0, -1], [-1, 1, -1, 1], [0, -1, 1, 0]]
        );
    }

    #[test]
    fn single_cycle_standard() {
        let q = standard_quiver(&p(&[2]), 0, Variant::A).unwrap();
        assert_eq!(q.arrows(), &[(1, 2)]);
        assert_eq!(xi_and_cycle_type(&q).1, p(&[2]));
        let q = standard_quiver(&p(&[5]), 0, Variant::A).unwrap();
        assert_eq!(xi_and_cycle_type(&q).1, p(&[5]));
    }

    #[test]
    fn kronecker_inverses() {
        assert_eq!(kronecker(1, false).unwrap().arrows(), &[(1, 2)]);
        assert_eq!(
            kronecker(3, true).unwrap(),
            standard_quiver(&p(&[2]), 1, Variant::A).unwrap()
        );
        assert_eq!(
            kronecker(4, true).unwrap(),
            standard_quiver(&p(&[1, 1]), 1, Variant::A).unwrap()
        );
    }

    #[test]
    fn kernel_block_form() {
        let (k, split) = standard_kernel(&p(&[3]), 1).unwrap();
        assert_eq!(k, imat![[0, 0], [1, 0], [1, -1], [0, -1]]);
        assert_eq!(split, 2);
        let gh = standard_quiver(&p(&[3]), 1, Variant::A)
            .unwrap()
            .upper_gram();
        assert_eq!(&(&k.transpose() * &gh) * &k, imat![[0, 1], [-1, 0]]);

        let (k, split) = standard_kernel(&p(&[1, 1, 1]), 0).unwrap();
        assert_eq!((k.cols(), split), (2, 0));
        let gh = standard_quiver(&p(&[1, 1, 1]), 0, Variant::A)
            .unwrap()
            .upper_gram();
        assert!((&(&k.transpose() * &gh) * &k).is_zero());

        let (k, _) = standard_kernel(&p(&[4]), 0).unwrap();
        assert_eq!(k.shape(), (3, 0));
    }

    #[test]
    fn kernel_block_form_sweep() {
        for m in 2..=6 {
            for pi in partitions(m) {
                for d in 0..=3 {
                    let q = standard_quiver(&pi, d, Variant::A).unwrap();
                    let (k, _) = standard_kernel(&pi, d).unwrap();
                    assert!((&q.incidence() * &k).is_zero());
                    let w = &(&k.transpose() * &q.upper_gram()) * &k;
                    let ones = vec![BigInt::one(); d];
                    assert_eq!(w, skew_block_form(&ones, k.cols()), "π={pi} d={d}");
                    assert_eq!(k.rank(), k.cols());
                }
            }
        }
    }

    #[test]
    fn standard_for_examples() {
        let q1 = Quiver::new(3, vec![(3, 1), (2, 3), (1, 2), (3, 1)]).unwrap();
        assert_eq!(standard_for(&q1), (p(&[3]), 1));
        let q0 = Quiver::new(3, vec![(3, 1), (2, 3), (3, 1), (1, 2)]).unwrap();
        assert_eq!(standard_for(&q0), (p(&[1, 1, 1]), 0));
        let path = Quiver::new(4, vec![(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(standard_for(&path), (p(&[4]), 0));
    }
}
