use num_bigint::BigInt;
use num_traits::Zero;

use super::walk::{incidence_vector, structural_walk, Direction};
use super::{Permutation, Quiver};
use crate::exactmat::{IntMatrix, IntVector};
use crate::standard::Partition;

/// `ξ(v)` is the end of the descending structural walk from `v`.
pub fn xi_and_cycle_type(q: &Quiver) -> (Permutation, Partition) {
    let images = (1..=q.vertex_count())
        .map(|v| structural_walk(q, v, Direction::Descending).end())
        .collect();
    let xi = Permutation::new(images).expect("structural walks end at distinct vertices");
    let ct = xi.cycle_type();
    (xi, ct)
}

/// `Λ_Q = Id − I(Q)·Ĝ⁻¹·I(Q)ᵀ`, computed from the matrix formula.
pub fn coxeter_laplacian(q: &Quiver) -> IntMatrix {
    let inc = q.incidence();
    let gi = q.upper_gram().inverse().expect("upper unitriangular");
    let prod = &(&inc * &gi) * &inc.transpose();
    &IntMatrix::identity(q.vertex_count()) - &prod
}

/// The inverse quiver, read off the descending structural walks: arrow `i`
/// runs from `ξ(w)` to `ξ(v)`, where `α⁻(v)` uses `i` forwards and `α⁻(w)`
/// uses it backwards.
pub fn inverse_quiver(q: &Quiver) -> Quiver {
    let m = q.vertex_count();
    let n = q.arrow_count();
    let mut src = vec![0usize; n];
    let mut tgt = vec![0usize; n];
    for v in 1..=m {
        let w = structural_walk(q, v, Direction::Descending);
        for s in w.steps() {
            let slot = if s.sign > 0 { &mut tgt } else { &mut src };
            debug_assert_eq!(slot[s.arrow - 1], 0, "arrow visited twice with one sign");
            slot[s.arrow - 1] = w.end();
        }
    }
    let arrows = src
        .into_iter()
        .zip(tgt)
        .enumerate()
        .map(|(k, (s, t))| {
            assert!(
                s != 0 && t != 0,
                "arrow {} missing from structural walks",
                k + 1
            );
            (s, t)
        })
        .collect();
    Quiver::from_arrows(m, arrows).expect("endpoints are vertices")
}

/// One incidence vector per `ξ`-orbit: the sum of `inc(α⁻(v))` over the orbit.
///
/// Orbits are ordered by size (largest first), then by smallest member.
pub fn beta_vectors(q: &Quiver) -> Vec<IntVector> {
    let n = q.arrow_count();
    let (xi, _) = xi_and_cycle_type(q);
    orbits(&xi)
        .iter()
        .map(|orbit| {
            let mut acc = vec![BigInt::zero(); n];
            for &v in orbit {
                let a = incidence_vector(&structural_walk(q, v, Direction::Descending), n);
                for (x, y) in acc.iter_mut().zip(a) {
                    *x += y;
                }
            }
            acc
        })
        .collect()
}

/// Cycles of `ξ` in the canonical orbit order.
pub(crate) fn orbits(xi: &Permutation) -> Vec<Vec<usize>> {
    let mut cyc = xi.cycles();
    cyc.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    cyc
}
