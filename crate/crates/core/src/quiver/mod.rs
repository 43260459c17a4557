//! Loop-less connected quivers with ordered arrows.
//!
//! Vertices and arrows are numbered from 1 in every public signature, matching
//! the file formats. Matrix rows/columns are of course 0-based.

mod coxeter;
mod perm;
mod random;
mod walk;

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::exactmat::IntMatrix;

pub use coxeter::{beta_vectors, coxeter_laplacian, inverse_quiver, xi_and_cycle_type};
pub use perm::Permutation;
pub use random::random_quiver;
pub use walk::{connecting_walk, incidence_vector, structural_walk, Direction, Step, Walk};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("a quiver needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("arrow {arrow} uses vertex {vertex} outside 1..={m}")]
    VertexOutOfRange {
        arrow: usize,
        vertex: usize,
        m: usize,
    },
    #[error("arrow {0} is a loop")]
    HasLoop(usize),
    #[error("quiver is disconnected; components {0:?}")]
    Disconnected(Vec<Vec<usize>>),
    #[error("cannot build a connected quiver with {m} vertices and {n} arrows")]
    InfeasibleShape { m: usize, n: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    m: usize,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    /// Checked constructor: endpoints in range, no loops, connected.
    pub fn new(m: usize, arrows: Vec<(usize, usize)>) -> Result<Self, QuiverError> {
        let q = Self::from_arrows(m, arrows)?;
        q.validate()?;
        Ok(q)
    }

    /// Only checks that endpoints lie in `1..=m`; see [`Quiver::validate`].
    pub fn from_arrows(m: usize, arrows: Vec<(usize, usize)>) -> Result<Self, QuiverError> {
        for (k, &(s, t)) in arrows.iter().enumerate() {
            for v in [s, t] {
                if v == 0 || v > m {
                    return Err(QuiverError::VertexOutOfRange {
                        arrow: k + 1,
                        vertex: v,
                        m,
                    });
                }
            }
        }
        Ok(Quiver { m, arrows })
    }

    pub fn validate(&self) -> Result<(), QuiverError> {
        if self.m < 2 {
            return Err(QuiverError::TooFewVertices(self.m));
        }
        if let Some(k) = self.arrows.iter().position(|&(s, t)| s == t) {
            return Err(QuiverError::HasLoop(k + 1));
        }
        let comps = self.components();
        if comps.len() > 1 {
            return Err(QuiverError::Disconnected(comps));
        }
        Ok(())
    }

    fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.m + 1];
        let mut out = Vec::new();
        for root in 1..=self.m {
            if comp[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![root];
            comp[root] = id;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &(s, t) in &self.arrows {
                    let y = if s == x {
                        t
                    } else if t == x {
                        s
                    } else {
                        continue;
                    };
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    /// `(source, target)` pairs in arrow order.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn source(&self, arrow: usize) -> usize {
        self.arrows[arrow - 1].0
    }

    pub fn target(&self, arrow: usize) -> usize {
        self.arrows[arrow - 1].1
    }

    /// `m × n` matrix with column `i` equal to `e_{s(i)} − e_{t(i)}`.
    pub fn incidence(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.m, self.arrows.len());
        for (k, &(s, t)) in self.arrows.iter().enumerate() {
            m[(s - 1, k)] += BigInt::one();
            m[(t - 1, k)] -= BigInt::one();
        }
        m
    }

    /// Symmetric Gram matrix `I(Q)ᵀI(Q)` and its upper unitriangular half.
    pub fn gram(&self) -> (IntMatrix, IntMatrix) {
        let inc = self.incidence();
        let g = &inc.transpose() * &inc;
        (g.clone(), upper_half(&g))
    }

    /// Upper unitriangular Gram matrix only.
    pub fn upper_gram(&self) -> IntMatrix {
        self.gram().1
    }

    /// Relabels vertices by `ρ` (arrow `s → t` becomes `ρ(s) → ρ(t)`), and
    /// reverses every arrow when `flip` is set. The unit form is unchanged.
    pub fn transform(&self, rho: &Permutation, flip: bool) -> Quiver {
        assert_eq!(rho.len(), self.m, "permutation size mismatch");
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, t)| {
                let (s, t) = (rho.apply(s), rho.apply(t));
                if flip {
                    (t, s)
                } else {
                    (s, t)
                }
            })
            .collect();
        Quiver { m: self.m, arrows }
    }
}

/// `Ĝ` from a symmetric `G` with even diagonal: strict upper part plus `Id`.
pub(crate) fn upper_half(g: &IntMatrix) -> IntMatrix {
    let n = g.rows();
    let mut u = IntMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            u[(i, j)] = g[(i, j)].clone();
        }
    }
    u
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::imat;

    #[test]
    fn validation_errors() {
        assert_eq!(Quiver::new(2, vec![(1, 1)]), Err(QuiverError::HasLoop(1)));
        assert_eq!(
            Quiver::new(2, vec![]),
            Err(QuiverError::Disconnected(vec![vec![1], vec![2]]))
        );
        assert!(matches!(
            Quiver::new(2, vec![(1, 3)]),
            Err(QuiverError::VertexOutOfRange {
                arrow: 1,
                vertex: 3,
                ..
            })
        ));
        assert!(q1().validate().is_ok());
    }

    #[test]
    fn incidence_matrices() {
        assert_eq!(
            q1().incidence(),
            imat![[-1, 0, 1, -1], [0, 1, -1, 0], [1, -1, 0, 1]]
        );
        assert_eq!(one_arrow().incidence(), imat![[1], [-1]]);
    }

    #[test]
    fn gram_matrices() {
        assert_eq!(
            q1().upper_gram(),
            imat![[1, -1, -1, 2], [0, 1, -1, -1], [0, 0, 1, -1], [0, 0, 0, 1]]
        );
        assert_eq!(
            q0().upper_gram(),
            imat![[1, -1, 2, -1], [0, 1, -1, -1], [0, 0, 1, -1], [0, 0, 0, 1]]
        );
        let (g, gh) = one_arrow().gram();
        assert_eq!((g, gh), (imat![[2]], imat![[1]]));
    }

    #[test]
    fn transform_permutes_rows_and_keeps_form() {
        let q = q1();
        let rho = Permutation::new(vec![2, 1, 3]).unwrap();
        let t = q.transform(&rho, false);
        assert_eq!(t.incidence(), &rho.matrix() * &q.incidence());
        let f = q.transform(&Permutation::identity(3), true);
        assert_eq!(f.incidence(), -&q.incidence());
        assert_eq!(f.upper_gram(), q.upper_gram());
        assert_eq!(q.transform(&Permutation::identity(3), false), q);
    }
}
