use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::QuiverError;
use crate::exactmat::IntMatrix;
use crate::standard::Partition;

/// Bijection of `{1..m}`; entry `v-1` of `images` is `ρ(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, QuiverError> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &v in &images {
            if v == 0 || v > m || seen[v] {
                return Err(QuiverError::InvalidPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (1..=m).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `v ↦ self(other(v))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len());
        Permutation {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    /// Cycles, each listed from its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let m = self.images.len();
        let mut seen = vec![false; m + 1];
        let mut out = Vec::new();
        for start in 1..=m {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                cyc.push(v);
                v = self.apply(v);
            }
            out.push(cyc);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(Vec::len).collect())
            .expect("cycle lengths of a non-empty permutation form a partition")
    }

    /// `P(ρ)` with `P(ρ)·e_t = e_{ρ(t)}`.
    pub fn matrix(&self) -> IntMatrix {
        let m = self.images.len();
        let mut p = IntMatrix::zeros(m, m);
        for (t, &r) in self.images.iter().enumerate() {
            p[(r - 1, t)] = BigInt::one();
        }
        p
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let s: Vec<String> = c.iter().map(ToString::to_string).collect();
                format!("({})", s.join(" "))
            })
            .collect();
        if parts.is_empty() {
            write!(f, "id")
        } else {
            write!(f, "{}", parts.concat())
        }
    }
}
