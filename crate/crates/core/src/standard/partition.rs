use std::fmt;

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("a partition needs at least one part")]
    Empty,
    #[error("partition parts must be positive")]
    ZeroPart,
}

/// Non-increasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Parts may come in any order; they are sorted non-increasingly.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.is_empty() {
            return Err(PartitionError::Empty);
        }
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `ℓ(π)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn lcm(&self) -> usize {
        self.parts.iter().fold(1, |a, &b| a.lcm(&b))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `m`, lexicographically decreasing.
pub fn partitions(m: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(m, m, &mut Vec::new(), &mut out);
    }
    out
}

/// Partitions `π ⊢ m` with `c − (ℓ(π) − 1)` even and non-negative.
pub fn partitions_part1(m: usize, c: usize) -> Vec<Partition> {
    partitions(m)
        .into_iter()
        .filter(|p| p.len() <= c + 1 && (c + 1 - p.len()).is_multiple_of(2))
        .collect()
}

/// Number of partitions of `m` into exactly `l` parts, by
/// `p_l(m) = p_{l−1}(m−1) + p_l(m−l)`.
pub fn partitions_exact_parts(m: usize, l: usize) -> u128 {
    // table[l][m]
    let mut table = vec![vec![0u128; m + 1]; l + 1];
    table[0][0] = 1;
    for k in 1..=l {
        for j in k..=m {
            table[k][j] = table[k - 1][j - 1]
                .checked_add(table[k][j - k])
                .expect("partition count overflow");
        }
    }
    table[l][m]
}

/// Number of strong Gram classes of connected non-negative unit forms of
/// Dynkin type A in `n` variables with corank `c`.
pub fn count_classes(n: usize, c: usize) -> u128 {
    assert!(n >= 1 && c < n, "need n ≥ 1 and 0 ≤ c ≤ n − 1");
    let m = n - c + 1;
    (0..=c / 2)
        .map(|d| partitions_exact_parts(m, c - 2 * d + 1))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(ps: &[Partition]) -> Vec<Vec<usize>> {
        ps.iter().map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn part1_examples() {
        assert_eq!(parts(&partitions_part1(3, 2)), vec![vec![3], vec![1, 1, 1]]);
        assert_eq!(parts(&partitions_part1(2, 0)), vec![vec![2]]);
        assert_eq!(parts(&partitions_part1(5, 1)), vec![vec![4, 1], vec![3, 2]]);
    }

    #[test]
    fn exact_parts_matches_brute_force() {
        for m in 1..=12 {
            let all = partitions(m);
            for l in 0..=m + 1 {
                let brute = all.iter().filter(|p| p.len() == l).count() as u128;
                assert_eq!(partitions_exact_parts(m, l), brute, "m={m} l={l}");
            }
        }
    }

    #[test]
    fn closed_forms() {
        for n in 1..=30 {
            assert_eq!(count_classes(n, 0), 1);
        }
        assert_eq!(count_classes(4, 2), 2);
        assert_eq!(count_classes(10, 1), 5);
    }

    #[test]
    fn normalizes_order() {
        let p = Partition::new(vec![1, 3, 2]).unwrap();
        assert_eq!(p.parts(), &[3, 2, 1]);
        assert_eq!(p.to_string(), "(3,2,1)");
        assert_eq!(p.lcm(), 6);
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }
}
