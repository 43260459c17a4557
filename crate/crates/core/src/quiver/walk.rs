use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Quiver, QuiverError};
use crate::exactmat::IntVector;

/// One traversal of an arrow: `sign = +1` goes from source to target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub arrow: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    start: usize,
    end: usize,
    steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Descending,
    Ascending,
}

impl Walk {
    pub fn trivial(v: usize) -> Self {
        Walk {
            start: v,
            end: v,
            steps: Vec::new(),
        }
    }

    /// Checks that consecutive steps chain up inside `q`.
    pub fn new(q: &Quiver, start: usize, steps: Vec<Step>) -> Result<Self, QuiverError> {
        let mut v = start;
        for (k, st) in steps.iter().enumerate() {
            if st.arrow == 0 || st.arrow > q.arrow_count() || st.sign.abs() != 1 {
                return Err(QuiverError::InvalidWalk(format!(
                    "bad step {} ({st:?})",
                    k + 1
                )));
            }
            let (s, t) = q.arrows()[st.arrow - 1];
            let (from, to) = if st.sign > 0 { (s, t) } else { (t, s) };
            if from != v {
                return Err(QuiverError::InvalidWalk(format!(
                    "step {} leaves {from} but the walk is at {v}",
                    k + 1
                )));
            }
            v = to;
        }
        Ok(Walk {
            start,
            end: v,
            steps,
        })
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn inverse(&self) -> Walk {
        Walk {
            start: self.end,
            end: self.start,
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| Step {
                    arrow: s.arrow,
                    sign: -s.sign,
                })
                .collect(),
        }
    }

    /// Sign with which `arrow` is traversed, if it occurs.
    pub fn sign_of(&self, arrow: usize) -> Option<i8> {
        self.steps.iter().find(|s| s.arrow == arrow).map(|s| s.sign)
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "[{}]", self.start);
        }
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| format!("{}^{}", s.arrow, if s.sign > 0 { "+1" } else { "-1" }))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Leaving `v` along arrow `k` (0-based): returns `(sign, other endpoint)`.
fn leave(q: &Quiver, k: usize, v: usize) -> Option<(i8, usize)> {
    let (s, t) = q.arrows()[k];
    if s == v {
        Some((1, t))
    } else if t == v {
        Some((-1, s))
    } else {
        None
    }
}

/// Structural walk starting at `v`.
///
/// Descending: begin with the largest arrow at `v`, then keep taking the
/// largest arrow at the current vertex that is smaller than the one just
/// used. Ascending mirrors this with smallest/larger.
pub fn structural_walk(q: &Quiver, v: usize, dir: Direction) -> Walk {
    let n = q.arrow_count();
    let mut steps = Vec::new();
    let mut at = v;
    let mut last: Option<usize> = None;
    loop {
        let next = match dir {
            Direction::Descending => {
                let upper = last.unwrap_or(n);
                (0..upper)
                    .rev()
                    .find_map(|k| leave(q, k, at).map(|x| (k, x)))
            }
            Direction::Ascending => {
                let lower = last.map_or(0, |l| l + 1);
                (lower..n).find_map(|k| leave(q, k, at).map(|x| (k, x)))
            }
        };
        let Some((k, (sign, to))) = next else {
            break;
        };
        steps.push(Step { arrow: k + 1, sign });
        at = to;
        last = Some(k);
    }
    Walk {
        start: v,
        end: at,
        steps,
    }
}

/// Breadth-first walk from `u` to `v`. Neighbours are explored in arrow order,
/// so ties go to the smallest arrow index.
pub fn connecting_walk(q: &Quiver, u: usize, v: usize) -> Walk {
    let m = q.vertex_count();
    let mut parent: Vec<Option<(usize, Step)>> = vec![None; m + 1];
    let mut seen = vec![false; m + 1];
    seen[u] = true;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for k in 0..q.arrow_count() {
            if let Some((sign, y)) = leave(q, k, x) {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, Step { arrow: k + 1, sign }));
                    queue.push_back(y);
                }
            }
        }
    }
    assert!(seen[v], "connecting_walk on a disconnected quiver");
    let mut steps = Vec::new();
    let mut x = v;
    while let Some((p, st)) = parent[x] {
        steps.push(st);
        x = p;
    }
    steps.reverse();
    Walk {
        start: u,
        end: v,
        steps,
    }
}

/// `Σ ε_t e_{i_t}` in `Z^n`.
pub fn incidence_vector(w: &Walk, n: usize) -> IntVector {
    let mut x = vec![BigInt::zero(); n];
    for s in &w.steps {
        x[s.arrow - 1] += BigInt::from(s.sign);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    fn ints(v: &[i64]) -> IntVector {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn example_walks() {
        let q = q1();
        let w = structural_walk(&q, 1, Direction::Descending);
        assert_eq!(w.to_string(), "4^-1 2^-1");
        assert_eq!(incidence_vector(&w, 4), ints(&[0, -1, 0, -1]));
        let w = structural_walk(&q0(), 3, Direction::Descending);
        assert_eq!(w.to_string(), "3^+1 1^-1");
        assert_eq!(incidence_vector(&w, 4), ints(&[-1, 0, 1, 0]));
    }

    #[test]
    fn one_arrow_walks() {
        let q = one_arrow();
        assert_eq!(
            structural_walk(&q, 1, Direction::Descending).to_string(),
            "1^+1"
        );
        assert_eq!(
            structural_walk(&q, 2, Direction::Descending).to_string(),
            "1^-1"
        );
    }

    #[test]
    fn incidence_vector_telescopes() {
        let q = q1();
        let inc = q.incidence();
        for v in 1..=3 {
            for dir in [Direction::Descending, Direction::Ascending] {
                let w = structural_walk(&q, v, dir);
                let x = inc.mul_vec(&incidence_vector(&w, 4));
                let mut want = vec![BigInt::zero(); 3];
                want[w.start() - 1] += 1;
                want[w.end() - 1] -= 1;
                assert_eq!(x, want);
            }
        }
        assert_eq!(incidence_vector(&Walk::trivial(2), 4), ints(&[0, 0, 0, 0]));
    }

    #[test]
    fn connecting_walks() {
        let q = q0();
        assert_eq!(connecting_walk(&q, 2, 3).to_string(), "2^+1");
        assert_eq!(connecting_walk(&q, 1, 2).to_string(), "4^+1");
        assert!(connecting_walk(&q, 2, 2).is_empty());
    }

    #[test]
    fn walk_validation() {
        let q = q1();
        let ok = Walk::new(
            &q,
            1,
            vec![Step { arrow: 4, sign: -1 }, Step { arrow: 2, sign: -1 }],
        );
        assert_eq!(ok.unwrap().end(), 2);
        assert!(Walk::new(&q, 1, vec![Step { arrow: 2, sign: 1 }]).is_err());
    }
}
