use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{FormError, UnitForm};
use crate::exactmat::psd_rank;
use crate::quiver::Quiver;

/// Finds a connected loop-less quiver whose unit form is `q`.
///
/// Variables are placed in breadth-first order of the graph `G_ij ≠ 0`, so
/// every new arrow touches an already placed one and adds at most one new
/// vertex. Each candidate endpoint pair must reproduce `G_ij` against every
/// placed arrow; the search backtracks on failure.
pub fn realize_as_quiver(q: &UnitForm) -> Result<Quiver, FormError> {
    let n = q.n();
    let g = q.symmetric();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| g.row(i).iter().map(|x| !x.is_zero()).collect())
        .collect();
    let order = bfs_order(&adj).ok_or(FormError::NotConnected)?;
    let (psd, rank) = psd_rank(&g).expect("symmetric by construction");
    if !psd {
        return Err(FormError::NotNonNegative);
    }
    let gs = g_small(&g)?;
    let m = rank + 1;
    let mut st = Search {
        g: &gs,
        order: &order,
        m,
        placed: vec![None; n],
        used: 0,
    };
    if !st.place(0) {
        return Err(FormError::NotTypeA);
    }
    let arrows = st
        .placed
        .into_iter()
        .map(|a| a.expect("all placed"))
        .collect();
    let quiver = Quiver::new(m, arrows).map_err(|_| FormError::NotTypeA)?;
    debug_assert_eq!(quiver.upper_gram(), *q.upper());
    Ok(quiver)
}

/// Gram entries as small integers; anything outside `[-2, 2]` cannot come
/// from a loop-less quiver.
fn g_small(g: &crate::exactmat::IntMatrix) -> Result<Vec<Vec<i8>>, FormError> {
    (0..g.rows())
        .map(|i| {
            g.row(i)
                .iter()
                .map(|x: &BigInt| {
                    x.to_i8()
                        .filter(|v| (-2..=2).contains(v))
                        .ok_or(FormError::NotTypeA)
                })
                .collect()
        })
        .collect()
}

fn bfs_order(adj: &[Vec<bool>]) -> Option<Vec<(usize, Option<usize>)>> {
    let n = adj.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    let mut queue = VecDeque::from([(0, None)]);
    seen[0] = true;
    while let Some((i, parent)) = queue.pop_front() {
        out.push((i, parent));
        for j in 0..n {
            if !seen[j] && adj[i][j] {
                seen[j] = true;
                queue.push_back((j, Some(i)));
            }
        }
    }
    (out.len() == n).then_some(out)
}

struct Search<'a> {
    g: &'a [Vec<i8>],
    order: &'a [(usize, Option<usize>)],
    m: usize,
    placed: Vec<Option<(usize, usize)>>,
    used: usize,
}

fn dot(a: (usize, usize), b: (usize, usize)) -> i8 {
    let mut r = 0;
    if a.0 == b.0 {
        r += 1;
    }
    if a.0 == b.1 {
        r -= 1;
    }
    if a.1 == b.0 {
        r -= 1;
    }
    if a.1 == b.1 {
        r += 1;
    }
    r
}

impl Search<'_> {
    fn fits(&self, i: usize, cand: (usize, usize), depth: usize) -> bool {
        self.order[..depth]
            .iter()
            .all(|&(j, _)| dot(cand, self.placed[j].expect("placed earlier")) == self.g[i][j])
    }

    fn place(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.used == self.m;
        }
        let (i, parent) = self.order[depth];
        let Some(p) = parent else {
            self.placed[i] = Some((1, 2));
            self.used = 2;
            return self.place(depth + 1);
        };
        let (ps, pt) = self.placed[p].expect("parent placed first");
        let fresh = self.used + 1;
        let mut cands = Vec::new();
        for shared in [ps, pt] {
            for other in 1..=fresh.min(self.m) {
                if other != shared {
                    cands.push((shared, other));
                    cands.push((other, shared));
                }
            }
        }
        cands.sort_unstable();
        cands.dedup();
        for cand in cands {
            if !self.fits(i, cand, depth) {
                continue;
            }
            let grew = cand.0 == fresh || cand.1 == fresh;
            self.placed[i] = Some(cand);
            if grew {
                self.used += 1;
            }
            if self.place(depth + 1) {
                return true;
            }
            if grew {
                self.used -= 1;
            }
            self.placed[i] = None;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::imat;

    #[test]
    fn realizes_example_form() {
        let q = UnitForm::new(imat![
            [1, -1, -1, 2],
            [0, 1, -1, -1],
            [0, 0, 1, -1],
            [0, 0, 0, 1]
        ])
        .unwrap();
        let quiver = realize_as_quiver(&q).unwrap();
        assert_eq!(quiver.vertex_count(), 3);
        assert_eq!(quiver.upper_gram(), *q.upper());
    }

    #[test]
    fn single_variable() {
        let q = UnitForm::new(imat![[1]]).unwrap();
        assert_eq!(realize_as_quiver(&q).unwrap().arrows(), &[(1, 2)]);
    }

    #[test]
    fn path_form() {
        let q = UnitForm::new(imat![[1, -1, 0], [0, 1, -1], [0, 0, 1]]).unwrap();
        let quiver = realize_as_quiver(&q).unwrap();
        assert_eq!(quiver.vertex_count(), 4);
        assert_eq!(quiver.upper_gram(), *q.upper());
    }

    #[test]
    fn failures() {
        let disconnected = UnitForm::new(imat![[1, 0], [0, 1]]).unwrap();
        assert_eq!(
            realize_as_quiver(&disconnected),
            Err(FormError::NotConnected)
        );
        let indefinite = UnitForm::new(imat![[1, 3], [0, 1]]).unwrap();
        assert_eq!(
            realize_as_quiver(&indefinite),
            Err(FormError::NotNonNegative)
        );
        let indefinite = UnitForm::new(imat![[1, -2, -1], [0, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(
            realize_as_quiver(&indefinite),
            Err(FormError::NotNonNegative)
        );
        // D4: positive, connected, but not of type A.
        let d4 = UnitForm::new(imat![
            [1, -1, -1, -1],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1]
        ])
        .unwrap();
        assert_eq!(realize_as_quiver(&d4), Err(FormError::NotTypeA));
    }
}
