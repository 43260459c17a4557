use num_bigint::BigInt;

use super::CongruenceError;
use crate::exactmat::{IntMatrix, IntVector};
use crate::quiver::{
    connecting_walk, incidence_vector, inverse_quiver, structural_walk, xi_and_cycle_type,
    Direction, Permutation, Quiver, Walk,
};
use crate::standard::break_vertices;

/// `B* = Ĝ_tgt⁻¹·Bᵀ·Ĝ_src`
pub fn star(
    b: &IntMatrix,
    g_src: &IntMatrix,
    g_tgt: &IntMatrix,
) -> Result<IntMatrix, CongruenceError> {
    let n = b.rows();
    if b.shape() != (n, n) || g_src.shape() != (n, n) || g_tgt.shape() != (n, n) {
        return Err(CongruenceError::ShapeMismatch(
            "star needs n×n matrices".into(),
        ));
    }
    let inv = g_tgt
        .inverse()
        .map_err(|_| CongruenceError::NonIntegerStar)?;
    Ok(&(&inv * &b.transpose()) * g_src)
}

/// Matrix `B` with `I(source)·B = I(target)` and `I(target†)·Bᵀ = I(source†)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PseudoMorphism {
    pub b: IntMatrix,
    pub source: Quiver,
    pub target: Quiver,
}

impl PseudoMorphism {
    pub fn new(b: IntMatrix, source: Quiver, target: Quiver) -> Result<Self, CongruenceError> {
        let n = source.arrow_count();
        if target.arrow_count() != n || b.shape() != (n, n) {
            return Err(CongruenceError::ShapeMismatch(
                "source, target and B must share the arrow count".into(),
            ));
        }
        if &source.incidence() * &b != target.incidence() {
            return Err(CongruenceError::NotPseudoMorphism("I(Q)·B ≠ I(Q̃)".into()));
        }
        let lhs = &inverse_quiver(&target).incidence() * &b.transpose();
        if lhs != inverse_quiver(&source).incidence() {
            return Err(CongruenceError::NotPseudoMorphism(
                "I(Q̃†)·Bᵀ ≠ I(Q†)".into(),
            ));
        }
        Ok(PseudoMorphism { b, source, target })
    }

    /// `B*`, a pseudo-morphism in the opposite direction.
    pub fn star(&self) -> IntMatrix {
        star(
            &self.b,
            &self.source.upper_gram(),
            &self.target.upper_gram(),
        )
        .expect("upper Gram matrices are unimodular")
    }
}

/// `ρ` with `ξ⃗ = ρ∘ξ∘ρ⁻¹`. Cycles of both are sorted by length (longest
/// first) and smallest element, then matched pointwise from those elements.
pub fn conjugating_permutation(
    xi: &Permutation,
    xi_target: &Permutation,
) -> Result<Permutation, CongruenceError> {
    if xi.len() != xi_target.len() || xi.cycle_type() != xi_target.cycle_type() {
        return Err(CongruenceError::CycleTypeMismatch);
    }
    let sorted = |p: &Permutation| {
        let mut c = p.cycles();
        c.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        c
    };
    let mut images = vec![0; xi.len()];
    for (a, b) in sorted(xi).iter().zip(sorted(xi_target)) {
        for (&x, &y) in a.iter().zip(&b) {
            images[x - 1] = y;
        }
    }
    Ok(Permutation::new(images).expect("cycles partition the vertex set"))
}

fn descending_vectors(q: &Quiver) -> Vec<IntVector> {
    (1..=q.vertex_count())
        .map(|v| {
            incidence_vector(
                &structural_walk(q, v, Direction::Descending),
                q.arrow_count(),
            )
        })
        .collect()
}

/// Pseudo-morphism from `q` to the standard quiver `target`, with breadth-first
/// connecting walks.
pub fn build_pseudo_morphism(
    q: &Quiver,
    target: &Quiver,
) -> Result<PseudoMorphism, CongruenceError> {
    let (pi, _) = crate::standard::standard_for(target);
    let v = break_vertices(&pi);
    let deltas: Vec<Walk> = (1..pi.len())
        .map(|t| connecting_walk(q, v[t], v[t] + 1))
        .collect();
    build_pseudo_morphism_with(q, target, &deltas)
}

/// As [`build_pseudo_morphism`], with caller-chosen walks `δ(t)` from `v_t`
/// to `v_t + 1` for `t = 1..ℓ−1`.
pub fn build_pseudo_morphism_with(
    q: &Quiver,
    target: &Quiver,
    deltas: &[Walk],
) -> Result<PseudoMorphism, CongruenceError> {
    let (m, n) = (q.vertex_count(), q.arrow_count());
    if target.vertex_count() != m || target.arrow_count() != n {
        return Err(CongruenceError::ShapeMismatch(
            "quivers must have the same numbers of vertices and arrows".into(),
        ));
    }
    let (xi, _) = xi_and_cycle_type(q);
    let (xi_t, _) = xi_and_cycle_type(target);
    if xi != xi_t {
        return Err(CongruenceError::LaplacianMismatch);
    }
    let (pi, d) = crate::standard::standard_for(target);
    let l = pi.len();
    let vt = break_vertices(&pi);
    if deltas.len() != l - 1 {
        return Err(CongruenceError::ShapeMismatch(format!(
            "expected {} connecting walks, got {}",
            l - 1,
            deltas.len()
        )));
    }
    for (t, w) in deltas.iter().enumerate() {
        if w.start() != vt[t + 1] || w.end() != vt[t + 1] + 1 {
            return Err(CongruenceError::ShapeMismatch(format!(
                "δ({}) must run from {} to {}",
                t + 1,
                vt[t + 1],
                vt[t + 1] + 1
            )));
        }
    }
    let a = descending_vectors(q);
    let dv: Vec<IntVector> = deltas.iter().map(|w| incidence_vector(w, n)).collect();
    let neg = |x: &IntVector| -> IntVector { x.iter().map(|e| -e).collect() };

    let mut cols: Vec<IntVector> = Vec::with_capacity(n);
    for vtx in 1..m {
        match (1..l).find(|&t| vt[t] == vtx) {
            Some(t) => cols.push(dv[t - 1].clone()),
            None => cols.push(a[vtx - 1].clone()),
        }
    }
    let tail = if l == 1 {
        a[m - 2].clone()
    } else {
        let ys: Vec<IntVector> = (1..l)
            .map(|t| {
                a[vt[t - 1] - 1]
                    .iter()
                    .zip(&dv[t - 1])
                    .map(|(x, y)| x - y)
                    .collect::<Vec<BigInt>>()
            })
            .collect();
        let last = ys[l - 2].clone();
        cols.extend(ys);
        last
    };
    for t in 1..=2 * d {
        cols.push(if t % 2 == 1 { neg(&tail) } else { tail.clone() });
    }
    let b = IntMatrix::from_columns(n, &cols);
    PseudoMorphism::new(b, q.clone(), target.clone())
}
