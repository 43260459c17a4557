use super::endo::xi_of_endo;
use super::pseudo::{star, PseudoMorphism};
use super::skewdec::skew_decompose;
use super::CongruenceError;
use crate::exactmat::{hnf, kernel_basis, solve_exact, IntMatrix};
use crate::quiver::{beta_vectors, Quiver};

/// Kernel matrix `K = [K′, K″]` of `I(Q)` whose trailing block `K″` is the
/// orbit basis of the reduced radical (last orbit dropped). Returns `K` and
/// the width of `K′`.
pub fn source_kernel(q: &Quiver) -> Result<(IntMatrix, usize), CongruenceError> {
    let n = q.arrow_count();
    let k_any = kernel_basis(&q.incidence());
    let c = k_any.cols();
    let mut betas = beta_vectors(q);
    betas.pop();
    let k2 = IntMatrix::from_columns(n, &betas);
    let r = k2.cols();
    if r == 0 {
        return Ok((k_any, c));
    }
    // Coordinates of K″ in the arbitrary kernel basis, completed to a
    // unimodular change of basis. Purity of the reduced radical makes the
    // Hermite form of the coordinates [Id | 0].
    let coords = solve_exact(&k_any, &k2)?;
    let (h, u) = hnf(&coords.transpose());
    if !h.columns_range(0, r).is_identity() {
        return Err(CongruenceError::NotPure);
    }
    let v = u.inverse()?.transpose();
    let change = IntMatrix::hstack(&[&v.columns_range(r, c), &v.columns_range(0, r)])?;
    let k = &k_any * &change;
    debug_assert_eq!(k.columns_range(c - r, c), k2);
    Ok((k, c - r))
}

fn split_w(w: &IntMatrix) -> usize {
    w.rank()
}

/// Correction `M` such that `B + M` is a Z-invertible pseudo-morphism.
///
/// Solves `B·K̃ = K·L`, then `Y₁ = (L₁ − Id)·W̃′⁻¹`, `Y₂ = L₂·W̃′⁻¹` and
/// `M = K·Y·(Ĝ_tgt·K̃)ᵀ` with `Y = [[Y₁, 0], [Y₂, 0]]`. The split of `K̃` is
/// read off the rank of `W̃ = K̃ᵀĜ_tgtK̃`, which must be `W̃′ ⊕ 0`.
pub fn correct_invertibility(
    p: &PseudoMorphism,
    k: &IntMatrix,
    k_tgt: &IntMatrix,
) -> Result<IntMatrix, CongruenceError> {
    let g_tgt = p.target.upper_gram();
    let c = k_tgt.cols();
    if k.cols() != c {
        return Err(CongruenceError::ShapeMismatch(
            "kernel widths differ".into(),
        ));
    }
    let w = &(&k_tgt.transpose() * &g_tgt) * k_tgt;
    let s = split_w(&w);
    if !w.submatrix(s, c, 0, c).is_zero() || !w.submatrix(0, c, s, c).is_zero() {
        return Err(CongruenceError::NotPure);
    }
    let w1 = w.submatrix(0, s, 0, s);
    let w1_inv = w1.inverse().map_err(|_| CongruenceError::NotPure)?;
    let l = solve_exact(k, &(&p.b * k_tgt)).map_err(CongruenceError::NoL)?;
    let l1 = l.submatrix(0, s, 0, s);
    let l2 = l.submatrix(s, c, 0, s);
    let y1 = &(&l1 - &IntMatrix::identity(s)) * &w1_inv;
    let y2 = &l2 * &w1_inv;
    let mut y = IntMatrix::zeros(c, c);
    for j in 0..s {
        for i in 0..s {
            y[(i, j)] = y1[(i, j)].clone();
        }
        for i in s..c {
            y[(i, j)] = y2[(i - s, j)].clone();
        }
    }
    let kd = &g_tgt * k_tgt;
    Ok(&(k * &y) * &kd.transpose())
}

/// `C` such that `B·C` is a strong congruence: with `Z̃ = Ξ((B*B)⁻¹)` and
/// `Z̃ = Y − Yᵀ + YᵀW̃Y`, `C = Id − K̃·Yᵀ·(Ĝ_tgt·K̃)ᵀ`.
pub fn correct_to_strong(
    p: &PseudoMorphism,
    k_tgt: &IntMatrix,
) -> Result<IntMatrix, CongruenceError> {
    let g_src = p.source.upper_gram();
    let g_tgt = p.target.upper_gram();
    if !p.b.is_unimodular() {
        return Err(CongruenceError::NotInvertible);
    }
    let endo = &star(&p.b, &g_src, &g_tgt)? * &p.b;
    let endo_inv = endo.inverse().map_err(|_| CongruenceError::NotInvertible)?;
    let z = xi_of_endo(&endo_inv, k_tgt, &g_tgt)?;
    let w = &(&k_tgt.transpose() * &g_tgt) * k_tgt;
    let y = skew_decompose(&z, &w)?;
    let kd = &g_tgt * k_tgt;
    let n = p.b.rows();
    Ok(&IntMatrix::identity(n) - &(&(k_tgt * &y.transpose()) * &kd.transpose()))
}
