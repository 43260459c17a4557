use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::CongruenceError;
use crate::exactmat::{skew_block_form, skew_normal_form, IntMatrix};

/// Number of `W₁` blocks if `w` is exactly `W₁ ⊕ … ⊕ W₁ ⊕ 0`.
fn pure_blocks(w: &IntMatrix) -> Option<usize> {
    let c = w.rows();
    let mut r = 0;
    while 2 * r + 1 < c && w[(2 * r, 2 * r + 1)].is_one() {
        r += 1;
    }
    let ones = vec![BigInt::one(); r];
    (*w == skew_block_form(&ones, c)).then_some(r)
}

/// `Y` with `Z = Yᵀ·W·Y`, for `W = W₁ ⊕ … ⊕ W₁`.
///
/// Reduce `Z` to `⊕ f_i W₁` by a unimodular `P` (trailing `f_i` may be zero),
/// then `Y = diag(1, f₁, 1, f₂, …)·P⁻¹`.
pub fn skew_factor_a(z: &IntMatrix, w: &IntMatrix) -> Result<IntMatrix, CongruenceError> {
    if !z.is_skew_symmetric() || !w.is_skew_symmetric() {
        return Err(CongruenceError::NotSkew);
    }
    let c = w.rows();
    if z.shape() != (c, c) {
        return Err(CongruenceError::ShapeMismatch(
            "Z and W differ in size".into(),
        ));
    }
    if !c.is_multiple_of(2) || pure_blocks(w) != Some(c / 2) {
        return Err(CongruenceError::WNotInvertibleNormal);
    }
    let snf = skew_normal_form(z)?;
    let mut s = vec![BigInt::zero(); c];
    for t in 0..c / 2 {
        s[2 * t] = BigInt::one();
        s[2 * t + 1] = snf.d.get(t).cloned().unwrap_or_default();
    }
    let p_inv = snf.p.inverse()?;
    Ok(&IntMatrix::diagonal(&s) * &p_inv)
}

/// `Y` with `Z = Y − Yᵀ + Yᵀ·W·Y`, for `W = W₁ ⊕ … ⊕ W₁ ⊕ 0`.
///
/// On the invertible block this factors `Z₁ + W′ = ỸᵀW′Ỹ` and sets
/// `Y₁ = Ỹ − W′`. The remaining rows copy `Z₂`, and the zero block of `W`
/// takes the strictly lower triangle of `Z₃`.
pub fn skew_decompose_b(z: &IntMatrix, w: &IntMatrix) -> Result<IntMatrix, CongruenceError> {
    if !z.is_skew_symmetric() || !w.is_skew_symmetric() {
        return Err(CongruenceError::NotSkew);
    }
    let c = w.rows();
    if z.shape() != (c, c) {
        return Err(CongruenceError::ShapeMismatch(
            "Z and W differ in size".into(),
        ));
    }
    let r2 = 2 * pure_blocks(w).ok_or(CongruenceError::NotPureNormalForm)?;
    let mut y = IntMatrix::zeros(c, c);
    if r2 > 0 {
        let w1 = w.submatrix(0, r2, 0, r2);
        let z1 = z.submatrix(0, r2, 0, r2);
        let y1 = &skew_factor_a(&(&z1 + &w1), &w1)? - &w1;
        for i in 0..r2 {
            for j in 0..r2 {
                y[(i, j)] = y1[(i, j)].clone();
            }
        }
    }
    for i in r2..c {
        for j in 0..i {
            y[(i, j)] = z[(i, j)].clone();
        }
    }
    Ok(y)
}

/// [`skew_decompose_b`] for any skew `W` whose skew normal form is pure:
/// with `RᵀWR` in normal form, decompose `R⁻¹ZR⁻ᵀ` and conjugate back.
pub fn skew_decompose(z: &IntMatrix, w: &IntMatrix) -> Result<IntMatrix, CongruenceError> {
    if pure_blocks(w).is_some() {
        return skew_decompose_b(z, w);
    }
    let snf = skew_normal_form(w).map_err(|_| CongruenceError::NotSkew)?;
    if snf.d.iter().any(|d| !d.is_one()) {
        return Err(CongruenceError::NotPure);
    }
    let r = &snf.p;
    let ri = r.inverse()?;
    let n = &(&r.transpose() * w) * r;
    let zt = &(&ri * z) * &ri.transpose();
    let yt = skew_decompose_b(&zt, &n)?;
    Ok(&(r * &yt) * &r.transpose())
}
