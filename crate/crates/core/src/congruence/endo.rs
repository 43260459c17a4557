use super::CongruenceError;
use crate::exactmat::{solve_exact, IntMatrix};

fn check_square(z: &IntMatrix, c: usize, what: &str) -> Result<(), CongruenceError> {
    if z.shape() != (c, c) {
        return Err(CongruenceError::ShapeMismatch(format!(
            "{what} is {}x{}, expected {c}x{c}",
            z.rows(),
            z.cols()
        )));
    }
    Ok(())
}

/// `Υ(Z) = Id + K·Z·(Ĝ·K)ᵀ`
pub fn upsilon(z: &IntMatrix, k: &IntMatrix, g: &IntMatrix) -> Result<IntMatrix, CongruenceError> {
    check_square(z, k.cols(), "Z")?;
    if g.shape() != (k.rows(), k.rows()) {
        return Err(CongruenceError::ShapeMismatch("Ĝ does not match K".into()));
    }
    let kd = g * k;
    Ok(&IntMatrix::identity(k.rows()) + &(&(k * z) * &kd.transpose()))
}

/// Inverse of [`upsilon`]: the unique `Z` with `B = Id + K·Z·(Ĝ·K)ᵀ`.
pub fn xi_of_endo(
    b: &IntMatrix,
    k: &IntMatrix,
    g: &IntMatrix,
) -> Result<IntMatrix, CongruenceError> {
    let n = k.rows();
    if b.shape() != (n, n) || g.shape() != (n, n) {
        return Err(CongruenceError::ShapeMismatch("B, Ĝ and K disagree".into()));
    }
    let diff = b - &IntMatrix::identity(n);
    let l = solve_exact(k, &diff).map_err(|_| CongruenceError::NotPseudoEndo)?;
    let kd = g * k;
    let zt = solve_exact(&kd, &l.transpose()).map_err(|_| CongruenceError::NotPseudoEndo)?;
    Ok(zt.transpose())
}

/// `Z ∘_W Z′ = Z + Z′ − Z·W·Z′`
pub fn circ_w(z: &IntMatrix, z2: &IntMatrix, w: &IntMatrix) -> Result<IntMatrix, CongruenceError> {
    let c = z.rows();
    check_square(z, c, "Z")?;
    check_square(z2, c, "Z′")?;
    check_square(w, c, "W")?;
    Ok(&(z + z2) - &(&(z * w) * z2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::imat;

    fn q0_std() -> (IntMatrix, IntMatrix) {
        let g = imat![[1, -1, 1, -2], [0, 1, -2, 1], [0, 0, 1, -1], [0, 0, 0, 1]];
        let k = imat![[1, 0], [0, 1], [0, 1], [1, 0]];
        (g, k)
    }

    #[test]
    fn zero_gives_identity() {
        let (g, k) = q0_std();
        assert!(upsilon(&IntMatrix::zeros(2, 2), &k, &g)
            .unwrap()
            .is_identity());
        assert!(xi_of_endo(&IntMatrix::identity(4), &k, &g)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn example_endomorphism() {
        let (g, k) = q0_std();
        let z = imat![[0, -1], [1, 0]];
        let b_inv = imat![[1, 1, -1, 0], [-1, 2, -1, 1], [-1, 1, 0, 1], [0, 1, -1, 1]];
        assert_eq!(upsilon(&z, &k, &g).unwrap(), b_inv);
        assert_eq!(xi_of_endo(&b_inv, &k, &g).unwrap(), z);
        let b = imat![[1, -1, 1, 0], [1, 0, 1, -1], [1, -1, 2, -1], [0, -1, 1, 1]];
        assert_eq!(xi_of_endo(&b, &k, &g).unwrap(), -&z);
    }

    #[test]
    fn product_matches_circ() {
        let (g, k) = q0_std();
        let w = &(&k.transpose() * &g) * &k;
        let z1 = imat![[2, -1], [3, 0]];
        let z2 = imat![[-1, 4], [1, 1]];
        let prod = &upsilon(&z1, &k, &g).unwrap() * &upsilon(&z2, &k, &g).unwrap();
        assert_eq!(
            prod,
            upsilon(&circ_w(&z1, &z2, &w).unwrap(), &k, &g).unwrap()
        );
    }

    #[test]
    fn circ_is_associative_with_zero_identity() {
        let w = imat![[0, 1, 0], [-1, 0, 2], [0, -2, 0]];
        let a = imat![[1, 2, 0], [0, -1, 3], [2, 2, 1]];
        let b = imat![[0, 1, 1], [1, 0, -2], [3, 0, 0]];
        let c = imat![[-1, 0, 2], [0, 1, 0], [1, 1, 1]];
        let zero = IntMatrix::zeros(3, 3);
        assert_eq!(circ_w(&a, &zero, &w).unwrap(), a);
        assert_eq!(circ_w(&zero, &a, &w).unwrap(), a);
        let left = circ_w(&circ_w(&a, &b, &w).unwrap(), &c, &w).unwrap();
        let right = circ_w(&a, &circ_w(&b, &c, &w).unwrap(), &w).unwrap();
        assert_eq!(left, right);
    }
}
