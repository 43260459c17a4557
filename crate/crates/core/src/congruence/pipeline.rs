use super::correct::{correct_invertibility, correct_to_strong, source_kernel};
use super::pseudo::{build_pseudo_morphism, conjugating_permutation, star, PseudoMorphism};
use super::CongruenceError;
use crate::exactmat::{psd_rank, IntMatrix};
use crate::quiver::{xi_and_cycle_type, Permutation, Quiver};
use crate::standard::{standard_for, standard_kernel, standard_quiver, Partition, Variant};
use crate::unitform::{coxeter, realize_as_quiver, UnitForm};

/// Strong Gram congruence `Bᵀ·Ĝ_source·B = Ĝ_target` with `|det B| = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceCertificate {
    pub b: IntMatrix,
    /// Vertex relabelling applied to the source quiver before building `B`.
    pub rho: Permutation,
    pub source_form: UnitForm,
    pub target_form: UnitForm,
    pub target_partition: Partition,
    pub degeneracy: usize,
}

impl CongruenceCertificate {
    pub fn check(&self) -> Result<(), CongruenceError> {
        let r = verify(&self.b, &self.source_form, &self.target_form)?;
        if r.strong && r.unimodular {
            Ok(())
        } else {
            Err(CongruenceError::VerificationFailed(format!("{r:?}")))
        }
    }
}

/// Strong congruence from `q_Q` to its standard extension.
///
/// Relabels `Q` so that its Coxeter-Laplacian matches the standard quiver's,
/// builds a pseudo-morphism from structural walks, makes it invertible, then
/// strong.
pub fn congruence_to_standard(q: &Quiver) -> Result<CongruenceCertificate, CongruenceError> {
    q.validate()?;
    let (xi, _) = xi_and_cycle_type(q);
    let (pi, d) = standard_for(q);
    let target = standard_quiver(&pi, d, Variant::A).expect("m ≥ 2 for valid quivers");
    let (xi_target, _) = xi_and_cycle_type(&target);
    let rho = conjugating_permutation(&xi, &xi_target)?;
    let qt = q.transform(&rho, false);

    let p0 = build_pseudo_morphism(&qt, &target)?;
    let (k_src, _) = source_kernel(&qt)?;
    let (k_tgt, _) = standard_kernel(&pi, d).expect("valid shape");
    let m = correct_invertibility(&p0, &k_src, &k_tgt)?;
    let p1 = PseudoMorphism::new(&p0.b + &m, qt.clone(), target.clone())?;
    let c = correct_to_strong(&p1, &k_tgt)?;
    let b = &p1.b * &c;

    if &qt.incidence() * &b != target.incidence() {
        return Err(CongruenceError::VerificationFailed(
            "I(ρ·Q)·B ≠ I(Q⃗)".into(),
        ));
    }
    let cert = CongruenceCertificate {
        b,
        rho,
        source_form: UnitForm::from_quiver(q),
        target_form: UnitForm::from_quiver(&target),
        target_partition: pi,
        degeneracy: d,
    };
    cert.check()?;
    Ok(cert)
}

/// Strong congruence from a connected non-negative unit form of type A to its
/// standard extension.
pub fn congruence_forms(q: &UnitForm) -> Result<CongruenceCertificate, CongruenceError> {
    let quiver = realize_as_quiver(q)?;
    let mut cert = congruence_to_standard(&quiver)?;
    cert.source_form = q.clone();
    cert.check()?;
    Ok(cert)
}

fn corank(q: &UnitForm) -> usize {
    let (_, rank) = psd_rank(&q.symmetric()).expect("symmetric");
    q.n() - rank
}

/// `B` with `Bᵀ·Ĝ_q·B = Ĝ_{q′}`, composed from the two standard certificates.
pub fn congruence_between(q: &UnitForm, q2: &UnitForm) -> Result<IntMatrix, CongruenceError> {
    if q.n() != q2.n() || corank(q) != corank(q2) {
        return Err(CongruenceError::NotWeaklyCongruent);
    }
    if coxeter(q).1 != coxeter(q2).1 {
        return Err(CongruenceError::DifferentCoxeterPolynomial);
    }
    let c1 = congruence_forms(q)?;
    let c2 = congruence_forms(q2)?;
    if c1.target_form != c2.target_form {
        return Err(CongruenceError::DifferentCoxeterPolynomial);
    }
    let b = &c1.b * &c2.b.inverse()?;
    let r = verify(&b, q, q2)?;
    if !(r.strong && r.unimodular) {
        return Err(CongruenceError::VerificationFailed(format!("{r:?}")));
    }
    Ok(b)
}

/// `C` with `Cᵀ·Ĝ_q·C = Ĝ_qᵀ`.
///
/// The form with upper Gram matrix `Ĝ_q⁻¹` is strongly congruent to `q`; if
/// `B` realizes that, `C = B·Ĝ_q` works.
pub fn triangular_flip(q: &UnitForm) -> Result<IntMatrix, CongruenceError> {
    let g = q.upper();
    let dual = UnitForm::new(g.inverse()?)?;
    let b = congruence_between(q, &dual)?;
    let c = &b * g;
    if &(&c.transpose() * g) * &c != g.transpose() {
        return Err(CongruenceError::VerificationFailed("CᵀĜC ≠ Ĝᵀ".into()));
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    /// `Bᵀ·G_q·B = G_{q′}`
    pub weak: bool,
    /// `Bᵀ·Ĝ_q·B = Ĝ_{q′}`
    pub strong: bool,
    pub unimodular: bool,
    /// For targets of corank at most 1: whether `q′ = qB` and
    /// `G_{q′}·B*B = G_{q′}` hold, which is equivalent to strong congruence.
    pub shortcut: Option<bool>,
}

pub fn verify(b: &IntMatrix, q: &UnitForm, q2: &UnitForm) -> Result<VerifyReport, CongruenceError> {
    let n = q.n();
    if q2.n() != n || b.shape() != (n, n) {
        return Err(CongruenceError::ShapeMismatch(format!(
            "B is {}x{}, forms have {} and {} variables",
            b.rows(),
            b.cols(),
            n,
            q2.n()
        )));
    }
    let bt = b.transpose();
    let weak = &(&bt * &q.symmetric()) * b == q2.symmetric();
    let strong = &(&bt * q.upper()) * b == *q2.upper();
    let unimodular = b.is_unimodular();
    let shortcut = (corank(q2) <= 1).then(|| {
        let g2 = q2.symmetric();
        let bsb = &star(b, q.upper(), q2.upper()).expect("unit forms") * b;
        weak && &g2 * &bsb == g2
    });
    Ok(VerifyReport {
        weak,
        strong,
        unimodular,
        shortcut,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::imat;
    use crate::quiver::fixtures::{q0, q1};
    use crate::quiver::random_quiver;

    #[test]
    fn examples_reach_their_standard_forms() {
        for q in [q1(), q0()] {
            let cert = congruence_to_standard(&q).unwrap();
            assert!(cert.b.is_unimodular());
            assert!(cert.rho.is_identity());
        }
    }

    #[test]
    fn standard_quiver_maps_to_itself() {
        let q = standard_quiver(&Partition::new(vec![2, 2]).unwrap(), 1, Variant::A).unwrap();
        let cert = congruence_to_standard(&q).unwrap();
        assert_eq!(cert.source_form, cert.target_form);
    }

    #[test]
    fn random_sweep() {
        for seed in 0..40 {
            let m = 2 + (seed as usize % 5);
            let n = m - 1 + (seed as usize % 4);
            let q = random_quiver(m, n, seed).unwrap();
            let cert = congruence_to_standard(&q).unwrap();
            cert.check().unwrap();
        }
    }

    #[test]
    fn verify_example_matrices() {
        let src = UnitForm::from_quiver(&q1());
        let tgt = UnitForm::from_quiver(
            &standard_quiver(&Partition::new(vec![3]).unwrap(), 1, Variant::A).unwrap(),
        );
        let b1 = imat![
            [0, 0, 1, -2],
            [-1, 0, 1, -1],
            [0, -1, 2, -2],
            [-1, -1, 1, 0]
        ];
        let r = verify(&b1, &src, &tgt).unwrap();
        assert!(r.strong && r.weak && r.unimodular);
        assert_eq!(r.shortcut, None);
        let bp = imat![[0, -1, 1, -1], [-1, 0, 0, 0], [0, -1, 1, -1], [-1, 0, 0, 0]];
        let r = verify(&bp, &src, &tgt).unwrap();
        assert!(r.weak && !r.strong && !r.unimodular);
        let r = verify(&IntMatrix::identity(4), &src, &src).unwrap();
        assert!(r.strong);
    }

    #[test]
    fn between_and_flip() {
        let a = UnitForm::from_quiver(&q1());
        let b = UnitForm::from_quiver(&q0());
        assert_eq!(
            congruence_between(&a, &b),
            Err(CongruenceError::DifferentCoxeterPolynomial)
        );
        let id = congruence_between(&a, &a).unwrap();
        assert!(verify(&id, &a, &a).unwrap().strong);
        for f in [&a, &b] {
            let c = triangular_flip(f).unwrap();
            assert_eq!(&(&c.transpose() * f.upper()) * &c, f.upper().transpose());
        }
        let x2 = UnitForm::new(imat![[1]]).unwrap();
        let c = triangular_flip(&x2).unwrap();
        assert_eq!(c.rows(), 1);
    }
}
