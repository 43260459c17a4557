//! Pseudo-morphisms and the construction of strong Gram congruences.
//!
//! A pseudo-morphism `Q ⊸ Q̃` is an integer matrix `B` with `I(Q)·B = I(Q̃)`
//! and `I(Q̃†)·Bᵀ = I(Q†)`. Starting from one built out of structural walks,
//! two corrections make it first invertible and then strong.

mod correct;
mod endo;
mod pipeline;
mod pseudo;
mod skewdec;

use thiserror::Error;

use crate::exactmat::MatrixError;
use crate::quiver::QuiverError;
use crate::unitform::FormError;

pub use correct::{correct_invertibility, correct_to_strong, source_kernel};
pub use endo::{circ_w, upsilon, xi_of_endo};
pub use pipeline::{
    congruence_between, congruence_forms, congruence_to_standard, triangular_flip, verify,
    CongruenceCertificate, VerifyReport,
};
pub use pseudo::{
    build_pseudo_morphism, build_pseudo_morphism_with, conjugating_permutation, star,
    PseudoMorphism,
};
pub use skewdec::{skew_decompose, skew_decompose_b, skew_factor_a};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CongruenceError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("Coxeter-Laplacians of source and target differ")]
    LaplacianMismatch,
    #[error("permutations have different cycle types")]
    CycleTypeMismatch,
    #[error("B* is not integral")]
    NonIntegerStar,
    #[error("matrix is not a pseudo-morphism: {0}")]
    NotPseudoMorphism(String),
    #[error("matrix is not a pseudo-endomorphism for this kernel matrix")]
    NotPseudoEndo,
    #[error("restriction of the target form to its radical is not pure")]
    NotPure,
    #[error("no integral L with B·K̃ = K·L: {0}")]
    NoL(MatrixError),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("W is not a pure skew normal form")]
    NotPureNormalForm,
    #[error("W is not an invertible skew normal form")]
    WNotInvertibleNormal,
    #[error("pseudo-morphism is not Z-invertible")]
    NotInvertible,
    #[error("forms are not weakly Gram congruent (different n or corank)")]
    NotWeaklyCongruent,
    #[error("forms have different Coxeter polynomials")]
    DifferentCoxeterPolynomial,
    #[error("certificate failed verification: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}
