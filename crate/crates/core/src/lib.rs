//! Integral quadratic forms built from quivers: invariants, standard
//! representatives, and integer matrices certifying that two upper Gram
//! matrices are congruent.
//!
//! Forms come from quivers through their incidence matrices; every form of
//! this kind is strongly congruent to a standard quiver determined by its
//! Coxeter polynomial, and [`congruence::congruence_to_standard`] builds the
//! matrix that proves it.

pub mod congruence;
pub mod exactmat;
pub mod io;
pub mod quiver;
pub mod standard;
pub mod unitform;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Matrix(#[from] exactmat::MatrixError),
    #[error(transparent)]
    Quiver(#[from] quiver::QuiverError),
    #[error(transparent)]
    Form(#[from] unitform::FormError),
    #[error(transparent)]
    Standard(#[from] standard::StandardError),
    #[error(transparent)]
    Partition(#[from] standard::PartitionError),
    #[error(transparent)]
    Congruence(#[from] congruence::CongruenceError),
    #[error(transparent)]
    Io(#[from] io::IoError),
}
