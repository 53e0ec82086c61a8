use thiserror::Error;

use crate::kernel::KernelError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("rotor is not unimodular: defect {defect:e} exceeds tolerance {tol:e}")]
    NotUnimodular { defect: f64, tol: f64 },
    #[error("rotor is not orthochronous: scalar part of L L-dagger is {scalar}")]
    NotOrthochronous { scalar: f64 },
    #[error("element is not a {expected}: stray content of magnitude {max_abs:e}")]
    GradeContent {
        expected: &'static str,
        max_abs: f64,
    },
    #[error("element has odd-grade content of magnitude {max_abs:e}")]
    OddContent { max_abs: f64 },
    #[error("superluminal velocity: |v| = {speed} >= 1")]
    Superluminal { speed: f64 },
    #[error("invalid {what} index {index}")]
    InvalidIndex { what: &'static str, index: usize },
    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
