//! Clifford algebras of physical space, Cl(3), and of spacetime, Cl(1,3),
//! together with the observer-dependent isomorphism between Cl(3) and the
//! even subalgebra of Cl(1,3), Lorentz rotors, and the transformation laws
//! for spacetime vectors and planes.

// Tolerance gates are written `!(x <= tol)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod aps;
pub mod bridge;
mod center;
pub mod cli;
pub mod error;
pub mod kernel;
pub mod sta;
pub mod transforms;

pub use aps::{ApsRotor, Biparavector, MvAps, Paravector};
pub use bridge::Bridge;
pub use error::{Error, Result};
pub use sta::{MvSta, ObserverFrame, StaRotor};
pub use transforms::{BasisKind, FieldBiparavector, TransformMode};

/// Default gate on `|L L̄ - 1|` (APS) or `|L L̃ - 1|` (STA).
pub const UNIMODULAR_TOL: f64 = 1e-10;

/// Largest odd-grade coefficient tolerated when mapping STA into APS.
pub const EVEN_TOL: f64 = 1e-10;
