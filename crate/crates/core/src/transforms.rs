//! Transformation laws for measurables.
//!
//! Spacetime vectors (real paravectors) and spacetime planes
//! (biparavectors) transform differently: a paravector goes as
//! `p -> L p L†` while a biparavector goes as `F -> L F L̄`. Both are
//! available in passive (observer moves), active (object moves) and both
//! (object and observer move together) flavours.

use std::fmt;
use std::str::FromStr;

use crate::aps::{ApsRotor, Biparavector, MvAps, Paravector};
use crate::bridge::Bridge;
use crate::error::{Error, Result};
use crate::sta::{MvSta, ObserverFrame, StaRotor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformMode {
    /// The observer is transformed; the object stays put.
    Passive,
    /// The object is transformed for a fixed observer.
    Active,
    /// Object and observer are transformed by the same rotor.
    Both,
}

impl TransformMode {
    pub fn as_str(self) -> &'static str {
        match self {
            TransformMode::Passive => "passive",
            TransformMode::Active => "active",
            TransformMode::Both => "both",
        }
    }
}

impl fmt::Display for TransformMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TransformMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "passive" => Ok(TransformMode::Passive),
            "active" => Ok(TransformMode::Active),
            "both" => Ok(TransformMode::Both),
            other => Err(Error::Domain(format!("unknown transform mode {other:?}"))),
        }
    }
}

/// Coefficients of a spacetime vector on a single proper basis, after
/// the transformation selected by `mode`:
///
/// * passive: `r -> L̄ r L̄†`
/// * active: `r -> L r L†`
/// * both: unchanged
pub fn transform_measurables(r: &Paravector, l: &ApsRotor, mode: TransformMode) -> Paravector {
    match mode {
        TransformMode::Passive => l.inverse().rotate_paravector(r),
        TransformMode::Active => l.rotate_paravector(r),
        TransformMode::Both => *r,
    }
}

/// The same laws evaluated in STA against the proper basis of `observer`:
/// with `r_obs = r^mu σ_mu^obs`, passive is `L̃ r_obs L̃^{†obs}`, active is
/// `L r_obs L^{†obs}`, and the result is read back on `σ_mu^obs`.
pub fn transform_measurables_in(
    r: &Paravector,
    l: &StaRotor,
    mode: TransformMode,
    observer: &ObserverFrame,
) -> Result<Paravector> {
    let sigma = observer.proper_basis();
    let relative = r
        .components()
        .iter()
        .zip(sigma.iter())
        .fold(MvSta::ZERO, |acc, (c, s)| acc + *s * *c);
    let moved = match mode {
        TransformMode::Passive => {
            let rev = *l.reverse().as_mv();
            rev * relative * observer.hermitian_conjugate(&rev)
        }
        TransformMode::Active => {
            let l = *l.as_mv();
            l * relative * observer.hermitian_conjugate(&l)
        }
        TransformMode::Both => return Ok(*r),
    };
    let seen = Bridge::new(observer).to_aps(&moved)?;
    Ok(Paravector::new(seen.scalar_part(), seen.vector_part()))
}

/// `L' = L_CA L L̄_CA`: the transformation `L` as described in the frame
/// reached from the current one by `L_CA`.
pub fn compose_seen_by(l: &ApsRotor, l_ca: &ApsRotor) -> ApsRotor {
    *l_ca * *l * l_ca.inverse()
}

/// STA form of [`compose_seen_by`]: `L_CA L L̃_CA`.
pub fn compose_seen_by_sta(l: &StaRotor, l_ca: &StaRotor) -> StaRotor {
    *l_ca * *l * l_ca.reverse()
}

/// A biparavector read as an electromagnetic field `F = E + iB`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldBiparavector(Biparavector);

impl FieldBiparavector {
    pub fn new(e: [f64; 3], b: [f64; 3]) -> Self {
        FieldBiparavector(Biparavector::new(e, b))
    }

    pub fn from_biparavector(f: Biparavector) -> Self {
        FieldBiparavector(f)
    }

    pub fn biparavector(&self) -> &Biparavector {
        &self.0
    }

    pub fn to_mv(&self) -> MvAps {
        self.0.to_mv()
    }

    /// `(E, B)` from `F = (F + F†)/2 + (F - F†)/2 = E + iB`.
    pub fn split(&self) -> ([f64; 3], [f64; 3]) {
        let (real, imag) = self.to_mv().split_hermitian();
        (real.vector_part(), imag.bivector_part())
    }

    /// `F^2 = (E^2 - B^2) + 2i E·B`, returned as `(E^2 - B^2, E·B)`.
    pub fn invariants(&self) -> (f64, f64) {
        let sq = self.0.square();
        (sq.scalar_part(), sq.pseudoscalar_part() / 2.0)
    }
}

pub fn field_split(f: &FieldBiparavector) -> ([f64; 3], [f64; 3]) {
    f.split()
}

/// * passive: `F -> L̄ F L`
/// * active: `F -> L F L̄`
/// * both: unchanged
pub fn transform_field(
    f: &FieldBiparavector,
    l: &ApsRotor,
    mode: TransformMode,
) -> FieldBiparavector {
    let l = *l.as_mv();
    let f_mv = f.to_mv();
    let out = match mode {
        TransformMode::Passive => l.clifford_conjugate() * f_mv * l,
        TransformMode::Active => l * f_mv * l.clifford_conjugate(),
        TransformMode::Both => return *f,
    };
    // Grades 0 and 3 vanish up to rounding; drop them.
    FieldBiparavector(Biparavector::new(out.vector_part(), out.bivector_part()))
}

/// STA form of [`transform_field`]: passive `L̃ F L`, active `L F L̃`.
pub fn transform_field_sta(f: &MvSta, l: &StaRotor, mode: TransformMode) -> MvSta {
    match mode {
        TransformMode::Passive => l.reverse().sandwich(f),
        TransformMode::Active => l.sandwich(f),
        TransformMode::Both => *f,
    }
}

/// How a proper basis element `e_mu = γ_mu γ0` is transported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// As part of a spacetime vector: `(L γ_mu L̃) γ0`; only the object frame moves.
    Paravector,
    /// As a spacetime plane: `L σ_mu L̃`; both factors move.
    Bivector,
}

impl FromStr for BasisKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paravector" => Ok(BasisKind::Paravector),
            "bivector" | "biparavector" => Ok(BasisKind::Bivector),
            other => Err(Error::Domain(format!("unknown basis kind {other:?}"))),
        }
    }
}

/// Transforms `e_mu` of `observer` by the APS rotor `l`, read in that
/// observer's identification, and returns the STA element.
pub fn transform_basis_element(
    mu: usize,
    l: &ApsRotor,
    observer: &ObserverFrame,
    kind: BasisKind,
) -> Result<MvSta> {
    let gamma = observer.gamma(mu)?;
    let l = Bridge::new(observer).rotor_to_sta(l);
    Ok(match kind {
        BasisKind::Paravector => l.sandwich(&gamma) * observer.proper_velocity(),
        BasisKind::Bivector => l.sandwich(&observer.proper_basis()[mu]),
    })
}

/// Reads an STA bivector as a biparavector against `observer`.
pub fn field_from_sta(f: &MvSta, observer: &ObserverFrame) -> Result<FieldBiparavector> {
    let stray = f.max_abs_where(|g| g != 2);
    if stray > crate::EVEN_TOL {
        return Err(Error::GradeContent {
            expected: "spacetime bivector",
            max_abs: stray,
        });
    }
    let a = Bridge::new(observer).to_aps(f)?;
    Ok(FieldBiparavector(Biparavector::from_mv(
        &a,
        crate::EVEN_TOL,
    )?))
}
