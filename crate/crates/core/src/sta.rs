//! The spacetime algebra Cl(1,3) and inertial observer frames.
//!
//! Generator bit 0 is `γ0` (squares to +1); bits 1..3 are `γ1..γ3`
//! (square to -1). Observer frames are stored as a rotor from the
//! fiducial generator frame, so every frame is orthonormal and has the
//! fiducial handedness.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::center::half_exp_factors;
use crate::error::{Error, Result};
use crate::kernel::{Multivector, Signature, DEFAULT_TOL};

const SIG: Signature = Signature::SPACETIME;
const PSEUDOSCALAR: usize = 0b1111;

/// General element of Cl(1,3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MvSta(Multivector<16>);

impl MvSta {
    pub const ZERO: MvSta = MvSta(Multivector::from_raw(SIG, [0.0; 16]));
    pub const ONE: MvSta = {
        let mut c = [0.0; 16];
        c[0] = 1.0;
        MvSta(Multivector::from_raw(SIG, c))
    };
    /// `I = γ0 γ1 γ2 γ3`.
    pub const I: MvSta = {
        let mut c = [0.0; 16];
        c[PSEUDOSCALAR] = 1.0;
        MvSta(Multivector::from_raw(SIG, c))
    };

    /// Coefficients in bitmask blade order. Non-finite values are rejected.
    pub fn new(coeffs: [f64; 16]) -> Result<Self> {
        Ok(MvSta(Multivector::new(SIG, coeffs)?))
    }

    pub(crate) fn raw(coeffs: [f64; 16]) -> Self {
        MvSta(Multivector::from_raw(SIG, coeffs))
    }

    pub fn scalar(value: f64) -> Self {
        let mut c = [0.0; 16];
        c[0] = value;
        Self::raw(c)
    }

    /// Fiducial generator `γ_mu`.
    pub fn gamma(mu: usize) -> Result<Self> {
        if mu > 3 {
            return Err(Error::InvalidIndex {
                what: "spacetime",
                index: mu,
            });
        }
        let mut c = [0.0; 16];
        c[1 << mu] = 1.0;
        Ok(Self::raw(c))
    }

    /// `v^mu γ_mu` on the fiducial frame.
    pub fn vector(v: [f64; 4]) -> Self {
        let mut c = [0.0; 16];
        for (mu, x) in v.into_iter().enumerate() {
            c[1 << mu] = x;
        }
        Self::raw(c)
    }

    pub fn coeffs(&self) -> &[f64; 16] {
        self.0.coeffs()
    }

    pub fn as_multivector(&self) -> &Multivector<16> {
        &self.0
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs()[0]
    }

    pub fn pseudoscalar_part(&self) -> f64 {
        self.coeffs()[PSEUDOSCALAR]
    }

    pub fn grade(&self, k: usize) -> Result<Self> {
        Ok(MvSta(self.0.grade_project(k)?))
    }

    pub fn reverse(&self) -> Self {
        MvSta(self.0.reverse())
    }

    pub fn grade_involute(&self) -> Self {
        MvSta(self.0.grade_involute())
    }

    /// Grade involution composed with reversion.
    pub fn clifford_conjugate(&self) -> Self {
        MvSta(self.0.reverse().grade_involute())
    }

    /// Largest odd-grade coefficient.
    pub fn odd_content(&self) -> f64 {
        self.0.max_abs_where(|g| g % 2 == 1)
    }

    pub fn max_abs_where(&self, pred: impl Fn(usize) -> bool) -> f64 {
        self.0.max_abs_where(pred)
    }

    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.0.distance(&other.0)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    fn center(&self) -> Complex64 {
        Complex64::new(self.scalar_part(), self.pseudoscalar_part())
    }

    fn from_center(z: Complex64) -> Self {
        let mut c = [0.0; 16];
        c[0] = z.re;
        c[PSEUDOSCALAR] = z.im;
        Self::raw(c)
    }
}

impl Add for MvSta {
    type Output = MvSta;
    fn add(self, rhs: MvSta) -> MvSta {
        MvSta(self.0 + rhs.0)
    }
}

impl Sub for MvSta {
    type Output = MvSta;
    fn sub(self, rhs: MvSta) -> MvSta {
        MvSta(self.0 - rhs.0)
    }
}

impl Neg for MvSta {
    type Output = MvSta;
    fn neg(self) -> MvSta {
        MvSta(-self.0)
    }
}

impl Mul for MvSta {
    type Output = MvSta;
    fn mul(self, rhs: MvSta) -> MvSta {
        MvSta(self.0.gp_same(&rhs.0))
    }
}

impl Mul<f64> for MvSta {
    type Output = MvSta;
    fn mul(self, rhs: f64) -> MvSta {
        MvSta(self.0 * rhs)
    }
}

/// Even element with `L L̃ = 1`, acting on everything by `X -> L X L̃`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaRotor(MvSta);

impl StaRotor {
    pub const IDENTITY: StaRotor = StaRotor(MvSta::ONE);

    /// Accepts `mv` when odd content and `|L L̃ - 1|` are both within `tol`.
    pub fn new(mv: MvSta, tol: f64) -> Result<Self> {
        let odd = mv.odd_content();
        if !(odd <= tol) {
            return Err(Error::OddContent { max_abs: odd });
        }
        let defect = unimodular_defect(&mv);
        if !(defect <= tol) {
            return Err(Error::NotUnimodular { defect, tol });
        }
        Ok(StaRotor(mv))
    }

    pub(crate) fn new_unchecked(mv: MvSta) -> Self {
        StaRotor(mv)
    }

    pub fn as_mv(&self) -> &MvSta {
        &self.0
    }

    pub fn defect(&self) -> f64 {
        unimodular_defect(&self.0)
    }

    pub fn reverse(&self) -> StaRotor {
        StaRotor(self.0.reverse())
    }

    /// `L X L̃`.
    pub fn sandwich(&self, x: &MvSta) -> MvSta {
        self.0 * *x * self.0.reverse()
    }

    /// `exp(B/2)` for a bivector `B`; `B^2` is a complex scalar on `(1, I)`.
    /// Non-bivector content up to `DEFAULT_TOL * max(1, |B|)` is discarded.
    pub fn exp(bivector: &MvSta) -> Result<Self> {
        let stray = bivector.max_abs_where(|g| g != 2);
        if !(stray <= DEFAULT_TOL * bivector.norm().max(1.0)) {
            return Err(Error::GradeContent {
                expected: "bivector",
                max_abs: stray,
            });
        }
        let b = bivector.grade(2)?;
        let (cosh_half, sinh_over_root) = half_exp_factors((b * b).center());
        let mv = MvSta::from_center(cosh_half) + MvSta::from_center(sinh_over_root) * b;
        Ok(StaRotor(mv))
    }

    /// Boost with rapidity `w` along unit spatial direction `n` of `frame`:
    /// `exp(w n^k γ_k0 / 2)`.
    pub fn boost(frame: &ObserverFrame, rapidity: f64, direction: [f64; 3]) -> Self {
        let basis = frame.proper_basis();
        let plane = (1..=3).fold(MvSta::ZERO, |acc, k| acc + basis[k] * direction[k - 1]);
        Self::exp(&(plane * rapidity)).expect("proper basis elements are bivectors")
    }

    /// Right-handed rotation of `frame` by `angle` about unit axis `n`:
    /// `exp(-angle n^k I σ_k / 2)`.
    pub fn rotation(frame: &ObserverFrame, angle: f64, axis: [f64; 3]) -> Self {
        let basis = frame.proper_basis();
        let plane = (1..=3).fold(MvSta::ZERO, |acc, k| {
            acc + MvSta::I * basis[k] * axis[k - 1]
        });
        Self::exp(&(plane * -angle)).expect("I σ_k are bivectors")
    }
}

/// Rotor composition; the right factor acts first.
impl Mul for StaRotor {
    type Output = StaRotor;
    fn mul(self, rhs: StaRotor) -> StaRotor {
        StaRotor(self.0 * rhs.0)
    }
}

/// `max |L L̃ - 1|` over coefficients.
pub fn unimodular_defect(mv: &MvSta) -> f64 {
    (*mv * mv.reverse()).distance(&MvSta::ONE)
}

/// An inertial observer's orthonormal tetrad `γ_mu^obs = L γ_mu L̃`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObserverFrame {
    rotor: StaRotor,
    tetrad: [MvSta; 4],
}

impl ObserverFrame {
    /// The generator frame itself.
    pub fn fiducial() -> Self {
        Self::from_rotor(StaRotor::IDENTITY)
    }

    pub fn from_rotor(rotor: StaRotor) -> Self {
        let tetrad = std::array::from_fn(|mu| rotor.sandwich(&MvSta::gamma(mu).expect("mu < 4")));
        ObserverFrame { rotor, tetrad }
    }

    pub fn rotor(&self) -> &StaRotor {
        &self.rotor
    }

    pub fn tetrad(&self) -> &[MvSta; 4] {
        &self.tetrad
    }

    pub fn gamma(&self, mu: usize) -> Result<MvSta> {
        self.tetrad.get(mu).copied().ok_or(Error::InvalidIndex {
            what: "spacetime",
            index: mu,
        })
    }

    /// `u = γ0^obs`.
    pub fn proper_velocity(&self) -> MvSta {
        self.tetrad[0]
    }

    /// `σ_mu = γ_mu γ0`; `σ0 = 1` and `σ_k` are timelike bivectors.
    pub fn proper_basis(&self) -> [MvSta; 4] {
        let g0 = self.tetrad[0];
        let mut basis = self.tetrad.map(|g| g * g0);
        // γ0 γ0 = 1 exactly, not just to rounding.
        basis[0] = MvSta::ONE;
        basis
    }

    /// `K^{†obs} = γ0 K̃ γ0`.
    pub fn hermitian_conjugate(&self, k: &MvSta) -> MvSta {
        let g0 = self.tetrad[0];
        g0 * k.reverse() * g0
    }

    /// Frame `γ_mu' = L γ_mu L̃`.
    pub fn transform(&self, l: &StaRotor) -> ObserverFrame {
        ObserverFrame::from_rotor(*l * self.rotor)
    }

    /// `r γ0 = t + r_rel` for a vector `r`.
    pub fn spacetime_split(&self, r: &MvSta) -> Result<(f64, MvSta)> {
        let stray = r.max_abs_where(|g| g != 1);
        if stray > DEFAULT_TOL {
            return Err(Error::GradeContent {
                expected: "spacetime vector",
                max_abs: stray,
            });
        }
        let rel = *r * self.tetrad[0];
        Ok((rel.scalar_part(), rel.grade(2)?))
    }

    /// Components `r^mu` with `r = r^mu γ_mu^obs`.
    pub fn components(&self, r: &MvSta) -> Result<[f64; 4]> {
        let stray = r.max_abs_where(|g| g != 1);
        if stray > DEFAULT_TOL {
            return Err(Error::GradeContent {
                expected: "spacetime vector",
                max_abs: stray,
            });
        }
        // r^mu = eta^{mu mu} <r γ_mu>_0
        Ok(std::array::from_fn(|mu| {
            let eta = if mu == 0 { 1.0 } else { -1.0 };
            eta * (*r * self.tetrad[mu]).scalar_part()
        }))
    }
}
