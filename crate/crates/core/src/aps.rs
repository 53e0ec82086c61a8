//! The algebra of physical space, Cl(3).
//!
//! Blade layout (bitmask order): `1, e1, e2, e12, e3, e13, e23, e123`.
//! The pseudoscalar `i = e1 e2 e3` is central and squares to -1, so
//! complex scalars live on the `(1, e123)` pair and bivectors are written
//! as imaginary vectors, `e23 = i e1`, `e31 = i e2`, `e12 = i e3`.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::center::half_exp_factors;
use crate::error::{Error, Result};
use crate::kernel::{Multivector, Signature};
use crate::UNIMODULAR_TOL;

const SIG: Signature = Signature::EUCLIDEAN_3;

const E1: usize = 0b001;
const E2: usize = 0b010;
const E12: usize = 0b011;
const E3: usize = 0b100;
const E13: usize = 0b101;
const E23: usize = 0b110;
const E123: usize = 0b111;

const VECTOR_SLOTS: [usize; 3] = [E1, E2, E3];

/// General element of Cl(3).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MvAps(Multivector<8>);

impl MvAps {
    pub const ZERO: MvAps = MvAps(Multivector::from_raw(SIG, [0.0; 8]));
    pub const ONE: MvAps = MvAps(Multivector::from_raw(
        SIG,
        [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    ));
    /// The unit pseudoscalar `i = e1 e2 e3`.
    pub const I: MvAps = MvAps(Multivector::from_raw(
        SIG,
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
    ));

    /// Coefficients in bitmask blade order. Non-finite values are rejected.
    pub fn new(coeffs: [f64; 8]) -> Result<Self> {
        Ok(MvAps(Multivector::new(SIG, coeffs)?))
    }

    pub fn from_multivector(mv: Multivector<8>) -> Result<Self> {
        if mv.signature() != SIG {
            return Err(crate::kernel::KernelError::SignatureMismatch {
                left: mv.signature(),
                right: SIG,
            }
            .into());
        }
        Ok(MvAps(mv))
    }

    pub(crate) fn raw(coeffs: [f64; 8]) -> Self {
        MvAps(Multivector::from_raw(SIG, coeffs))
    }

    pub fn scalar(value: f64) -> Self {
        Self::from_parts(value, [0.0; 3], [0.0; 3], 0.0)
    }

    pub fn vector(v: [f64; 3]) -> Self {
        Self::from_parts(0.0, v, [0.0; 3], 0.0)
    }

    /// The bivector `i b = b1 e23 + b2 e31 + b3 e12`.
    pub fn imaginary_vector(b: [f64; 3]) -> Self {
        Self::from_parts(0.0, [0.0; 3], b, 0.0)
    }

    /// Basis vector `e_k` for `k` in `1..=3`.
    pub fn e(k: usize) -> Result<Self> {
        if !(1..=3).contains(&k) {
            return Err(Error::InvalidIndex {
                what: "spatial",
                index: k,
            });
        }
        let mut v = [0.0; 3];
        v[k - 1] = 1.0;
        Ok(Self::vector(v))
    }

    /// `s + v + i b + i t`.
    pub fn from_parts(
        scalar: f64,
        vector: [f64; 3],
        bivector: [f64; 3],
        pseudoscalar: f64,
    ) -> Self {
        let mut c = [0.0; 8];
        c[0] = scalar;
        for (slot, x) in VECTOR_SLOTS.iter().zip(vector) {
            c[*slot] = x;
        }
        c[E23] = bivector[0];
        c[E13] = -bivector[1];
        c[E12] = bivector[2];
        c[E123] = pseudoscalar;
        Self::raw(c)
    }

    pub fn coeffs(&self) -> &[f64; 8] {
        self.0.coeffs()
    }

    pub fn as_multivector(&self) -> &Multivector<8> {
        &self.0
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs()[0]
    }

    pub fn vector_part(&self) -> [f64; 3] {
        let c = self.coeffs();
        [c[E1], c[E2], c[E3]]
    }

    /// Coefficients `b` of the bivector part written as `i b`.
    pub fn bivector_part(&self) -> [f64; 3] {
        let c = self.coeffs();
        [c[E23], -c[E13], c[E12]]
    }

    pub fn pseudoscalar_part(&self) -> f64 {
        self.coeffs()[E123]
    }

    pub fn grade(&self, k: usize) -> Result<Self> {
        Ok(MvAps(self.0.grade_project(k)?))
    }

    /// Reversion, which acts as hermitian conjugation in APS.
    pub fn dagger(&self) -> Self {
        MvAps(self.0.reverse())
    }

    pub fn grade_involute(&self) -> Self {
        MvAps(self.0.grade_involute())
    }

    /// `p0 + p -> p0 - p`, extended as an antiautomorphism.
    pub fn clifford_conjugate(&self) -> Self {
        MvAps(self.0.reverse().grade_involute())
    }

    /// `(A + A†)/2, (A - A†)/2`: grades {0, 1} and {2, 3}.
    pub fn split_hermitian(&self) -> (Self, Self) {
        let dag = self.dagger();
        ((*self + dag) * 0.5, (*self - dag) * 0.5)
    }

    /// `(A + Ā)/2, (A - Ā)/2`: complex scalar and complex vector parts.
    pub fn split_bar(&self) -> (Self, Self) {
        let bar = self.clifford_conjugate();
        ((*self + bar) * 0.5, (*self - bar) * 0.5)
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

    /// Largest coefficient on grades selected by `pred`.
    pub fn max_abs_where(&self, pred: impl Fn(usize) -> bool) -> f64 {
        self.0.max_abs_where(pred)
    }

    fn center(&self) -> Complex64 {
        Complex64::new(self.scalar_part(), self.pseudoscalar_part())
    }

    fn from_center(z: Complex64) -> Self {
        Self::from_parts(z.re, [0.0; 3], [0.0; 3], z.im)
    }
}

impl Add for MvAps {
    type Output = MvAps;
    fn add(self, rhs: MvAps) -> MvAps {
        MvAps(self.0 + rhs.0)
    }
}

impl Sub for MvAps {
    type Output = MvAps;
    fn sub(self, rhs: MvAps) -> MvAps {
        MvAps(self.0 - rhs.0)
    }
}

impl Neg for MvAps {
    type Output = MvAps;
    fn neg(self) -> MvAps {
        MvAps(-self.0)
    }
}

impl Mul for MvAps {
    type Output = MvAps;
    fn mul(self, rhs: MvAps) -> MvAps {
        MvAps(self.0.gp_same(&rhs.0))
    }
}

impl Mul<f64> for MvAps {
    type Output = MvAps;
    fn mul(self, rhs: f64) -> MvAps {
        MvAps(self.0 * rhs)
    }
}

/// Real scalar plus real vector: `p = p^mu e_mu` with `e0 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Paravector {
    pub scalar: f64,
    pub vector: [f64; 3],
}

impl Paravector {
    pub const fn new(scalar: f64, vector: [f64; 3]) -> Self {
        Paravector { scalar, vector }
    }

    pub const fn from_components(c: [f64; 4]) -> Self {
        Paravector {
            scalar: c[0],
            vector: [c[1], c[2], c[3]],
        }
    }

    /// Basis paravector `e_mu`.
    pub fn basis(mu: usize) -> Result<Self> {
        if mu > 3 {
            return Err(Error::InvalidIndex {
                what: "spacetime",
                index: mu,
            });
        }
        let mut c = [0.0; 4];
        c[mu] = 1.0;
        Ok(Self::from_components(c))
    }

    pub fn components(&self) -> [f64; 4] {
        [self.scalar, self.vector[0], self.vector[1], self.vector[2]]
    }

    pub fn to_mv(&self) -> MvAps {
        MvAps::from_parts(self.scalar, self.vector, [0.0; 3], 0.0)
    }

    /// Fails when grade-2 or grade-3 content exceeds `tol`.
    pub fn from_mv(mv: &MvAps, tol: f64) -> Result<Self> {
        let stray = mv.max_abs_where(|g| g >= 2);
        if stray > tol {
            return Err(Error::GradeContent {
                expected: "real paravector",
                max_abs: stray,
            });
        }
        Ok(Self::from_mv_real_part(mv))
    }

    fn from_mv_real_part(mv: &MvAps) -> Self {
        Paravector::new(mv.scalar_part(), mv.vector_part())
    }

    pub fn conjugate(&self) -> Self {
        let [x, y, z] = self.vector;
        Paravector::new(self.scalar, [-x, -y, -z])
    }

    /// `Q(p) = p p̄ = (p0)^2 - p·p`.
    pub fn quadratic_form(&self) -> f64 {
        (self.to_mv() * self.conjugate().to_mv()).scalar_part()
    }

    /// `<p q̄>_S`, which is `p^mu q^nu eta_{mu nu}` with `eta = diag(1,-1,-1,-1)`.
    pub fn minkowski_inner(&self, other: &Paravector) -> f64 {
        let (s, _) = (self.to_mv() * other.conjugate().to_mv()).split_bar();
        s.scalar_part()
    }

    pub fn scale(&self, k: f64) -> Self {
        let [x, y, z] = self.vector;
        Paravector::new(self.scalar * k, [x * k, y * k, z * k])
    }
}

impl Add for Paravector {
    type Output = Paravector;
    fn add(self, rhs: Paravector) -> Paravector {
        let (a, b) = (self.components(), rhs.components());
        Paravector::from_components([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]])
    }
}

/// Real vector plus imaginary vector (bivector): a spacetime plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Biparavector {
    pub real: [f64; 3],
    pub imag: [f64; 3],
}

impl Biparavector {
    pub const ZERO: Biparavector = Biparavector {
        real: [0.0; 3],
        imag: [0.0; 3],
    };

    pub const fn new(real: [f64; 3], imag: [f64; 3]) -> Self {
        Biparavector { real, imag }
    }

    pub fn to_mv(&self) -> MvAps {
        MvAps::from_parts(0.0, self.real, self.imag, 0.0)
    }

    /// Fails when grade-0 or grade-3 content exceeds `tol`.
    pub fn from_mv(mv: &MvAps, tol: f64) -> Result<Self> {
        let stray = mv.max_abs_where(|g| g == 0 || g == 3);
        if stray > tol {
            return Err(Error::GradeContent {
                expected: "biparavector",
                max_abs: stray,
            });
        }
        Ok(Biparavector::new(mv.vector_part(), mv.bivector_part()))
    }

    /// `W^2`, a complex scalar returned on the `(1, i)` blades.
    pub fn square(&self) -> MvAps {
        let w = self.to_mv();
        w * w
    }

    pub fn norm(&self) -> f64 {
        self.to_mv().norm()
    }

    pub fn scale(&self, k: f64) -> Self {
        let f = |v: [f64; 3]| [v[0] * k, v[1] * k, v[2] * k];
        Biparavector::new(f(self.real), f(self.imag))
    }
}

/// `<p q̄>_V`, the plane spanned by two paravectors.
pub fn biparavector_of(p: &Paravector, q: &Paravector) -> Biparavector {
    let (_, v) = (p.to_mv() * q.conjugate().to_mv()).split_bar();
    Biparavector::new(v.vector_part(), v.bivector_part())
}

/// Unimodular element `L` with `L L̄ = 1`, acting by `p -> L p L†`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApsRotor(MvAps);

impl ApsRotor {
    pub const IDENTITY: ApsRotor = ApsRotor(MvAps::ONE);

    /// Accepts `mv` when `|L L̄ - 1|` (max coefficient) is at most `tol`.
    pub fn new(mv: MvAps, tol: f64) -> Result<Self> {
        let defect = unimodular_defect(&mv);
        if !(defect <= tol) {
            return Err(Error::NotUnimodular { defect, tol });
        }
        Ok(ApsRotor(mv))
    }

    pub(crate) fn new_unchecked(mv: MvAps) -> Self {
        ApsRotor(mv)
    }

    pub fn as_mv(&self) -> &MvAps {
        &self.0
    }

    pub fn defect(&self) -> f64 {
        unimodular_defect(&self.0)
    }

    /// `L̄`, the inverse rotor.
    pub fn inverse(&self) -> ApsRotor {
        ApsRotor(self.0.clifford_conjugate())
    }

    /// Pure boost with coordinate velocity `v` (units of c).
    pub fn boost_from_velocity(v: [f64; 3]) -> Result<Self> {
        let speed = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if !(speed < 1.0) {
            return Err(Error::Superluminal { speed });
        }
        if speed == 0.0 {
            return Ok(ApsRotor::IDENTITY);
        }
        let w = speed.atanh();
        Ok(Self::boost(w, [v[0] / speed, v[1] / speed, v[2] / speed]))
    }

    /// `exp(w n / 2)` for unit direction `n`.
    pub fn boost(rapidity: f64, direction: [f64; 3]) -> Self {
        rotor_exp(&Biparavector::new(direction, [0.0; 3]).scale(rapidity))
    }

    /// `exp(-i n phi / 2)`: rotation by `phi` about unit axis `n`.
    /// For `n = e3` this is `exp(-e1 e2 phi / 2)`.
    pub fn rotation(angle: f64, axis: [f64; 3]) -> Self {
        rotor_exp(&Biparavector::new([0.0; 3], axis).scale(-angle))
    }

    /// `p -> L p L†`. Imaginary residue from rounding is dropped.
    pub fn rotate_paravector(&self, p: &Paravector) -> Paravector {
        Paravector::from_mv_real_part(&(self.0 * p.to_mv() * self.0.dagger()))
    }
}

/// Rotor composition; the right factor acts first.
impl Mul for ApsRotor {
    type Output = ApsRotor;
    fn mul(self, rhs: ApsRotor) -> ApsRotor {
        ApsRotor(self.0 * rhs.0)
    }
}

/// `max |L L̄ - 1|` over coefficients.
pub fn unimodular_defect(mv: &MvAps) -> f64 {
    (*mv * mv.clifford_conjugate()).distance(&MvAps::ONE)
}

/// `L = exp(W/2)` in closed form, using that `W^2` is a complex scalar.
pub fn rotor_exp(w: &Biparavector) -> ApsRotor {
    let c = w.square().center();
    let (cosh_half, sinh_over_root) = half_exp_factors(c);
    let mv = MvAps::from_center(cosh_half) + MvAps::from_center(sinh_over_root) * w.to_mv();
    ApsRotor::new_unchecked(mv)
}

/// `L = B R` with `B = B†` a boost and `R R† = 1` a spatial rotation.
pub fn factor_boost_rotation(l: &ApsRotor) -> Result<(ApsRotor, ApsRotor)> {
    let l_mv = *l.as_mv();
    let boost_sq = l_mv * l_mv.dagger();
    let gamma = boost_sq.scalar_part();
    if !(gamma > 0.0) {
        return Err(Error::NotOrthochronous { scalar: gamma });
    }
    // L L† = B^2 = gamma (1 + v); B = (1 + B^2) / sqrt(2 (1 + gamma)).
    let real_sq = Paravector::new(gamma, boost_sq.vector_part()).to_mv();
    let b = (MvAps::ONE + real_sq) * (1.0 / (2.0 * (1.0 + gamma)).sqrt());
    let r = b.clifford_conjugate() * l_mv;
    Ok((ApsRotor::new_unchecked(b), ApsRotor::new_unchecked(r)))
}

/// Default-tolerance convenience for [`ApsRotor::new`].
pub fn checked_rotor(mv: MvAps) -> Result<ApsRotor> {
    ApsRotor::new(mv, UNIMODULAR_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    fn e(k: usize) -> MvAps {
        MvAps::e(k).unwrap()
    }

    #[test]
    fn pseudoscalar_is_central_and_squares_to_minus_one() {
        assert_eq!(MvAps::I * MvAps::I, -MvAps::ONE);
        for k in 1..=3 {
            assert_eq!(MvAps::I * e(k), e(k) * MvAps::I);
        }
        assert_eq!(e(1) * e(2), MvAps::I * e(3));
        assert_eq!(e(1) * e(2) * e(3), MvAps::I);
    }

    #[test]
    fn imaginary_vector_layout() {
        for k in 1..=3 {
            let mut b = [0.0; 3];
            b[k - 1] = 1.0;
            assert_eq!(MvAps::imaginary_vector(b), MvAps::I * e(k));
        }
    }

    #[test]
    fn conjugations() {
        let p = Paravector::new(2.0, [1.0, -3.0, 0.5]);
        assert_eq!(p.to_mv().clifford_conjugate(), p.conjugate().to_mv());
        assert_eq!(MvAps::ONE.clifford_conjugate(), MvAps::ONE);
        // ē2 ē1 = e2 e1: bivectors change sign, like vectors.
        let e12 = e(1) * e(2);
        assert_eq!(e12.clifford_conjugate(), -e12);
        assert_eq!(MvAps::I.clifford_conjugate(), MvAps::I);
        assert_eq!(e12.dagger(), -e12);
        assert_eq!(MvAps::I.dagger(), -MvAps::I);
        assert_eq!(p.to_mv().dagger(), p.to_mv());
    }

    #[test]
    fn hermitian_split() {
        let a = MvAps::from_parts(3.0, [1.0, 0.0, 0.0], [0.0; 3], 5.0) + e(1) * e(2) * 2.0;
        let (re, im) = a.split_hermitian();
        assert_eq!(re, MvAps::scalar(3.0) + e(1));
        assert_eq!(im, e(1) * e(2) * 2.0 + MvAps::I * 5.0);
        assert_eq!(MvAps::ZERO.split_hermitian(), (MvAps::ZERO, MvAps::ZERO));
    }

    #[test]
    fn bar_split() {
        let a = MvAps::scalar(3.0) + e(1) + MvAps::I * 5.0;
        let (s, v) = a.split_bar();
        assert_eq!(s, MvAps::scalar(3.0) + MvAps::I * 5.0);
        assert_eq!(v, e(1));
        assert_eq!(MvAps::ONE.split_bar(), (MvAps::ONE, MvAps::ZERO));
    }

    #[test]
    fn quadratic_form_and_inner_product() {
        assert_eq!(Paravector::basis(0).unwrap().quadratic_form(), 1.0);
        assert_eq!(Paravector::basis(1).unwrap().quadratic_form(), -1.0);
        let g = 1.25;
        let u = Paravector::new(g, [g * 0.6, 0.0, 0.0]);
        assert!((u.quadratic_form() - 1.0).abs() < 1e-12);
        let e0 = Paravector::basis(0).unwrap();
        let e1 = Paravector::basis(1).unwrap();
        let e2 = Paravector::basis(2).unwrap();
        assert_eq!(e0.minkowski_inner(&e0), 1.0);
        assert_eq!(e1.minkowski_inner(&e2), 0.0);
        let p = Paravector::new(2.0, [1.0, 0.0, 0.0]);
        let q = Paravector::new(1.0, [-3.0, 0.0, 0.0]);
        assert_eq!(p.minkowski_inner(&q), 5.0);
        assert!(Paravector::basis(4).is_err());
    }

    #[test]
    fn planes_from_paravector_pairs() {
        let e0 = Paravector::basis(0).unwrap();
        let e1 = Paravector::basis(1).unwrap();
        let e2 = Paravector::basis(2).unwrap();
        assert_eq!(biparavector_of(&e0, &e1).to_mv(), -e(1));
        assert_eq!(biparavector_of(&e1, &e2).to_mv(), -(e(1) * e(2)));
        let p = Paravector::new(0.3, [1.0, 2.0, -1.0]);
        assert_eq!(biparavector_of(&p, &p), Biparavector::ZERO);
    }

    #[test]
    fn rotor_exp_special_cases() {
        assert_eq!(*rotor_exp(&Biparavector::ZERO).as_mv(), MvAps::ONE);
        // -e1e2 phi = i(-phi) e3 with phi = pi/2
        let r = rotor_exp(&Biparavector::new([0.0; 3], [0.0, 0.0, -FRAC_PI_2]));
        let expected = MvAps::scalar(FRAC_PI_4.cos()) - e(1) * e(2) * FRAC_PI_4.sin();
        assert!(r.as_mv().approx_eq(&expected, 1e-15));
        let l = rotor_exp(&Biparavector::new([0.6f64.atanh(), 0.0, 0.0], [0.0; 3]));
        let l2 = *l.as_mv() * *l.as_mv();
        assert!(l2.approx_eq(&(MvAps::scalar(1.25) + e(1) * 0.75), 1e-14));
    }

    #[test]
    fn rotation_and_boost_of_paravectors() {
        let p = Paravector::new(1.0, [2.0, 3.0, 4.0]);
        assert_eq!(ApsRotor::IDENTITY.rotate_paravector(&p), p);
        let r = ApsRotor::rotation(FRAC_PI_2, [0.0, 0.0, 1.0]);
        let out = r.rotate_paravector(&Paravector::basis(1).unwrap());
        let want = Paravector::basis(2).unwrap();
        assert!(out.to_mv().approx_eq(&want.to_mv(), 1e-15));
        let b = ApsRotor::boost(0.6f64.atanh(), [1.0, 0.0, 0.0]);
        let out = b.rotate_paravector(&Paravector::basis(0).unwrap());
        assert!((out.scalar - 1.25).abs() < 1e-14 && (out.vector[0] - 0.75).abs() < 1e-14);
    }

    #[test]
    fn non_unimodular_rejected() {
        let err = ApsRotor::new(MvAps::scalar(2.0), UNIMODULAR_TOL).unwrap_err();
        assert!(matches!(err, Error::NotUnimodular { defect, .. } if (defect - 3.0).abs() < 1e-15));
        assert!(checked_rotor(MvAps::ONE).is_ok());
    }

    #[test]
    fn superluminal_boost_rejected() {
        assert!(ApsRotor::boost_from_velocity([0.99999, 0.0, 0.0]).is_ok());
        assert!(matches!(
            ApsRotor::boost_from_velocity([1.0, 0.0, 0.0]),
            Err(Error::Superluminal { .. })
        ));
        assert_eq!(
            ApsRotor::boost_from_velocity([0.0; 3]).unwrap(),
            ApsRotor::IDENTITY
        );
    }

    #[test]
    fn factor_special_cases() {
        let b = ApsRotor::boost(0.8, [0.0, 0.6, 0.8]);
        let (fb, fr) = factor_boost_rotation(&b).unwrap();
        assert!(fb.as_mv().approx_eq(b.as_mv(), 1e-15));
        assert!(fr.as_mv().approx_eq(&MvAps::ONE, 1e-15));
        let r = ApsRotor::rotation(1.1, [0.0, 0.6, 0.8]);
        let (fb, fr) = factor_boost_rotation(&r).unwrap();
        assert!(fb.as_mv().approx_eq(&MvAps::ONE, 1e-15));
        assert!(fr.as_mv().approx_eq(r.as_mv(), 1e-15));
        let b = ApsRotor::boost(0.6f64.atanh(), [1.0, 0.0, 0.0]);
        let r = ApsRotor::rotation(0.7, [0.0, 0.0, 1.0]);
        let (fb, fr) = factor_boost_rotation(&(b * r)).unwrap();
        assert!(fb.as_mv().approx_eq(b.as_mv(), 1e-12));
        assert!(fr.as_mv().approx_eq(r.as_mv(), 1e-12));
    }

    #[test]
    fn factor_rejects_zero() {
        assert!(matches!(
            factor_boost_rotation(&ApsRotor::new_unchecked(MvAps::ZERO)),
            Err(Error::NotOrthochronous { .. })
        ));
    }
}
