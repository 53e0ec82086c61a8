//! Signature-generic Clifford blade arithmetic.
//!
//! Blades are bitmasks over the generators (bit `i` set means generator `i`
//! is present, in ascending order). Products of two blades are resolved by
//! counting the transpositions needed to sort the concatenated generator
//! list and then contracting repeated generators with the metric. The full
//! sign/result table for a signature is built once and shared.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};
use std::sync::OnceLock;

use thiserror::Error;

/// Absolute tolerance used for comparisons on unit-scale data.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Largest supported total number of generators.
pub const MAX_DIMENSION: usize = 4;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KernelError {
    #[error("unsupported signature ({p},{q}): at most {MAX_DIMENSION} generators")]
    UnsupportedSignature { p: u8, q: u8 },
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },
    #[error("coefficient array of length {len} does not fit signature {sig} ({expected} blades)")]
    LengthMismatch {
        sig: Signature,
        len: usize,
        expected: usize,
    },
    #[error("blade mask {mask:#b} out of range for signature {sig}")]
    BladeOutOfRange { mask: u8, sig: Signature },
    #[error("grade {grade} out of range for signature {sig}")]
    GradeOutOfRange { grade: usize, sig: Signature },
    #[error("non-finite coefficient {value} at blade {mask:#b}")]
    NonFinite { mask: u8, value: f64 },
}

/// Metric signature: `p` generators square to +1, followed by `q` that square to -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    /// Cl(3): the algebra of physical space.
    pub const EUCLIDEAN_3: Signature = Signature { p: 3, q: 0 };
    /// Cl(1,3): generator 0 is the time axis.
    pub const SPACETIME: Signature = Signature { p: 1, q: 3 };

    pub fn new(p: u8, q: u8) -> Result<Self, KernelError> {
        if usize::from(p) + usize::from(q) > MAX_DIMENSION {
            return Err(KernelError::UnsupportedSignature { p, q });
        }
        Ok(Signature { p, q })
    }

    pub fn p(self) -> u8 {
        self.p
    }

    pub fn q(self) -> u8 {
        self.q
    }

    pub fn dimension(self) -> usize {
        usize::from(self.p) + usize::from(self.q)
    }

    pub fn blade_count(self) -> usize {
        1 << self.dimension()
    }

    /// Square of generator `index` (+1 or -1).
    pub fn square_of(self, index: usize) -> f64 {
        debug_assert!(index < self.dimension());
        if index < usize::from(self.p) {
            1.0
        } else {
            -1.0
        }
    }

    /// Shared product table, built on first use.
    pub fn table(self) -> &'static ProductTable {
        static TABLES: [OnceLock<ProductTable>; (MAX_DIMENSION + 1) * (MAX_DIMENSION + 1)] =
            [const { OnceLock::new() }; (MAX_DIMENSION + 1) * (MAX_DIMENSION + 1)];
        let slot = usize::from(self.p) * (MAX_DIMENSION + 1) + usize::from(self.q);
        TABLES[slot].get_or_init(|| ProductTable::build(self))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

/// A basis blade, encoded as a bitmask over generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BladeIndex(u8);

impl BladeIndex {
    pub const SCALAR: BladeIndex = BladeIndex(0);

    pub fn new(mask: u8, sig: Signature) -> Result<Self, KernelError> {
        if usize::from(mask) >= sig.blade_count() {
            return Err(KernelError::BladeOutOfRange { mask, sig });
        }
        Ok(BladeIndex(mask))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        usize::from(self.0)
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Generator indices in canonical (ascending) order.
    pub fn generators(self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (0..8).filter(move |i| mask & (1 << i) != 0)
    }
}

/// Sign and resulting blade of the product of two basis blades.
///
/// The sign is the parity of the transpositions that bring the concatenated
/// generator list into ascending order, times the metric square of every
/// generator the two blades share.
pub fn blade_product(a: BladeIndex, b: BladeIndex, sig: Signature) -> (i8, BladeIndex) {
    let mut swaps = 0u32;
    // Each generator of `a` must move past every lower generator of `b`.
    let mut shifted = a.0 >> 1;
    while shifted != 0 {
        swaps += (shifted & b.0).count_ones();
        shifted >>= 1;
    }
    let mut sign: i8 = if swaps.is_multiple_of(2) { 1 } else { -1 };
    let common = a.0 & b.0;
    for i in 0..sig.dimension() {
        if common & (1 << i) != 0 && sig.square_of(i) < 0.0 {
            sign = -sign;
        }
    }
    (sign, BladeIndex(a.0 ^ b.0))
}

/// Precomputed `blade_product` over every pair of blades of one signature.
#[derive(Debug, Clone)]
pub struct ProductTable {
    sig: Signature,
    signs: Vec<i8>,
    results: Vec<u8>,
}

impl ProductTable {
    fn build(sig: Signature) -> Self {
        let n = sig.blade_count();
        let mut signs = Vec::with_capacity(n * n);
        let mut results = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let (s, r) = blade_product(BladeIndex(a as u8), BladeIndex(b as u8), sig);
                signs.push(s);
                results.push(r.0);
            }
        }
        ProductTable {
            sig,
            signs,
            results,
        }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn get(&self, a: BladeIndex, b: BladeIndex) -> (i8, BladeIndex) {
        let k = a.index() * self.sig.blade_count() + b.index();
        (self.signs[k], BladeIndex(self.results[k]))
    }
}

/// Dense multivector with one coefficient per blade of its signature.
///
/// `N` must equal `2^(p+q)`; constructors enforce it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Multivector<const N: usize> {
    coeffs: [f64; N],
    sig: Signature,
}

impl<const N: usize> Multivector<N> {
    pub fn new(sig: Signature, coeffs: [f64; N]) -> Result<Self, KernelError> {
        if sig.blade_count() != N {
            return Err(KernelError::LengthMismatch {
                sig,
                len: N,
                expected: sig.blade_count(),
            });
        }
        if let Some((mask, &value)) = coeffs.iter().enumerate().find(|(_, c)| !c.is_finite()) {
            return Err(KernelError::NonFinite {
                mask: mask as u8,
                value,
            });
        }
        Ok(Multivector { coeffs, sig })
    }

    pub fn zero(sig: Signature) -> Result<Self, KernelError> {
        Self::new(sig, [0.0; N])
    }

    pub fn scalar(sig: Signature, value: f64) -> Result<Self, KernelError> {
        let mut c = [0.0; N];
        c[0] = value;
        Self::new(sig, c)
    }

    pub fn blade(sig: Signature, blade: BladeIndex, value: f64) -> Result<Self, KernelError> {
        let blade = BladeIndex::new(blade.mask(), sig)?;
        let mut c = [0.0; N];
        c[blade.index()] = value;
        Self::new(sig, c)
    }

    /// Caller guarantees `sig.blade_count() == N`.
    pub(crate) const fn from_raw(sig: Signature, coeffs: [f64; N]) -> Self {
        Multivector { coeffs, sig }
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[f64; N] {
        &self.coeffs
    }

    pub fn get(&self, blade: BladeIndex) -> f64 {
        self.coeffs[blade.index()]
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self, KernelError> {
        if self.sig != other.sig {
            return Err(KernelError::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Ok(self.gp_same(other))
    }

    pub(crate) fn gp_same(&self, other: &Self) -> Self {
        let table = self.sig.table();
        let mut out = [0.0; N];
        for (a, &x) in self.coeffs.iter().enumerate() {
            if x == 0.0 {
                continue;
            }
            let row = a * N;
            for (b, &y) in other.coeffs.iter().enumerate() {
                if y == 0.0 {
                    continue;
                }
                let k = row + b;
                out[usize::from(table.results[k])] += f64::from(table.signs[k]) * x * y;
            }
        }
        Multivector::from_raw(self.sig, out)
    }

    pub fn grade_project(&self, grade: usize) -> Result<Self, KernelError> {
        if grade > self.sig.dimension() {
            return Err(KernelError::GradeOutOfRange {
                grade,
                sig: self.sig,
            });
        }
        Ok(self.keep_grades(|g| g == grade))
    }

    /// Zero out every blade whose grade fails `keep`.
    pub fn keep_grades(&self, keep: impl Fn(usize) -> bool) -> Self {
        let mut out = self.coeffs;
        for (mask, c) in out.iter_mut().enumerate() {
            if !keep(mask.count_ones() as usize) {
                *c = 0.0;
            }
        }
        Multivector::from_raw(self.sig, out)
    }

    /// Largest absolute coefficient on blades whose grade satisfies `pred`.
    pub fn max_abs_where(&self, pred: impl Fn(usize) -> bool) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(mask, _)| pred(mask.count_ones() as usize))
            .fold(0.0, |m, (_, c)| m.max(c.abs()))
    }

    fn scale_by_grade(&self, sign: impl Fn(usize) -> f64) -> Self {
        let mut out = self.coeffs;
        for (mask, c) in out.iter_mut().enumerate() {
            *c *= sign(mask.count_ones() as usize);
        }
        Multivector::from_raw(self.sig, out)
    }

    /// Reversion: grade k picks up `(-1)^(k(k-1)/2)`.
    pub fn reverse(&self) -> Self {
        self.scale_by_grade(|k| {
            if (k * k.saturating_sub(1) / 2) % 2 == 0 {
                1.0
            } else {
                -1.0
            }
        })
    }

    /// Grade involution: grade k picks up `(-1)^k`.
    pub fn grade_involute(&self) -> Self {
        self.scale_by_grade(|k| if k % 2 == 0 { 1.0 } else { -1.0 })
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut out = self.coeffs;
        out.iter_mut().for_each(|c| *c *= factor);
        Multivector::from_raw(self.sig, out)
    }

    /// Euclidean norm of the coefficient vector.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest coefficient-wise absolute difference.
    pub fn distance(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.sig == other.sig && self.distance(other) <= tol
    }

    fn zip_with(&self, other: &Self, f: impl Fn(f64, f64) -> f64) -> Self {
        assert_eq!(
            self.sig, other.sig,
            "signature mismatch in multivector arithmetic"
        );
        let mut out = self.coeffs;
        for (o, b) in out.iter_mut().zip(other.coeffs.iter()) {
            *o = f(*o, *b);
        }
        Multivector::from_raw(self.sig, out)
    }
}

impl<const N: usize> Index<BladeIndex> for Multivector<N> {
    type Output = f64;
    fn index(&self, blade: BladeIndex) -> &f64 {
        &self.coeffs[blade.index()]
    }
}

/// # Panics
/// On signature mismatch.
impl<const N: usize> Add for Multivector<N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a + b)
    }
}

impl<const N: usize> AddAssign for Multivector<N> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

/// # Panics
/// On signature mismatch.
impl<const N: usize> Sub for Multivector<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip_with(&rhs, |a, b| a - b)
    }
}

impl<const N: usize> Neg for Multivector<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl<const N: usize> Mul<f64> for Multivector<N> {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}
