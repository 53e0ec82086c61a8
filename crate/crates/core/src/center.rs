//! Exponentials of elements whose square is central.
//!
//! For `X` with `X^2 = c` a complex central scalar,
//! `exp(X/2) = cosh(s/2) + X sinh(s/2)/s` with `s = sqrt(c)`. Both factors
//! are entire in `c`, so only the numerics near `c = 0` need care.

use num_complex::Complex64;

/// Below this `|c|` the closed form is replaced by its series.
pub(crate) const SERIES_THRESHOLD: f64 = 1e-8;

/// Returns `(cosh(s/2), sinh(s/2)/s)` for `s` the principal root of `c`.
pub(crate) fn half_exp_factors(c: Complex64) -> (Complex64, Complex64) {
    if c.norm() < SERIES_THRESHOLD {
        // exp(X/2) through (X/2)^5: k = 0, 1, 2 for the even and odd halves.
        let c2 = c * c;
        let even = 1.0 + c / 8.0 + c2 / 384.0;
        let odd = 0.5 + c / 48.0 + c2 / 3840.0;
        return (even, odd);
    }
    let s = c.sqrt();
    let half = s / 2.0;
    (half.cosh(), half.sinh() / s)
}
