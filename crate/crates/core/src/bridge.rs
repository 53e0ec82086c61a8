//! Observer-dependent isomorphism between APS and the even subalgebra of STA.
//!
//! For an observer with proper basis `σ_mu = γ_mu γ0`, the map sends
//! `e_k -> σ_k`, products to products, and `i -> σ1 σ2 σ3 = I`. Under it,
//! Clifford conjugation becomes STA reversion and APS reversion becomes the
//! observer's hermitian conjugation.

use crate::aps::{ApsRotor, MvAps};
use crate::error::{Error, Result};
use crate::sta::{MvSta, ObserverFrame, StaRotor};
use crate::{EVEN_TOL, UNIMODULAR_TOL};

/// Cached 8x16 transport matrix for one observer.
#[derive(Debug, Clone)]
pub struct Bridge {
    observer: ObserverFrame,
    /// `images[j]` is the STA image of APS blade `j`.
    images: [MvSta; 8],
    /// `dual[j][m] = <γ_m (image_j)^{†obs}>_0`; row `j` extracts APS coefficient `j`.
    dual: [[f64; 16]; 8],
}

impl Bridge {
    pub fn new(observer: &ObserverFrame) -> Self {
        let sigma = observer.proper_basis();
        let images: [MvSta; 8] = std::array::from_fn(|mask| {
            (0..3)
                .filter(|bit| mask & (1 << bit) != 0)
                .fold(MvSta::ONE, |acc, bit| acc * sigma[bit + 1])
        });
        let dual = std::array::from_fn(|j| {
            let adj = observer.hermitian_conjugate(&images[j]);
            std::array::from_fn(|m| {
                let mut c = [0.0; 16];
                c[m] = 1.0;
                (MvSta::raw(c) * adj).scalar_part()
            })
        });
        Bridge {
            observer: *observer,
            images,
            dual,
        }
    }

    pub fn observer(&self) -> &ObserverFrame {
        &self.observer
    }

    pub fn images(&self) -> &[MvSta; 8] {
        &self.images
    }

    /// `dual * images^T`; the identity exactly when the map is bijective onto STA+.
    pub fn gram(&self) -> [[f64; 8]; 8] {
        std::array::from_fn(|j| {
            std::array::from_fn(|k| {
                self.dual[j]
                    .iter()
                    .zip(self.images[k].coeffs())
                    .map(|(a, b)| a * b)
                    .sum()
            })
        })
    }

    pub fn to_sta(&self, a: &MvAps) -> MvSta {
        let mut out = [0.0; 16];
        for (x, image) in a.coeffs().iter().zip(self.images.iter()) {
            if *x == 0.0 {
                continue;
            }
            for (o, y) in out.iter_mut().zip(image.coeffs()) {
                *o += x * y;
            }
        }
        MvSta::raw(out)
    }

    /// Inverse map; `k` must be even to within the even-ness tolerance.
    pub fn to_aps(&self, k: &MvSta) -> Result<MvAps> {
        let odd = k.odd_content();
        if !(odd <= EVEN_TOL) {
            return Err(Error::OddContent { max_abs: odd });
        }
        let c = std::array::from_fn(|j| {
            self.dual[j]
                .iter()
                .zip(k.coeffs())
                .map(|(a, b)| a * b)
                .sum()
        });
        Ok(MvAps::raw(c))
    }

    pub fn rotor_to_aps(&self, l: &StaRotor) -> Result<ApsRotor> {
        ApsRotor::new(self.to_aps(l.as_mv())?, UNIMODULAR_TOL)
    }

    pub fn rotor_to_sta(&self, l: &ApsRotor) -> StaRotor {
        StaRotor::new_unchecked(self.to_sta(l.as_mv()))
    }
}

pub fn aps_to_sta(a: &MvAps, observer: &ObserverFrame) -> MvSta {
    Bridge::new(observer).to_sta(a)
}

pub fn sta_even_to_aps(k: &MvSta, observer: &ObserverFrame) -> Result<MvAps> {
    Bridge::new(observer).to_aps(k)
}

pub fn rotor_to_aps(l: &StaRotor, observer: &ObserverFrame) -> Result<ApsRotor> {
    Bridge::new(observer).rotor_to_aps(l)
}
