#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relga::aps::{rotor_exp, Biparavector, MvAps, Paravector};
use relga::sta::{MvSta, ObserverFrame, StaRotor};
use relga::ApsRotor;

/// Squares of the generators: Cl(3) is all +1; Cl(1,3) is (+, -, -, -).
pub const APS_METRIC: [f64; 3] = [1.0, 1.0, 1.0];
pub const STA_METRIC: [f64; 4] = [1.0, -1.0, -1.0, -1.0];

/// Generator list of a blade, in ascending order, read off the mask bits.
pub fn generators(mask: usize, dim: usize) -> Vec<usize> {
    (0..dim).filter(|g| mask >> g & 1 == 1).collect()
}

/// Multiplies two generator words by writing them side by side and
/// normalizing with adjacent swaps (each flips the sign) and adjacent
/// contractions (each multiplies by the generator's square).
pub fn naive_word_product(a: &[usize], b: &[usize], metric: &[f64]) -> (f64, Vec<usize>) {
    let mut word: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
    let mut sign = 1.0;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < word.len() {
            if word[i] > word[i + 1] {
                word.swap(i, i + 1);
                sign = -sign;
                changed = true;
            } else if word[i] == word[i + 1] {
                sign *= metric[word[i]];
                word.drain(i..i + 2);
                changed = true;
                continue;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    (sign, word)
}

pub fn word_to_index(word: &[usize]) -> usize {
    word.iter().map(|g| 1usize << g).sum()
}

/// Naive product of dense coefficient arrays.
pub fn naive_product(a: &[f64], b: &[f64], metric: &[f64]) -> Vec<f64> {
    let dim = metric.len();
    let mut out = vec![0.0; a.len()];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            if *x == 0.0 || *y == 0.0 {
                continue;
            }
            let (s, w) = naive_word_product(&generators(i, dim), &generators(j, dim), metric);
            out[word_to_index(&w)] += s * x * y;
        }
    }
    out
}

pub fn naive_aps(a: &MvAps, b: &MvAps) -> MvAps {
    let c = naive_product(a.coeffs(), b.coeffs(), &APS_METRIC);
    MvAps::new(c.try_into().unwrap()).unwrap()
}

pub fn naive_sta(a: &MvSta, b: &MvSta) -> MvSta {
    let c = naive_product(a.coeffs(), b.coeffs(), &STA_METRIC);
    MvSta::new(c.try_into().unwrap()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform<const N: usize>(rng: &mut impl Rng, half_width: f64) -> [f64; N] {
    std::array::from_fn(|_| rng.gen_range(-half_width..=half_width))
}

pub fn random_aps(rng: &mut impl Rng) -> MvAps {
    MvAps::new(uniform(rng, 1.0)).unwrap()
}

pub fn random_sta(rng: &mut impl Rng) -> MvSta {
    MvSta::new(uniform(rng, 1.0)).unwrap()
}

pub fn random_paravector(rng: &mut impl Rng) -> Paravector {
    Paravector::from_components(uniform(rng, 1.0))
}

/// Biparavector with uniformly random direction and Euclidean norm in `[0, max_norm]`.
pub fn random_biparavector(rng: &mut impl Rng, max_norm: f64) -> Biparavector {
    loop {
        let c: [f64; 6] = uniform(rng, 1.0);
        let n = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-3 && n <= 1.0 {
            let r = max_norm * rng.gen::<f64>() / n;
            let c = c.map(|x| x * r);
            return Biparavector::new([c[0], c[1], c[2]], [c[3], c[4], c[5]]);
        }
    }
}

pub fn random_aps_rotor(rng: &mut impl Rng, max_norm: f64) -> ApsRotor {
    rotor_exp(&random_biparavector(rng, max_norm))
}

/// Spacetime bivector with coefficients uniform in `[-half_width, half_width]`.
pub fn random_sta_bivector(rng: &mut impl Rng, half_width: f64) -> MvSta {
    let vals: [f64; 6] = uniform(rng, half_width);
    let mut c = [0.0; 16];
    for (mask, v) in [3usize, 5, 9, 6, 10, 12].into_iter().zip(vals) {
        c[mask] = v;
    }
    MvSta::new(c).unwrap()
}

pub fn random_sta_rotor(rng: &mut impl Rng, half_width: f64) -> StaRotor {
    StaRotor::exp(&random_sta_bivector(rng, half_width)).unwrap()
}

pub fn random_observer(rng: &mut impl Rng) -> ObserverFrame {
    ObserverFrame::from_rotor(random_sta_rotor(rng, 0.8))
}

pub fn sta_vector(r: [f64; 4]) -> MvSta {
    MvSta::vector(r)
}

pub const ETA: [f64; 4] = [1.0, -1.0, -1.0, -1.0];
