#![allow(dead_code)]

use fracdelta::{CVector, Complex64, ComplexMatrix, VectorSequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// Random `d × d` matrix, entries uniform in the unit square, rescaled to a
/// Frobenius norm drawn uniformly from `(0, max_norm]`.
pub fn random_matrix(rng: &mut ChaCha8Rng, d: usize, max_norm: f64) -> ComplexMatrix {
    let data: Vec<Complex64> = (0..d * d).map(|_| complex(rng)).collect();
    let norm: f64 = data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let target = max_norm * (1.0 - rng.random_range(0.0..1.0));
    ComplexMatrix::new(d, data.into_iter().map(|z| z * (target / norm)).collect()).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, d: usize) -> CVector {
    CVector((0..d).map(|_| complex(rng)).collect())
}

pub fn random_sequence(rng: &mut ChaCha8Rng, d: usize, len: usize) -> VectorSequence {
    VectorSequence::new((0..len).map(|_| random_vector(rng, d)).collect()).unwrap()
}

pub fn rel_frobenius(a: &ComplexMatrix, reference: &ComplexMatrix) -> f64 {
    (a - reference).frobenius_norm() / (1.0 + reference.frobenius_norm())
}

pub fn report(id: u32, passed: bool, summary: &str) {
    println!("[{}] criterion {id}: {summary}", if passed { "PASS" } else { "FAIL" });
}
