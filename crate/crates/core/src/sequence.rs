//! Finite prefixes `x(0..=N)` of scalar-, vector- or matrix-valued sequences.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{CVector, ComplexMatrix};

/// Values a sequence can take: anything with a zero, complex-linear
/// combinations and a norm.
pub trait SeqElement: Clone {
    fn zero_like(&self) -> Self;
    /// `self += c·other`
    fn add_scaled(&mut self, c: Complex64, other: &Self);
    fn norm(&self) -> f64;
    /// Shape tag used to check that all entries of a sequence agree.
    fn shape(&self) -> (usize, usize);

    fn add_real_scaled(&mut self, c: f64, other: &Self) {
        self.add_scaled(Complex64::new(c, 0.0), other);
    }
}

impl SeqElement for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn add_scaled(&mut self, c: Complex64, other: &Self) {
        *self += c * other;
    }
    fn norm(&self) -> f64 {
        Complex64::norm(*self)
    }
    fn shape(&self) -> (usize, usize) {
        (1, 1)
    }
}

impl SeqElement for CVector {
    fn zero_like(&self) -> Self {
        CVector::zeros(self.dim())
    }
    fn add_scaled(&mut self, c: Complex64, other: &Self) {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += c * b;
        }
    }
    fn norm(&self) -> f64 {
        CVector::norm(self)
    }
    fn shape(&self) -> (usize, usize) {
        (self.dim(), 1)
    }
}

impl SeqElement for ComplexMatrix {
    fn zero_like(&self) -> Self {
        ComplexMatrix::zeros(self.dim())
    }
    fn add_scaled(&mut self, c: Complex64, other: &Self) {
        self.axpy(c, other);
    }
    fn norm(&self) -> f64 {
        self.frobenius_norm()
    }
    fn shape(&self) -> (usize, usize) {
        (self.dim(), self.dim())
    }
}

pub(crate) fn check_shapes<E: SeqElement>(values: &[E], context: &'static str) -> Result<()> {
    if let Some(first) = values.first() {
        let shape = first.shape();
        if let Some(bad) = values.iter().find(|v| v.shape() != shape) {
            return Err(Error::Dimension {
                expected: shape.0 * shape.1,
                got: bad.shape().0 * bad.shape().1,
                context,
            });
        }
    }
    Ok(())
}

/// Operator-valued sequence `S(0..=N)`, e.g. an α-resolvent or an orbit `Tⁿ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixSequence {
    dim: usize,
    values: Vec<ComplexMatrix>,
}

impl MatrixSequence {
    pub fn new(values: Vec<ComplexMatrix>) -> Result<Self> {
        let dim = values.first().map(ComplexMatrix::dim).ok_or(Error::Length { needed: 1, got: 0 })?;
        check_shapes(&values, "matrix sequence entry")?;
        Ok(Self { dim, values })
    }

    /// `Aⁿ` for `n = 0..=n_max`, by successive multiplication.
    pub fn powers(a: &ComplexMatrix, n_max: usize) -> Self {
        let mut values = Vec::with_capacity(n_max + 1);
        let mut cur = ComplexMatrix::identity(a.dim());
        for _ in 0..n_max {
            let next = &cur * a;
            values.push(cur);
            cur = next;
        }
        values.push(cur);
        Self { dim: a.dim(), values }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest available index `N`.
    pub fn last_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[ComplexMatrix] {
        &self.values
    }

    pub fn into_values(self) -> Vec<ComplexMatrix> {
        self.values
    }
}

impl std::ops::Index<usize> for MatrixSequence {
    type Output = ComplexMatrix;
    fn index(&self, n: usize) -> &ComplexMatrix {
        &self.values[n]
    }
}

/// Vector-valued sequence `x(0..=N)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorSequence {
    dim: usize,
    values: Vec<CVector>,
}

impl VectorSequence {
    pub fn new(values: Vec<CVector>) -> Result<Self> {
        let dim = values.first().map(CVector::dim).ok_or(Error::Length { needed: 1, got: 0 })?;
        check_shapes(&values, "vector sequence entry")?;
        if values.iter().any(|v| v.0.iter().any(|z| !z.is_finite())) {
            return Err(Error::InvalidArgument {
                name: "sequence",
                reason: "non-finite entry".into(),
            });
        }
        Ok(Self { dim, values })
    }

    pub fn zeros(dim: usize, len: usize) -> Self {
        Self {
            dim,
            values: vec![CVector::zeros(dim); len],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[CVector] {
        &self.values
    }

    pub fn into_values(self) -> Vec<CVector> {
        self.values
    }
}

impl std::ops::Index<usize> for VectorSequence {
    type Output = CVector;
    fn index(&self, n: usize) -> &CVector {
        &self.values[n]
    }
}
