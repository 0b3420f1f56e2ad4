//! Small dense complex matrices and vectors.
//!
//! Everything here is sized for `d ≤ ~10`: row-major storage, partial-pivot
//! LU, repeated squaring for powers. The Frobenius norm is the matrix norm
//! used throughout the crate.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Relative pivot threshold below which a factorization is flagged singular.
pub const SINGULAR_PIVOT_RTOL: f64 = 1e-14;

/// Complex column vector.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct CVector(pub Vec<Complex64>);

impl CVector {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument {
                name: "vector",
                reason: "empty vector".into(),
            });
        }
        if entries.iter().any(|z| !z.is_finite()) {
            return Err(Error::InvalidArgument {
                name: "vector",
                reason: "non-finite entry".into(),
            });
        }
        Ok(Self(entries))
    }

    pub fn zeros(dim: usize) -> Self {
        Self(vec![ZERO; dim])
    }

    pub fn from_real(entries: &[f64]) -> Self {
        Self(entries.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Standard basis vector `e_k`.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[k] = ONE;
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.0
    }

    /// Euclidean norm.
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self(self.0.iter().map(|z| z * c).collect())
    }
}

impl fmt::Debug for CVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl Index<usize> for CVector {
    type Output = Complex64;
    fn index(&self, i: usize) -> &Complex64 {
        &self.0[i]
    }
}

impl Add for &CVector {
    type Output = CVector;
    fn add(self, rhs: &CVector) -> CVector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        CVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &CVector {
    type Output = CVector;
    fn sub(self, rhs: &CVector) -> CVector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        CVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Dense square complex matrix, row-major.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// Builds a `dim × dim` matrix from row-major entries.
    pub fn new(dim: usize, data: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument {
                name: "dim",
                reason: "matrix dimension must be positive".into(),
            });
        }
        if data.len() != dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim,
                got: data.len(),
                context: "matrix entry count",
            });
        }
        if let Some(k) = data.iter().position(|z| !z.is_finite()) {
            return Err(Error::InvalidArgument {
                name: "matrix",
                reason: format!("non-finite entry at ({}, {})", k / dim, k % dim),
            });
        }
        Ok(Self { dim, data })
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let dim = rows.len();
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
            return Err(Error::InvalidArgument {
                name: "matrix",
                reason: format!("row {i} has {} entries, expected {dim}", row.len()),
            });
        }
        Self::new(dim, rows.into_iter().flatten().collect())
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, ONE)
    }

    /// `c·I`.
    pub fn scalar(dim: usize, c: Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = c;
        }
        m
    }

    pub fn diag(entries: &[Complex64]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, &c) in entries.iter().enumerate() {
            m[(i, i)] = c;
        }
        m
    }

    /// Nilpotent upper shift: ones on the first superdiagonal.
    pub fn shift(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim.saturating_sub(1) {
            m[(i, i + 1)] = ONE;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn rows(&self) -> Vec<Vec<Complex64>> {
        self.data.chunks(self.dim).map(<[_]>::to_vec).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| *z == ZERO)
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|z| z * c).collect(),
        }
    }

    /// `self += c·other`
    pub fn axpy(&mut self, c: Complex64, other: &Self) {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += c * b;
        }
    }

    /// `self + c·I`
    pub fn shifted(&self, c: Complex64) -> Self {
        let mut m = self.clone();
        for i in 0..self.dim {
            m[(i, i)] += c;
        }
        m
    }

    pub fn mul_vec(&self, v: &CVector) -> CVector {
        assert_eq!(self.dim, v.dim(), "matrix-vector dimension mismatch");
        CVector(
            self.data
                .chunks(self.dim)
                .map(|row| row.iter().zip(&v.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// Partial-pivot LU factorization; see [`LuFactorization`].
    pub fn lu(&self) -> LuFactorization {
        lu_factor(self)
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.chunks(self.dim)).finish()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let d = self.dim;
        let mut out = ComplexMatrix::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == ZERO {
                    continue;
                }
                for j in 0..d {
                    out.data[i * d + j] += a * rhs.data[k * d + j];
                }
            }
        }
        out
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let mut out = self.clone();
        out.axpy(ONE, rhs);
        out
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        let mut out = self.clone();
        out.axpy(-ONE, rhs);
        out
    }
}

/// `P·A = L·U` with partial pivoting.
///
/// `L` (unit lower) and `U` share one packed buffer. A pivot whose magnitude
/// falls below `1e-14·‖A‖_F` sets the singular flag; the determinant is still
/// available in that case, solves are not.
#[derive(Clone, Debug)]
pub struct LuFactorization {
    dim: usize,
    lu: Vec<Complex64>,
    perm: Vec<usize>,
    sign: f64,
    singular: Option<(usize, f64)>,
}

/// Factorizes `a`. Never fails; check [`LuFactorization::is_singular`].
pub fn lu_factor(a: &ComplexMatrix) -> LuFactorization {
    let d = a.dim;
    let tol = SINGULAR_PIVOT_RTOL * a.frobenius_norm();
    let mut lu = a.data.clone();
    let mut perm: Vec<usize> = (0..d).collect();
    let mut sign = 1.0;
    let mut singular = None;

    for col in 0..d {
        let (p, pmag) = (col..d)
            .map(|r| (r, lu[r * d + col].norm()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if p != col {
            for j in 0..d {
                lu.swap(col * d + j, p * d + j);
            }
            perm.swap(col, p);
            sign = -sign;
        }
        if pmag == 0.0 || pmag < tol {
            singular.get_or_insert((col, pmag));
            if pmag == 0.0 {
                continue;
            }
        }
        let pivot = lu[col * d + col];
        for r in col + 1..d {
            let factor = lu[r * d + col] / pivot;
            lu[r * d + col] = factor;
            if factor == ZERO {
                continue;
            }
            for j in col + 1..d {
                let u = lu[col * d + j];
                lu[r * d + j] -= factor * u;
            }
        }
    }

    LuFactorization {
        dim: d,
        lu,
        perm,
        sign,
        singular,
    }
}

impl LuFactorization {
    pub fn is_singular(&self) -> bool {
        self.singular.is_some()
    }

    pub fn det(&self) -> Complex64 {
        let d = self.dim;
        (0..d).fold(Complex64::new(self.sign, 0.0), |acc, i| acc * self.lu[i * d + i])
    }

    /// Smallest pivot magnitude, a cheap conditioning indicator.
    pub fn min_pivot(&self) -> f64 {
        let d = self.dim;
        (0..d).map(|i| self.lu[i * d + i].norm()).fold(f64::INFINITY, f64::min)
    }

    fn check(&self) -> Result<()> {
        match self.singular {
            Some((column, pivot)) => Err(Error::Singular { column, pivot }),
            None => Ok(()),
        }
    }

    #[allow(clippy::needless_range_loop)]
    fn solve_in_place(&self, x: &mut [Complex64]) {
        let d = self.dim;
        for i in 0..d {
            let mut s = x[i];
            for j in 0..i {
                s -= self.lu[i * d + j] * x[j];
            }
            x[i] = s;
        }
        for i in (0..d).rev() {
            let mut s = x[i];
            for j in i + 1..d {
                s -= self.lu[i * d + j] * x[j];
            }
            x[i] = s / self.lu[i * d + i];
        }
    }

    pub fn solve(&self, b: &CVector) -> Result<CVector> {
        self.check()?;
        if b.dim() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: b.dim(),
                context: "right-hand side",
            });
        }
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| b.0[p]).collect();
        self.solve_in_place(&mut x);
        Ok(CVector(x))
    }

    pub fn inverse(&self) -> Result<ComplexMatrix> {
        self.check()?;
        let d = self.dim;
        let mut inv = ComplexMatrix::zeros(d);
        let mut col = vec![ZERO; d];
        for j in 0..d {
            for (i, c) in col.iter_mut().enumerate() {
                *c = if self.perm[i] == j { ONE } else { ZERO };
            }
            self.solve_in_place(&mut col);
            for i in 0..d {
                inv[(i, j)] = col[i];
            }
        }
        Ok(inv)
    }
}

/// `Aⁿ` by repeated squaring; `A⁰ = I`.
pub fn mat_power(a: &ComplexMatrix, n: u64) -> ComplexMatrix {
    let mut result = ComplexMatrix::identity(a.dim);
    let mut base = a.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    result
}
