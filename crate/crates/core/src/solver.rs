//! Solution of `Δ^α u(n) = T u(n) + y(n)` through the α-resolvent, the
//! classical first-order recursion, and residual verification.
//!
//! Forcing convention: `y(k)` acts between steps `k` and `k+1`, so
//! `u(n) = S_α(n) u(0) + (S_α ∗ y)(n−1)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::kernel::{delta_alpha_all, FractionalOrder};
use crate::matrix::{CVector, ComplexMatrix};
use crate::resolvent::s_alpha_recurrence;
use crate::sequence::{MatrixSequence, VectorSequence};

fn check_dim(expected: usize, got: usize, context: &'static str) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::Dimension {
            expected,
            got,
            context,
        })
    }
}

/// `(S ∗ y)(m) = Σ_{k=0}^{m} S(m−k) y(k)`.
pub fn convolve(s: &MatrixSequence, y: &VectorSequence, m: usize) -> Result<CVector> {
    check_dim(s.dim(), y.dim(), "convolution operands")?;
    for len in [s.len(), y.len()] {
        if len < m + 1 {
            return Err(Error::Length { needed: m + 1, got: len });
        }
    }
    Ok(convolve_unchecked(s.values(), y.values(), m))
}

fn convolve_unchecked(s: &[ComplexMatrix], y: &[CVector], m: usize) -> CVector {
    let d = y[0].dim();
    let mut acc = vec![Complex64::new(0.0, 0.0); d];
    for k in 0..=m {
        let sm = s[m - k].as_slice();
        let yk = y[k].as_slice();
        for (i, a) in acc.iter_mut().enumerate() {
            for (j, v) in yk.iter().enumerate() {
                *a += sm[i * d + j] * v;
            }
        }
    }
    CVector(acc)
}

/// `u(0..=n_max)` for `Δ^α u = T u + y`, `u(0) = u0`. Needs `y(0..n_max)`.
///
/// At `α = 1` this is the recursion `u(n+1) = (I+T) u(n) + y(n)`.
pub fn solve_frac(
    t: &ComplexMatrix,
    alpha: FractionalOrder,
    u0: &CVector,
    y: &VectorSequence,
    n_max: usize,
) -> Result<VectorSequence> {
    check_dim(t.dim(), u0.dim(), "initial value")?;
    check_dim(t.dim(), y.dim(), "forcing")?;
    if y.len() < n_max {
        return Err(Error::Length { needed: n_max, got: y.len() });
    }
    let s = s_alpha_recurrence(t, alpha, n_max);
    let values = (0..=n_max)
        .map(|n| {
            let mut u = s[n].mul_vec(u0);
            if n > 0 {
                u = &u + &convolve_unchecked(s.values(), y.values(), n - 1);
            }
            u
        })
        .collect();
    VectorSequence::new(values)
}

/// `r(n) = ‖Δ^α u(n) − T u(n) − y(n)‖` for `n = 0..N−1`, `N = u.len() − 1`.
pub fn residual_frac(
    t: &ComplexMatrix,
    alpha: FractionalOrder,
    u: &VectorSequence,
    y: &VectorSequence,
) -> Result<Vec<f64>> {
    check_dim(t.dim(), u.dim(), "solution")?;
    check_dim(t.dim(), y.dim(), "forcing")?;
    let n = u.len().saturating_sub(1);
    if y.len() < n {
        return Err(Error::Length { needed: n, got: y.len() });
    }
    let lhs = delta_alpha_all(alpha, u.values())?;
    Ok(lhs
        .iter()
        .enumerate()
        .map(|(k, d)| (&(d - &t.mul_vec(&u[k])) - &y[k]).norm())
        .collect())
}

/// Forward iteration of `x(n+1) = T x(n) + f(n)` from `x(1) = x1`.
///
/// The result has `n_max + 1` entries indexed like `x`; entry 0 is not part
/// of the solution and is left at zero. `f(0)` is never read.
pub fn solve_linear(
    t: &ComplexMatrix,
    x1: &CVector,
    f: &VectorSequence,
    n_max: usize,
) -> Result<VectorSequence> {
    if n_max < 1 {
        return Err(Error::InvalidArgument {
            name: "steps",
            reason: "the first-order recursion starts at n = 1".into(),
        });
    }
    check_dim(t.dim(), x1.dim(), "initial value")?;
    check_dim(t.dim(), f.dim(), "forcing")?;
    if f.len() < n_max {
        return Err(Error::Length { needed: n_max, got: f.len() });
    }
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(CVector::zeros(t.dim()));
    values.push(x1.clone());
    for n in 1..n_max {
        let next = &t.mul_vec(&values[n]) + &f[n];
        values.push(next);
    }
    VectorSequence::new(values)
}
