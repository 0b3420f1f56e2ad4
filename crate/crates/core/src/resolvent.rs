//! Three constructions of the α-resolvent sequence `S_α(n)` generated by `T`:
//!
//! * the defining recurrence
//!   `S(0) = I`, `S(n+1) = k^α(n+1) I + T Σ_{j=0}^{n} k^α(n−j) S(j)`;
//! * the finite power series
//!   `S(n) = Σ_{j=0}^{n} Γ(n−j+(j+1)α) / (Γ(n−j+1) Γ((j+1)α)) Tʲ`;
//! * the Cauchy integral `S(n) = (1/2πi) ∮ zⁿ (g(z) − T)⁻¹ dz` over a circle
//!   `|z| = R`, with `g(z) = z (1 − 1/z)^α` (principal power).
//!
//! The recurrence is the production path. The contour integrand grows like
//! `Rⁿ` while `S(n)` may not, so quadrature loses about `n·log₁₀R` digits and
//! is meant as a cross-check for `n ≤ 64`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{kernel_weights, log_gamma_positive, FractionalOrder};
use crate::matrix::{lu_factor, ComplexMatrix};
use crate::sequence::MatrixSequence;

/// Largest `x` with `exp(x)` finite.
const MAX_LOG: f64 = 709.78;

pub const DEFAULT_CONTOUR_NODES: usize = 1024;

/// `S_α(0..=n_max)` from the defining recurrence. `O(N²)` scalar-matrix
/// updates plus one matrix product per step.
pub fn s_alpha_recurrence(t: &ComplexMatrix, alpha: FractionalOrder, n_max: usize) -> MatrixSequence {
    let d = t.dim();
    let k = kernel_weights(alpha.value(), n_max);
    let mut values: Vec<ComplexMatrix> = Vec::with_capacity(n_max + 1);
    values.push(ComplexMatrix::identity(d));
    for n in 0..n_max {
        let mut acc = ComplexMatrix::zeros(d);
        for (j, s) in values.iter().enumerate() {
            acc.axpy(Complex64::new(k[n - j], 0.0), s);
        }
        let next = (t * &acc).shifted(Complex64::new(k[n + 1], 0.0));
        values.push(next);
    }
    MatrixSequence::new(values).expect("recurrence output has a uniform dimension")
}

/// Coefficient of `Tʲ` in `S_α(n)`, evaluated in log space.
pub fn gamma_sum_coefficient(alpha: FractionalOrder, n: usize, j: usize) -> Result<f64> {
    let a = alpha.value();
    let m = (n - j) as f64;
    let jp1 = (j + 1) as f64;
    let log_c = log_gamma_positive(m + jp1 * a) - log_gamma_positive(m + 1.0) - log_gamma_positive(jp1 * a);
    if log_c > MAX_LOG {
        return Err(Error::Overflow { log_magnitude: log_c });
    }
    Ok(log_c.exp())
}

/// `S_α(n)` as a finite power series in `T`. Stops early once `Tʲ = 0`.
pub fn s_alpha_gamma_sum(t: &ComplexMatrix, alpha: FractionalOrder, n: usize) -> Result<ComplexMatrix> {
    let d = t.dim();
    let mut out = ComplexMatrix::zeros(d);
    let mut power = ComplexMatrix::identity(d);
    for j in 0..=n {
        if power.is_zero() {
            break;
        }
        let c = gamma_sum_coefficient(alpha, n, j)?;
        out.axpy(Complex64::new(c, 0.0), &power);
        if j < n {
            power = &power * t;
        }
    }
    Ok(out)
}

/// `S_α(0..=n_max)` by the power series, sharing the powers of `T`.
pub fn s_alpha_gamma_sum_sequence(
    t: &ComplexMatrix,
    alpha: FractionalOrder,
    n_max: usize,
) -> Result<MatrixSequence> {
    let d = t.dim();
    let mut powers = vec![ComplexMatrix::identity(d)];
    while powers.len() <= n_max && !powers.last().unwrap().is_zero() {
        let next = powers.last().unwrap() * t;
        powers.push(next);
    }
    let mut values = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut s = ComplexMatrix::zeros(d);
        for (j, p) in powers.iter().enumerate().take(n + 1) {
            if p.is_zero() {
                break;
            }
            s.axpy(Complex64::new(gamma_sum_coefficient(alpha, n, j)?, 0.0), p);
        }
        values.push(s);
    }
    MatrixSequence::new(values)
}

/// `g(z) = z (1 − 1/z)^α` with the principal power; `z − 1` at `α = 1`.
///
/// Single-valued and holomorphic on `|z| > 1`, continuous up to the unit
/// circle except at `z = 1`.
pub(crate) fn g_value(alpha: FractionalOrder, z: Complex64) -> Complex64 {
    if alpha.is_one() {
        return z - 1.0;
    }
    let w = Complex64::new(1.0, 0.0) - z.inv();
    z * w.powf(alpha.value())
}

/// `R^{1−α} (R−1)^α`, the minimum of `|g|` on the circle `|z| = R`.
fn g_modulus_floor(alpha: FractionalOrder, r: f64) -> f64 {
    let a = alpha.value();
    r.powf(1.0 - a) * (r - 1.0).powf(a)
}

/// Integration circle `|z| = radius` sampled at `nodes` equispaced points.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ContourSpec {
    pub radius: f64,
    pub nodes: usize,
}

impl ContourSpec {
    pub fn new(radius: f64, nodes: usize) -> Result<Self> {
        if !(radius > 1.0 && radius.is_finite()) {
            return Err(Error::InvalidArgument {
                name: "radius",
                reason: format!("contour radius must exceed 1, got {radius}"),
            });
        }
        if nodes == 0 {
            return Err(Error::InvalidArgument {
                name: "nodes",
                reason: "at least one quadrature node is required".into(),
            });
        }
        Ok(Self { radius, nodes })
    }

    /// Circle on which `|g(z)| ≥ bound`: solves `R^{1−α}(R−1)^α = bound` by
    /// bisection.
    pub fn for_symbol_bound(alpha: FractionalOrder, bound: f64, nodes: usize) -> Result<Self> {
        if !(bound > 0.0 && bound.is_finite()) {
            return Err(Error::InvalidArgument {
                name: "bound",
                reason: format!("symbol bound must be positive and finite, got {bound}"),
            });
        }
        // R − 1 ≤ R^{1−α}(R−1)^α, so R = 1 + bound brackets the root.
        let (mut lo, mut hi) = (1.0, 1.0 + bound);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if g_modulus_floor(alpha, mid) < bound {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Self::new(hi, nodes)
    }
}

/// Contour with `|g(z)| = 2‖T‖_F + 1` on the circle, `M = 1024` nodes.
///
/// Since `|g|` grows with `|z|` and `‖T‖_F ≥ ρ(T)`, every solution of
/// `g(z) ∈ σ(T)` lies strictly inside.
pub fn choose_contour(t: &ComplexMatrix, alpha: FractionalOrder) -> ContourSpec {
    ContourSpec::for_symbol_bound(alpha, 2.0 * t.frobenius_norm() + 1.0, DEFAULT_CONTOUR_NODES)
        .expect("bound 2‖T‖_F + 1 is positive")
}

/// Trapezoidal quadrature for the contour formula with the resolvents
/// `(g(z_k) − T)⁻¹` at every node cached, so `S(n)` for many `n` costs one
/// weighted sum each.
#[derive(Clone, Debug)]
pub struct ContourQuadrature {
    spec: ContourSpec,
    roots: Vec<Complex64>,
    resolvents: Vec<ComplexMatrix>,
}

impl ContourQuadrature {
    pub fn new(t: &ComplexMatrix, alpha: FractionalOrder, spec: ContourSpec) -> Result<Self> {
        let bound = t.frobenius_norm();
        if g_modulus_floor(alpha, spec.radius) <= bound {
            return Err(Error::InvalidArgument {
                name: "radius",
                reason: format!(
                    "|g| on |z| = {} does not exceed ‖T‖_F = {bound}; the circle may not enclose the spectrum",
                    spec.radius
                ),
            });
        }
        let m = spec.nodes;
        let roots: Vec<Complex64> = (0..m)
            .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64))
            .collect();
        let resolvents = roots
            .iter()
            .map(|&w| {
                let z = w * spec.radius;
                let a = t.scale(Complex64::new(-1.0, 0.0)).shifted(g_value(alpha, z));
                let lu = lu_factor(&a);
                if lu.is_singular() {
                    return Err(Error::SingularNode { re: z.re, im: z.im });
                }
                lu.inverse()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            spec,
            roots,
            resolvents,
        })
    }

    pub fn spec(&self) -> ContourSpec {
        self.spec
    }

    /// `(1/M) Σ_k z_k^{n+1} (g(z_k) − T)⁻¹`.
    pub fn s_alpha(&self, n: usize) -> ComplexMatrix {
        let m = self.spec.nodes;
        let d = self.resolvents[0].dim();
        let mut acc = ComplexMatrix::zeros(d);
        let e = (n + 1) % m;
        for (k, r) in self.resolvents.iter().enumerate() {
            // z_k^{n+1} = R^{n+1} ω^{k(n+1) mod M}, scaled out of the sum
            acc.axpy(self.roots[(k * e) % m], r);
        }
        let scale = self.spec.radius.powi((n + 1) as i32) / m as f64;
        acc.scale(Complex64::new(scale, 0.0))
    }
}

/// `S_α(n)` by trapezoidal quadrature of the contour formula.
pub fn s_alpha_contour(
    t: &ComplexMatrix,
    alpha: FractionalOrder,
    n: usize,
    spec: ContourSpec,
) -> Result<ComplexMatrix> {
    Ok(ContourQuadrature::new(t, alpha, spec)?.s_alpha(n))
}
