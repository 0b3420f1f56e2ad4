use num_complex::Complex64;
use serde::Serialize;

use super::growth::weighted_sup_norm;
use super::linear_fit;
use super::ztransform::{polynomial_geometric_tail, GrowthBound};
use crate::error::{Error, Result};
use crate::matrix::{lu_factor, CVector, ComplexMatrix};
use crate::sequence::SeqElement;

/// Fitted blow-up orders above this are reported as singular. Genuine poles
/// have order at least one.
const SINGULAR_ORDER: f64 = 0.5;
/// Required ratio of truncation tail to head at the innermost radius.
const TAIL_RTOL: f64 = 1e-8;

/// Six radii with `r − 1` log-spaced from `1e-2` down to `1e-3`.
pub fn default_scan_radii() -> Vec<f64> {
    (0..6).map(|i| 1.0 + 10f64.powf(-2.0 - i as f64 / 5.0)).collect()
}

/// Blow-up order of the truncated resolvent of a sequence near `ξ₀`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SingularityEstimate {
    pub xi0: Complex64,
    /// `(r, ‖F(rξ₀)‖)`
    pub profile: Vec<(f64, f64)>,
    /// Slope `p` in `‖F(rξ₀)‖ ≈ C (r−1)^{−p}`.
    pub order_hat: f64,
    pub is_singular: bool,
    /// Truncation tail bound at the innermost radius.
    pub tail_bound: f64,
}

fn check_unimodular(xi0: Complex64) -> Result<()> {
    if (xi0.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidArgument {
            name: "xi0",
            reason: format!("point must lie on the unit circle, |ξ₀| = {}", xi0.norm()),
        });
    }
    Ok(())
}

fn check_radii(radii: &[f64], min_len: usize) -> Result<()> {
    if radii.len() < min_len {
        return Err(Error::InvalidArgument {
            name: "radii",
            reason: format!("at least {min_len} radii are required"),
        });
    }
    if radii.iter().any(|&r| !(r > 1.0 && r.is_finite())) {
        return Err(Error::InvalidArgument {
            name: "radii",
            reason: "every radius must exceed 1".into(),
        });
    }
    if radii.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::InvalidArgument {
            name: "radii",
            reason: "radii must decrease strictly toward 1".into(),
        });
    }
    Ok(())
}

/// Probes `ξ₀` for membership in the spectrum of the sequence `x`.
///
/// Evaluates `F(λ) = Σ_{n=0}^{N} λ^{−n−1} x(n)`, the truncated resolvent of
/// the shift applied to `x`, at `λ = rξ₀` for each radius and fits the
/// blow-up rate as `r ↓ 1`. The tail beyond `N` is bounded using
/// `‖x(n)‖ ≤ C n^ν` with `C` the weighted sup over the supplied entries; the
/// scan fails if that bound is not below `1e-8` of `‖F‖` at the innermost
/// radius.
pub fn resolvent_scan<E: SeqElement>(
    x: &[E],
    xi0: Complex64,
    radii: &[f64],
    n_trunc: usize,
    nu: u32,
) -> Result<SingularityEstimate> {
    check_unimodular(xi0)?;
    check_radii(radii, 2)?;
    if x.len() < n_trunc + 1 {
        return Err(Error::Length { needed: n_trunc + 1, got: x.len() });
    }
    let head = &x[..=n_trunc];
    let profile: Vec<(f64, f64)> = radii
        .iter()
        .map(|&r| {
            let w = (xi0 * r).inv();
            let mut p = w;
            let mut f = head[0].zero_like();
            for v in head {
                f.add_scaled(p, v);
                p *= w;
            }
            (r, f.norm())
        })
        .collect();

    let (r_min, f_min) = *profile.last().expect("at least two radii");
    let bound = GrowthBound {
        constant: weighted_sup_norm(head, nu),
        nu,
    };
    // F carries one extra factor 1/λ relative to the Z-transform tail
    let tail = polynomial_geometric_tail(bound, r_min, n_trunc) / r_min;
    let limit = TAIL_RTOL * f_min;
    if tail > 0.0 && (tail >= limit || limit.is_nan()) {
        return Err(Error::TruncationInsufficient { tail, limit });
    }

    let (xs, ys): (Vec<f64>, Vec<f64>) = profile
        .iter()
        .filter(|p| p.1 > 0.0)
        .map(|&(r, f)| (-(r - 1.0).ln(), f.ln()))
        .unzip();
    let order_hat = if xs.len() >= 2 { linear_fit(&xs, &ys).0 } else { 0.0 };
    Ok(SingularityEstimate {
        xi0,
        profile,
        order_hat,
        is_singular: order_hat > SINGULAR_ORDER,
        tail_bound: tail,
    })
}

/// Radii with `r − 1` log-spaced from `1e-2` down to `1e-10`.
pub fn default_ablv_radii() -> Vec<f64> {
    (2..=10).map(|k| 1.0 + 10f64.powi(-k)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AblvResult {
    /// `(r, ‖(λ−ξ₀) R(λ,T) x‖)` at `λ = rξ₀`
    pub profile: Vec<(f64, f64)>,
    /// Value at the innermost radius.
    pub limit_estimate: f64,
    pub satisfied: bool,
}

/// Radial limit test `lim_{λ↓ξ₀} (λ−ξ₀) R(λ,T) x = 0` along `λ = rξ₀`.
///
/// Satisfied when the value at the innermost radius is below `tolerance` and
/// the profile is non-increasing.
pub fn ablv_check(
    t: &ComplexMatrix,
    x: &CVector,
    xi0: Complex64,
    radii: &[f64],
    tolerance: f64,
) -> Result<AblvResult> {
    check_unimodular(xi0)?;
    check_radii(radii, 1)?;
    if x.dim() != t.dim() {
        return Err(Error::Dimension {
            expected: t.dim(),
            got: x.dim(),
            context: "ABLV vector",
        });
    }
    let profile = radii
        .iter()
        .map(|&r| {
            let lambda = xi0 * r;
            let a = t.scale(Complex64::new(-1.0, 0.0)).shifted(lambda);
            let y = lu_factor(&a).solve(x)?;
            Ok((r, (lambda - xi0).norm() * y.norm()))
        })
        .collect::<Result<Vec<_>>>()?;
    let limit_estimate = profile.last().expect("at least one radius").1;
    let decreasing = profile.windows(2).all(|w| w[1].1 <= w[0].1 * (1.0 + 1e-12));
    Ok(AblvResult {
        satisfied: limit_estimate < tolerance && decreasing,
        limit_estimate,
        profile,
    })
}
