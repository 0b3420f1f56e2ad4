use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::FractionalOrder;
use crate::matrix::{lu_factor, ComplexMatrix};
use crate::resolvent::g_value;

/// Tolerance on `|z| ≥ 1` for points meant to lie on the unit circle.
const CIRCLE_SLACK: f64 = 1e-12;
/// Zoom passes stop once the bracket around the minimum is this narrow.
const MIN_BRACKET: f64 = 1e-12;
const REFINE_FACTOR: usize = 8;

/// `g(z) = z^{1−α}(z−1)^α`, realized as `z (1 − 1/z)^α` with the principal
/// power, for `|z| ≥ 1`, `z ≠ 1`.
pub fn g_symbol(alpha: FractionalOrder, z: Complex64) -> Result<Complex64> {
    if z == Complex64::new(1.0, 0.0) {
        return Err(Error::Domain("g is singular at z = 1".into()));
    }
    if !z.is_finite() || z.norm() < 1.0 - CIRCLE_SLACK {
        return Err(Error::Domain(format!("g requires |z| ≥ 1, got |z| = {}", z.norm())));
    }
    Ok(g_value(alpha, z))
}

/// Result of scanning `|det(g(e^{iθ}) I − T)|` over the punctured circle.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralScanReport {
    /// `(θ, |det|)`, for grid and refinement points, sorted by angle.
    pub samples: Vec<(f64, f64)>,
    pub min_detmag: f64,
    pub min_angle: f64,
    pub threshold: f64,
    /// Whether `det ≠ 0` plausibly holds on the scanned arc.
    pub verdict: bool,
}

fn detmag(t: &ComplexMatrix, alpha: FractionalOrder, theta: f64) -> f64 {
    let g = g_value(alpha, Complex64::from_polar(1.0, theta));
    let a = t.scale(Complex64::new(-1.0, 0.0)).shifted(g);
    lu_factor(&a).det().norm()
}

/// Checks that `g(z) I − T` is invertible on `{|z| = 1, |arg z| ≥ ε}`.
///
/// Samples `grid_points` equispaced angles in `[ε, 2π − ε]`, then zooms in
/// on the smallest sample with repeated ×8 refinement until the bracket is
/// below `1e-12` rad. The verdict is `min |det| > threshold`.
pub fn sigma_condition_check(
    t: &ComplexMatrix,
    alpha: FractionalOrder,
    grid_points: usize,
    exclusion_radius: f64,
    threshold: f64,
) -> Result<SpectralScanReport> {
    if grid_points < 64 {
        return Err(Error::InvalidArgument {
            name: "grid",
            reason: format!("at least 64 grid points are required, got {grid_points}"),
        });
    }
    if !(exclusion_radius > 0.0 && exclusion_radius < PI) {
        return Err(Error::InvalidArgument {
            name: "exclusion",
            reason: format!("exclusion radius must lie in (0, π), got {exclusion_radius}"),
        });
    }
    let lo = exclusion_radius;
    let hi = 2.0 * PI - exclusion_radius;
    let step = (hi - lo) / (grid_points - 1) as f64;
    let mut samples: Vec<(f64, f64)> = (0..grid_points)
        .map(|i| {
            let theta = if i + 1 == grid_points { hi } else { lo + step * i as f64 };
            (theta, detmag(t, alpha, theta))
        })
        .collect();

    let argmin = |s: &[(f64, f64)]| {
        s.iter()
            .copied()
            .fold((f64::NAN, f64::INFINITY), |best, cur| if cur.1 < best.1 { cur } else { best })
    };
    let (mut best_theta, mut best_mag) = argmin(&samples);
    let mut half_width = step;
    let mut refined = Vec::new();
    while half_width > MIN_BRACKET && best_mag > 0.0 {
        let h = half_width / REFINE_FACTOR as f64;
        let pass: Vec<(f64, f64)> = (1..=REFINE_FACTOR)
            .flat_map(|k| [-(k as f64), k as f64])
            .map(|k| (best_theta + k * h).clamp(lo, hi))
            .map(|theta| (theta, detmag(t, alpha, theta)))
            .collect();
        let (theta, mag) = argmin(&pass);
        if mag < best_mag {
            best_theta = theta;
            best_mag = mag;
        }
        refined.extend(pass);
        half_width = h;
    }
    samples.extend(refined);
    samples.sort_by(|a, b| a.0.total_cmp(&b.0));
    samples.dedup_by(|a, b| a.0 == b.0);

    Ok(SpectralScanReport {
        samples,
        min_detmag: best_mag,
        min_angle: best_theta,
        threshold,
        verdict: best_mag > threshold,
    })
}
