//! Spectral diagnostics on the unit circle.
//!
//! Nothing here computes eigenvalues. Conditions are checked by scanning
//! determinants on a grid, and spectra of sequences are probed by fitting the
//! blow-up rate of truncated resolvents along rays. All verdicts are
//! numerical evidence, not certificates.

mod condition;
mod growth;
mod scan;
mod ztransform;

pub use condition::{g_symbol, sigma_condition_check, SpectralScanReport};
pub use growth::{
    growth_order_fit, kt_diagnostic, weighted_sup_norm, DecayDiagnostic, GrowthClass, GrowthReport,
};
pub use scan::{ablv_check, default_ablv_radii, default_scan_radii, resolvent_scan, AblvResult, SingularityEstimate};
pub use ztransform::{polynomial_geometric_tail, z_transform_truncated, GrowthBound, ZTransform};

/// Least-squares slope and residual sum of squares of `ys` against `xs`.
pub(crate) fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    let slope = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let rss = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let r = y - my - slope * (x - mx);
            r * r
        })
        .sum();
    (slope, rss)
}

#[cfg(test)]
mod tests {
    use super::linear_fit;

    #[test]
    fn fit_recovers_line() {
        let xs: Vec<f64> = (0..10).map(f64::from).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 - 0.5 * x).collect();
        let (s, rss) = linear_fit(&xs, &ys);
        assert!((s + 0.5).abs() < 1e-14);
        assert!(rss < 1e-25);
    }
}
