use std::ops::RangeInclusive;

use serde::Serialize;

use super::linear_fit;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::sequence::SeqElement;

/// Log-linear slopes within this band count as neither growth nor decay.
const EXP_SLOPE_THRESHOLD: f64 = 0.01;
const MIN_FIT_WINDOW: usize = 16;

/// `max_n ‖x(n)‖ / max(n,1)^ν` over the available entries.
pub fn weighted_sup_norm<E: SeqElement>(x: &[E], nu: u32) -> f64 {
    x.iter()
        .enumerate()
        .map(|(n, v)| v.norm() / (n.max(1) as f64).powi(nu as i32))
        .fold(0.0, f64::max)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GrowthClass {
    ExpGrowth,
    Polynomial,
    ExpDecay,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GrowthReport {
    /// Log-log slope; `None` for an identically zero window.
    pub nu_hat: Option<f64>,
    /// Exponent used for `weighted_sup`.
    pub nu: u32,
    pub weighted_sup: f64,
    pub classification: GrowthClass,
    /// Slope of `log ‖x(n)‖` against `n`.
    pub exp_rate: f64,
    pub loglog_rss: f64,
    pub loglinear_rss: f64,
}

/// Fits `‖x(n)‖ ≈ C n^ν` and `‖x(n)‖ ≈ C e^{sn}` over `window` and classifies.
///
/// Exponential growth (decay) is reported when the log-linear fit has the
/// smaller residual and `s > 0.01` (`s < −0.01`); otherwise the sequence is
/// polynomial of order `nu_hat`. A non-finite norm inside the window is an
/// overflow error.
pub fn growth_order_fit<E: SeqElement>(x: &[E], window: RangeInclusive<usize>) -> Result<GrowthReport> {
    let (start, end) = (*window.start(), *window.end());
    if end < start || end - start + 1 < MIN_FIT_WINDOW {
        return Err(Error::InvalidArgument {
            name: "window",
            reason: format!("fit window needs at least {MIN_FIT_WINDOW} indices, got {start}..={end}"),
        });
    }
    if x.len() <= end {
        return Err(Error::Length { needed: end + 1, got: x.len() });
    }
    let (mut ln_n, mut n_lin, mut ln_x) = (Vec::new(), Vec::new(), Vec::new());
    for (n, value) in x.iter().enumerate().take(end + 1).skip(start.max(1)) {
        let norm = value.norm();
        if !norm.is_finite() {
            return Err(Error::Overflow { log_magnitude: f64::INFINITY });
        }
        if norm > 0.0 {
            ln_n.push((n as f64).ln());
            n_lin.push(n as f64);
            ln_x.push(norm.ln());
        }
    }
    if ln_x.len() < 2 {
        return Ok(GrowthReport {
            nu_hat: None,
            nu: 0,
            weighted_sup: weighted_sup_norm(x, 0),
            classification: GrowthClass::ExpDecay,
            exp_rate: f64::NEG_INFINITY,
            loglog_rss: 0.0,
            loglinear_rss: 0.0,
        });
    }
    let (nu_hat, loglog_rss) = linear_fit(&ln_n, &ln_x);
    let (exp_rate, loglinear_rss) = linear_fit(&n_lin, &ln_x);
    let exponential_fits_better = loglinear_rss < loglog_rss;
    let classification = if exponential_fits_better && exp_rate > EXP_SLOPE_THRESHOLD {
        GrowthClass::ExpGrowth
    } else if exponential_fits_better && exp_rate < -EXP_SLOPE_THRESHOLD {
        GrowthClass::ExpDecay
    } else {
        GrowthClass::Polynomial
    };
    let nu = match classification {
        GrowthClass::ExpDecay => 0,
        GrowthClass::Polynomial => nu_hat.round().max(0.0) as u32,
        GrowthClass::ExpGrowth => nu_hat.ceil().max(0.0) as u32,
    };
    Ok(GrowthReport {
        nu_hat: Some(nu_hat),
        nu,
        weighted_sup: weighted_sup_norm(x, nu),
        classification,
        exp_rate,
        loglog_rss,
        loglinear_rss,
    })
}

/// `D(n) = n^{−ν} Σ_{k=0}^{ν+1} C(ν+1,k) (−1)^{ν+1+k} S(n+k)`, i.e.
/// `n^{−ν}(S−I)^{ν+1}` applied through the shift.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecayDiagnostic {
    pub nu: u32,
    /// `(n, ‖D(n)‖_F)`
    pub values: Vec<(usize, f64)>,
    /// Log-log slope of `‖D(n)‖` against `n`; `None` when fewer than two
    /// samples are nonzero.
    pub trend_slope: Option<f64>,
    pub max_norm: f64,
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

/// Katznelson–Tzafriri difference `D(n)` for `n ∈ n_range`.
pub fn kt_diagnostic(s: &[ComplexMatrix], nu: u32, n_range: RangeInclusive<usize>) -> Result<DecayDiagnostic> {
    let (start, end) = (*n_range.start(), *n_range.end());
    if end < start {
        return Err(Error::InvalidArgument {
            name: "n_range",
            reason: format!("empty range {start}..={end}"),
        });
    }
    let needed = end + nu as usize + 2;
    if s.len() < needed {
        return Err(Error::Length { needed, got: s.len() });
    }
    let order = nu + 1;
    let weights: Vec<f64> = (0..=order)
        .map(|k| {
            let sign = if (order + k).is_multiple_of(2) { 1.0 } else { -1.0 };
            sign * binomial(order, k)
        })
        .collect();
    let values: Vec<(usize, f64)> = (start..=end)
        .map(|n| {
            let mut d = ComplexMatrix::zeros(s[n].dim());
            for (k, &w) in weights.iter().enumerate() {
                d.add_real_scaled(w, &s[n + k]);
            }
            (n, d.frobenius_norm() / (n.max(1) as f64).powi(nu as i32))
        })
        .collect();
    let (xs, ys): (Vec<f64>, Vec<f64>) = values
        .iter()
        .filter(|(n, v)| *n >= 1 && *v > 0.0)
        .map(|&(n, v)| ((n as f64).ln(), v.ln()))
        .unzip();
    let trend_slope = (xs.len() >= 2).then(|| linear_fit(&xs, &ys).0);
    let max_norm = values.iter().map(|v| v.1).fold(0.0, f64::max);
    Ok(DecayDiagnostic {
        nu,
        values,
        trend_slope,
        max_norm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{kernel_weights, FractionalOrder};
    use crate::resolvent::s_alpha_recurrence;
    use crate::sequence::MatrixSequence;
    use num_complex::Complex64;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn jordan2() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap()
    }

    #[test]
    fn weighted_sup_examples() {
        let cst = vec![c(-2.5); 10];
        assert_eq!(weighted_sup_norm(&cst, 0), 2.5);
        let lin: Vec<_> = (0..50).map(|n| c(n as f64)).collect();
        assert_eq!(weighted_sup_norm(&lin, 1), 1.0);
        let p = MatrixSequence::powers(&jordan2(), 1000);
        let w = weighted_sup_norm(p.values(), 1);
        // ‖Aⁿ‖_F / n = √(2+n²)/n is largest at n = 1 among n ≥ 1
        assert!((w - 3f64.sqrt()).abs() < 1e-12);
        let tail = weighted_sup_norm(&p.values()[500..], 1);
        assert!(tail.is_finite());
    }

    #[test]
    fn growth_examples() {
        let p = MatrixSequence::powers(&jordan2(), 400);
        let r = growth_order_fit(p.values(), 16..=400).unwrap();
        assert_eq!(r.classification, GrowthClass::Polynomial);
        let nu = r.nu_hat.unwrap();
        assert!((0.9..=1.1).contains(&nu), "{nu}");
        assert_eq!(r.nu, 1);

        let decay: Vec<_> = (0..100).map(|n| c(0.5f64.powi(n))).collect();
        assert_eq!(growth_order_fit(&decay, 10..=99).unwrap().classification, GrowthClass::ExpDecay);

        let grow: Vec<_> = (0..100).map(|n| c(1.1f64.powi(n))).collect();
        assert_eq!(growth_order_fit(&grow, 10..=99).unwrap().classification, GrowthClass::ExpGrowth);

        let ones = vec![c(1.0); 64];
        let r = growth_order_fit(&ones, 1..=63).unwrap();
        assert_eq!(r.classification, GrowthClass::Polynomial);
        assert!(r.nu_hat.unwrap().abs() <= 0.05);

        let zeros = vec![c(0.0); 32];
        let r = growth_order_fit(&zeros, 0..=31).unwrap();
        assert_eq!(r.classification, GrowthClass::ExpDecay);
        assert_eq!(r.nu_hat, None);

        assert!(growth_order_fit(&ones, 0..=10).is_err());
        assert!(matches!(growth_order_fit(&ones, 0..=64), Err(Error::Length { .. })));
    }

    #[test]
    fn kt_first_difference() {
        let p = MatrixSequence::powers(&ComplexMatrix::scalar(1, c(0.7)), 30);
        let d = kt_diagnostic(p.values(), 0, 0..=28).unwrap();
        for &(n, v) in &d.values {
            assert!((v - (p[n + 1][(0, 0)] - p[n][(0, 0)]).norm()).abs() < 1e-15);
        }
    }

    #[test]
    fn kt_nilpotent_difference_vanishes() {
        let p = MatrixSequence::powers(&jordan2(), 200);
        let d = kt_diagnostic(p.values(), 1, 1..=198).unwrap();
        assert!(d.values.iter().all(|v| v.1 == 0.0));
        assert_eq!(d.trend_slope, None);
    }

    #[test]
    fn growth_fit_rejects_overflowed_sequences() {
        let mut x = vec![Complex64::new(1.0, 0.0); 40];
        x[30] = Complex64::new(f64::INFINITY, 0.0);
        assert!(matches!(growth_order_fit(&x, 10..=39), Err(Error::Overflow { .. })));
        assert!(growth_order_fit(&x, 10..=29).is_ok());
    }

    #[test]
    fn kt_half_order_nilpotent_example() {
        let s = s_alpha_recurrence(&ComplexMatrix::shift(2), FractionalOrder::HALF, 102);
        let d = kt_diagnostic(s.values(), 0, 100..=100).unwrap();
        let k = kernel_weights(0.5, 100)[100];
        // D(100) = (k(101) − k(100)) I, so ‖D‖_F = √2 · k(100)/202
        let expect = 2f64.sqrt() * k / 202.0;
        assert!((d.values[0].1 - expect).abs() < 1e-12 * expect);
        assert!((d.values[0].1 / 2f64.sqrt() - 2.79e-4).abs() < 1e-6);
    }

    #[test]
    fn kt_range_checks() {
        let p = MatrixSequence::powers(&jordan2(), 10);
        assert!(matches!(kt_diagnostic(p.values(), 1, 0..=9), Err(Error::Length { .. })));
        assert!(kt_diagnostic(p.values(), 1, 0..=8).is_ok());
    }
}
