//! Special functions and the Riemann–Liouville discrete fractional operators.
//!
//! The kernel `k^α(j) = Γ(α+j) / (Γ(α) Γ(j+1))` is generated by the ratio
//! recurrence `k(j+1) = k(j)·(α+j)/(j+1)`, which never forms a gamma value and
//! so neither overflows nor cancels. The order-0 kernel (needed by `Δ^1`
//! written as `Δ^1 ∘ ∇₀^0`) is the unit impulse, the pointwise limit of
//! `k^ε` as `ε → 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sequence::SeqElement;

/// Order `α ∈ (0, 1]` of a fractional difference.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    pub const ONE: FractionalOrder = FractionalOrder(1.0);
    pub const HALF: FractionalOrder = FractionalOrder(0.5);

    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha <= 1.0 {
            Ok(Self(alpha))
        } else {
            Err(Error::InvalidOrder(alpha))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// `1 − α`, the order of the summation inside `Δ^α`. May be zero.
    pub fn complement(self) -> f64 {
        1.0 - self.0
    }

    pub fn is_one(self) -> bool {
        self.0 == 1.0
    }
}

impl TryFrom<f64> for FractionalOrder {
    type Error = Error;
    fn try_from(alpha: f64) -> Result<Self> {
        Self::new(alpha)
    }
}

impl From<FractionalOrder> for f64 {
    fn from(a: FractionalOrder) -> f64 {
        a.0
    }
}

/// `k^α(0..=N)` for a fixed order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KernelSequence {
    pub alpha: FractionalOrder,
    pub values: Vec<f64>,
}

impl KernelSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl std::ops::Index<usize> for KernelSequence {
    type Output = f64;
    fn index(&self, j: usize) -> &f64 {
        &self.values[j]
    }
}

// Lanczos approximation, g = 7 with nine coefficients (Godfrey):
// Γ(z+1) = √(2π) t^{z+1/2} e^{-t} A(z),  t = z + g + 1/2,
// A(z) = c₀ + Σ_{i=1}^{8} cᵢ/(z+i).
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

#[allow(clippy::excessive_precision)]
const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_61;

// ζ(2), ζ(3), …, ζ(33) for the Taylor series of ln Γ(1+ε).
#[allow(clippy::excessive_precision)]
const ZETA: [f64; 32] = [
    1.644_934_066_848_226_436_5,
    1.202_056_903_159_594_285_4,
    1.082_323_233_711_138_191_5,
    1.036_927_755_143_369_926_3,
    1.017_343_061_984_449_139_7,
    1.008_349_277_381_922_826_8,
    1.004_077_356_197_944_339_4,
    1.002_008_392_826_082_214_4,
    1.000_994_575_127_818_085_3,
    1.000_494_188_604_119_464_6,
    1.000_246_086_553_308_048_3,
    1.000_122_713_347_578_489_1,
    1.000_061_248_135_058_704_8,
    1.000_030_588_236_307_020_5,
    1.000_015_282_259_408_651_9,
    1.000_007_637_197_637_899_8,
    1.000_003_817_293_264_999_8,
    1.000_001_908_212_716_553_9,
    1.000_000_953_962_033_872_8,
    1.000_000_476_932_986_787_8,
    1.000_000_238_450_502_727_7,
    1.000_000_119_219_925_965_3,
    1.000_000_059_608_189_051_3,
    1.000_000_029_803_503_514_7,
    1.000_000_014_901_554_828_4,
    1.000_000_007_450_711_789_8,
    1.000_000_003_725_334_024_8,
    1.000_000_001_862_659_723_5,
    1.000_000_000_931_327_432_4,
    1.000_000_000_465_662_906_5,
    1.000_000_000_232_831_183_4,
    1.000_000_000_116_415_501_7,
];

/// Half-width of the windows around 1 and 2 where the zeta series is used.
const SERIES_RADIUS: f64 = 0.25;

/// `ln Γ(1+ε)` for `|ε| ≤ 1/4`: `−γε + Σ_{k≥2} ζ(k)(−ε)^k / k`.
///
/// Keeps full relative accuracy near the zeros of `ln Γ` at 1 and 2.
fn log_gamma_one_plus(eps: f64) -> f64 {
    let mut sum = 0.0;
    for (i, &z) in ZETA.iter().enumerate().rev() {
        let k = (i + 2) as f64;
        sum = sum * (-eps) + z / k;
    }
    // sum now holds Σ ζ(k)(−ε)^{k−2}/k
    -EULER_GAMMA * eps + eps * eps * sum
}

fn log_gamma_lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let mut a = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + a.ln()
}

/// `ln Γ(x)` for `x > 0`.
///
/// Lanczos rational approximation away from 1 and 2; a zeta-value Taylor
/// series inside `|x − 1| ≤ 1/4` and `|x − 2| ≤ 1/4`; the shift
/// `Γ(x) = Γ(x+1)/x` below 3/4.
pub fn log_gamma(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::Domain(format!("log_gamma requires x > 0, got {x}")));
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }
    Ok(log_gamma_positive(x))
}

pub(crate) fn log_gamma_positive(x: f64) -> f64 {
    if (x - 1.0).abs() <= SERIES_RADIUS {
        log_gamma_one_plus(x - 1.0)
    } else if (x - 2.0).abs() <= SERIES_RADIUS {
        let eps = x - 2.0;
        eps.ln_1p() + log_gamma_one_plus(eps)
    } else if x < 1.0 - SERIES_RADIUS {
        log_gamma_positive(x + 1.0) - x.ln()
    } else {
        log_gamma_lanczos(x)
    }
}

/// Kernel weights of order `beta ∈ [0, 1]`; order 0 is the unit impulse.
pub(crate) fn kernel_weights(beta: f64, n_max: usize) -> Vec<f64> {
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(1.0);
    if beta == 0.0 {
        values.resize(n_max + 1, 0.0);
        return values;
    }
    let mut k = 1.0;
    for j in 0..n_max {
        let jf = j as f64;
        k *= (beta + jf) / (jf + 1.0);
        values.push(k);
    }
    values
}

/// `k^α(0..=n_max)` by the forward ratio recurrence.
pub fn kernel_k(alpha: FractionalOrder, n_max: usize) -> KernelSequence {
    KernelSequence {
        alpha,
        values: kernel_weights(alpha.value(), n_max),
    }
}

/// `(Δ¹f)(n) = f(n+1) − f(n)`; the output is one entry shorter.
pub fn forward_difference<E: SeqElement>(f: &[E]) -> Result<Vec<E>> {
    if f.len() < 2 {
        return Err(Error::Length {
            needed: 2,
            got: f.len(),
        });
    }
    Ok(f
        .windows(2)
        .map(|w| {
            let mut d = w[1].clone();
            d.add_real_scaled(-1.0, &w[0]);
            d
        })
        .collect())
}

fn check_order(order: f64) -> Result<()> {
    if order > 0.0 && order <= 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidOrder(order))
    }
}

fn weighted_sum<E: SeqElement>(weights: &[f64], f: &[E], n: usize) -> E {
    // Σ_{k=0}^{n} w(n−k) f(k)
    let mut acc = f[0].zero_like();
    for k in 0..=n {
        let w = weights[n - k];
        if w != 0.0 {
            acc.add_real_scaled(w, &f[k]);
        }
    }
    acc
}

/// `(∇₀^{−α} f)(n) = Σ_{k=0}^{n} k^α(n−k) f(k)`, for `α ∈ (0, 1]`.
pub fn nabla_inv<E: SeqElement>(alpha: f64, f: &[E], n: usize) -> Result<E> {
    check_order(alpha)?;
    if f.len() < n + 1 {
        return Err(Error::Length {
            needed: n + 1,
            got: f.len(),
        });
    }
    let weights = kernel_weights(alpha, n);
    Ok(weighted_sum(&weights, f, n))
}

/// `(Δ^α f)(n) = Δ¹ ∘ ∇₀^{−(1−α)} f (n)`. Needs `f(0..=n+1)`.
///
/// At `α = 1` the inner summation is the identity and this is exactly
/// `f(n+1) − f(n)`.
pub fn delta_alpha<E: SeqElement>(alpha: FractionalOrder, f: &[E], n: usize) -> Result<E> {
    if f.len() < n + 2 {
        return Err(Error::Length {
            needed: n + 2,
            got: f.len(),
        });
    }
    let mut d = f[n + 1].clone();
    if alpha.is_one() {
        d.add_real_scaled(-1.0, &f[n]);
        return Ok(d);
    }
    let weights = kernel_weights(alpha.complement(), n + 1);
    let mut d = weighted_sum(&weights, f, n + 1);
    d.add_real_scaled(-1.0, &weighted_sum(&weights, f, n));
    Ok(d)
}

/// `Δ^α f (n)` for every `n = 0..=len−2`, sharing one kernel.
pub fn delta_alpha_all<E: SeqElement>(alpha: FractionalOrder, f: &[E]) -> Result<Vec<E>> {
    if alpha.is_one() {
        return forward_difference(f);
    }
    if f.len() < 2 {
        return Err(Error::Length {
            needed: 2,
            got: f.len(),
        });
    }
    let weights = kernel_weights(alpha.complement(), f.len() - 1);
    let summed: Vec<E> = (0..f.len()).map(|m| weighted_sum(&weights, f, m)).collect();
    forward_difference(&summed)
}

#[cfg(test)]
#[allow(clippy::excessive_precision, clippy::approx_constant, clippy::needless_range_loop)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    // ln Γ(x) at 50 digits (mpmath.loggamma evaluated at the exact f64 input).
    const LOG_GAMMA_REFERENCE: [(f64, f64); 19] = [
        (0.001, 6.907_178_885_383_853_661_7),
        (0.01, 4.599_479_878_042_021_701_6),
        (0.1, 2.252_712_651_734_205_902),
        (0.25, 1.288_022_524_698_077_457_4),
        (0.5, 0.572_364_942_924_700_087_07),
        (0.75, 0.203_280_951_431_295_371_48),
        (0.999, 0.000_578_038_532_891_380_238_17),
        (1.000_000_1, -5.772_155_829_918_507_097e-8),
        (1.5, -0.120_782_237_635_245_222_35),
        (1.9999, -0.000_042_275_208_772_153_458_011),
        (2.5, 0.284_682_870_472_919_159_63),
        (3.0, 0.693_147_180_559_945_309_42),
        (7.25, 7.052_185_450_738_539_444_9),
        (10.0, 12.801_827_480_081_469_611),
        (33.3, 82.603_723_581_654_943_008),
        (100.0, 359.134_205_369_575_398_78),
        (1234.5, 7_550.550_901_077_894_895_7),
        (1e5, 1_051_287.708_973_656_894_9),
        (1e6, 12_815_504.569_147_611_66),
    ];

    #[test]
    fn log_gamma_matches_high_precision_reference() {
        for &(x, expected) in &LOG_GAMMA_REFERENCE {
            let got = log_gamma(x).unwrap();
            let rel = (got - expected).abs() / expected.abs();
            assert!(rel <= 1e-13, "x = {x}: got {got}, expected {expected}, rel {rel:e}");
        }
    }

    #[test]
    fn log_gamma_trivial_points() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert_eq!(log_gamma(2.0).unwrap(), 0.0);
        let half = log_gamma(0.5).unwrap();
        assert!((half - 0.5 * std::f64::consts::PI.ln()).abs() < 1e-15);
    }

    #[test]
    fn log_gamma_domain() {
        assert!(matches!(log_gamma(0.0), Err(Error::Domain(_))));
        assert!(matches!(log_gamma(-2.5), Err(Error::Domain(_))));
        assert!(log_gamma(f64::NAN).is_err());
    }

    #[test]
    fn log_gamma_recurrence_holds_across_branches() {
        // ln Γ(x+1) − ln Γ(x) = ln x, checked across every branch boundary
        let mut x = 0.01;
        while x < 50.0 {
            let lhs = log_gamma(x + 1.0).unwrap() - log_gamma(x).unwrap();
            assert!((lhs - x.ln()).abs() < 1e-13 * (1.0 + log_gamma(x + 1.0).unwrap().abs()));
            x *= 1.07;
        }
    }

    #[test]
    fn order_construction() {
        assert!(FractionalOrder::new(0.0).is_err());
        assert!(FractionalOrder::new(1.0000001).is_err());
        assert!(FractionalOrder::new(f64::NAN).is_err());
        assert_eq!(FractionalOrder::new(1.0).unwrap().complement(), 0.0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_k(FractionalOrder::ONE, 5).values, vec![1.0; 6]);
        assert_eq!(kernel_k(FractionalOrder::HALF, 2).values, vec![1.0, 0.5, 0.375]);
        for a in [0.1, 0.37, 0.9] {
            assert_eq!(kernel_k(FractionalOrder::new(a).unwrap(), 0).values, vec![1.0]);
        }
    }

    fn kernel_direct(alpha: f64, j: usize) -> f64 {
        let j = j as f64;
        (log_gamma(alpha + j).unwrap() - log_gamma(alpha).unwrap() - log_gamma(j + 1.0).unwrap())
            .exp()
    }

    #[test]
    fn kernel_recurrence_agrees_with_log_gamma() {
        for i in 1..=10 {
            let alpha = i as f64 / 10.0;
            let k = kernel_k(FractionalOrder::new(alpha).unwrap(), 10_000);
            for j in (0..=10_000).step_by(7).chain([10_000]) {
                let direct = kernel_direct(alpha, j);
                let rel = (k[j] - direct).abs() / direct;
                assert!(rel < 1e-10, "alpha {alpha}, j {j}: rel {rel:e}");
            }
        }
    }

    #[test]
    fn kernel_semigroup() {
        // Cauchy convolution k^a * k^b against k^{a+b}
        for (a, b) in [(0.5, 0.5), (0.25, 0.5), (0.1, 0.3), (0.7, 0.3), (0.45, 0.55)] {
            let n = 1000;
            let ka = kernel_weights(a, n);
            let kb = kernel_weights(b, n);
            let kab = kernel_weights(a + b, n);
            for m in [0, 1, 2, 17, 250, 999, 1000] {
                let conv: f64 = (0..=m).map(|j| ka[m - j] * kb[j]).sum();
                assert!((conv - kab[m]).abs() <= 1e-9 * kab[m], "a {a} b {b} m {m}");
            }
        }
    }

    proptest! {
        #[test]
        fn kernel_positive_and_non_increasing(alpha in 0.001f64..1.0, n in 1usize..500) {
            let k = kernel_k(FractionalOrder::new(alpha).unwrap(), n);
            prop_assert_eq!(k[0], 1.0);
            for w in k.values.windows(2) {
                prop_assert!(w[1] > 0.0);
                prop_assert!(w[1] <= w[0]);
            }
        }

        #[test]
        fn delta_one_is_forward_difference(xs in prop::collection::vec(-1e6f64..1e6, 2..40)) {
            let f: Vec<Complex64> = xs.iter().map(|&x| c(x)).collect();
            let fd = forward_difference(&f).unwrap();
            for n in 0..f.len() - 1 {
                prop_assert_eq!(delta_alpha(FractionalOrder::ONE, &f, n).unwrap(), fd[n]);
            }
            prop_assert_eq!(delta_alpha_all(FractionalOrder::ONE, &f).unwrap(), fd);
        }
    }

    #[test]
    fn forward_difference_examples() {
        let constant = vec![c(3.0); 5];
        assert!(forward_difference(&constant).unwrap().iter().all(|d| *d == c(0.0)));
        let lin: Vec<_> = (0..6).map(|n| c(n as f64)).collect();
        assert!(forward_difference(&lin).unwrap().iter().all(|d| *d == c(1.0)));
        let sq: Vec<_> = (0..6).map(|n| c((n * n) as f64)).collect();
        for (n, d) in forward_difference(&sq).unwrap().iter().enumerate() {
            assert_eq!(*d, c((2 * n + 1) as f64));
        }
        assert!(matches!(forward_difference(&[c(1.0)]), Err(Error::Length { .. })));
    }

    #[test]
    fn nabla_inv_examples() {
        let mut impulse = vec![c(0.0); 8];
        impulse[0] = c(1.0);
        for alpha in [0.3, 0.5, 1.0] {
            let k = kernel_weights(alpha, 7);
            for n in 0..8 {
                assert_eq!(nabla_inv(alpha, &impulse, n).unwrap(), c(k[n]));
            }
        }
        let ones = vec![c(1.0); 10];
        for n in 0..10 {
            assert_eq!(nabla_inv(1.0, &ones, n).unwrap(), c((n + 1) as f64));
        }
        assert_eq!(nabla_inv(0.5, &ones, 2).unwrap(), c(1.875));
        assert!(matches!(nabla_inv(0.5, &ones, 10), Err(Error::Length { .. })));
        assert!(nabla_inv(0.0, &ones, 1).is_err());
    }

    #[test]
    fn delta_alpha_examples() {
        let half = FractionalOrder::HALF;
        let k: Vec<Complex64> = kernel_weights(0.5, 60).into_iter().map(c).collect();
        for n in 0..59 {
            assert!(delta_alpha(half, &k, n).unwrap().norm() < 1e-14);
        }
        let mut impulse = vec![c(0.0); 4];
        impulse[0] = c(1.0);
        assert_eq!(delta_alpha(half, &impulse, 0).unwrap(), c(-0.5));
        let all = delta_alpha_all(half, &k).unwrap();
        for n in 0..59 {
            assert_eq!(all[n], delta_alpha(half, &k, n).unwrap());
        }
        assert!(matches!(delta_alpha(half, &impulse, 3), Err(Error::Length { .. })));
    }
}
