use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sequence::SeqElement;

/// Growth bound `‖x(n)‖ ≤ constant · max(n,1)^nu`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GrowthBound {
    pub constant: f64,
    pub nu: u32,
}

/// Truncated Z-transform `Σ_{j=0}^{N} x(j) z^{−j}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ZTransform<E> {
    pub value: E,
    /// Bound on the omitted tail, when a growth bound was supplied.
    pub tail_bound: Option<f64>,
    /// False when `|z| ≤ 1`, where the full series need not converge.
    pub in_convergence_region: bool,
}

/// Upper bound for `Σ_{j>n} C j^ν r^{−j}`, `r > 1`. Infinite for `r ≤ 1`.
pub fn polynomial_geometric_tail(bound: GrowthBound, r: f64, n: usize) -> f64 {
    if bound.constant == 0.0 {
        return 0.0;
    }
    if r.is_nan() || r <= 1.0 {
        return f64::INFINITY;
    }
    let nu = f64::from(bound.nu);
    let ln_r = r.ln();
    let term = |j: f64| (bound.constant.ln() + nu * j.ln() - j * ln_r).exp();
    // sum explicitly until consecutive-term ratio (1+1/j)^ν / r drops below
    // one, then close with a geometric series
    let mut j = (n + 1) as f64;
    let mut acc = 0.0;
    loop {
        let q = ((1.0 + 1.0 / j).ln() * nu - ln_r).exp();
        if q < 1.0 {
            return acc + term(j) / (1.0 - q);
        }
        acc += term(j);
        j += 1.0;
    }
}

/// `Σ_{j=0}^{n} x(j) z^{−j}` with an optional truncation bound.
pub fn z_transform_truncated<E: SeqElement>(
    x: &[E],
    z: Complex64,
    n: usize,
    growth: Option<GrowthBound>,
) -> Result<ZTransform<E>> {
    if x.len() < n + 1 {
        return Err(Error::Length { needed: n + 1, got: x.len() });
    }
    if z == Complex64::new(0.0, 0.0) {
        return Err(Error::Domain("Z-transform evaluated at z = 0".into()));
    }
    let w = z.inv();
    let mut value = x[0].zero_like();
    let mut p = Complex64::new(1.0, 0.0);
    for xj in &x[..=n] {
        value.add_scaled(p, xj);
        p *= w;
    }
    Ok(ZTransform {
        value,
        tail_bound: growth.map(|g| polynomial_geometric_tail(g, z.norm(), n)),
        in_convergence_region: z.norm() > 1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::kernel_weights;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn impulse_and_geometric() {
        let mut imp = vec![c(0.0, 0.0); 10];
        imp[0] = c(1.0, 0.0);
        for z in [c(2.0, 0.0), c(0.0, 1.5), c(-3.0, 1.0)] {
            assert_eq!(z_transform_truncated(&imp, z, 9, None).unwrap().value, c(1.0, 0.0));
        }
        let ones = vec![c(1.0, 0.0); 61];
        let zt = z_transform_truncated(&ones, c(2.0, 0.0), 60, None).unwrap();
        assert!((zt.value - c(2.0, 0.0)).norm() <= 1e-15);
        assert!(zt.in_convergence_region);
        assert!(!z_transform_truncated(&ones, c(0.5, 0.0), 60, None).unwrap().in_convergence_region);
    }

    #[test]
    fn kernel_transform() {
        let k: Vec<Complex64> = kernel_weights(0.5, 400).into_iter().map(|v| c(v, 0.0)).collect();
        let zt = z_transform_truncated(&k, c(1.5, 0.0), 400, None).unwrap();
        assert!((zt.value - c(3f64.sqrt(), 0.0)).norm() < 1e-6);
    }

    #[test]
    fn tail_bound_dominates_exact_tail() {
        // Σ_{j>n} j r^{−j} in closed form: derivative of the geometric series
        let r: f64 = 1.3;
        let exact_total = (1.0 / r) / (1.0 - 1.0 / r).powi(2);
        for n in [0usize, 3, 10, 50] {
            let head: f64 = (0..=n).map(|j| j as f64 * r.powi(-(j as i32))).sum();
            let tail = exact_total - head;
            let bound = polynomial_geometric_tail(GrowthBound { constant: 1.0, nu: 1 }, r, n);
            assert!(bound >= tail * (1.0 - 1e-12), "n {n}: bound {bound} < tail {tail}");
            assert!(bound <= 10.0 * tail + 1e-300);
        }
        assert!(polynomial_geometric_tail(GrowthBound { constant: 1.0, nu: 0 }, 1.0, 3).is_infinite());
    }

    #[test]
    fn short_sequence() {
        assert!(matches!(
            z_transform_truncated(&[c(1.0, 0.0)], c(2.0, 0.0), 3, None),
            Err(Error::Length { .. })
        ));
    }
}
