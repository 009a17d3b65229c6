//! Gauss–Legendre quadrature with point doubling.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const INITIAL_POINTS: usize = 64;
const LEVELS: usize = 8; // 64 .. 8192

/// Nodes and weights on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Newton iteration on the three-term Legendre recurrence.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    /// Rule for `INITIAL_POINTS * 2^level` points, computed once.
    pub fn cached(level: usize) -> &'static GaussLegendre {
        static CACHE: [OnceLock<GaussLegendre>; LEVELS] = [const { OnceLock::new() }; LEVELS];
        CACHE[level].get_or_init(|| GaussLegendre::new(INITIAL_POINTS << level))
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

/// `(P_n(x), P_n'(x))`.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let p = if n == 0 { 1.0 } else { p1 };
    let d = n as f64 * (x * p - p0) / (x * x - 1.0);
    (p, d)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    /// `|I_2n - I_n|` of the last doubling.
    pub error_estimate: f64,
    pub points: usize,
}

/// Integrates `f` over `[a, b]`, doubling the Gauss–Legendre order from 64
/// until two successive estimates agree to `tol` (relative to the estimate,
/// absolute when it vanishes). Endpoint singularities of integrable
/// algebraic order are tolerated since the nodes never touch the endpoints,
/// but convergence slows as the singularity sharpens.
pub fn quadrature<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    let mut prev = GaussLegendre::cached(0).integrate(&f, a, b);
    let mut diff = f64::INFINITY;
    for level in 1..LEVELS {
        let cur = GaussLegendre::cached(level).integrate(&f, a, b);
        if !cur.is_finite() {
            return Err(Error::NumericalFailure {
                what: "non-finite quadrature estimate".into(),
                estimate: f64::INFINITY,
            });
        }
        diff = (cur - prev).abs();
        let scale = if cur == 0.0 { 1.0 } else { cur.abs() };
        if diff <= tol * scale {
            return Ok(QuadratureResult {
                value: cur,
                error_estimate: diff,
                points: INITIAL_POINTS << level,
            });
        }
        prev = cur;
    }
    Err(Error::NumericalFailure {
        what: format!(
            "quadrature did not reach tolerance {tol:e} with {} points",
            INITIAL_POINTS << (LEVELS - 1)
        ),
        estimate: diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn weights_sum_to_two() {
        for n in [1, 2, 5, 64, 1024] {
            let r = GaussLegendre::new(n);
            assert_abs_diff_eq!(r.weights.iter().sum::<f64>(), 2.0, epsilon = 1e-13);
            assert!(r.nodes.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn exact_on_polynomials_up_to_order() {
        // 5-point rule is exact through degree 9.
        let r = GaussLegendre::new(5);
        for k in 0..=9 {
            let v = r.integrate(|x| x.powi(k), 0.0, 1.0);
            assert_abs_diff_eq!(v, 1.0 / (k as f64 + 1.0), epsilon = 1e-15);
        }
        let r = GaussLegendre::cached(0);
        for k in 0..=127 {
            let v = r.integrate(|x| x.powi(k), 0.0, 1.0);
            assert_abs_diff_eq!(v, 1.0 / (k as f64 + 1.0), epsilon = 1e-14);
        }
    }

    #[test]
    fn polynomial_integrand() {
        let r = quadrature(|y| (1.0 - y).powi(2), 0.0, 1.0, 1e-12).unwrap();
        assert_abs_diff_eq!(r.value, 1.0 / 3.0, epsilon = 1e-15);
        assert_eq!(r.points, 128);
    }

    #[test]
    fn beta_integral() {
        let r = quadrature(|y: f64| y.powf(1.5) * (1.0 - y).powi(2), 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 16.0 / 315.0).abs() < 1e-13);
    }

    #[test]
    fn reports_non_convergence() {
        let err = quadrature(|y: f64| y.powf(-0.9), 0.0, 1.0, 1e-12).unwrap_err();
        assert!(matches!(err, Error::NumericalFailure { .. }));
    }
}
