//! Five-point central differences on uniform grids.

use crate::error::{Error, Result};
use crate::wavefunction::GridFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeOrder {
    First,
    Second,
}

/// Fourth-order central differences. The result lives on the points where
/// the full stencil fits (the two outermost points at each end are dropped).
pub fn fd_derivative(g: &GridFunction, order: DerivativeOrder) -> Result<GridFunction> {
    let y = g.grid();
    let f = g.values();
    if y.len() < 5 {
        return Err(Error::Grid(format!(
            "five-point stencil needs at least 5 points, got {}",
            y.len()
        )));
    }
    let h = (y[y.len() - 1] - y[0]) / (y.len() - 1) as f64;
    if y.windows(2).any(|w| ((w[1] - w[0]) - h).abs() > 1e-9 * h) {
        return Err(Error::Grid("finite differences need a uniform grid".into()));
    }
    let (grid, values): (Vec<f64>, Vec<f64>) = (2..y.len() - 2)
        .map(|i| {
            let d = match order {
                DerivativeOrder::First => {
                    (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h)
                }
                DerivativeOrder::Second => {
                    (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2])
                        / (12.0 * h * h)
                }
            };
            (y[i], d)
        })
        .unzip();
    GridFunction::new(grid, values, g.origin())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wavefunction::{make_state, sample_on};
    use approx::assert_abs_diff_eq;

    fn uniform(a: f64, b: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
            .collect()
    }

    fn tabulate(grid: Vec<f64>, f: impl Fn(f64) -> f64) -> GridFunction {
        let v = grid.iter().map(|&y| f(y)).collect();
        GridFunction::new(grid, v, None).unwrap()
    }

    #[test]
    fn constant_has_zero_derivative() {
        let g = tabulate(uniform(0.1, 0.9, 21), |_| 3.0);
        let d = fd_derivative(&g, DerivativeOrder::First).unwrap();
        assert!(d.values().iter().all(|v| v.abs() < 1e-12));
        assert_eq!(d.grid().len(), 17);
    }

    #[test]
    fn square_at_midpoint() {
        let g = tabulate(uniform(0.4, 0.6, 5), |y| y * y);
        let d = fd_derivative(&g, DerivativeOrder::First).unwrap();
        assert_eq!(d.grid(), &[0.5]);
        assert_abs_diff_eq!(d.values()[0], 1.0, epsilon = 1e-8);
        let d2 = fd_derivative(&g, DerivativeOrder::Second).unwrap();
        assert_abs_diff_eq!(d2.values()[0], 2.0, epsilon = 1e-8);
    }

    #[test]
    fn rejects_bad_grids() {
        let g = tabulate(vec![0.1, 0.2, 0.3, 0.4], |y| y);
        assert!(fd_derivative(&g, DerivativeOrder::First).is_err());
        let g = tabulate(vec![0.1, 0.2, 0.3, 0.4, 0.6], |y| y);
        assert!(fd_derivative(&g, DerivativeOrder::First).is_err());
    }

    #[test]
    fn matches_analytic_psi_derivative() {
        let st = make_state(0.75, 3).unwrap();
        let h = 1e-3;
        let grid: Vec<f64> = (0..=600).map(|i| 0.2 + h * i as f64).collect();
        let g = sample_on(&st, grid).unwrap();
        let d = fd_derivative(&g, DerivativeOrder::First).unwrap();
        for (y, v) in d.grid().iter().zip(d.values()) {
            assert!((v - st.derivative(*y)).abs() < 1e-6, "y={y}");
        }
    }

    #[test]
    fn fourth_order_convergence() {
        let st = make_state(1.3, 4).unwrap();
        let y0 = 0.37;
        let hs = [0.04, 0.02, 0.01, 0.005];
        let errs: Vec<f64> = hs
            .iter()
            .map(|&h| {
                let grid = (0..5).map(|i| y0 + h * (i as f64 - 2.0)).collect();
                let g = sample_on(&st, grid).unwrap();
                let d = fd_derivative(&g, DerivativeOrder::First).unwrap();
                (d.values()[0] - st.derivative(y0)).abs()
            })
            .collect();
        let slope = loglog_slope(&hs, &errs);
        assert!(slope >= 3.7, "slope {slope}, errors {errs:?}");
    }

    fn loglog_slope(x: &[f64], y: &[f64]) -> f64 {
        let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
        let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
        let n = lx.len() as f64;
        let mx = lx.iter().sum::<f64>() / n;
        let my = ly.iter().sum::<f64>() / n;
        let num: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
        let den: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
        num / den
    }
}
