//! Residual of the radial equation in `y = e^{-x}`:
//! `y^2 psi'' + y psi' + (-s^2 + beta y / (1 - y)) psi = 0`.

use crate::error::{Error, Result};
use crate::wavefunction::FamilyState;

/// `max |residual| / max |psi|` over the interior grid, with analytic
/// first and second derivatives.
pub fn ode_residual(state: &FamilyState, beta: f64, grid: &[f64]) -> Result<f64> {
    if grid.is_empty() {
        return Err(Error::Grid("empty grid".into()));
    }
    if let Some(y) = grid.iter().find(|y| !(**y > 0.0 && **y < 1.0)) {
        return Err(Error::Grid(format!(
            "ODE residual needs interior points, got {y}"
        )));
    }
    let s = state.s();
    let mut worst: f64 = 0.0;
    let mut peak: f64 = 0.0;
    for &y in grid {
        let psi = state.value(y);
        let r = y * y * state.second_derivative(y)
            + y * state.derivative(y)
            + (-s * s + beta * y / (1.0 - y)) * psi;
        worst = worst.max(r.abs());
        peak = peak.max(psi.abs());
    }
    Ok(worst / peak)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{s_param, Mode};
    use crate::wavefunction::{make_state, GridSpec};

    fn grid() -> Vec<f64> {
        GridSpec::Interior { points: 200 }.points().unwrap()
    }

    #[test]
    fn generalized_closed_form_solves_ode() {
        for (beta, n) in [(4.0, 1), (9.0, 2), (9.0, 1), (30.0, 4)] {
            let s = s_param(n, Mode::Generalized { beta }).unwrap();
            let st = make_state(s, n).unwrap();
            let r = ode_residual(&st, beta, &grid()).unwrap();
            assert!(r < 1e-10, "beta={beta} n={n}: {r}");
        }
        assert_eq!(s_param(2, Mode::Generalized { beta: 9.0 }).unwrap(), 1.25);
    }

    #[test]
    fn paper_mode_is_not_a_solution() {
        let st = make_state(0.75, 2).unwrap();
        let r = ode_residual(&st, 1.0, &grid()).unwrap();
        assert!(r > 0.1, "{r}");
    }

    #[test]
    fn rejects_endpoints() {
        let st = make_state(0.75, 2).unwrap();
        assert!(ode_residual(&st, 1.0, &[0.0, 0.5]).is_err());
        assert!(ode_residual(&st, 1.0, &[]).is_err());
    }
}
