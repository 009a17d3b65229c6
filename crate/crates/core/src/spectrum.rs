//! Quantization condition and bound-state energies.
//!
//! Energies are carried in units of `V0`: `epsilon = E / V0 = -s^2`.
//!
//! Two modes are supported:
//!
//! * [`Mode::Paper`] uses `s = (n^2 - 1) / (2n)`, the spectrum
//!   `E_n = -V0 ((n^2-1)/(2n))^2`. It corresponds to coupling `beta = 1`,
//!   reading the reduction condition as `hbar^2 / (2 M a^2) = V0` (the form
//!   `hbar^2 a^2 / (2M) = V0` is dimensionally inconsistent).
//! * [`Mode::Generalized`] uses `s = (beta - n^2) / (2n)` for the coupling
//!   `beta = 2 M V0 a^2 / hbar^2`. Here the closed-form eigenfunction solves
//!   the radial equation exactly and only levels with `n^2 < beta` are bound.
//!
//! The paper-mode `s` is positive, which is what the boundary condition at
//! `y = 0` needs, but it does not satisfy `s - sqrt(s^2 + 1) = -n`; it
//! satisfies `sqrt(s^2 + 1) = n - s` instead. [`quantization_residual`]
//! reports the discrepancy rather than hiding it.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symbolic::int;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Mode {
    Paper,
    Generalized { beta: f64 },
}

impl Mode {
    pub fn beta(&self) -> f64 {
        match self {
            Mode::Paper => 1.0,
            Mode::Generalized { beta } => *beta,
        }
    }
}

/// Physical parameters of the well, in units with `hbar = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Coupling {
    pub v0: f64,
    pub a: f64,
    pub mass: f64,
}

impl Coupling {
    pub fn new(v0: f64, a: f64, mass: f64) -> Result<Self> {
        if !(v0 > 0.0 && a > 0.0 && mass > 0.0) {
            return Err(Error::Domain(format!(
                "coupling needs V0, a, M > 0 (got {v0}, {a}, {mass})"
            )));
        }
        Ok(Coupling { v0, a, mass })
    }

    /// Coupling with the given depth and dimensionless strength; the mass is
    /// chosen to match.
    pub fn with_beta(v0: f64, a: f64, beta: f64) -> Result<Self> {
        if !(beta > 0.0) {
            return Err(Error::Domain(format!("beta must be positive, got {beta}")));
        }
        Coupling::new(v0, a, beta / (2.0 * v0 * a * a))
    }

    /// `2 M V0 a^2 / hbar^2`.
    pub fn beta(&self) -> f64 {
        2.0 * self.mass * self.v0 * self.a * self.a
    }

    pub fn generalized(&self) -> Mode {
        Mode::Generalized { beta: self.beta() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub n: u32,
    pub s: f64,
    pub epsilon: f64,
    /// Energy in the units of `V0`.
    pub energy: f64,
}

pub fn s_param(n: u32, mode: Mode) -> Result<f64> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    let nf = n as f64;
    match mode {
        Mode::Paper => Ok((nf * nf - 1.0) / (2.0 * nf)),
        Mode::Generalized { beta } => {
            if !(beta > 0.0) {
                return Err(Error::Domain(format!("beta must be positive, got {beta}")));
            }
            if nf * nf >= beta {
                return Err(Error::NoBoundState { n, beta });
            }
            Ok((beta - nf * nf) / (2.0 * nf))
        }
    }
}

/// `E_n = -V0 s^2`.
pub fn energy(n: u32, coupling: &Coupling, mode: Mode) -> Result<f64> {
    let s = s_param(n, mode)?;
    Ok(-coupling.v0 * s * s)
}

pub fn entry(n: u32, mode: Mode, v0: f64) -> Result<SpectrumEntry> {
    let s = s_param(n, mode)?;
    let epsilon = -s * s;
    Ok(SpectrumEntry {
        n,
        s,
        epsilon,
        energy: v0 * epsilon,
    })
}

/// `s + n - sqrt(s^2 + beta)`; vanishes at `s = (beta - n^2) / (2n)`.
pub fn quantization_residual(s: f64, n: u32, beta: f64) -> f64 {
    s + n as f64 - (s * s + beta).sqrt()
}

/// Number of levels `n >= 1` with `n^2 < beta`.
pub fn bound_state_count(beta: f64) -> u32 {
    if !(beta > 1.0) {
        return 0;
    }
    let mut n = beta.sqrt().floor() as u32;
    while (n as f64) * (n as f64) >= beta {
        n -= 1;
    }
    while ((n + 1) as f64) * ((n + 1) as f64) < beta {
        n += 1;
    }
    n
}

/// Exact paper-mode `s = (n^2 - 1) / (2n)`.
pub fn s_paper_exact(n: u32) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    let n = n as i64;
    Ok(BigRational::new((n * n - 1).into(), (2 * n).into()))
}

/// Exact paper-mode `E_n / V0 = -((n^2 - 1) / (2n))^2`.
pub fn energy_paper_exact(n: u32) -> Result<BigRational> {
    let s = s_paper_exact(n)?;
    Ok(-(&s * &s))
}

/// Exact generalized `s = (beta - n^2) / (2n)` for rational `beta`.
pub fn s_generalized_exact(n: u32, beta: &BigRational) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::ZeroLevel);
    }
    let nn = int(n as i64);
    Ok((beta - &nn * &nn) / (int(2) * nn))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::rat;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    #[test]
    fn s_values() {
        assert_eq!(s_param(1, Mode::Paper).unwrap(), 0.0);
        assert_eq!(s_param(2, Mode::Paper).unwrap(), 0.75);
        assert_eq!(s_param(1, Mode::Generalized { beta: 4.0 }).unwrap(), 1.5);
        assert_eq!(s_param(0, Mode::Paper), Err(Error::ZeroLevel));
        assert_eq!(
            s_param(2, Mode::Generalized { beta: 4.0 }),
            Err(Error::NoBoundState { n: 2, beta: 4.0 })
        );
        let msg = Error::ZeroLevel.to_string();
        assert!(msg.contains("(1-y)^-1"), "{msg}");
    }

    #[test]
    fn energies() {
        let c = Coupling::with_beta(2.0, 1.0, 1.0).unwrap();
        assert_abs_diff_eq!(c.beta(), 1.0, epsilon = 1e-15);
        assert_eq!(energy(1, &c, Mode::Paper).unwrap(), 0.0);
        assert_abs_diff_eq!(
            energy(2, &c, Mode::Paper).unwrap(),
            -2.0 * 9.0 / 16.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            energy(3, &c, Mode::Paper).unwrap(),
            -2.0 * 16.0 / 9.0,
            epsilon = 1e-14
        );
        let e: Vec<f64> = (1..=3)
            .map(|n| energy(n, &c, Mode::Paper).unwrap())
            .collect();
        assert_ne!(e[1] - e[0], e[2] - e[1]);
        assert_eq!(energy_paper_exact(2).unwrap(), rat(-9, 16));
        assert_eq!(energy_paper_exact(4).unwrap(), rat(-225, 64));
        assert!(Coupling::new(-1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn residual_examples() {
        assert_eq!(quantization_residual(1.5, 1, 4.0), 0.0);
        assert_eq!(quantization_residual(0.0, 1, 1.0), 0.0);
        assert_abs_diff_eq!(quantization_residual(0.75, 2, 1.0), 1.5, epsilon = 1e-15);
    }

    #[test]
    fn counts() {
        assert_eq!(bound_state_count(1.0), 0);
        assert_eq!(bound_state_count(4.0), 1);
        assert_eq!(bound_state_count(10.0), 3);
        assert_eq!(bound_state_count(9.0), 2);
        assert_eq!(bound_state_count(0.3), 0);
        assert_eq!(bound_state_count(1.0001), 1);
    }

    #[test]
    fn paper_branch_identity() {
        for n in 1..=20u32 {
            let s = s_paper_exact(n).unwrap();
            let nn = int(n as i64);
            let rhs = (&nn * &nn + int(1)) / (int(2) * &nn);
            assert_eq!(&s * &s + int(1), &rhs * &rhs);
            // sqrt(s^2 + 1) = n - s
            assert_eq!(&nn - &s, rhs);
        }
    }

    #[test]
    fn paper_energies_grow() {
        let e: Vec<f64> = (1..=20)
            .map(|n| s_param(n, Mode::Paper).unwrap().powi(2))
            .collect();
        assert!(e.windows(2).all(|w| w[1] > w[0]));
    }

    proptest! {
        #[test]
        fn generalized_quantization(beta in 1.01f64..200.0) {
            for n in 1..=bound_state_count(beta) {
                let s = s_param(n, Mode::Generalized { beta }).unwrap();
                prop_assert!(s > 0.0);
                let r = quantization_residual(s, n, beta);
                prop_assert!(r.abs() < 1e-14 * (s + n as f64), "residual {r}");
            }
        }
    }
}
