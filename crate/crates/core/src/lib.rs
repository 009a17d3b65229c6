//! Bound states of the Hulthén potential `V(r) = -V0 e^{-r/a} / (1 - e^{-r/a})`.
//!
//! The crate covers the closed-form spectrum, the terminating Gauss
//! hypergeometric eigenfunctions and their normalization (numerically and
//! as exact rational functions of the exponent `s`), the raising/lowering
//! operators acting on the fixed-`s` family, and a set of independent
//! numerical oracles (quadrature, finite differences, ODE residuals and a
//! shooting eigensolver) used to cross-check all of it.
//!
//! Working variables: `x = r/a`, `y = e^{-x}`, `epsilon = E/V0 = -s^2`.

// `!(x > 0.0)` is used on purpose so NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod hypergeom;
pub mod ladder;
pub mod oracle;
pub mod report;
pub mod spectrum;
pub mod symbolic;
pub mod wavefunction;

pub use error::{Error, Result};

/// Library-wide tolerance record.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Tolerances {
    /// Contiguous-relation residuals (relative round-off).
    pub identity: f64,
    /// Family derivative decomposition residual.
    pub decomposition: f64,
    /// Quadrature vs exact normalization, relative.
    pub normalization: f64,
    /// Pointwise ladder action residual, relative.
    pub ladder: f64,
    /// Derivative reconstruction residual, relative.
    pub reconstruction: f64,
    /// Commutator eigenvalue from composed grid application.
    pub commutator_grid: f64,
    /// Scalar SU(2) relations.
    pub su2_scalar: f64,
    /// Closed-form ODE residual, relative to max |psi|.
    pub ode: f64,
    /// Lower bound the paper-mode ODE residual must exceed.
    pub ode_expected_failure: f64,
    /// Shooting eigenvalue vs closed form, relative.
    pub shooting: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            identity: 1e-12,
            decomposition: 1e-11,
            normalization: 1e-10,
            ladder: 1e-9,
            reconstruction: 1e-10,
            commutator_grid: 1e-8,
            su2_scalar: 1e-10,
            ode: 1e-10,
            ode_expected_failure: 0.1,
            shooting: 1e-6,
        }
    }
}
