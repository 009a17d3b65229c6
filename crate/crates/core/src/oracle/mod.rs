//! Independent numerical machinery used to check the closed forms without
//! reusing their algebra.

pub mod fd;
pub mod ode;
pub mod quadrature;
pub mod shooting;

pub use fd::{fd_derivative, DerivativeOrder};
pub use ode::ode_residual;
pub use quadrature::{quadrature, QuadratureResult};
pub use shooting::{shoot_eigenvalues, ShootingConfig, ShotLevel};
