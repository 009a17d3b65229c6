//! Find the bound levels by direct integration of the radial equation and
//! compare with the closed form.
//!
//!     cargo run --release --example shooting -- [beta]

use hulthen::oracle::{shoot_eigenvalues, ShootingConfig};
use hulthen::spectrum::bound_state_count;

fn main() -> hulthen::Result<()> {
    let beta: f64 = std::env::args()
        .nth(1)
        .map_or(9.0, |a| a.parse().expect("beta"));
    let levels = shoot_eigenvalues(beta, &ShootingConfig::default())?;
    println!(
        "beta={beta}: {} levels (closed form count {})",
        levels.len(),
        bound_state_count(beta)
    );
    for l in levels {
        let n = l.n as f64;
        let closed = -((beta - n * n) / (2.0 * n)).powi(2);
        println!(
            "  n={}  nodes={}  shooting {:.12}  closed {:.12}  rel {:.1e}",
            l.n,
            l.nodes,
            l.epsilon,
            closed,
            (l.epsilon / closed - 1.0).abs()
        );
    }
    Ok(())
}
