//! Commutators of the ladder operators: on a grid, from the eigen-factors,
//! and exactly in rational arithmetic.
//!
//!     cargo run --example su2_algebra

use hulthen::ladder::{commutator_eigenvalue, commutator_exact, su2_relations_check, NormTable};
use hulthen::symbolic::rat;
use hulthen::wavefunction::GridSpec;

fn main() -> hulthen::Result<()> {
    let s = 0.75;
    let grid = GridSpec::Interior { points: 200 }.points()?;
    let norms = NormTable::symbolic(s, 8)?;

    let report = su2_relations_check(s, 2..=6, &norms, 1e-10)?;
    for e in &report.entries {
        println!(
            "n={}  [L-,L+]-2L0 {:+.1e}  [L0,L+]-L+ {:+.1e}  [L0,L-]+L- {:+.1e}",
            e.n, e.commutator_residual, e.raise_residual, e.lower_residual
        );
    }
    println!("all pass: {}", report.pass());

    for n in 2..=6 {
        println!(
            "n={n}  grid {:.12}  exact {}",
            commutator_eigenvalue(s, n, &grid)?,
            commutator_exact(&rat(3, 4), n)?
        );
    }
    Ok(())
}
