//! Raise and lower eigenfunctions of the fixed-s family and compare with
//! the eigen-factors.
//!
//!     cargo run --example ladder

use hulthen::ladder::{
    apply_lower, apply_raise, ladder_coeffs, lower_residual, raise_residual,
    reconstruction_residual, NormTable, RaiseForm,
};
use hulthen::wavefunction::GridSpec;

fn main() -> hulthen::Result<()> {
    let s = 0.75;
    let grid = GridSpec::Interior { points: 200 }.points()?;
    let norms = NormTable::quadrature(s, 7)?;

    for n in 1..=5 {
        let c = ladder_coeffs(s, n, &norms)?;
        println!(
            "n={n}  l+={:.12}  l-={:?}  l0={}",
            c.l_plus, c.l_minus, c.l_zero
        );
        println!(
            "      |L+ psi - l+ psi_(n+1)| = {:.2e}   reconstruction {:.2e}",
            raise_residual(n, &norms, &grid, RaiseForm::Consistent)?,
            reconstruction_residual(n, &norms, &grid)?
        );
        if n > 1 {
            println!(
                "      |L- psi - l- psi_(n-1)| = {:.2e}",
                lower_residual(n, &norms, &grid)?
            );
        }
    }

    // with the sign of the last term flipped it misses psi_3
    println!(
        "\nflipped-sign raise, n=2: residual {:.3}",
        raise_residual(2, &norms, &grid, RaiseForm::FlippedSign)?
    );

    let psi1 = norms.state(1)?;
    let up = apply_raise(&psi1, &grid)?;
    let down = apply_lower(&psi1, &grid)?;
    println!(
        "L+ psi_1 peak {:.6}, L- psi_1 peak {:.1e}",
        up.max_abs(),
        down.max_abs()
    );
    Ok(())
}
