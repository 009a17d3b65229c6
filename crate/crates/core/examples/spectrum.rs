//! Energy levels in both modes.
//!
//!     cargo run --example spectrum

use hulthen::spectrum::{bound_state_count, energy, energy_paper_exact, entry, Coupling, Mode};

fn main() -> hulthen::Result<()> {
    println!("paper mode (beta = 1):");
    for n in 1..=5 {
        let e = entry(n, Mode::Paper, 1.0)?;
        println!(
            "  n={n}  s={:<8.5}  E/V0={:<12.6}  exact {}",
            e.s,
            e.energy,
            energy_paper_exact(n)?
        );
    }

    // the levels are not evenly spaced
    let e: Vec<f64> = (1..=3)
        .map(|n| entry(n, Mode::Paper, 1.0).unwrap().energy)
        .collect();
    println!("  E2-E1 = {:.6}, E3-E2 = {:.6}", e[1] - e[0], e[2] - e[1]);

    let well = Coupling::new(2.0, 3.0, 1.0)?;
    let mode = well.generalized();
    println!(
        "\nV0=2, a=3, M=1: beta = {}, {} bound levels",
        well.beta(),
        bound_state_count(well.beta())
    );
    for n in 1..=bound_state_count(well.beta()) {
        println!("  n={n}  E={:.6}", energy(n, &well, mode)?);
    }
    Ok(())
}
