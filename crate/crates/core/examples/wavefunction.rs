//! Sample an eigenfunction and write it as CSV.
//!
//!     cargo run --example wavefunction -- [n] [s]

use hulthen::wavefunction::{eval_psi, eval_radial, make_state, sample, GridSpec};

fn main() -> hulthen::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u32 = args.next().map_or(2, |a| a.parse().expect("n"));
    let s: f64 = args.next().map_or(0.75, |a| a.parse().expect("s"));

    let state = make_state(s, n)?;
    eprintln!(
        "s={s} n={n} N_n={} poly={:?}",
        state.norm(),
        state.poly().coeffs()
    );
    eprintln!("psi(y=0.5) = {}", eval_psi(&state, 0.5)?);
    eprintln!("psi(r=1, a=2) = {}", eval_radial(&state, 1.0, 2.0)?);

    let grid = sample(&state, &GridSpec::Closed { points: 21 })?;
    print!("{}", grid.to_csv());
    Ok(())
}
