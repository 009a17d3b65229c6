//! Normalization constants three ways: quadrature, exact rational function
//! of s, and the four tabulated closed forms.
//!
//!     cargo run --example normalization

use hulthen::symbolic::rat;
use hulthen::wavefunction::{
    matches_tabulated, normalize_quadrature, normalize_symbolic, tabulated_norm,
};

fn main() -> hulthen::Result<()> {
    for n in 1..=5 {
        let sym = normalize_symbolic(n)?;
        println!("n={n}: 1/N^2 = {}", sym.inverse_square);
        match matches_tabulated(n)? {
            Some(ok) => println!("      tabulated closed form identical: {ok}"),
            None => println!("      no tabulated closed form"),
        }
    }

    let s = 0.75;
    println!("\ns = {s}");
    for n in 1..=5 {
        let quad = normalize_quadrature(s, n)?;
        let exact = normalize_symbolic(n)?.norm_at(s);
        let tab = tabulated_norm(n).map(|t| t.norm_at(s));
        println!("  n={n}  quadrature {quad:.15e}  exact {exact:.15e}  table {tab:?}");
    }

    // exact rational value at s = 3/4
    let n2 = normalize_symbolic(1)?.norm_squared_at(&rat(3, 4))?;
    println!("\nN_1(3/4)^2 = {n2}");
    println!(
        "N_1(0) = {} (sqrt 3 = {})",
        normalize_quadrature(0.0, 1)?,
        3f64.sqrt()
    );
    Ok(())
}
