//! Terminating 2F1 and its contiguous relations.
//!
//!     cargo run --example contiguous

use hulthen::hypergeom::{
    ab_lower_residual, ab_lower_residual_wrong_coeff, ab_raise_residual,
    ab_raise_residual_wrong_sign, build_terminating, decomposition_residual,
    family_derivative_decomposition, shift_residual, HypParams,
};

fn main() -> hulthen::Result<()> {
    let f = build_terminating(4.5, 1, 2.5)?;
    println!("2F1(4.5, -1; 2.5; y) coefficients {:?}", f.coeffs());

    let p = HypParams::new(3.5, 2, 2.0)?;
    let y = 0.3;
    println!("a=3.5 b=-2 c=2 y=0.3");
    println!(
        "  derivative-shift relation  {:.1e}",
        shift_residual(&p, y)?
    );
    println!(
        "  a/b raising relation       {:.1e}",
        ab_raise_residual(&p, y)?
    );
    println!(
        "  a/b lowering relation      {:.1e}",
        ab_lower_residual(&p, y)?
    );
    println!(
        "  raising, +a F(a+1)        {:.1e}",
        ab_raise_residual_wrong_sign(&p, y)?
    );
    println!(
        "  lowering, (c-a) twice     {:.1e}",
        ab_lower_residual_wrong_coeff(&p, y)?
    );

    for n in 1..=4 {
        let (same, next) = family_derivative_decomposition(n, 0.75, y)?;
        println!(
            "n={n}: y F' = {same:.6} F_n + {next:.6} F_(n+1)  (residual {:.1e})",
            decomposition_residual(n, 0.75, y)?
        );
    }
    Ok(())
}
