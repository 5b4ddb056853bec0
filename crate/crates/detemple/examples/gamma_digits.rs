//! Compute the Euler-Mascheroni constant three ways and count agreeing
//! digits: the accelerated z-sequence with exact power-law elimination, the
//! digamma route psi(1) = -gamma, and the stored reference digits.
//!
//! Run with: cargo run --release --example gamma_digits

use detemple::extprec::ExtReal;
use detemple::{sequences, special};

fn main() -> detemple::Result<()> {
    let g = special::euler_gamma()?;
    println!("z-sequence route : {}", g.value.to_decimal(32));

    let route2 = -special::digamma_ext(ExtReal::ONE)?;
    println!("digamma(1) route : {}", route2.to_decimal(32));

    println!("reference digits : {}", g.digits);

    let d12 = (g.value - route2).abs().to_f64();
    let reference: ExtReal = g.digits.parse()?;
    let d1r = (g.value - reference).abs().to_f64();
    println!("\n|route1 - route2|    = {d12:.2e}");
    println!("|route1 - reference| = {d1r:.2e}");

    // how fast the raw sequences close in, before extrapolation
    println!("\nraw sequence errors |x_n - gamma|:");
    println!("{:>6} {:>13} {:>13} {:>13} {:>13}", "n", "D_n", "R_n", "w_n", "y_n");
    for n in [1u64, 10, 100] {
        let d = (sequences::classical_d_ext(n)? - g.value).abs().to_f64();
        let r = (sequences::detemple_r_ext(n)? - g.value).abs().to_f64();
        let w = (sequences::accel(sequences::AccelKind::W, n)? - g.value)
            .abs()
            .to_f64();
        let y = (sequences::accel(sequences::AccelKind::Y, n)? - g.value)
            .abs()
            .to_f64();
        println!("{n:>6} {d:>13.2e} {r:>13.2e} {w:>13.2e} {y:>13.2e}");
    }
    Ok(())
}
