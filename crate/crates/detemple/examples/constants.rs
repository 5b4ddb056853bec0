//! Recompute every printed constant and compare with its published
//! approximation.
//!
//! Run with: cargo run --release --example constants

use detemple::extprec::ExtReal;
use detemple::{cm, kernel, special};

fn main() -> detemple::Result<()> {
    let g = special::euler_gamma()?;
    println!("gamma  = {}", g.value.to_decimal(32));
    println!("digits = {} ({:?})\n", g.digits, g.provenance);

    let m = kernel::ratio_minimum()?;
    println!("kernel ratio minimum:");
    println!("  t0 = {:.13}   (published approximation: 15.40151)", m.t0);
    println!("  c0 = {:.13}  (published approximation: -0.061875)", m.c0);
    println!("  residual |d/dt (Q'/Q)| = {:.2e}", m.residual);
    println!(
        "  note: the ratio at 15.40151 is {:.9}, matching the published -0.061875,",
        kernel::ratio(15.40151)?
    );
    println!("  but it is not the minimum; Q'/Q dips lower near t0 above.\n");

    let a0 = kernel::a0()?;
    println!("a0 = sqrt(c0^2 + 7/40) - c0 = {a0:.13} (published: 0.48476)\n");

    let l = cm::lambda_constants();
    for (name, v, approx) in [
        ("lambda1", l.lambda1, "0.007979"),
        ("lambda2", l.lambda2, "0.0090636"),
        ("lambda3", l.lambda3, "0.0016903"),
        ("lambda4", l.lambda4, "-0.000032387"),
    ] {
        println!("{name} = {:<34} (published: {approx})", v.to_decimal(30));
    }

    let ln3 = ExtReal::from_i64(3).ln()?;
    let ln2 = ExtReal::from_i64(2).ln()?;
    let base = ExtReal::ONE - ln3 + ln2 - g.value;
    let villarino = base.recip()? - ExtReal::from_i64(54);
    let chen = (ExtReal::from_i64(6) * base).sqrt()?.ldexp(1).recip()? - ExtReal::ONE;
    println!("villarino upper constant = {} (published: 3.7393)", villarino.to_decimal(30));
    println!("chen lambda              = {} (published: 0.55107)", chen.to_decimal(30));
    Ok(())
}
