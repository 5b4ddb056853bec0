//! The remainder function R(x) = psi(x + 1/2) - ln x: values, the theorem
//! functions built from it, and the monotone combination V.
//!
//! Run with: cargo run --release --example remainder_function

use detemple::cm::{self, Family};
use detemple::extprec::ExtReal;
use detemple::special;

fn main() -> detemple::Result<()> {
    println!("R(x) and its normalized forms:");
    println!("{:>8} {:>14} {:>16}", "x", "R(x)", "24 x^2 R(x) - 1");
    for &x in &[0.1, 0.5, 1.5, 5.0, 20.0, 100.0, 1e4] {
        let xe = ExtReal::from_f64(x);
        let r = special::r_ext(xe)?;
        let norm = ExtReal::from_i64(24) * xe.powi(2) * r - ExtReal::ONE;
        println!("{x:>8} {:>14.8e} {:>16.6e}", r.to_f64(), norm.to_f64());
    }

    println!("\ntheorem functions along the axis (all positive, decreasing):");
    println!(
        "{:>6} {:>13} {:>13} {:>13} {:>13}",
        "x", "F_{7/40}", "f_{-31/336}", "G_{a3}", "V"
    );
    for &x in &[1.0, 1.5, 2.5, 5.0, 10.0, 50.0] {
        let xe = ExtReal::from_f64(x);
        let f = cm::evaluate(Family::BigF, ExtReal::from_ratio(7, 40), xe)?;
        let sf = cm::evaluate(Family::SmallF, ExtReal::from_ratio(-31, 336), xe)?;
        let g = cm::evaluate(Family::G, ExtReal::from_ratio(11_165, 8_284), xe)?;
        let v = cm::evaluate(Family::V, ExtReal::ZERO, xe)?;
        println!(
            "{x:>6} {:>13.4e} {:>13.4e} {:>13.4e} {:>13.4e}",
            f.to_f64(),
            sf.to_f64(),
            g.to_f64(),
            v.to_f64()
        );
    }

    println!("\nratio f_{{-31/336}}/F_{{7/40}} runs from 155/294 to 11165/8284:");
    for &x in &[0.001, 0.1, 1.0, 10.0, 1000.0] {
        let r = cm::evaluate(Family::RatioFG, ExtReal::ZERO, ExtReal::from_f64(x))?;
        println!("  x = {x:>8}: {:.10}", r.to_f64());
    }
    println!(
        "  bounds: 155/294 = {:.10}, 11165/8284 = {:.10}",
        155.0 / 294.0,
        11_165.0 / 8_284.0
    );
    Ok(())
}
