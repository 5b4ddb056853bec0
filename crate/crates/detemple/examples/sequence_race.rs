//! Convergence race: the classical sequence, the half-shift sequence, and
//! the three accelerated corrections, with Richardson estimates of the
//! n^-8 and n^-10 rate constants.
//!
//! Run with: cargo run --release --example sequence_race

use detemple::algebra;
use detemple::sequences::{self, AccelKind};
use detemple::special;

fn main() -> detemple::Result<()> {
    let g = special::euler_gamma()?.value;
    println!("signed errors x_n - gamma:");
    println!(
        "{:>5} {:>11} {:>11} {:>12} {:>12} {:>12}",
        "n", "D_n", "R_n", "w_n", "z_n", "y_n"
    );
    for n in [1u64, 2, 5, 10, 20, 50, 100] {
        let d = (sequences::classical_d_ext(n)? - g).to_f64();
        let r = (sequences::detemple_r_ext(n)? - g).to_f64();
        let w = (sequences::accel(AccelKind::W, n)? - g).to_f64();
        let z = (sequences::accel(AccelKind::Z, n)? - g).to_f64();
        let y = (sequences::accel(AccelKind::Y, n)? - g).to_f64();
        println!("{n:>5} {d:>11.2e} {r:>11.2e} {w:>12.2e} {z:>12.2e} {y:>12.2e}");
    }
    println!("\ninterleaving w_n < z_n < gamma < y_n holds at every row above.");

    println!("\nRichardson-extrapolated rate constants:");
    for (kind, ns) in [
        (AccelKind::W, vec![20u64, 40, 80, 160]),
        (AccelKind::Y, vec![10, 20, 40, 80]),
        (AccelKind::Z, vec![20, 40, 80, 160]),
    ] {
        let est = sequences::estimate_limit(kind, kind.limit_power(), &ns)?;
        println!(
            "  lim n^{} ({}_n - gamma) = {:<24} target {} (rel err {:.1e})",
            est.p,
            kind.label(),
            est.estimate.to_decimal(15),
            algebra::rat_to_decimal(&est.target, 15),
            est.rel_error
        );
    }
    Ok(())
}
