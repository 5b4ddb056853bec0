//! The exact-arithmetic identity suite: series coefficients, the integer
//! recursion, and the five large polynomial factorizations, all verified
//! with arbitrary-precision rationals (no floating point involved).
//!
//! Run with: cargo run --release --example exact_identities

use detemple::algebra;

fn main() {
    for check in algebra::verify_all() {
        let mark = if check.ok { "ok " } else { "FAIL" };
        println!("{mark} {:<24} {}", check.name, check.detail);
    }

    println!("\nspot values:");
    println!("  u_3  = {}", algebra::u_closed(3));
    println!("  u_11 = {}", algebra::u_closed(11));
    println!("  U1(1) = {}", algebra::u1_printed().eval(&algebra::rat_int(1)));
    println!("  U2(0) = {}", algebra::u2_printed().eval(&algebra::rat_int(0)));

    println!("\nprinted comparison identities (exact):");
    println!(
        "  quartic upper vs half-shift second-order upper: {}",
        algebra::verify_d2_upper_improvement()
    );
    println!(
        "  factored-quartic upper vs quartic upper:        {}",
        algebra::verify_d4_upper_improvement()
    );
}
