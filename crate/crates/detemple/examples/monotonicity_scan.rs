//! Complete-monotonicity evidence: kernel-integrand signs, derivative
//! sign-pattern scans for the four parametric families, and empirical
//! parameter thresholds recovered by bisection.
//!
//! Run with: cargo run --release --example monotonicity_scan

use detemple::cm::{self, Family, IntegrandKind, ThresholdSide};
use detemple::kernel;

fn main() -> detemple::Result<()> {
    println!("kernel integrand signs on a 400-point log grid over (0, 300]:");
    let grid = cm::log_grid(1e-3, 300.0, 400);
    for kind in [IntegrandKind::Q1, IntegrandKind::Q2, IntegrandKind::Q3] {
        let rep = cm::integrand_check(kind, None, &grid)?;
        println!(
            "  {}: {} violations, min |margin| (t >= 0.05) = {:.2e}",
            kind.label(),
            rep.violations.len(),
            rep.min_abs_margin_clear
        );
    }

    let a0 = kernel::a0()?;
    println!("\nsign patterns, orders 0..6, grid 0.1..50:");
    let grid = cm::standard_grid(500);
    for (family, a, label) in [
        (Family::H, a0, "h at a0"),
        (Family::BigF, 7.0 / 40.0, "F at 7/40"),
        (Family::SmallF, -31.0 / 336.0, "f at -31/336"),
        (Family::G, 11_165.0 / 8_284.0, "G at 11165/8284"),
    ] {
        let rep = cm::sign_pattern(family, a, &grid, 6)?;
        println!(
            "  {label:<16}: {} violations, min margin {:+.2e}",
            rep.violations.len(),
            rep.min_margin
        );
    }

    // a parameter below the threshold must fail visibly
    let small: Vec<f64> = (1..=30).map(|k| 0.1 * k as f64).collect();
    let rep = cm::sign_pattern(Family::H, 0.10, &small, 4)?;
    println!(
        "  h at 0.10       : {} violations (expected), worst {:+.2e}",
        rep.violations.len(),
        rep.min_margin
    );

    println!("\nempirical thresholds by bisection (orders 0..6):");
    let f = cm::threshold_bisect(Family::BigF, ThresholdSide::MinA, (0.0, 1.0), 1e-4)?;
    println!("  F family: {f:.6}  (necessity constant 7/40 = 0.175)");
    let sf = cm::threshold_bisect(Family::SmallF, ThresholdSide::MaxA, (-1.0, 0.0), 1e-4)?;
    println!("  f family: {sf:.6}  (-31/336 = -0.092262)");
    let gt = cm::threshold_bisect(Family::G, ThresholdSide::MinA, (0.0, 3.0), 1e-3)?;
    println!("  G family: {gt:.6}  (11165/8284 = 1.347779)");
    let h = cm::threshold_bisect(Family::H, ThresholdSide::MinA, (0.0, 1.0), 1e-3)?;
    println!("  h family: {h:.6}  (<= a0 = {a0:.6}; only sufficiency is known)");
    Ok(())
}
