//! Trace the kernel Q(t) = 1/t - 1/(2 sinh(t/2)), its derivative ratio, and
//! the minimization that produces the constants c0 and a0.
//!
//! Run with: cargo run --release --example kernel_minimum

use detemple::kernel;

fn main() -> detemple::Result<()> {
    println!("Q(t) and Q'(t)/Q(t) along the axis:");
    println!("{:>8} {:>14} {:>14}", "t", "Q(t)", "Q'/Q");
    for t in [0.001, 0.1, 1.0, 5.0, 8.0, 10.0, 10.765, 12.0, 15.4, 20.0, 50.0] {
        println!("{t:>8} {:>14.6e} {:>14.8}", kernel::q(t)?, kernel::ratio(t)?);
    }

    let m = kernel::minimize_ratio(1e-12)?;
    println!("\ngolden-section bracket: [{:.6}, {:.6}]", m.bracket.0, m.bracket.1);
    println!("t0 = {:.13}", m.t0);
    println!("c0 = {:.13}", m.c0);
    println!("residual = {:.2e}", m.residual);
    println!("a0 = sqrt(c0^2 + 7/40) - c0 = {:.13}", kernel::a0()?);

    // Taylor coefficients behind the small-t evaluation
    let ser = kernel::q_taylor(11);
    println!("\nleading Maclaurin coefficients of Q:");
    for (k, c) in ser.coeffs.iter().enumerate() {
        println!("  c_{} = {}", 2 * k + 1, c);
    }

    // Laplace representation spot check
    println!("\nLaplace spot check at x = 2:");
    let i0 = kernel::laplace_q_deriv(2.0, 0)?;
    let r = detemple::special::r(2.0)?;
    println!("  integral of e^-2t Q dt = {i0:.15}");
    println!("  R(2)                   = {r:.15}");
    Ok(())
}
