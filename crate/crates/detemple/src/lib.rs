//! Desk-scale numerics for half-integer approximations to Euler's constant.
//!
//! The library evaluates the Laplace kernel `Q(t) = 1/t - 1/(2 sinh(t/2))`
//! and its derivatives, brackets the remainder `R_n - γ` of the sequence
//! `R_n = H_n - ln(n + 1/2)` with nine printed bound families, accelerates
//! convergence to `γ` with three corrected sequences, scans parametric
//! function families for complete monotonicity, and verifies the underlying
//! polynomial identities in exact rational arithmetic.
//!
//! Start with the runnable programs in `examples/`; the `detemple` binary
//! exposes the same checks as batch subcommands.

pub mod algebra;
pub mod cli;
pub mod cm;
pub mod error;
pub mod extprec;
pub mod kernel;
pub mod report;
pub mod sequences;
pub mod special;

pub use error::{Error, Result};
pub use extprec::ExtReal;
