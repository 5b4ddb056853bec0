//! Margins of all nine bound families bracketing R_n - gamma, plus the two
//! printed tightness comparisons.
//!
//! Run with: cargo run --release --example bound_gallery

use detemple::sequences::{self, FamilyName, ALL_FAMILIES};
use detemple::special;

fn main() -> detemple::Result<()> {
    let g = special::euler_gamma()?.value;
    println!("bracket endpoints at n = 1 (R_1 - gamma = {:.12}):", {
        let d = sequences::detemple_r_ext(1)? - g;
        d.to_f64()
    });
    println!("{:>10} {:>16} {:>16}", "family", "lower(1)", "upper(1)");
    for name in ALL_FAMILIES {
        let f = sequences::bound_family(name);
        println!(
            "{:>10} {:>16.12} {:>16.12}",
            name.label(),
            f.lower(1).to_f64(),
            f.upper(1).to_f64()
        );
    }

    println!("\nfull scans to n = 10000:");
    let table = sequences::rn_delta_table(10_000)?;
    for name in ALL_FAMILIES {
        let rep = sequences::check_brackets_with(&table, name)?;
        let status = if rep.pass() { "ok " } else { "FAIL" };
        println!(
            "  {status} {:>10}: min lower {:.2e} (n={}), min upper {:.2e} (n={})",
            name.label(),
            rep.min_lower_margin.1,
            rep.min_lower_margin.0,
            rep.min_upper_margin.1,
            rep.min_upper_margin.0,
        );
    }

    let (ok1, _) = sequences::compare_uppers(FamilyName::D2, FamilyName::De2, 1000);
    let (ok2, _) = sequences::compare_uppers(FamilyName::D4, FamilyName::D2, 1000);
    println!("\nd2 upper tighter than de2 upper for n <= 1000: {ok1}");
    println!("d4 upper tighter than d2 upper for n <= 1000:  {ok2}");
    Ok(())
}
