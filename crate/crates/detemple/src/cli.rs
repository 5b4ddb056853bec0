//! Batch command-line front end: every verification and computation as a
//! subcommand with table, CSV, or JSON output.
//!
//! Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

use crate::algebra;
use crate::cm::{self, Family, IntegrandKind, ThresholdSide};
use crate::error::Result;
use crate::extprec::ExtReal;
use crate::kernel;
use crate::report::{CheckRow, OutputFormat, Report, Status};
use crate::sequences::{self, AccelKind, FamilyName};
use crate::special;
use clap::{Parser, Subcommand, ValueEnum};

const SIG_DIGITS: usize = 30;

#[derive(Parser, Debug)]
#[command(
    name = "detemple",
    about = "Verification toolkit for half-integer approximations to Euler's constant",
    version
)]
struct Cli {
    /// Output format for all subcommands.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recompute the printed constants and compare against the published
    /// approximations.
    Constants,
    /// Tabulate a sequence and its distance to the Euler-Mascheroni constant.
    Seq {
        /// Sequence kind: D, R, w, y, or z.
        #[arg(long, value_enum, ignore_case = true)]
        kind: SeqKind,
        /// Largest index to print.
        #[arg(long = "n-max")]
        n_max: u64,
    },
    /// Check that a bound family brackets R_n - gamma.
    Bounds {
        /// Family name: de1, de2, villarino, chen, mortici, d1, d2, d3, d4.
        #[arg(long)]
        family: String,
        /// Largest index to check.
        #[arg(long = "n-max")]
        n_max: u64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Scan grid size for the sign-pattern suites.
        #[arg(long = "grid-points")]
        grid_points: Option<usize>,
        /// Highest derivative order in the sign-pattern suites.
        #[arg(long = "k-max")]
        k_max: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqKind {
    D,
    R,
    W,
    Y,
    Z,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Lemmas,
    Identities,
    Cm,
    Thresholds,
    Limits,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run_from_env() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    run(args)
}

/// Parse and execute; prints the rendered report to stdout.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap prints help/version on stdout with success, usage errors
            // on stderr with code 2
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            print!("{}", report.render(cli.format.into()));
            if report.all_pass() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Constants => cmd_constants(),
        Command::Seq { kind, n_max } => cmd_seq(*kind, *n_max),
        Command::Bounds { family, n_max } => cmd_bounds(family, *n_max),
        Command::Verify {
            suite,
            grid_points,
            k_max,
        } => cmd_verify(*suite, grid_points.unwrap_or(500), k_max.unwrap_or(6)),
    }
}

fn ext_str(v: ExtReal) -> String {
    v.to_decimal(SIG_DIGITS)
}

fn f64_str(v: f64) -> String {
    ExtReal::from_f64(v).to_decimal(SIG_DIGITS)
}

fn sci(v: f64) -> String {
    format!("{v:.3e}")
}

// ---------------------------------------------------------------------------

fn cmd_constants() -> Result<Report> {
    let m = kernel::ratio_minimum()?;
    let a0 = kernel::a0()?;
    let l = cm::lambda_constants();
    let g = special::euler_gamma()?;
    let ln3 = ExtReal::from_i64(3).ln()?;
    let ln2 = ExtReal::from_i64(2).ln()?;
    let base = ExtReal::ONE - ln3 + ln2 - g.value;
    let villarino = base.recip()? - ExtReal::from_i64(54);
    let chen = (ExtReal::from_i64(6) * base).sqrt()?.ldexp(1).recip()? - ExtReal::ONE;

    // (name, closed form, computed, published approximation, tolerance)
    let entries: Vec<(&str, &str, ExtReal, &str, f64)> = vec![
        ("t0", "argmin of Q'(t)/Q(t) on (0, inf)", ExtReal::from_f64(m.t0), "15.40151", 1e-4),
        ("c0", "min of Q'(t)/Q(t)", ExtReal::from_f64(m.c0), "-0.061875", 5e-6),
        ("a0", "sqrt(c0^2 + 7/40) - c0", ExtReal::from_f64(a0), "0.48476", 5e-5),
        ("villarino_upper", "1/(1 - ln3 + ln2 - g) - 54", villarino, "3.7393", 5e-4),
        ("chen_lambda", "1/(2 sqrt(6(1 - g - ln3 + ln2))) - 1", chen, "0.55107", 5e-5),
        ("lambda1", cm::LambdaConstants::FORMS[0], l.lambda1, "0.007979", 5e-6),
        ("lambda2", cm::LambdaConstants::FORMS[1], l.lambda2, "0.0090636", 5e-7),
        ("lambda3", cm::LambdaConstants::FORMS[2], l.lambda3, "0.0016903", 5e-7),
        ("lambda4", cm::LambdaConstants::FORMS[3], l.lambda4, "-0.000032387", 5e-9),
        ("gamma", "limit of H_n - ln n", g.value, "0.577215664", 1e-9),
    ];

    let mut columns_rows = Vec::new();
    for (name, form, computed, published, tol) in entries {
        let pub_val: ExtReal = published.parse()?;
        let diff = (computed - pub_val).abs().to_f64();
        let status = if diff <= tol { Status::Pass } else { Status::Fail };
        columns_rows.push(vec![
            name.to_string(),
            form.to_string(),
            ext_str(computed),
            published.to_string(),
            sci(diff),
            status.label().to_string(),
        ]);
    }
    Ok(Report {
        command: "constants".into(),
        config: "detemple constants".into(),
        columns: vec![
            "constant",
            "closed_form",
            "computed_value",
            "paper_value",
            "abs_diff",
            "status",
        ],
        rows: columns_rows,
    })
}

// ---------------------------------------------------------------------------

fn cmd_seq(kind: SeqKind, n_max: u64) -> Result<Report> {
    let limit = match kind {
        SeqKind::D | SeqKind::R => 1_000_000,
        _ => 300,
    };
    if n_max == 0 || n_max > limit {
        return Err(crate::Error::range(
            "seq",
            format!("n-max {n_max} outside 1..={limit} for kind {kind:?}"),
        ));
    }
    let g = special::euler_gamma()?.value;
    let hs = special::harmonic_prefix_ext(n_max);
    let mut rows = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let h = hs[n as usize - 1];
        let x = ExtReal::from_i64(n as i64).add_f64(0.5);
        let value = match kind {
            SeqKind::D => h - ExtReal::from_i64(n as i64).ln()?,
            SeqKind::R => h - x.ln()?,
            SeqKind::W => h - x.ln()? - sequences::accel_correction(AccelKind::W, x),
            SeqKind::Y => h - x.ln()? - sequences::accel_correction(AccelKind::Y, x),
            SeqKind::Z => h - x.ln()? - sequences::accel_correction(AccelKind::Z, x),
        };
        rows.push(vec![n.to_string(), ext_str(value), ext_str(value - g)]);
    }
    let kind_name = format!("{kind:?}");
    Ok(Report {
        command: "seq".into(),
        config: format!("detemple seq --kind {kind_name} --n-max {n_max}"),
        columns: vec!["n", "value", "value_minus_gamma"],
        rows,
    })
}

// ---------------------------------------------------------------------------

fn cmd_bounds(family: &str, n_max: u64) -> Result<Report> {
    let name: FamilyName = family.parse()?;
    let rep = sequences::check_brackets(name, n_max)?;
    let mut rows = Vec::new();
    let status = if rep.pass() { Status::Pass } else { Status::Fail };
    let side_str = |m: (u64, f64)| {
        if m.0 == 0 {
            "none (attained side only)".to_string()
        } else {
            format!("{} at n={}", sci(m.1), m.0)
        }
    };
    let floor_note = if rep.below_floor > 0 {
        format!(
            "; {} points under the {:.0e} noise floor left unresolved",
            rep.below_floor,
            sequences::MARGIN_NOISE_FLOOR
        )
    } else {
        String::new()
    };
    rows.push(CheckRow::new(
        format!("{}_bracket", name.label()),
        status,
        sci(rep.min_lower_margin.1.min(rep.min_upper_margin.1)),
        "strict bracket of R_n - gamma",
        format!(
            "min lower margin {}, min upper margin {}{}",
            side_str(rep.min_lower_margin),
            side_str(rep.min_upper_margin),
            floor_note
        ),
    ));
    if let Some(gap) = rep.attained_equality_gap {
        rows.push(CheckRow::new(
            format!("{}_best_constant_attained_n1", name.label()),
            if gap <= 1e-27 { Status::Pass } else { Status::Fail },
            sci(gap),
            "equality at n = 1 (best constant)",
            format!("|margin| = {}", sci(gap)),
        ));
    }
    for v in rep.violations.iter().take(5) {
        rows.push(CheckRow::new(
            format!("{}_violation_n{}", name.label(), v.n),
            Status::Fail,
            sci(-v.magnitude),
            "",
            format!("{:?} side exceeded by {}", v.side, sci(v.magnitude)),
        ));
    }
    // comparative rows mirroring the printed remarks
    if name == FamilyName::D2 {
        let (ok, at) = sequences::compare_uppers(FamilyName::D2, FamilyName::De2, n_max.min(1000));
        rows.push(CheckRow::new(
            "d2_upper_tighter_than_de2_upper",
            if ok { Status::Pass } else { Status::Fail },
            String::new(),
            "holds for all n",
            at.map_or("holds".into(), |n| format!("fails at n={n}")),
        ));
    }
    if name == FamilyName::D4 {
        let (ok, at) = sequences::compare_uppers(FamilyName::D4, FamilyName::D2, n_max.min(1000));
        rows.push(CheckRow::new(
            "d4_upper_tighter_than_d2_upper",
            if ok { Status::Pass } else { Status::Fail },
            String::new(),
            "holds for all n",
            at.map_or("holds".into(), |n| format!("fails at n={n}")),
        ));
    }
    Ok(Report::from_checks(
        "bounds",
        &format!("detemple bounds --family {} --n-max {n_max}", name.label()),
        &rows,
    ))
}

// ---------------------------------------------------------------------------

fn cmd_verify(suite: Suite, grid_points: usize, k_max: usize) -> Result<Report> {
    let rows = match suite {
        Suite::Lemmas => verify_lemmas()?,
        Suite::Identities => verify_identities(),
        Suite::Cm => verify_cm(grid_points, k_max)?,
        Suite::Thresholds => verify_thresholds()?,
        Suite::Limits => verify_limits()?,
    };
    let suite_name = format!("{suite:?}").to_lowercase();
    Ok(Report::from_checks(
        "verify",
        &format!(
            "detemple verify --suite {suite_name} --grid-points {grid_points} --k-max {k_max}"
        ),
        &rows,
    ))
}

fn verify_lemmas() -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    let grid = cm::log_grid(1e-3, 300.0, 2000);
    for kind in [IntegrandKind::Q1, IntegrandKind::Q2, IntegrandKind::Q3] {
        let rep = cm::integrand_check(kind, None, &grid)?;
        let sign = if kind == IntegrandKind::Q2 { "< 0" } else { "> 0" };
        rows.push(CheckRow::new(
            format!("integrand_{}", kind.label()),
            if rep.pass() && rep.min_abs_margin_clear > 1e-12 {
                Status::Pass
            } else {
                Status::Fail
            },
            sci(rep.min_abs_margin_clear),
            format!("{sign} on (0, 300]"),
            format!("min |margin| {} for t >= 0.05", sci(rep.min_abs_margin_clear)),
        ));
    }
    let hgrid = cm::log_grid(0.01, 50.0, 2000);
    let hrep = cm::hyperbolic_check(&hgrid)?;
    rows.push(CheckRow::new(
        "hyperbolic_ratio_bounds",
        if hrep.pass() { Status::Pass } else { Status::Fail },
        sci(hrep.min_margins[0].min(hrep.min_margins[1]).min(hrep.min_margins[2])),
        "three two-sided sinh t/t bounds on (0, 50]",
        format!(
            "min margins {} / {} / {}",
            sci(hrep.min_margins[0]),
            sci(hrep.min_margins[1]),
            sci(hrep.min_margins[2])
        ),
    ));
    let a0 = kernel::a0()?;
    let dgrid = cm::log_grid(1e-3, 200.0, 1000);
    let drep = cm::integrand_check(IntegrandKind::Delta, Some(a0), &dgrid)?;
    rows.push(CheckRow::new(
        "delta_a0_nonnegative",
        if drep.pass() { Status::Pass } else { Status::Fail },
        sci(drep.min_abs_margin),
        ">= 0 for a = a0",
        format!("min {}", sci(drep.min_abs_margin)),
    ));
    let m = kernel::ratio_minimum()?;
    let mut min_seen = f64::INFINITY;
    for i in 1..=20000 {
        min_seen = min_seen.min(kernel::ratio(0.01 * i as f64)?);
    }
    rows.push(CheckRow::new(
        "ratio_minimum_grid",
        if min_seen >= m.c0 - 1e-10 { Status::Pass } else { Status::Fail },
        sci(min_seen - m.c0),
        "grid ratio >= c0 - 1e-10",
        format!("grid min {} vs c0 {}", f64_str(min_seen), f64_str(m.c0)),
    ));
    Ok(rows)
}

fn verify_identities() -> Vec<CheckRow> {
    algebra::verify_all()
        .into_iter()
        .map(|o| {
            CheckRow::new(
                o.name,
                if o.ok { Status::Pass } else { Status::Fail },
                "0".to_string(),
                "exact identity",
                o.detail,
            )
        })
        .collect()
}

fn verify_cm(grid_points: usize, k_max: usize) -> Result<Vec<CheckRow>> {
    let grid = cm::standard_grid(grid_points);
    let a0 = kernel::a0()?;
    let mut rows = Vec::new();
    for (family, a, label) in [
        (Family::H, a0, "h_a0".to_string()),
        (Family::BigF, 7.0 / 40.0, "F_7/40".to_string()),
        (Family::SmallF, -31.0 / 336.0, "f_-31/336".to_string()),
        (Family::G, 11_165.0 / 8_284.0, "G_11165/8284".to_string()),
    ] {
        let rep = cm::sign_pattern(family, a, &grid, k_max)?;
        rows.push(CheckRow::new(
            format!("sign_pattern_{label}"),
            if rep.pass() { Status::Pass } else { Status::Fail },
            sci(rep.min_margin),
            format!("(-1)^k f^(k) >= -1e-9, k <= {k_max}"),
            format!(
                "{} violations, {} indeterminate, min margin {}",
                rep.violations.len(),
                rep.indeterminate,
                sci(rep.min_margin)
            ),
        ));
    }
    let vgrid: Vec<f64> = (1..=1000).map(|k| 0.1 * k as f64).collect();
    let vrep = cm::v_monotone_check(&vgrid)?;
    rows.push(CheckRow::new(
        "v_increasing",
        if vrep.monotone_violations.is_empty() { Status::Pass } else { Status::Fail },
        String::new(),
        "V increasing on (0, 100]",
        format!("V(0.1) = {}, V(100) = {}", sci(vrep.v_first), sci(vrep.v_last)),
    ));
    rows.push(CheckRow::new(
        "ratio_fg_bounds",
        if vrep.ratio_violations.is_empty() { Status::Pass } else { Status::Fail },
        String::new(),
        "155/294 <= f/F <= 11165/8284",
        format!("monotone on grid: {}", vrep.ratio_monotone),
    ));
    Ok(rows)
}

fn verify_thresholds() -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    let f_thr = cm::threshold_bisect(Family::BigF, ThresholdSide::MinA, (0.0, 1.0), 1e-4)?;
    rows.push(CheckRow::new(
        "threshold_F",
        if (f_thr - 7.0 / 40.0).abs() <= 1e-3 { Status::Pass } else { Status::Fail },
        sci(f_thr - 7.0 / 40.0),
        "printed 17/40; necessity computation gives 7/40 = 0.175",
        f64_str(f_thr),
    ));
    let sf_thr = cm::threshold_bisect(Family::SmallF, ThresholdSide::MaxA, (-1.0, 0.0), 1e-4)?;
    rows.push(CheckRow::new(
        "threshold_f",
        if (sf_thr + 31.0 / 336.0).abs() <= 1e-3 { Status::Pass } else { Status::Fail },
        sci(sf_thr + 31.0 / 336.0),
        "-31/336 = -0.0922619",
        f64_str(sf_thr),
    ));
    let g_thr = cm::threshold_bisect(Family::G, ThresholdSide::MinA, (0.0, 3.0), 1e-3)?;
    rows.push(CheckRow::new(
        "threshold_G",
        if (g_thr - 11_165.0 / 8_284.0).abs() <= 1e-2 { Status::Pass } else { Status::Fail },
        sci(g_thr - 11_165.0 / 8_284.0),
        "11165/8284 = 1.3477789",
        f64_str(g_thr),
    ));
    let h_thr = cm::threshold_bisect(Family::H, ThresholdSide::MinA, (0.0, 1.0), 1e-3)?;
    let a0 = kernel::a0()?;
    rows.push(CheckRow::new(
        "threshold_h_below_sufficiency",
        if h_thr <= a0 + 1e-6 { Status::Pass } else { Status::Fail },
        sci(a0 - h_thr),
        "empirical threshold <= a0 (only sufficiency is known)",
        format!("{} vs a0 {}", f64_str(h_thr), f64_str(a0)),
    ));
    Ok(rows)
}

fn verify_limits() -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    for (kind, ns, tol) in [
        (AccelKind::W, vec![20u64, 40, 80, 160], 0.01),
        (AccelKind::Y, vec![10, 20, 40, 80], 0.02),
        (AccelKind::Z, vec![20, 40, 80, 160], 0.01),
    ] {
        let est = sequences::estimate_limit(kind, kind.limit_power(), &ns)?;
        rows.push(CheckRow::new(
            format!("limit_n{}_{}", est.p, kind.label()),
            if est.rel_error < tol { Status::Pass } else { Status::Fail },
            sci(est.rel_error),
            algebra::rat_to_decimal(&est.target, 12),
            ext_str(est.estimate),
        ));
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_report_structure() {
        let rep = cmd_constants().unwrap();
        assert_eq!(rep.columns[0], "constant");
        assert_eq!(rep.rows.len(), 10);
        // the kernel-minimum rows record the published-value mismatch
        let by_name = |n: &str| {
            rep.rows
                .iter()
                .find(|r| r[0] == n)
                .unwrap_or_else(|| panic!("row {n}"))
        };
        assert_eq!(by_name("c0")[5], "fail");
        assert_eq!(by_name("t0")[5], "fail");
        assert_eq!(by_name("a0")[5], "fail");
        assert_eq!(by_name("villarino_upper")[5], "pass");
        assert_eq!(by_name("chen_lambda")[5], "pass");
        assert_eq!(by_name("lambda1")[5], "pass");
        assert_eq!(by_name("lambda2")[5], "pass");
        assert_eq!(by_name("lambda3")[5], "pass");
        assert_eq!(by_name("lambda4")[5], "pass");
        assert_eq!(by_name("gamma")[5], "pass");
    }

    #[test]
    fn seq_rows_and_ranges() {
        let rep = cmd_seq(SeqKind::R, 3).unwrap();
        assert_eq!(rep.rows.len(), 3);
        assert!(rep.rows[0][1].starts_with("0.59453489"));
        assert!(rep.rows[0][2].starts_with("0.01731922699"));
        assert!(cmd_seq(SeqKind::Y, 301).is_err());
        assert!(cmd_seq(SeqKind::D, 0).is_err());
        // y stays above gamma
        let rep = cmd_seq(SeqKind::Y, 5).unwrap();
        for row in &rep.rows {
            assert!(!row[2].starts_with('-'), "y delta must be positive");
        }
    }

    #[test]
    fn bounds_reports() {
        let rep = cmd_bounds("de1", 100).unwrap();
        assert!(rep.all_pass());
        let rep = cmd_bounds("d4", 100).unwrap();
        assert!(rep.all_pass());
        assert!(cmd_bounds("nope", 10).is_err());
    }

    #[test]
    fn identities_suite_all_pass() {
        let rows = verify_identities();
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.status == Status::Pass));
    }

    #[test]
    fn limits_suite_all_pass() {
        let rows = verify_limits().unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.status == Status::Pass));
    }
}
