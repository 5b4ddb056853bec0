//! Complete-monotonicity verification at desk scale: theorem-function
//! evaluation, high-order sign-pattern scans by central finite differences,
//! kernel-integrand positivity, the hyperbolic-ratio inequalities, threshold
//! recovery by bisection, and the closed-form endpoint constants.
//!
//! Scope note: the scaled sequence function H(x) = x^2 (psi(x+1) - ln(x+1/2))
//! is covered only through its shifted-square composition (the `H` family
//! here is (x+a)^2 R(x)); dedicated H evaluators are out of scope even
//! though H itself is known not to be a Bernstein function.

use crate::algebra::{self, rat, Rat};
use crate::error::{Error, Result};
use crate::extprec::ExtReal;
use crate::kernel::{self, T_SWITCH_HIGH};
use crate::sequences::{accel_correction, AccelKind};
use crate::special;
use rayon::prelude::*;
use std::sync::OnceLock;

/// Absolute sign tolerance of the finite-difference scan; margins inside
/// (-TOL_FD, TOL_FD) are indeterminate, not violations.
pub const TOL_FD: f64 = 1e-9;

/// Parametric function families under complete-monotonicity scrutiny.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// (x+a)^2 R(x)
    H,
    /// 24 (x^2 + a) R(x) - 1
    BigF,
    /// -24 (x^4 + a) R(x) + x^2 - 7/40
    SmallF,
    /// 24 (x^4 + a x^2 + (7/40)a - 31/336) R(x) - (x^2 - 7/40 + a)
    G,
    /// R(x) - (1/24)(x^2 + 2071/5880)/(x^2 (x^2 + 155/294)), no parameter
    V,
    /// f_{-31/336}(x) / F_{7/40}(x), no parameter
    RatioFG,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::H => "h",
            Family::BigF => "F",
            Family::SmallF => "f",
            Family::G => "G",
            Family::V => "V",
            Family::RatioFG => "ratioFG",
        }
    }
}

/// Evaluate a theorem function in double-word precision. The parameter is
/// taken in double-word form so exact rational thresholds stay exact.
pub fn evaluate(family: Family, a: ExtReal, x: ExtReal) -> Result<ExtReal> {
    if x.hi.is_nan() || x.hi <= 0.0 {
        return Err(Error::domain("evaluate", "x must be positive"));
    }
    let r = special::r_ext(x)?;
    let af = a;
    let c24 = ExtReal::from_i64(24);
    Ok(match family {
        Family::H => (x + af).powi(2) * r,
        Family::BigF => c24 * (x.powi(2) + af) * r - ExtReal::ONE,
        Family::SmallF => {
            -(c24 * (x.powi(4) + af) * r) + x.powi(2) - ExtReal::from_ratio(7, 40)
        }
        Family::G => {
            let poly = x.powi(4)
                + af * x.powi(2)
                + ExtReal::from_ratio(7, 40) * af
                - ExtReal::from_ratio(31, 336);
            c24 * poly * r - (x.powi(2) - ExtReal::from_ratio(7, 40) + af)
        }
        Family::V => r - accel_correction(AccelKind::Z, x),
        Family::RatioFG => {
            let num = evaluate(Family::SmallF, ExtReal::from_ratio(-31, 336), x)?;
            let den = evaluate(Family::BigF, ExtReal::from_ratio(7, 40), x)?;
            num.div(den)?
        }
    })
}

/// The four best-constant endpoints, in closed form.
#[derive(Debug, Clone)]
pub struct LambdaConstants {
    pub lambda1: ExtReal,
    pub lambda2: ExtReal,
    pub lambda3: ExtReal,
    pub lambda4: ExtReal,
}

impl LambdaConstants {
    pub const FORMS: [&'static str; 4] = [
        "286/5 - (291/5)(ln(3/2) + g)",
        "(835/7)(g + ln(3/2)) - 32819/280",
        "112672809/579880 - (11465761/57988)(ln(3/2) + g)",
        "866519/881820 - ln(3/2) - g",
    ];
}

pub fn lambda_constants() -> &'static LambdaConstants {
    static CACHE: OnceLock<LambdaConstants> = OnceLock::new();
    CACHE.get_or_init(|| {
        let g = special::gamma_ext();
        let ln32 = ExtReal::from_ratio(3, 2).ln().unwrap();
        let s = ln32 + g;
        LambdaConstants {
            lambda1: ExtReal::from_ratio(286, 5) - ExtReal::from_ratio(291, 5) * s,
            lambda2: ExtReal::from_ratio(835, 7) * s - ExtReal::from_ratio(32_819, 280),
            lambda3: ExtReal::from_ratio(112_672_809, 579_880)
                - ExtReal::from_ratio(11_465_761, 57_988) * s,
            lambda4: ExtReal::from_ratio(866_519, 881_820) - s,
        }
    })
}

// ---------------------------------------------------------------------------
// Sign-pattern scan

/// Result of a derivative sign-pattern scan.
#[derive(Debug, Clone)]
pub struct SignReport {
    pub family: Family,
    pub a: f64,
    pub k_max: usize,
    pub grid_len: usize,
    /// (x, order, signed value) where (-1)^k f^(k) < -TOL_FD.
    pub violations: Vec<(f64, usize, f64)>,
    /// Smallest signed margin (-1)^k f^(k) over the scan.
    pub min_margin: f64,
    /// Count of |value| <= TOL_FD points (honest near-zero handling).
    pub indeterminate: usize,
}

impl SignReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Equidistant scan grid 0.1, 0.2, ..., 50.0.
pub fn standard_grid(points: usize) -> Vec<f64> {
    (1..=points).map(|k| 0.1 * k as f64).collect()
}

/// Log-spaced grid over [lo, hi].
pub fn log_grid(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    let ratio = (hi / lo).ln();
    (0..points)
        .map(|i| lo * (ratio * i as f64 / (points - 1) as f64).exp())
        .collect()
}

/// Central finite differences of orders 0..=k_max at three step scales with
/// two Richardson levels; evaluation in double-word precision.
///
/// The base step is h = min(0.09 sqrt(x), x/10): an unscaled square-root
/// rule pushes high-order stencils out of the domain at small x, and larger
/// steps fail the refinement-agreement check near derivative zero crossings
/// of non-monotone parameters.
pub fn sign_pattern(family: Family, a: f64, grid: &[f64], k_max: usize) -> Result<SignReport> {
    scan_impl(family, a, grid, k_max, false)
}

/// Scan that stops at the first violation (used by the bisection predicate).
fn has_violation(family: Family, a: f64, grid: &[f64], k_max: usize) -> Result<bool> {
    Ok(!scan_impl(family, a, grid, k_max, true)?.violations.is_empty())
}

fn scan_impl(
    family: Family,
    a: f64,
    grid: &[f64],
    k_max: usize,
    early_exit: bool,
) -> Result<SignReport> {
    if k_max > 8 {
        return Err(Error::range("sign_pattern", "k_max must be <= 8"));
    }
    for &x in grid {
        if !(0.05 - 1e-12..=100.0 + 1e-9).contains(&x) {
            return Err(Error::range(
                "sign_pattern",
                format!("grid point {x} outside [0.05, 100]"),
            ));
        }
    }
    type ScanRow = (f64, Vec<(usize, f64, f64)>);
    let results: Result<Vec<ScanRow>> = if early_exit {
        // violations appear at the large-x end first; scan descending serially
        let mut out = Vec::new();
        let mut sorted: Vec<f64> = grid.to_vec();
        sorted.sort_by(|p, q| q.partial_cmp(p).unwrap());
        for x in sorted {
            let vals = derivatives_at(family, a, x, k_max)?;
            let has = vals
                .iter()
                .any(|&(_, v, u)| classify(v, u) == Decision::Violation);
            out.push((x, vals));
            if has {
                break;
            }
        }
        Ok(out)
    } else {
        grid.par_iter()
            .map(|&x| Ok((x, derivatives_at(family, a, x, k_max)?)))
            .collect()
    };
    let results = results?;

    let mut report = SignReport {
        family,
        a,
        k_max,
        grid_len: grid.len(),
        violations: Vec::new(),
        min_margin: f64::INFINITY,
        indeterminate: 0,
    };
    for (x, vals) in results {
        for (k, v, u) in vals {
            if v < report.min_margin {
                report.min_margin = v;
            }
            match classify(v, u) {
                Decision::Violation => report.violations.push((x, k, v)),
                Decision::Indeterminate => report.indeterminate += 1,
                Decision::Ok => {}
                Decision::Unresolvable => {
                    return Err(Error::StepSize {
                        x,
                        order: k,
                        rel: u / v.abs().max(TOL_FD),
                    });
                }
            }
        }
    }
    report
        .violations
        .sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap().then(p.1.cmp(&q.1)));
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Decision {
    Ok,
    Violation,
    Indeterminate,
    Unresolvable,
}

/// Three-way sign decision for a signed value with an error bar.
fn classify(v: f64, u: f64) -> Decision {
    if u <= TOL_FD || u <= 0.10 * v.abs() {
        // converged estimate: decide directly
        if v < -TOL_FD {
            Decision::Violation
        } else if v.abs() <= TOL_FD {
            Decision::Indeterminate
        } else {
            Decision::Ok
        }
    } else if v + u < -TOL_FD {
        // unconverged but negative beyond the error bar
        Decision::Violation
    } else if v - u > -TOL_FD {
        // unconverged but cannot be a violation; near a derivative zero
        // crossing the relative refinement test is vacuous
        Decision::Indeterminate
    } else {
        Decision::Unresolvable
    }
}

/// Signed values (-1)^k f^(k)(x) with refinement-disagreement error bars,
/// for k = 0..=k_max.
fn derivatives_at(
    family: Family,
    a: f64,
    x: f64,
    k_max: usize,
) -> Result<Vec<(usize, f64, f64)>> {
    let h_base = (0.09 * x.sqrt()).min(x / 10.0);
    // binomial stencil weights up to k_max
    let mut binom = vec![vec![0f64; k_max + 1]; k_max + 1];
    for (k, row) in binom.iter_mut().enumerate() {
        row[0] = 1.0;
        for i in 1..=k {
            row[i] = row[i - 1] * (k - i + 1) as f64 / i as f64;
        }
    }
    // f at offsets m * (h/2), m = -k_max..=k_max, for three scales
    let mut d = vec![[0f64; 3]; k_max + 1];
    for (j, dj) in [1.0f64, 2.0, 4.0].into_iter().enumerate() {
        let h = h_base / dj;
        let mut f_cache = vec![ExtReal::ZERO; 2 * k_max + 1];
        let ae = ExtReal::from_f64(a);
        for (idx, slot) in f_cache.iter_mut().enumerate() {
            let off = (idx as f64 - k_max as f64) * 0.5 * h;
            *slot = evaluate(family, ae, ExtReal::from_f64(x + off))?;
        }
        for k in 0..=k_max {
            if k == 0 {
                d[0][j] = f_cache[k_max].to_f64();
                continue;
            }
            // D = h^-k sum_i (-1)^i C(k,i) f(x + (k/2 - i) h)
            let mut acc = ExtReal::ZERO;
            for (i, &bc) in binom[k].iter().enumerate().take(k + 1) {
                // offset (k/2 - i) h = (k - 2i) * h/2 -> index k_max + (k - 2i)
                let idx = (k_max as i64 + k as i64 - 2 * i as i64) as usize;
                let w = if i % 2 == 0 { bc } else { -bc };
                acc = acc + f_cache[idx].mul_f64(w);
            }
            d[k][j] = acc.to_f64() / h.powi(k as i32);
        }
    }
    let mut out = Vec::with_capacity(k_max + 1);
    for (k, dk) in d.iter().enumerate() {
        // two Richardson levels over the h, h/2, h/4 estimates; the
        // disagreement of the fourth-order pair is kept as the error bar
        let r1 = (4.0 * dk[1] - dk[0]) / 3.0;
        let r1b = (4.0 * dk[2] - dk[1]) / 3.0;
        let r2 = (16.0 * r1b - r1) / 15.0;
        let signed = if k % 2 == 0 { r2 } else { -r2 };
        out.push((k, signed, (r1b - r1).abs()));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Kernel-integrand positivity

/// The three kernel sign-certificate combinations plus the quadratic-in-a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegrandKind {
    /// Q'' + (7/40) Q > 0
    Q1,
    /// Q'''' - (31/336) Q < 0
    Q2,
    /// Q'''' + (11165/8284) Q'' + (199849/1391712) Q > 0
    Q3,
    /// Q''/Q + 2a Q'/Q + a^2 >= 0 (requires the parameter a)
    Delta,
}

impl IntegrandKind {
    pub fn label(self) -> &'static str {
        match self {
            IntegrandKind::Q1 => "q1",
            IntegrandKind::Q2 => "q2",
            IntegrandKind::Q3 => "q3",
            IntegrandKind::Delta => "delta",
        }
    }

    fn expected_positive(self) -> bool {
        !matches!(self, IntegrandKind::Q2)
    }

    /// alpha Q'''' + beta Q'' + gamma Q weights.
    fn weights(self) -> (Rat, Rat, Rat) {
        match self {
            IntegrandKind::Q1 => (rat(0, 1), rat(1, 1), rat(7, 40)),
            IntegrandKind::Q2 => (rat(1, 1), rat(0, 1), rat(-31, 336)),
            IntegrandKind::Q3 => (rat(1, 1), rat(11_165, 8_284), rat(199_849, 1_391_712)),
            IntegrandKind::Delta => unreachable!("delta evaluated through the ratio"),
        }
    }
}

/// Report of a grid integrand check.
#[derive(Debug, Clone)]
pub struct IntegrandReport {
    pub which: IntegrandKind,
    pub a: Option<f64>,
    pub grid_len: usize,
    /// (t, value) with the wrong sign.
    pub violations: Vec<(f64, f64)>,
    /// Smallest |value| over t >= 0.05 (away from the t -> 0 tangency).
    pub min_abs_margin_clear: f64,
    /// Smallest correctly-signed magnitude over the whole grid.
    pub min_abs_margin: f64,
}

impl IntegrandReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Cancellation-free series coefficients of the kernel combination below the
/// series switch: the leading terms of the three combinations vanish
/// identically, so the combination is summed with exact coefficients.
fn combo_series(kind: IntegrandKind) -> &'static Vec<f64> {
    static Q1: OnceLock<Vec<f64>> = OnceLock::new();
    static Q2: OnceLock<Vec<f64>> = OnceLock::new();
    static Q3: OnceLock<Vec<f64>> = OnceLock::new();
    let cell = match kind {
        IntegrandKind::Q1 => &Q1,
        IntegrandKind::Q2 => &Q2,
        IntegrandKind::Q3 => &Q3,
        IntegrandKind::Delta => unreachable!(),
    };
    cell.get_or_init(|| {
        let (alpha, beta, gamma) = kind.weights();
        let ser = kernel::q_taylor(51);
        let c = &ser.coeffs;
        // coefficient of t^{2i+1}: alpha fall4(2i+5) c_{i+2}
        //                        + beta fall2(2i+3) c_{i+1} + gamma c_i
        let fall = |m: i64, k: i64| -> Rat {
            let mut f = Rat::from_integer(1.into());
            for j in 0..k {
                f *= rat(m - j, 1);
            }
            f
        };
        (0..c.len() - 2)
            .map(|i| {
                let m4 = 2 * i as i64 + 5;
                let m2 = 2 * i as i64 + 3;
                let v = &alpha * fall(m4, 4) * &c[i + 2]
                    + &beta * fall(m2, 2) * &c[i + 1]
                    + &gamma * &c[i];
                algebra::rat_to_ext(&v).to_f64()
            })
            .collect()
    })
}

/// Evaluate the kernel combination at t (series below the switch point).
pub fn integrand_value(kind: IntegrandKind, t: f64) -> Result<f64> {
    if t.is_nan() || t <= 0.0 {
        return Err(Error::domain("integrand_value", "t must be positive"));
    }
    if t < T_SWITCH_HIGH {
        let cs = combo_series(kind);
        let t2 = t * t;
        let mut acc = 0.0;
        for c in cs.iter().rev() {
            acc = acc * t2 + c;
        }
        return Ok(acc * t);
    }
    let (alpha, beta, gamma) = kind.weights();
    let to = |r: &Rat| algebra::rat_to_ext(r).to_f64();
    Ok(to(&alpha) * kernel::q_deriv(t, 4)?
        + to(&beta) * kernel::q_deriv(t, 2)?
        + to(&gamma) * kernel::q_deriv(t, 0)?)
}

/// Grid check of a kernel combination's sign (or of delta_a >= 0).
pub fn integrand_check(
    which: IntegrandKind,
    a: Option<f64>,
    t_grid: &[f64],
) -> Result<IntegrandReport> {
    let mut report = IntegrandReport {
        which,
        a,
        grid_len: t_grid.len(),
        violations: Vec::new(),
        min_abs_margin_clear: f64::INFINITY,
        min_abs_margin: f64::INFINITY,
    };
    for &t in t_grid {
        let v = match which {
            IntegrandKind::Delta => {
                let a = a.ok_or_else(|| Error::domain("integrand_check", "delta requires a"))?;
                let r = kernel::ratio(t)?;
                let s = kernel::q_deriv(t, 2)? / kernel::q_deriv(t, 0)?;
                s + 2.0 * a * r + a * a
            }
            _ => integrand_value(which, t)?,
        };
        let ok = if which == IntegrandKind::Delta {
            v >= -1e-10
        } else if which.expected_positive() {
            v > 0.0
        } else {
            v < 0.0
        };
        if !ok {
            report.violations.push((t, v));
        } else {
            report.min_abs_margin = report.min_abs_margin.min(v.abs());
            if t >= 0.05 {
                report.min_abs_margin_clear = report.min_abs_margin_clear.min(v.abs());
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Hyperbolic inequalities

/// Margins of the three sinh t / t inequalities, in double-word precision
/// (the gaps close like t^6 near zero, beyond native resolution).
#[derive(Debug, Clone)]
pub struct HyperbolicReport {
    pub grid_len: usize,
    /// (inequality index 1..=3, t, margin) with margin <= 0.
    pub violations: Vec<(usize, f64, f64)>,
    pub min_margins: [f64; 3],
}

impl HyperbolicReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Margins at one t: (sinh t/t - rhs1, sinh t/t - rhs2, rhs3 - sinh t/t).
pub fn hyperbolic_margins(t: f64) -> Result<[f64; 3]> {
    if t.is_nan() || t <= 0.0 {
        return Err(Error::domain("hyperbolic_margins", "t must be positive"));
    }
    let te = ExtReal::from_f64(t);
    let ch = te.cosh()?;
    let sh = te.sinh()?;
    let ratio = sh.div(te)?;
    let c2 = ch * ch;
    let three = ExtReal::from_i64(3);
    let fifteen = ExtReal::from_i64(15);
    let rhs1 = three * (ch.ldexp(1) + three).div(ch + ExtReal::from_i64(14))?;
    let rhs2 = fifteen
        * (c2.ldexp(1) + ExtReal::from_i64(10) * ch + ExtReal::from_i64(9)).div(
            c2.ldexp(1) + ExtReal::from_i64(101) * ch + ExtReal::from_i64(212),
        )?;
    let rhs3 = fifteen
        * (ExtReal::from_i64(18) * c2 + ExtReal::from_i64(160) * ch + ExtReal::from_i64(179))
            .div(
                ExtReal::from_i64(1159) * c2
                    + ExtReal::from_i64(4192) * ch
                    + ExtReal::from_i64(4),
            )?
        * ch;
    Ok([
        (ratio - rhs1).to_f64(),
        (ratio - rhs2).to_f64(),
        (rhs3 - ratio).to_f64(),
    ])
}

pub fn hyperbolic_check(t_grid: &[f64]) -> Result<HyperbolicReport> {
    let mut report = HyperbolicReport {
        grid_len: t_grid.len(),
        violations: Vec::new(),
        min_margins: [f64::INFINITY; 3],
    };
    for &t in t_grid {
        let m = hyperbolic_margins(t)?;
        for (i, &v) in m.iter().enumerate() {
            report.min_margins[i] = report.min_margins[i].min(v);
            if v <= 0.0 {
                report.violations.push((i + 1, t, v));
            }
        }
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Threshold bisection

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdSide {
    /// Complete monotonicity for a >= threshold.
    MinA,
    /// Complete monotonicity for a <= threshold.
    MaxA,
}

/// Grid used by the bisection predicate (coarser than a full scan; the
/// violations of near-threshold parameters live at the large-x end).
pub fn bisect_grid() -> Vec<f64> {
    log_grid(0.1, 50.0, 120)
}

/// Bisection on the predicate "the order-0..6 sign scan reports no
/// violations", returning the empirical threshold.
pub fn threshold_bisect(
    family: Family,
    side: ThresholdSide,
    interval: (f64, f64),
    tol: f64,
) -> Result<f64> {
    if tol < 1e-6 {
        return Err(Error::range("threshold_bisect", "tol must be >= 1e-6"));
    }
    let grid = bisect_grid();
    let pass = |a: f64| -> Result<bool> { Ok(!has_violation(family, a, &grid, 6)?) };
    let (mut lo, mut hi) = interval;
    let pass_lo = pass(lo)?;
    let pass_hi = pass(hi)?;
    let expect = match side {
        ThresholdSide::MinA => (false, true),
        ThresholdSide::MaxA => (true, false),
    };
    if (pass_lo, pass_hi) != expect {
        return Err(Error::NonMonotone {
            lo,
            hi,
            msg: format!(
                "predicate ({pass_lo}, {pass_hi}) at the endpoints, expected {expect:?}"
            ),
        });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let ok = pass(mid)?;
        let keep_upper = match side {
            ThresholdSide::MinA => ok,
            ThresholdSide::MaxA => !ok,
        };
        if keep_upper {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

// ---------------------------------------------------------------------------
// V monotonicity and the ratio bounds

#[derive(Debug, Clone)]
pub struct VMonotoneReport {
    pub grid_len: usize,
    /// (x, V(x), V(next)) where V failed to increase.
    pub monotone_violations: Vec<(f64, f64, f64)>,
    /// (x, ratio) outside [155/294 - eps, 11165/8284 + eps].
    pub ratio_violations: Vec<(f64, f64)>,
    /// Informational: was the ratio monotone increasing over the grid?
    pub ratio_monotone: bool,
    pub v_first: f64,
    pub v_last: f64,
}

impl VMonotoneReport {
    pub fn pass(&self) -> bool {
        self.monotone_violations.is_empty() && self.ratio_violations.is_empty()
    }
}

pub fn v_monotone_check(x_grid: &[f64]) -> Result<VMonotoneReport> {
    let eps = 1e-12;
    let lo_bound = 155.0 / 294.0 - eps;
    let hi_bound = 11_165.0 / 8_284.0 + eps;
    let values: Result<Vec<(f64, ExtReal, f64)>> = x_grid
        .par_iter()
        .map(|&x| {
            let xe = ExtReal::from_f64(x);
            let v = evaluate(Family::V, ExtReal::ZERO, xe)?;
            let ratio = evaluate(Family::RatioFG, ExtReal::ZERO, xe)?.to_f64();
            Ok((x, v, ratio))
        })
        .collect();
    let values = values?;
    let mut report = VMonotoneReport {
        grid_len: x_grid.len(),
        monotone_violations: Vec::new(),
        ratio_violations: Vec::new(),
        ratio_monotone: true,
        v_first: values.first().map(|t| t.1.to_f64()).unwrap_or(0.0),
        v_last: values.last().map(|t| t.1.to_f64()).unwrap_or(0.0),
    };
    for w in values.windows(2) {
        if w[1].1 <= w[0].1 {
            report
                .monotone_violations
                .push((w[0].0, w[0].1.to_f64(), w[1].1.to_f64()));
        }
        if w[1].2 <= w[0].2 {
            report.ratio_monotone = false;
        }
    }
    for (x, _, ratio) in &values {
        if !(*ratio >= lo_bound && *ratio <= hi_bound) {
            report.ratio_violations.push((*x, *ratio));
        }
    }
    Ok(report)
}
