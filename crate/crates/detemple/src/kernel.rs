//! The Laplace kernel `Q(t) = 1/t - 1/(2 sinh(t/2))`, its derivatives through
//! order four, exact Maclaurin coefficients, the ratio `Q'/Q`, and its
//! interior minimum.
//!
//! Near zero every closed form loses digits to cancellation (`Q(t) ~ t/24`
//! while both terms blow up like `1/t`), so evaluation switches to the odd
//! Taylor series below `T_SWITCH`.

use crate::algebra::{self, rat_int, Rat};
use crate::error::{Error, Result};
use crate::extprec::ExtReal;
use num_traits::One;
use std::sync::OnceLock;

/// Closed-form/series switch point for Q, Q', Q''.
pub const T_SWITCH: f64 = 0.5;

/// Switch point for the third and fourth derivatives, whose closed forms
/// cancel ~t^-6 harder near zero.
pub const T_SWITCH_HIGH: f64 = 1.0;

/// Number of odd Taylor terms kept in the evaluation tables (c_1..c_51).
const N_TERMS: usize = 26;

/// Odd Maclaurin coefficients of Q: `coeffs[k]` is the exact coefficient of
/// `t^{2k+1}`.
#[derive(Debug, Clone)]
pub struct KernelSeries {
    pub coeffs: Vec<Rat>,
    pub order: usize,
}

impl KernelSeries {
    /// Coefficient of t^{2k+1}.
    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }
}

/// Exact rational Maclaurin coefficients of Q up to t^order (order odd,
/// at most 60): c_{2k+1} = (2^{2k+1} - 1) B_{2k+2} / (2^{2k+1} (2k+2)!).
pub fn q_taylor(order: usize) -> KernelSeries {
    assert!(order % 2 == 1 && order <= 60, "order must be odd and <= 60");
    let n_terms = order / 2 + 1;
    let bern = algebra::bernoulli_table(2 * n_terms);
    let mut coeffs = Vec::with_capacity(n_terms);
    let mut fact = rat_int(2); // (2m)! for m = 1
    for k in 0..n_terms {
        let m = k + 1; // coefficient of t^{2m-1}
        if k > 0 {
            fact = fact * rat_int(2 * m as i64 - 1) * rat_int(2 * m as i64);
        }
        let pow = Rat::from_integer(algebra::Int::from(2).pow(2 * m as u32 - 1));
        let c = (&pow - Rat::one()) * &bern[2 * m] / (&pow * &fact);
        coeffs.push(c);
    }
    KernelSeries { coeffs, order }
}

fn series_rat() -> &'static KernelSeries {
    static CACHE: OnceLock<KernelSeries> = OnceLock::new();
    CACHE.get_or_init(|| q_taylor(2 * N_TERMS - 1))
}

fn series_f64() -> &'static Vec<f64> {
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    CACHE.get_or_init(|| {
        series_rat()
            .coeffs
            .iter()
            .map(|c| algebra::rat_to_ext(c).to_f64())
            .collect()
    })
}

pub(crate) fn series_ext() -> &'static Vec<ExtReal> {
    static CACHE: OnceLock<Vec<ExtReal>> = OnceLock::new();
    CACHE.get_or_init(|| series_rat().coeffs.iter().map(algebra::rat_to_ext).collect())
}

/// Asymptotic coefficients of the Laplace transform of Q:
/// R(x) ~ sum_k gamma_k / x^{2k+2} with gamma_k = (2k+1)! c_{2k+1}.
pub fn r_asym_coeffs(k_max: usize) -> Vec<Rat> {
    let ser = series_rat();
    assert!(k_max < ser.coeffs.len());
    let mut fact = Rat::one();
    let mut out = Vec::with_capacity(k_max + 1);
    for (k, c) in ser.coeffs.iter().take(k_max + 1).enumerate() {
        if k > 0 {
            fact = fact * rat_int(2 * k as i64) * rat_int(2 * k as i64 + 1);
        }
        out.push(c * &fact);
    }
    out
}

pub(crate) fn r_asym_coeffs_ext() -> &'static Vec<ExtReal> {
    static CACHE: OnceLock<Vec<ExtReal>> = OnceLock::new();
    CACHE.get_or_init(|| {
        r_asym_coeffs(N_TERMS - 1)
            .iter()
            .map(algebra::rat_to_ext)
            .collect()
    })
}

fn check_t(op: &'static str, t: f64) -> Result<()> {
    if t <= 0.0 || !t.is_finite() {
        return Err(Error::domain(op, format!("t must be positive, got {t}")));
    }
    Ok(())
}

/// Q(t) = 1/t - 1/(2 sinh(t/2)).
pub fn q(t: f64) -> Result<f64> {
    check_t("q", t)?;
    if t >= T_SWITCH {
        Ok(1.0 / t - 1.0 / (2.0 * (t / 2.0).sinh()))
    } else {
        Ok(q_series(t, 0))
    }
}

/// Q(t) in double-word precision.
pub fn q_ext(t: ExtReal) -> Result<ExtReal> {
    if t.hi.is_nan() || t.hi <= 0.0 {
        return Err(Error::domain("q_ext", "t must be positive"));
    }
    if t.hi >= T_SWITCH {
        let s = t.ldexp(-1).sinh()?;
        Ok(t.recip()? - s.ldexp(1).recip()?)
    } else {
        let t2 = t * t;
        let mut acc = ExtReal::ZERO;
        for c in series_ext().iter().rev() {
            acc = acc * t2 + *c;
        }
        Ok(acc * t)
    }
}

/// Series evaluation of the k-th derivative for small t.
fn q_series(t: f64, k: usize) -> f64 {
    let cs = series_f64();
    let t2 = t * t;
    // sum over odd m = 2j+1 of c_m m!/(m-k)! t^{m-k}; terms with m < k have
    // zero falling factorial, so Horner over all j then scale by t^{1-k}
    let mut acc = 0.0;
    for j in (0..cs.len()).rev() {
        let m = 2 * j + 1;
        let mut fall = 1.0;
        if m >= k {
            for i in 0..k {
                fall *= (m - i) as f64;
            }
        } else {
            fall = 0.0;
        }
        acc = acc * t2 + cs[j] * fall;
    }
    acc * t.powi(1 - k as i32)
}

/// k-th derivative of Q for 0 <= k <= 4.
pub fn q_deriv(t: f64, k: usize) -> Result<f64> {
    check_t("q_deriv", t)?;
    if k > 4 {
        return Err(Error::range("q_deriv", format!("order {k} > 4")));
    }
    let switch = if k >= 3 { T_SWITCH_HIGH } else { T_SWITCH };
    if t < switch {
        return Ok(q_series(t, k));
    }
    let u = t / 2.0;
    let (sh, ch) = (u.sinh(), u.cosh());
    Ok(match k {
        0 => 1.0 / t - 1.0 / (2.0 * sh),
        1 => -1.0 / (t * t) + ch / (4.0 * sh * sh),
        2 => 2.0 / t.powi(3) + 1.0 / (8.0 * sh) - ch * ch / (4.0 * sh.powi(3)),
        3 => {
            -6.0 / t.powi(4) - 5.0 * ch / (16.0 * sh * sh)
                + 3.0 * ch.powi(3) / (8.0 * sh.powi(4))
        }
        _ => {
            24.0 / t.powi(5) - 5.0 / (32.0 * sh) + 7.0 * ch * ch / (8.0 * sh.powi(3))
                - 3.0 * ch.powi(4) / (4.0 * sh.powi(5))
        }
    })
}

/// Q'(t)/Q(t), by the cleared sinh/cosh form away from zero and by the
/// series ratio below the switch point.
pub fn ratio(t: f64) -> Result<f64> {
    check_t("ratio", t)?;
    if t < T_SWITCH {
        return Ok(q_series(t, 1) / q_series(t, 0));
    }
    let u = t / 2.0;
    let (sh, ch) = (u.sinh(), u.cosh());
    Ok((t * t * ch - 4.0 * sh * sh) / (4.0 * t * sh * sh - 2.0 * t * t * sh))
}

/// Analytic derivative of the ratio: (Q'/Q)' = Q''/Q - (Q'/Q)^2.
fn ratio_deriv(t: f64) -> f64 {
    let q0 = q_deriv(t, 0).unwrap();
    let q1 = q_deriv(t, 1).unwrap();
    let q2 = q_deriv(t, 2).unwrap();
    q2 / q0 - (q1 / q0) * (q1 / q0)
}

/// Location and value of the interior minimum of Q'/Q.
#[derive(Debug, Clone, Copy)]
pub struct RatioMinimum {
    pub t0: f64,
    pub c0: f64,
    pub bracket: (f64, f64),
    /// |d/dt (Q'/Q)| at t0.
    pub residual: f64,
}

/// Golden-section search on [1, 100] followed by Newton refinement on the
/// analytic ratio derivative.
pub fn minimize_ratio(tol: f64) -> Result<RatioMinimum> {
    if tol < 1e-13 {
        return Err(Error::range("minimize_ratio", "tol must be >= 1e-13"));
    }
    let (mut a, mut b) = (1.0f64, 100.0f64);
    if ratio_deriv(a) >= 0.0 || ratio_deriv(b) <= 0.0 {
        return Err(Error::Bracket(format!(
            "endpoint slopes {:+.3e}, {:+.3e} do not indicate an interior minimum",
            ratio_deriv(a),
            ratio_deriv(b)
        )));
    }
    let phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - phi * (b - a);
    let mut x2 = a + phi * (b - a);
    let mut f1 = ratio(x1)?;
    let mut f2 = ratio(x2)?;
    while b - a > 1e-4 {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = ratio(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = ratio(x2)?;
        }
    }
    let bracket = (a, b);
    // Newton on g(t) = (Q'/Q)'(t) with a numeric slope for g
    let mut t0 = 0.5 * (a + b);
    for _ in 0..40 {
        let g = ratio_deriv(t0);
        let h = 1e-4;
        let gp = (ratio_deriv(t0 + h) - ratio_deriv(t0 - h)) / (2.0 * h);
        let step = g / gp;
        t0 -= step;
        if step.abs() < 1e-13 * t0 {
            break;
        }
    }
    let residual = ratio_deriv(t0).abs();
    if residual > 1e-12 {
        return Err(Error::Convergence {
            op: "minimize_ratio",
            msg: format!("residual {residual:e} above 1e-12"),
        });
    }
    Ok(RatioMinimum {
        t0,
        c0: ratio(t0)?,
        bracket,
        residual,
    })
}

/// Cached minimum (the search is deterministic).
pub fn ratio_minimum() -> Result<&'static RatioMinimum> {
    static CACHE: OnceLock<std::result::Result<RatioMinimum, Error>> = OnceLock::new();
    CACHE
        .get_or_init(|| minimize_ratio(1e-12))
        .as_ref()
        .map_err(|e| e.clone())
}

/// Sufficiency threshold for the shifted-square family:
/// a0 = sqrt(c0^2 + 7/40) - c0.
pub fn a0() -> Result<f64> {
    let m = ratio_minimum()?;
    Ok((m.c0 * m.c0 + 7.0 / 40.0).sqrt() - m.c0)
}

// ---------------------------------------------------------------------------
// Gauss-Legendre quadrature for the Laplace representations (plumbing for
// the integral-identity checks, not a general-purpose integrator).

fn legendre_nodes_32() -> &'static Vec<(f64, f64)> {
    static CACHE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        let n = 32usize;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_p_dp(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre_p_dp(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            out.push((x, w));
        }
        out
    })
}

fn legendre_p_dp(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Integral of e^{-x t} Q^{(k)}(t) over (0, inf) by composite 32-point
/// Gauss-Legendre on [0, 60/x] with panel doubling until agreement. The
/// dropped tail is bounded by e^{-60} sup|Q^{(k)}|/x, negligible at the
/// tolerances used.
pub fn laplace_q_deriv(x: f64, k: usize) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::domain("laplace_q_deriv", "x must be positive"));
    }
    if k > 4 {
        return Err(Error::range("laplace_q_deriv", format!("order {k} > 4")));
    }
    let upper = 60.0 / x;
    let f = |t: f64| -> f64 { (-x * t).exp() * q_deriv(t, k).unwrap() };
    let mut panels = 8;
    let mut prev = composite_gl(&f, 0.0, upper, panels);
    loop {
        panels *= 2;
        let cur = composite_gl(&f, 0.0, upper, panels);
        if (cur - prev).abs() <= 1e-12 * (1.0 + cur.abs()) || panels >= 256 {
            return Ok(cur);
        }
        prev = cur;
    }
}

fn composite_gl(f: &dyn Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let nodes = legendre_nodes_32();
    let h = (b - a) / panels as f64;
    let mut acc = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mid = lo + 0.5 * h;
        let half = 0.5 * h;
        let mut s = 0.0;
        for &(x, w) in nodes {
            s += w * f(mid + half * x);
        }
        acc += s * half;
    }
    acc
}

#[cfg(test)]
#[allow(clippy::excessive_precision)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use num_traits::{Signed, Zero};

    #[test]
    fn taylor_leading_coefficients() {
        let ser = q_taylor(11);
        assert_eq!(ser.coeff(0), &rat(1, 24));
        assert_eq!(ser.coeff(1), &rat(-7, 5760));
        assert_eq!(ser.coeff(2), &rat(31, 967680));
        for k in 0..ser.coeffs.len() - 1 {
            let a = ser.coeff(k);
            let b = ser.coeff(k + 1);
            assert!(a.is_positive() == (k % 2 == 0), "sign pattern at {k}");
            assert!(a.abs() > b.abs(), "magnitude at {k}");
        }
    }

    #[test]
    #[allow(clippy::needless_range_loop)] // self-referential recurrence
    fn taylor_matches_series_reciprocal_oracle() {
        // independent route: 2 sinh(t/2) = t h(t^2) with
        // h(z) = sum z^k/(4^k (2k+1)!), and Q(t) = (1/t)(1 - 1/h(t^2)),
        // so c_{2k-1} = -(1/h)_k by power-series reciprocation
        let n = 20usize;
        let mut h = vec![Rat::zero(); n + 1];
        let mut fact = Rat::one();
        let mut pow4 = Rat::one();
        for (k, slot) in h.iter_mut().enumerate() {
            if k > 0 {
                fact = fact * rat_int(2 * k as i64) * rat_int(2 * k as i64 + 1);
                pow4 *= rat_int(4);
            }
            *slot = Rat::one() / (&pow4 * &fact);
        }
        let mut r = vec![Rat::one()];
        for k in 1..=n {
            let s: Rat = (1..=k).map(|j| &h[j] * &r[k - j]).sum();
            r.push(-s);
        }
        let ser = q_taylor(2 * n - 1);
        for k in 1..=n {
            assert_eq!(ser.coeff(k - 1), &(-&r[k]), "coefficient c_{}", 2 * k - 1);
        }
    }

    #[test]
    fn q_small_t_matches_leading_term() {
        // |q(0.001) - 0.001/24| is the c3 term, about -1.215e-12
        let v = q(0.001).unwrap();
        assert!((v - 0.001 / 24.0).abs() < 2e-12);
        assert!((v - 0.001 / 24.0 + 1.2152777457e-12).abs() < 1e-17);
    }

    #[test]
    fn q_positive_and_reference_value() {
        for &t in &[1e-6, 0.1, 1.0, 10.0, 100.0] {
            assert!(q(t).unwrap() > 0.0, "q({t}) should be positive");
        }
        let v = q(2.0).unwrap();
        assert!((v - 0.074540935880339227).abs() < 1e-15);
        let ve = q_ext(ExtReal::from_f64(2.0)).unwrap();
        assert!((ve.to_f64() - v).abs() < 1e-16);
        let vs = q_ext(ExtReal::from_f64(0.01)).unwrap();
        assert!((vs.to_f64() - q(0.01).unwrap()).abs() < 1e-18);
    }

    #[test]
    fn derivative_boundary_limits() {
        // Q'(0+) = 1/24 (the +1/24 in the x^2 R identity)
        assert!((q_deriv(1e-3, 1).unwrap() - 1.0 / 24.0).abs() < 1e-8);
        // Q'''(0+) = -7/960
        assert!((q_deriv(1e-3, 3).unwrap() + 7.0 / 960.0).abs() < 1e-6);
        // even-derivative ratios
        let t = 1e-3;
        let q0 = q(t).unwrap();
        assert!((q_deriv(t, 2).unwrap() / q0 + 7.0 / 40.0).abs() < 1e-5);
        assert!((q_deriv(t, 4).unwrap() / q0 - 31.0 / 336.0).abs() < 1e-5);
    }

    #[test]
    fn derivative_consistency_central_difference() {
        let h = 1e-4;
        for k in 1..=4usize {
            for &t in &[0.51, 0.8, 2.0, 5.0, 12.0, 20.0] {
                let fd = (q_deriv(t + h, k - 1).unwrap() - q_deriv(t - h, k - 1).unwrap())
                    / (2.0 * h);
                let dv = q_deriv(t, k).unwrap();
                let rel = (fd - dv).abs() / dv.abs().max(1e-12);
                assert!(rel < 1e-6, "k={k}, t={t}: rel={rel:e}");
            }
        }
    }

    /// Closed forms evaluated in double-word arithmetic: near the switch
    /// the f64 closed forms lose up to six digits to cancellation, so the
    /// 1e-12 agreement bound needs the reference side at full precision.
    fn q_deriv_closed_ext(t: f64, k: usize) -> f64 {
        let te = ExtReal::from_f64(t);
        let u = te.ldexp(-1);
        let sh = u.sinh().unwrap();
        let ch = u.cosh().unwrap();
        let inv = |v: ExtReal| v.recip().unwrap();
        let fr = ExtReal::from_ratio;
        match k {
            0 => inv(te) - inv(sh.ldexp(1)),
            1 => -inv(te.powi(2)) + ch.div_full(sh.powi(2).ldexp(2)),
            2 => {
                ExtReal::from_i64(2) * inv(te.powi(3)) + inv(sh.ldexp(3))
                    - ch.powi(2).div_full(sh.powi(3).ldexp(2))
            }
            3 => {
                -ExtReal::from_i64(6) * inv(te.powi(4))
                    - fr(5, 16) * ch.div_full(sh.powi(2))
                    + fr(3, 8) * ch.powi(3).div_full(sh.powi(4))
            }
            _ => {
                ExtReal::from_i64(24) * inv(te.powi(5)) - fr(5, 32) * inv(sh)
                    + fr(7, 8) * ch.powi(2).div_full(sh.powi(3))
                    - fr(3, 4) * ch.powi(4).div_full(sh.powi(5))
            }
        }
        .to_f64()
    }

    #[test]
    fn series_and_closed_form_agree_at_switch() {
        for &t in &[T_SWITCH, T_SWITCH_HIGH] {
            for k in 0..=4usize {
                let s = q_series(t, k);
                let d = q_deriv_closed_ext(t, k);
                let rel = (s - d).abs() / d.abs();
                assert!(rel <= 1e-12, "k={k}, t={t}: series {s:e} vs direct {d:e}");
            }
        }
    }

    #[test]
    fn ratio_behavior() {
        // t * ratio(t) -> 1 as t -> 0
        let r = ratio(1e-4).unwrap();
        assert!((r * 1e-4 - 1.0).abs() < 1e-5);
        // value at the published argument (not the minimizer)
        assert!((ratio(15.40151).unwrap() + 0.061875424366).abs() < 1e-9);
        // increasing to the right of the minimum
        assert!(ratio(200.0).unwrap() > ratio(15.4).unwrap());
        assert!(ratio(15.4).unwrap() > ratio(10.8).unwrap());
    }

    #[test]
    fn minimum_location_and_value() {
        let m = ratio_minimum().unwrap();
        // true interior minimum; the published pair (15.40151, -0.061875) is
        // the ratio at a non-minimizing argument
        assert!((m.t0 - 10.7651564960946).abs() < 1e-6, "t0 = {}", m.t0);
        assert!((m.c0 + 0.0717001453498977).abs() < 1e-10, "c0 = {}", m.c0);
        assert!(m.residual <= 1e-12);
        assert!(m.bracket.0 < m.t0 && m.t0 < m.bracket.1);
        assert!(ratio(m.t0).unwrap() < -0.061875 - 5e-6);
        // grid check: ratio(t) >= c0 - 1e-10 on (0, 200]
        let mut min_seen = f64::INFINITY;
        for i in 1..=20000 {
            let t = 0.01 * i as f64;
            min_seen = min_seen.min(ratio(t).unwrap());
        }
        assert!(min_seen >= m.c0 - 1e-10);
    }

    #[test]
    fn a0_value_and_sanity() {
        let a = a0().unwrap();
        assert!((a - 0.496130246595317).abs() < 1e-9, "a0 = {a}");
        assert!(a > 7.0 / 40.0 && a < 0.5);
        // formula sanity with c0 = 0
        assert!(((0f64 + 7.0 / 40.0).sqrt() - 0.41833).abs() < 1e-5);
    }

    #[test]
    fn laplace_identities() {
        for &x in &[1.0, 2.0, 5.0] {
            let i0 = laplace_q_deriv(x, 0).unwrap();
            let r = crate::special::r(x).unwrap();
            assert!((i0 - r).abs() < 1e-9, "x={x}: {i0} vs {r}");
        }
        let x = 2.0;
        let r = crate::special::r(x).unwrap();
        let i2 = laplace_q_deriv(x, 2).unwrap();
        assert!((1.0 / 24.0 + i2 - x * x * r).abs() < 1e-8);
        let i4 = laplace_q_deriv(x, 4).unwrap();
        assert!((x * x / 24.0 - 7.0 / 960.0 + i4 - x.powi(4) * r).abs() < 1e-8);
    }

    #[test]
    fn domain_and_range_errors() {
        assert!(q(0.0).is_err());
        assert!(q(-1.0).is_err());
        assert!(q_deriv(1.0, 5).is_err());
        assert!(minimize_ratio(1e-14).is_err());
    }
}
