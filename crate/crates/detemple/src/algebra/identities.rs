//! Exact verification of the printed series and factorization identities.

use super::hyper::{HyperExpr, RatioExpr};
use super::poly::UniPoly;
use super::{rat, rat_int, Int, Rat};
use num_traits::{One, Signed, Zero};

/// Outcome of one exact identity check.
#[derive(Debug, Clone)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

impl IdentityOutcome {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        IdentityOutcome {
            name,
            ok: true,
            detail: detail.into(),
        }
    }

    fn residual(name: &'static str, residual: &UniPoly) -> Self {
        if residual.is_zero() {
            Self::pass(name, "residual identically zero")
        } else {
            IdentityOutcome {
                name,
                ok: false,
                detail: format!("nonzero residual, degree {:?}", residual.degree()),
            }
        }
    }
}

/// Closed form for the series coefficients u_n (times (2n)!) of the
/// kernel-ratio numerator: 4^{2n} - 8n(2n^2-9n+13) 3^{2n-3} - 2^{2n+2}
/// - 8n(10n^2-13n+1).
pub fn u_closed(n: u32) -> Int {
    assert!(n >= 2, "u_closed requires n >= 2 (3^(2n-3) integral)");
    let n_i = Int::from(n);
    let pow4 = Int::from(4).pow(2 * n);
    let pow3 = Int::from(3).pow(2 * n - 3);
    let pow2 = Int::from(2).pow(2 * n + 2);
    let n2 = &n_i * &n_i;
    let cub1 = Int::from(2) * &n2 - Int::from(9) * &n_i + Int::from(13);
    let cub2 = Int::from(10) * &n2 - Int::from(13) * &n_i + Int::from(1);
    pow4 - Int::from(8) * &n_i * cub1 * pow3 - pow2 - Int::from(8) * &n_i * cub2
}

/// Right-hand side of the recursion u_{n+1} - 16 u_n.
pub fn u_recursion_rhs(n: u32) -> Int {
    let n_i = Int::from(n);
    let n2 = &n_i * &n_i;
    let n3 = &n2 * &n_i;
    let cubic = Int::from(14) * &n3 - Int::from(117) * &n2 + Int::from(199) * &n_i
        - Int::from(54);
    Int::from(8) * cubic * Int::from(3).pow(2 * n - 3)
        + Int::from(48) * Int::from(2).pow(2 * n)
        + Int::from(1200) * &n3
        - Int::from(1800) * &n2
        + Int::from(88) * &n_i
        + Int::from(16)
}

/// Exact check of u_{n+1} - 16 u_n = rhs(n).
pub fn u_recursion_check(n: u32) -> bool {
    u_closed(n + 1) - Int::from(16) * u_closed(n) == u_recursion_rhs(n)
}

/// Coefficient of t^{2n} in the eight cosh/sinh Maclaurin series whose sum
/// (plus the polynomial correction 8t^4 + 3) is half the ratio numerator.
pub fn u_from_series(n: u32) -> Rat {
    assert!((2..=50).contains(&n), "u_from_series supports 2 <= n <= 50");
    let fact = |m: u32| -> Rat {
        let mut f = Int::one();
        for i in 2..=m {
            f *= Int::from(i);
        }
        Rat::from_integer(f)
    };
    let p3 = |e: u32| Rat::from_integer(Int::from(3).pow(e));
    let mut c = Rat::from_integer(Int::from(4).pow(2 * n)) / fact(2 * n); // cosh 4t
    c += rat_int(4) * p3(2 * n - 2) / fact(2 * n - 2); // 4 t^2 cosh 3t
    c -= rat_int(2) * p3(2 * n - 3) / fact(2 * n - 3); // -2 t^3 sinh 3t
    c -= rat_int(4) * p3(2 * n - 1) / fact(2 * n - 1); // -4 t sinh 3t
    c -= rat_int(4) * Rat::from_integer(Int::from(2).pow(2 * n)) / fact(2 * n); // -4 cosh 2t
    c -= rat_int(4) / fact(2 * n - 2); // -4 t^2 cosh t
    c -= rat_int(10) / fact(2 * n - 3); // -10 t^3 sinh t
    c += rat_int(12) / fact(2 * n - 1); // 12 t sinh t
    c
}

/// Series/closed-form agreement for a single n.
pub fn u_series_matches_closed(n: u32) -> bool {
    let fact: Rat = {
        let mut f = Int::one();
        for i in 2..=(2 * n) {
            f *= Int::from(i);
        }
        Rat::from_integer(f)
    };
    u_from_series(n) * fact == Rat::from_integer(u_closed(n))
}

fn poly_x_plus(c: i64) -> UniPoly {
    UniPoly::from_i64(&[c, 1])
}

/// Printed sextic from the far branch of the quartic-kernel bound.
pub fn u1_printed() -> UniPoly {
    UniPoly::from_descending_i128(&[
        176,
        10_523,
        245_869,
        2_810_864,
        12_467_224,
        12_511_688,
        -20_756_344,
    ])
}

/// Printed degree-11 polynomial from the near branch.
pub fn u2_printed() -> UniPoly {
    UniPoly::from_descending_i128(&[
        14_379_675_269_523_570,
        357_214_567_270_415_330,
        3_604_910_878_299_956_955,
        19_027_526_850_473_930_600,
        55_570_610_110_726_848_080,
        85_295_682_448_077_545_696,
        54_079_668_524_631_977_864,
        560_130_320_580_220_160,
        1_016_873_963_329_280,
        923_378_178_560,
        418_677_504,
        75_776,
    ])
}

/// Printed degree-9 polynomial from the combined-kernel positivity proof.
pub fn q4_printed() -> UniPoly {
    UniPoly::from_descending_i128(&[
        10_249_024,
        2_015_594_800,
        163_876_520_192,
        6_681_271_280_040,
        136_012_433_414_956,
        1_069_481_086_377_851,
        4_121_483_475_973_500,
        8_450_810_874_059_188,
        8_899_895_239_232_240,
        3_802_278_457_617_584,
    ])
}

/// Printed degree-12 polynomial controlling the monotonicity of V.
pub fn v1_printed() -> UniPoly {
    UniPoly::from_descending_i128(&[
        1_718_371_882_080,
        10_310_231_292_480,
        29_399_355_669_600,
        52_486_324_833_600,
        66_690_983_696_400,
        65_258_530_001_280,
        51_909_045_513_612,
        34_352_301_620_196,
        18_881_999_450_054,
        8_378_736_976_048,
        2_808_871_359_013,
        622_502_847_155,
        64_714_929_005,
    ])
}

/// Differentiates p1(t) = ((2x^2+101x+212)/(2x^2+10x+9)) sinh t - 15 t in the
/// cosh/sinh algebra and checks p1' = 4 (x-1)^5 / (2x^2+10x+9)^2.
pub fn verify_p1_factorization() -> IdentityOutcome {
    let n = UniPoly::from_i64(&[212, 101, 2]);
    let d = UniPoly::from_i64(&[9, 10, 2]);
    let expr = RatioExpr::new(HyperExpr::from_odd(n), d.clone());
    let dp = expr.diff_t();
    // p1' = dp - 15; clear the shared denominator D^2
    let d2 = &d * &d;
    let num_even = &dp.num.even - &d2.scale(&rat_int(15));
    let target = UniPoly::from_i64(&[-1, 1]).pow(5).scale(&rat_int(4));
    let residual = &(&num_even - &target) + &dp.num.odd;
    IdentityOutcome::residual("p1_factorization", &residual)
}

/// Same for p2(t) = ((1159x^2+4192x+4)/(x(18x^2+160x+179))) sinh t - 15 t,
/// target -4 (1215x+179)(x-1)^5 / (x^2 (18x^2+160x+179)^2).
pub fn verify_p2_factorization() -> IdentityOutcome {
    let n = UniPoly::from_i64(&[4, 4192, 1159]);
    let d = &UniPoly::x() * &UniPoly::from_i64(&[179, 160, 18]);
    let expr = RatioExpr::new(HyperExpr::from_odd(n), d.clone());
    let dp = expr.diff_t();
    let d2 = &d * &d;
    let num_even = &dp.num.even - &d2.scale(&rat_int(15));
    let target = &(&UniPoly::from_i64(&[179, 1215]) * &UniPoly::from_i64(&[-1, 1]).pow(5))
        .scale(&rat_int(-4));
    let residual = &(&num_even - target) + &dp.num.odd;
    IdentityOutcome::residual("p2_factorization", &residual)
}

/// Far-branch numerator: U(3(2x+3)/(x+14)) (x+14)^5 = (x-1)^3 U1(x).
pub fn verify_u1() -> IdentityOutcome {
    let den = poly_x_plus(14);
    // expand with y = 3(2x+3)/(x+14) over the common denominator (x+14)^5:
    // -504*27^... : substitute y*den = 3(2x+3) and scale terms by den powers
    let y_num = UniPoly::from_i64(&[9, 6]); // 3(2x+3)
    let num = expand_quintic_sub(&y_num, &den);
    let target = &UniPoly::from_i64(&[-1, 1]).pow(3) * &u1_printed();
    let residual = &num - &target;
    let mut out = IdentityOutcome::residual("u1_factorization", &residual);
    if out.ok && u1_printed().eval(&rat_int(1)) != rat_int(7_290_000) {
        out.ok = false;
        out.detail = "U1(1) != 7290000".into();
    }
    out
}

/// Near-branch numerator over (1159x^2+4192x+4)^5 equals (x-1)^4 U2(x).
pub fn verify_u2() -> IdentityOutcome {
    let den = UniPoly::from_i64(&[4, 4192, 1159]);
    let y_num = &UniPoly::from_i64(&[0, 15]) * &UniPoly::from_i64(&[179, 160, 18]);
    let num = expand_quintic_sub(&y_num, &den);
    let target = &UniPoly::from_i64(&[-1, 1]).pow(4) * &u2_printed();
    IdentityOutcome::residual("u2_factorization", &(&num - &target))
}

/// Expansion of the quintic bound function at y = y_num/den over the common
/// denominator den^5, with sinh^2 t = x^2 - 1 substituted:
/// -504 y^5 + 31 (x^2-1)^2 y + 504 x^4 - 588 x^2 (x^2-1) + 74 (x^2-1)^2.
fn expand_quintic_sub(y_num: &UniPoly, den: &UniPoly) -> UniPoly {
    let s2 = UniPoly::from_i64(&[-1, 0, 1]);
    let s4 = &s2 * &s2;
    let x2 = UniPoly::from_i64(&[0, 0, 1]);
    let x4 = &x2 * &x2;
    let mut acc = y_num.pow(5).scale(&rat_int(-504));
    acc = &acc + &(&(&s4 * y_num) * &den.pow(4)).scale(&rat_int(31));
    let tail = &(&x4.scale(&rat_int(504)) - &(&x2 * &s2).scale(&rat_int(588)))
        + &s4.scale(&rat_int(74));
    &acc + &(&tail * &den.pow(5))
}

/// Combined-kernel numerator over (2x^2+101x+212)^5 equals 7 (x-1)^5 q4(x).
pub fn verify_q4() -> IdentityOutcome {
    let den = UniPoly::from_i64(&[212, 101, 2]);
    let s_num = UniPoly::from_i64(&[135, 150, 30]); // 15(2x^2+10x+9)
    let s2 = UniPoly::from_i64(&[-1, 0, 1]);
    let s4 = &s2 * &s2;
    let x2 = UniPoly::from_i64(&[0, 0, 1]);
    let x4 = &x2 * &x2;
    let head = &(&x4.scale(&rat_int(-2_087_568)) - &s4.scale(&rat_int(165_829)))
        + &(&x2 * &s2).scale(&rat_int(1_497_636));
    let mut acc = &head * &den.pow(5);
    acc = &acc + &(&(&s4 * &s_num) * &den.pow(4)).scale(&rat_int(199_849));
    acc = &acc + &(&(&s2 * &s_num.pow(3)) * &den.pow(2)).scale(&rat_int(937_860));
    acc = &acc + &s_num.pow(5).scale(&rat_int(2_087_568));
    let target = &UniPoly::from_i64(&[-1, 1]).pow(5).scale(&rat_int(7)) * &q4_printed();
    IdentityOutcome::residual("q4_factorization", &(&acc - &target))
}

/// Forms V'(x+1) - V'(x) exactly (the trigamma recurrence cancels the
/// transcendental part) and checks the numerator equals -V1(x) over the
/// printed denominator 10x^3(2x+1)^2(294x^2+155)^2(x+1)^3(294x^2+588x+449)^2.
pub fn verify_v1() -> IdentityOutcome {
    let p_of = |shift: i64| {
        // 1728720 y^4 + 1217748 y^2 + 321005 at y = x + shift
        let base = UniPoly::from_descending_i128(&[1_728_720, 0, 1_217_748, 0, 321_005]);
        base.compose_shift(&rat_int(shift))
    };
    let x = UniPoly::x();
    let x3 = x.pow(3);
    let two_x1 = UniPoly::from_i64(&[1, 2]);
    let xp1 = poly_x_plus(1);
    let g = UniPoly::from_i64(&[155, 0, 294]); // 294x^2+155
    let g_shift = UniPoly::from_i64(&[449, 588, 294]); // 294(x+1)^2+155
    let ten = rat_int(10);

    let t1 = &(&(&(&x3 * &g.pow(2)) * &xp1.pow(3)) * &g_shift.pow(2)).scale(&(-rat_int(4) * &ten));
    let t2 = &(&(&(&(&x3 * &two_x1.pow(2)) * &g.pow(2)) * &xp1.pow(2)) * &g_shift.pow(2))
        .scale(&-ten.clone());
    let t3 = &(&(&(&(&x.pow(2) * &two_x1.pow(2)) * &g.pow(2)) * &xp1.pow(3)) * &g_shift.pow(2))
        .scale(&ten);
    let t4 = &(&(&p_of(1) * &x3) * &two_x1.pow(2)) * &g.pow(2);
    let t5 = &(&(&(&p_of(0) * &two_x1.pow(2)) * &xp1.pow(3)) * &g_shift.pow(2)).scale(&-Rat::one());
    let mut total = t1 + t2;
    total = &total + t3;
    total = &total + &t4;
    total = &total + t5;
    let residual = &total + &v1_printed();
    IdentityOutcome::residual("v1_identity", &residual)
}

/// Runs the eight exact checks of the identity suite.
pub fn verify_all() -> Vec<IdentityOutcome> {
    let mut out = Vec::new();

    let u3_zero = u_closed(3).is_zero();
    let u_neg = (4..=10).all(|n| u_closed(n).is_negative());
    let u11 = u_closed(11) == Int::from(1_636_643_754_240i64);
    let rec = (2..=50).all(u_recursion_check);
    let rhs_pos = (11..=50).all(|n| u_recursion_rhs(n).is_positive());
    out.push(IdentityOutcome {
        name: "u_closed_and_recursion",
        ok: u3_zero && u_neg && u11 && rec && rhs_pos,
        detail: format!(
            "u3=0: {u3_zero}, u4..u10<0: {u_neg}, u11 exact: {u11}, \
             recursion n=2..50: {rec}, rhs>0 n=11..50: {rhs_pos}"
        ),
    });

    let series = (2..=50).all(u_series_matches_closed);
    out.push(IdentityOutcome {
        name: "u_series_oracle",
        ok: series,
        detail: "series coefficient x (2n)! == closed form, n=2..50".into(),
    });

    out.push(verify_p1_factorization());
    out.push(verify_p2_factorization());
    out.push(verify_u1());
    out.push(verify_u2());
    out.push(verify_q4());
    out.push(verify_v1());
    out
}

/// Exact form of the comparison between the quartic-bound upper endpoint and
/// the second-order half-shift bound: the difference at integer n equals
/// -(6720n^5+10752n^4+5712n^3+1564n^2+588n-35) /
///  (960n^4(168n^4+336n^3+252n^2+84n-5)), negative for every n >= 1.
pub fn verify_d2_upper_improvement() -> bool {
    let n = UniPoly::x();
    let x1 = UniPoly::from_vec(vec![rat(1, 2), Rat::one()]); // n + 1/2
    let x2 = &x1 * &x1;
    let x4 = x2.pow(2);
    // lhs = (x2 - 7/40)/(24 (x4 - 31/336)) - (40 n^2 + 7)/(960 n^4)
    let a = (&x2 - &UniPoly::constant(rat(7, 40))).scale(&rat(1, 24));
    let b = &x4 - &UniPoly::constant(rat(31, 336));
    let c_poly = &n.pow(2).scale(&rat_int(40)) + &UniPoly::constant(rat_int(7));
    let d_poly = n.pow(4).scale(&rat_int(960));
    let num = &(&a * &d_poly) - &(&c_poly * &b);
    let target_num = UniPoly::from_descending_i128(&[-6720, -10_752, -5_712, -1_564, -588, 35]);
    let target_den = UniPoly::from_descending_i128(&[168, 336, 252, 84, -5, 0, 0, 0, 0])
        .scale(&rat_int(960));
    // cross-multiplied equality: num/(b d) == target_num/target_den
    &num * &target_den == &target_num * &(&b * &d_poly)
}

/// Same for the Remark-2 improvement: d4 upper minus d2 upper equals
/// -64201 / (120 (2n+1)^2 (588n^2+588n+457)(168n^4+336n^3+252n^2+84n-5)).
pub fn verify_d4_upper_improvement() -> bool {
    let half = rat(1, 2);
    let x1 = UniPoly::from_vec(vec![half, Rat::one()]); // n + 1/2
    let x2 = &x1 * &x1;
    let x4 = x2.pow(2);
    // d4u = (x2 + 2071/5880) / (24 x2 (x2 + 155/294))
    let a1 = &x2 + &UniPoly::constant(rat(2071, 5880));
    let b1 = (&x2 * &(&x2 + &UniPoly::constant(rat(155, 294)))).scale(&rat_int(24));
    // d2u = (x2 - 7/40) / (24 (x4 - 31/336))
    let a2 = &x2 - &UniPoly::constant(rat(7, 40));
    let b2 = (&x4 - &UniPoly::constant(rat(31, 336))).scale(&rat_int(24));
    // difference numerator over b1*b2
    let num = &(&a1 * &b2) - &(&a2 * &b1);
    let den = &b1 * &b2;
    // target: -64201 / (120 (2n+1)^2 (588n^2+588n+457)(168n^4+336n^3+252n^2+84n-5))
    let t_num = UniPoly::constant(rat_int(-64_201));
    let t_den = {
        let f1 = UniPoly::from_i64(&[1, 2]).pow(2);
        let f2 = UniPoly::from_i64(&[457, 588, 588]);
        let f3 = UniPoly::from_descending_i128(&[168, 336, 252, 84, -5]);
        (&(&f1 * &f2) * &f3).scale(&rat_int(120))
    };
    &num * &t_den == &t_num * &den
}
