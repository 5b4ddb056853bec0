//! Exact integer, rational, and polynomial arithmetic.
//!
//! Arbitrary-precision integers and reduced rationals are provided by
//! `num-bigint`/`num-rational` behind the aliases [`Int`] and [`Rat`];
//! the polynomial layers ([`UniPoly`], [`HyperExpr`]) and every identity
//! verification are implemented here.

mod hyper;
mod identities;
mod poly;

pub use hyper::{HyperExpr, RatioExpr};
pub use identities::*;
pub use poly::UniPoly;

use crate::extprec::ExtReal;
pub use num_bigint::BigInt as Int;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number, always reduced.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

pub fn rat_int(p: i64) -> Rat {
    Rat::from_integer(Int::from(p))
}

/// Bernoulli number B_n (B_1 = -1/2 convention) via the defining recurrence
/// sum_{k=0}^{n} C(n+1,k) B_k = 0.
pub fn bernoulli(n: usize) -> Rat {
    bernoulli_table(n)[n].clone()
}

/// All Bernoulli numbers B_0..B_n.
pub fn bernoulli_table(n: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m == 0 {
            b.push(Rat::one());
            continue;
        }
        // B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k
        let mut acc = Rat::zero();
        let mut binom = Int::one(); // C(m+1, 0)
        for (k, bk) in b.iter().enumerate() {
            acc += Rat::from_integer(binom.clone()) * bk;
            // C(m+1, k+1) = C(m+1, k) * (m+1-k)/(k+1)
            binom = binom * Int::from(m + 1 - k) / Int::from(k + 1);
        }
        b.push(-acc / rat_int(m as i64 + 1));
    }
    b
}

/// Convert an exact rational to double-word precision (two-stage rounding).
pub fn rat_to_ext(r: &Rat) -> ExtReal {
    let hi = rat_to_f64(r);
    let rest = r - approx_rat(hi);
    let lo = rat_to_f64(&rest);
    let rest2 = rest - approx_rat(lo);
    let lo2 = rat_to_f64(&rest2);
    ExtReal::new(hi, lo) + ExtReal::from_f64(lo2)
}

/// Exact rational value of a finite f64.
pub fn f64_to_rat(v: f64) -> Rat {
    approx_rat(v)
}

/// Exact rational value of a double-word number.
pub fn ext_to_rat(v: ExtReal) -> Rat {
    approx_rat(v.hi) + approx_rat(v.lo)
}

fn approx_rat(v: f64) -> Rat {
    if v == 0.0 {
        return Rat::zero();
    }
    let bits = v.to_bits();
    let sign = if bits >> 63 == 1 { -1 } else { 1 };
    let exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mant, e2) = if exp == 0 {
        (frac, -1074i64)
    } else {
        (frac | (1u64 << 52), exp - 1075)
    };
    let m = Int::from(mant) * Int::from(sign);
    if e2 >= 0 {
        Rat::from_integer(m << e2 as usize)
    } else {
        Rat::new(m, Int::one() << (-e2) as usize)
    }
}

/// Correctly-rounded-to-within-1-ulp f64 value of a rational.
fn rat_to_f64(r: &Rat) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let neg = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().clone();
    // scale so the integer quotient carries ~80 bits
    let shift = 80i64 + den.bits() as i64 - num.bits() as i64;
    let q = if shift >= 0 {
        (num << shift as usize) / &den
    } else {
        num / (&den << (-shift) as usize)
    };
    let qf = q.to_f64().unwrap_or(f64::INFINITY);
    let v = ldexp_i64(qf, -shift);
    if neg {
        -v
    } else {
        v
    }
}

fn ldexp_i64(x: f64, e: i64) -> f64 {
    let mut v = x;
    let mut e = e;
    while e > 900 {
        v *= 2f64.powi(900);
        e -= 900;
    }
    while e < -900 {
        v *= 2f64.powi(-900);
        e += 900;
    }
    v * 2f64.powi(e as i32)
}

/// Decimal expansion of a rational with `sig` significant digits.
pub fn rat_to_decimal(r: &Rat, sig: usize) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().clone();
    // decimal exponent: digits(num) - digits(den) within +-1
    let mut d10 = (num.to_string().len() as i64) - (den.to_string().len() as i64);
    let ten = Int::from(10);
    let scale = |d: i64| -> Rat {
        if d >= 0 {
            Rat::from_integer(num_traits::pow(ten.clone(), d as usize))
        } else {
            Rat::new(Int::one(), num_traits::pow(ten.clone(), (-d) as usize))
        }
    };
    let v = Rat::new(num.clone(), den.clone());
    let mut scaled = &v / scale(d10);
    while scaled >= Rat::from_integer(ten.clone()) {
        d10 += 1;
        scaled = &v / scale(d10);
    }
    while scaled < Rat::one() {
        d10 -= 1;
        scaled = &v / scale(d10);
    }
    // digits of round(scaled * 10^(sig-1))
    let shifted = scaled * scale(sig as i64 - 1);
    let rounded = (shifted + rat(1, 2)).floor().to_integer();
    let mut digits = rounded.to_string();
    if digits.len() > sig {
        // rounding carried into a new leading digit
        d10 += 1;
        digits.truncate(sig);
    }
    let sign = if neg { "-" } else { "" };
    if (-4..=20).contains(&d10) {
        let s = if d10 >= 0 {
            let ip = d10 as usize + 1;
            if digits.len() <= ip {
                format!("{}{}", digits, "0".repeat(ip - digits.len()))
            } else {
                format!("{}.{}", &digits[..ip], &digits[ip..])
            }
        } else {
            format!("0.{}{}", "0".repeat((-d10 - 1) as usize), digits)
        };
        let t = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        format!("{sign}{t}")
    } else {
        let mut m = digits;
        if m.len() > 1 {
            m.insert(1, '.');
            while m.ends_with('0') {
                m.pop();
            }
            if m.ends_with('.') {
                m.pop();
            }
        }
        format!("{sign}{m}e{d10}")
    }
}
