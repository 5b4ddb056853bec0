//! Compensated double-word floating-point arithmetic.
//!
//! An [`ExtReal`] is an unevaluated sum `hi + lo` of two `f64` words with
//! `|lo| <= ulp(hi)/2`, giving roughly 31 significant decimal digits. The
//! error-free transformations (`two_sum`, `two_prod`) follow the classical
//! double-double construction; transcendentals use argument reduction plus
//! short series evaluated entirely in double-word arithmetic.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Double-word real: value is `hi + lo`, renormalized so `|lo| <= ulp(hi)/2`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ExtReal {
    pub hi: f64,
    pub lo: f64,
}

/// Sum and rounding error of `a + b`, assuming `|a| >= |b|`.
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Sum and rounding error of `a + b` for arbitrary operands.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    let e = (a - (s - v)) + (b - v);
    (s, e)
}

/// Product and rounding error of `a * b` via fused multiply-add.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal { hi: 0.0, lo: 0.0 };
    pub const ONE: ExtReal = ExtReal { hi: 1.0, lo: 0.0 };

    /// ln 2 to double-word precision.
    pub const LN_2: ExtReal = ExtReal {
        hi: std::f64::consts::LN_2,
        lo: 2.319_046_813_846_299_6e-17,
    };

    /// Renormalizing constructor.
    #[inline]
    pub fn new(hi: f64, lo: f64) -> ExtReal {
        let (s, e) = quick_two_sum(hi, lo);
        ExtReal { hi: s, lo: e }
    }

    #[inline]
    pub fn from_f64(v: f64) -> ExtReal {
        ExtReal { hi: v, lo: 0.0 }
    }

    #[inline]
    pub fn from_i64(v: i64) -> ExtReal {
        // i64 may exceed 2^53; split exactly through two words
        let hi = v as f64;
        let lo = (v - hi as i64) as f64;
        ExtReal::new(hi, lo)
    }

    /// Exact-ish small rational p/q (both words of the quotient kept).
    pub fn from_ratio(p: i64, q: i64) -> ExtReal {
        ExtReal::from_i64(p).div_full(ExtReal::from_i64(q))
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    #[inline]
    pub fn abs(self) -> ExtReal {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    #[inline]
    fn add_full(self, rhs: ExtReal) -> ExtReal {
        let (s0, e0) = two_sum(self.hi, rhs.hi);
        let (s1, e1) = two_sum(self.lo, rhs.lo);
        let (r0, r1) = quick_two_sum(s0, e0 + s1);
        ExtReal::new(r0, r1 + e1)
    }

    #[inline]
    fn mul_full(self, rhs: ExtReal) -> ExtReal {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = self.hi.mul_add(rhs.lo, e);
        let e = self.lo.mul_add(rhs.hi, e);
        ExtReal::new(p, e)
    }

    /// Internal total division (divisor must be nonzero).
    #[inline]
    pub(crate) fn div_full(self, rhs: ExtReal) -> ExtReal {
        let q0 = self.hi / rhs.hi;
        let r = self - rhs.mul_f64(q0);
        let q1 = r.hi / rhs.hi;
        let r = r - rhs.mul_f64(q1);
        let q2 = r.hi / rhs.hi;
        let (s, e) = quick_two_sum(q0, q1);
        ExtReal::new(s, e + q2)
    }

    #[inline]
    pub fn mul_f64(self, rhs: f64) -> ExtReal {
        let (p, e) = two_prod(self.hi, rhs);
        ExtReal::new(p, self.lo.mul_add(rhs, e))
    }

    #[inline]
    pub fn add_f64(self, rhs: f64) -> ExtReal {
        let (s, e) = two_sum(self.hi, rhs);
        ExtReal::new(s, e + self.lo)
    }

    /// Checked division; divisor must be nonzero.
    #[allow(clippy::should_implement_trait)]
    pub fn div(self, rhs: ExtReal) -> Result<ExtReal> {
        if rhs.is_zero() {
            return Err(Error::domain("ext_div", "division by zero"));
        }
        Ok(self.div_full(rhs))
    }

    /// Checked reciprocal.
    pub fn recip(self) -> Result<ExtReal> {
        ExtReal::ONE.div(self)
    }

    /// Integer power by repeated squaring.
    pub fn powi(self, n: i32) -> ExtReal {
        if n == 0 {
            return ExtReal::ONE;
        }
        let mut base = if n < 0 {
            ExtReal::ONE.div_full(self)
        } else {
            self
        };
        let mut e = n.unsigned_abs();
        let mut acc = ExtReal::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Scale by a power of two (exact).
    #[inline]
    pub fn ldexp(self, e: i32) -> ExtReal {
        let f = f64_ldexp(1.0, e);
        ExtReal {
            hi: self.hi * f,
            lo: self.lo * f,
        }
    }

    /// Square root via one double-word Newton correction of the f64 estimate.
    pub fn sqrt(self) -> Result<ExtReal> {
        if self.is_zero() {
            return Ok(ExtReal::ZERO);
        }
        if self.hi < 0.0 {
            return Err(Error::domain("ext_sqrt", "negative argument"));
        }
        let y = self.hi.sqrt();
        // residual r = self - y^2 computed exactly, then y += r/(2y)
        let (p, e) = two_prod(y, y);
        let r = self - ExtReal::new(p, e);
        let dy = r.hi / (2.0 * y);
        let out = ExtReal::from_f64(y).add_f64(dy);
        // second correction in full double-word arithmetic
        let r2 = self - out * out;
        Ok(out + ExtReal::from_f64(r2.hi / (2.0 * out.hi)))
    }

    /// Natural logarithm: base-2 reduction, atanh series, one Newton step.
    pub fn ln(self) -> Result<ExtReal> {
        if self.hi <= 0.0 || self.is_zero() {
            return Err(Error::domain("ext_ln", "argument must be positive"));
        }
        if !self.is_finite() {
            return Err(Error::domain("ext_ln", "non-finite argument"));
        }
        // self = m * 2^k with m in [1/sqrt(2), sqrt(2))
        let mut k = self.hi.log2().round() as i32;
        let mut m = self.ldexp(-k);
        if m.hi < std::f64::consts::FRAC_1_SQRT_2 {
            k -= 1;
            m = m.ldexp(1);
        } else if m.hi >= std::f64::consts::SQRT_2 {
            k += 1;
            m = m.ldexp(-1);
        }
        // ln m = 2 atanh(u), u = (m-1)/(m+1), |u| <= 0.1716
        let u = (m - ExtReal::ONE).div_full(m + ExtReal::ONE);
        let u2 = u * u;
        let mut sum = ExtReal::ZERO;
        let mut n = 45i64;
        while n >= 1 {
            sum = sum * u2 + ExtReal::from_ratio(1, n);
            n -= 2;
        }
        let ln_m = sum * u.ldexp(1);
        let mut y = ln_m + ExtReal::LN_2.mul_f64(k as f64);
        // Newton correction: y += self*exp(-y) - 1
        let corr = self * (-y).exp()? - ExtReal::ONE;
        y = y + corr;
        Ok(y)
    }

    /// Exponential: reduce modulo ln 2, Taylor series on the remainder.
    pub fn exp(self) -> Result<ExtReal> {
        if !self.is_finite() {
            return Err(Error::domain("ext_exp", "non-finite argument"));
        }
        if self.hi > 700.0 {
            return Err(Error::range("ext_exp", "argument overflows"));
        }
        if self.hi < -745.0 {
            return Ok(ExtReal::ZERO);
        }
        let k = (self.hi / std::f64::consts::LN_2).round();
        let r = self - ExtReal::LN_2.mul_f64(k);
        // Taylor with nested evaluation; |r| <= ln2/2 needs ~26 terms
        let mut sum = ExtReal::ONE;
        let mut n = 26i64;
        while n >= 1 {
            sum = sum * r.div_full(ExtReal::from_i64(n)) + ExtReal::ONE;
            n -= 1;
        }
        Ok(sum.ldexp(k as i32))
    }

    /// Hyperbolic sine; series below 1/2 to avoid cancellation, exp above.
    pub fn sinh(self) -> Result<ExtReal> {
        if self.hi.abs() < 0.5 {
            // t + t^3/3! + ... : factor t * sum t^{2k}/(2k+1)!
            let t2 = self * self;
            let mut sum = ExtReal::ZERO;
            let mut k = 12i64;
            while k >= 1 {
                sum = (sum + ExtReal::ONE).mul_full(
                    t2.div_full(ExtReal::from_i64((2 * k) * (2 * k + 1))),
                );
                k -= 1;
            }
            Ok(self * (sum + ExtReal::ONE))
        } else {
            let e = self.exp()?;
            let inv = ExtReal::ONE.div_full(e);
            Ok((e - inv).ldexp(-1))
        }
    }

    /// Hyperbolic cosine from the exponential (no cancellation).
    pub fn cosh(self) -> Result<ExtReal> {
        let e = self.exp()?;
        let inv = ExtReal::ONE.div_full(e);
        Ok((e + inv).ldexp(-1))
    }

    /// Decimal rendering with `sig` significant digits (exactly rounded to
    /// within ~1 ulp of the double-word value).
    pub fn to_decimal(self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        if !self.is_finite() {
            return format!("{}", self.hi);
        }
        let neg = self.hi < 0.0;
        let mut v = self.abs();
        // decimal exponent of the leading digit
        let mut d10 = v.hi.log10().floor() as i32;
        v = v.div_full(pow10(d10));
        while v.hi >= 10.0 {
            v = v.div_full(pow10(1));
            d10 += 1;
        }
        while v.hi < 1.0 {
            v = v.mul_full(pow10(1));
            d10 -= 1;
        }
        // extract sig+1 digits then round
        let mut digits: Vec<u8> = Vec::with_capacity(sig + 1);
        for _ in 0..=sig {
            let mut d = v.hi.floor();
            let mut rem = v - ExtReal::from_f64(d);
            if rem.hi < 0.0 {
                d -= 1.0;
                rem = rem.add_f64(1.0);
            } else if rem.hi >= 1.0 {
                d += 1.0;
                rem = rem.add_f64(-1.0);
            }
            digits.push(d as u8);
            v = rem.mul_f64(10.0);
        }
        let round_up = digits[sig] >= 5;
        digits.truncate(sig);
        if round_up {
            let mut i = sig;
            loop {
                if i == 0 {
                    digits.insert(0, 1);
                    digits.pop();
                    d10 += 1;
                    break;
                }
                i -= 1;
                if digits[i] == 9 {
                    digits[i] = 0;
                } else {
                    digits[i] += 1;
                    break;
                }
            }
        }
        let mantissa: String = digits.iter().map(|d| (b'0' + d) as char).collect();
        let sign = if neg { "-" } else { "" };
        if (-4..=20).contains(&d10) {
            // positional form
            let s = if d10 >= 0 {
                let ip = d10 as usize + 1;
                if mantissa.len() <= ip {
                    format!("{}{}", mantissa, "0".repeat(ip - mantissa.len()))
                } else {
                    format!("{}.{}", &mantissa[..ip], &mantissa[ip..])
                }
            } else {
                format!("0.{}{}", "0".repeat((-d10 - 1) as usize), mantissa)
            };
            format!("{sign}{}", trim_trailing_zeros(&s))
        } else {
            let s = if mantissa.len() > 1 {
                format!("{}.{}", &mantissa[..1], &mantissa[1..])
            } else {
                mantissa
            };
            format!("{sign}{}e{}", trim_trailing_zeros(&s), d10)
        }
    }
}

fn trim_trailing_zeros(s: &str) -> String {
    if s.contains('.') {
        let t = s.trim_end_matches('0');
        t.trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

fn f64_ldexp(x: f64, e: i32) -> f64 {
    // split large shifts so intermediate powers stay normal
    if (-1000..=1000).contains(&e) {
        x * 2f64.powi(e)
    } else if e > 0 {
        x * 2f64.powi(1000) * 2f64.powi(e - 1000)
    } else {
        x * 2f64.powi(-1000) * 2f64.powi(e + 1000)
    }
}

/// 10^e in double-word precision (exact for |e| <= 31, tiny error beyond).
fn pow10(e: i32) -> ExtReal {
    ExtReal::from_i64(10).powi(e)
}

impl Add for ExtReal {
    type Output = ExtReal;
    #[inline]
    fn add(self, rhs: ExtReal) -> ExtReal {
        self.add_full(rhs)
    }
}

impl Sub for ExtReal {
    type Output = ExtReal;
    #[inline]
    fn sub(self, rhs: ExtReal) -> ExtReal {
        self.add_full(-rhs)
    }
}

impl Mul for ExtReal {
    type Output = ExtReal;
    #[inline]
    fn mul(self, rhs: ExtReal) -> ExtReal {
        self.mul_full(rhs)
    }
}

impl Neg for ExtReal {
    type Output = ExtReal;
    #[inline]
    fn neg(self) -> ExtReal {
        ExtReal {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl PartialEq for ExtReal {
    fn eq(&self, other: &Self) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for ExtReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl From<f64> for ExtReal {
    fn from(v: f64) -> Self {
        ExtReal::from_f64(v)
    }
}

impl From<i64> for ExtReal {
    fn from(v: i64) -> Self {
        ExtReal::from_i64(v)
    }
}

impl FromStr for ExtReal {
    type Err = Error;

    /// Parse a signed decimal string, e.g. `-12.34e-5`.
    fn from_str(s: &str) -> Result<ExtReal> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty string".into()));
        }
        let bytes = s.as_bytes();
        let mut i = 0;
        let neg = match bytes[0] {
            b'-' => {
                i += 1;
                true
            }
            b'+' => {
                i += 1;
                false
            }
            _ => false,
        };
        let mut mant = ExtReal::ZERO;
        let mut ndigits = 0usize;
        let mut frac_len = 0i64;
        let mut seen_dot = false;
        while i < bytes.len() {
            match bytes[i] {
                b'0'..=b'9' => {
                    mant = mant.mul_f64(10.0).add_f64((bytes[i] - b'0') as f64);
                    ndigits += 1;
                    if seen_dot {
                        frac_len += 1;
                    }
                    i += 1;
                }
                b'.' if !seen_dot => {
                    seen_dot = true;
                    i += 1;
                }
                b'e' | b'E' => break,
                c => {
                    return Err(Error::Parse(format!(
                        "unexpected character '{}' in \"{s}\"",
                        c as char
                    )))
                }
            }
        }
        if ndigits == 0 {
            return Err(Error::Parse(format!("no digits in \"{s}\"")));
        }
        let mut exp10 = 0i64;
        if i < bytes.len() {
            // exponent part
            let etxt = &s[i + 1..];
            exp10 = etxt
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad exponent in \"{s}\"")))?;
        }
        let shift = exp10 - frac_len;
        if shift.abs() > 400 {
            return Err(Error::Parse(format!("exponent out of range in \"{s}\"")));
        }
        // scale by an exact positive power of ten; dividing keeps exactly
        // representable inputs ("1.5") exact in both words
        let mut v = if shift >= 0 {
            mant.mul_full(pow10(shift as i32))
        } else {
            mant.div_full(pow10(-shift as i32))
        };
        if neg {
            v = -v;
        }
        Ok(v)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(32))
    }
}
