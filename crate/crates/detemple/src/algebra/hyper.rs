//! The cosh/sinh polynomial algebra.
//!
//! Elements have the form `a(x) + b(x) s` with `x = cosh t`, `s = sinh t`
//! and the reduction `s^2 = x^2 - 1`. The algebra is closed under
//! differentiation in `t` (`x' = s`, `s' = x`), which is what the printed
//! derivative factorizations require.

use super::poly::UniPoly;
use super::Rat;
use std::ops::{Add, Mul, Neg, Sub};

/// `even(x) + odd(x) * s`, reduced via `s^2 = x^2 - 1`. The representation
/// is unique because 1 and s are linearly independent over polynomials in x.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperExpr {
    pub even: UniPoly,
    pub odd: UniPoly,
}

impl HyperExpr {
    pub fn zero() -> HyperExpr {
        HyperExpr {
            even: UniPoly::zero(),
            odd: UniPoly::zero(),
        }
    }

    pub fn from_even(p: UniPoly) -> HyperExpr {
        HyperExpr {
            even: p,
            odd: UniPoly::zero(),
        }
    }

    pub fn from_odd(p: UniPoly) -> HyperExpr {
        HyperExpr {
            even: UniPoly::zero(),
            odd: p,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// s^2 = x^2 - 1
    fn s_squared() -> UniPoly {
        UniPoly::from_i64(&[-1, 0, 1])
    }

    /// Derivative with respect to t: (a + b s)' = (b'(x)(x^2-1) + x b) + a'(x) s.
    pub fn diff_t(&self) -> HyperExpr {
        let x = UniPoly::x();
        let even = &(&self.odd.derivative() * &Self::s_squared()) + &(&x * &self.odd);
        let odd = self.even.derivative();
        HyperExpr { even, odd }
    }

    /// Numeric evaluation at x = cosh t, s = sinh t.
    pub fn eval_t(&self, t: f64) -> f64 {
        let (x, s) = (t.cosh(), t.sinh());
        self.even.eval_f64(x) + self.odd.eval_f64(x) * s
    }

    pub fn eval_rat(&self, x: &Rat, s: &Rat) -> Rat {
        self.even.eval(x) + self.odd.eval(x) * s
    }
}

impl Add for &HyperExpr {
    type Output = HyperExpr;
    fn add(self, rhs: &HyperExpr) -> HyperExpr {
        HyperExpr {
            even: &self.even + &rhs.even,
            odd: &self.odd + &rhs.odd,
        }
    }
}

impl Sub for &HyperExpr {
    type Output = HyperExpr;
    fn sub(self, rhs: &HyperExpr) -> HyperExpr {
        HyperExpr {
            even: &self.even - &rhs.even,
            odd: &self.odd - &rhs.odd,
        }
    }
}

impl Mul for &HyperExpr {
    type Output = HyperExpr;
    fn mul(self, rhs: &HyperExpr) -> HyperExpr {
        // (a + bs)(c + ds) = ac + bd s^2 + (ad + bc) s
        let ac = &self.even * &rhs.even;
        let bd = &self.odd * &rhs.odd;
        let even = &ac + &(&bd * &HyperExpr::s_squared());
        let odd = &(&self.even * &rhs.odd) + &(&self.odd * &rhs.even);
        HyperExpr { even, odd }
    }
}

impl Neg for &HyperExpr {
    type Output = HyperExpr;
    fn neg(self) -> HyperExpr {
        HyperExpr {
            even: -&self.even,
            odd: -&self.odd,
        }
    }
}

/// Quotient `num / den(x)` of a hyperbolic expression by a polynomial in x,
/// closed under d/dt with the quotient rule.
#[derive(Debug, Clone)]
pub struct RatioExpr {
    pub num: HyperExpr,
    pub den: UniPoly,
}

impl RatioExpr {
    pub fn new(num: HyperExpr, den: UniPoly) -> RatioExpr {
        RatioExpr { num, den }
    }

    /// d/dt (N / D(x)) = (N' D - N D'(x) s) / D^2.
    pub fn diff_t(&self) -> RatioExpr {
        let dd_s = HyperExpr::from_odd(self.den.derivative());
        let num = &(&self.num.diff_t() * &HyperExpr::from_even(self.den.clone()))
            - &(&self.num * &dd_s);
        RatioExpr {
            num,
            den: &self.den * &self.den,
        }
    }

    pub fn eval_t(&self, t: f64) -> f64 {
        self.num.eval_t(t) / self.den.eval_f64(t.cosh())
    }
}
