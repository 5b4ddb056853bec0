//! Dense univariate polynomials with exact rational coefficients.

use super::{rat_int, Rat};
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in one variable, coefficients ascending by degree.
/// Canonical form: empty vector is the zero polynomial; otherwise the last
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly::constant(Rat::one())
    }

    pub fn x() -> UniPoly {
        UniPoly::from_vec(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> UniPoly {
        UniPoly::from_vec(vec![c])
    }

    pub fn from_vec(coeffs: Vec<Rat>) -> UniPoly {
        let mut p = UniPoly { coeffs };
        p.normalize();
        p
    }

    /// Coefficients listed highest degree first (matches printed polynomials).
    pub fn from_descending_i128(coeffs: &[i128]) -> UniPoly {
        let v: Vec<Rat> = coeffs
            .iter()
            .rev()
            .map(|&c| Rat::from_integer(c.into()))
            .collect();
        UniPoly::from_vec(v)
    }

    pub fn from_i64(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_vec(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// c * x^deg
    pub fn monomial(c: Rat, deg: usize) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rat::zero(); deg + 1];
        v[deg] = c;
        UniPoly { coeffs: v }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, deg: usize) -> Rat {
        self.coeffs.get(deg).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + super::rat_to_ext(c).to_f64();
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat_int(i as i64))
            .collect();
        UniPoly::from_vec(v)
    }

    pub fn pow(&self, n: usize) -> UniPoly {
        let mut acc = UniPoly::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        UniPoly::from_vec(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitute x -> x + shift.
    pub fn compose_shift(&self, shift: &Rat) -> UniPoly {
        let arg = UniPoly::from_vec(vec![shift.clone(), Rat::one()]);
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &arg) + &UniPoly::constant(c.clone());
        }
        acc
    }

    pub fn all_coeffs_positive(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(|c| c.is_positive())
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::from_vec(v)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::from_vec(v)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::from_vec(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_vec(self.coeffs.iter().map(|c| -c).collect())
    }
}
