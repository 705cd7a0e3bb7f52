//! Matching generating polynomials with exact nonnegative coefficients.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::Rational;

/// `M(G, x) = Σ_k m(G, k) x^k`, coefficient `k` at index `k`.
///
/// Trailing zero coefficients are always trimmed. Every matching polynomial
/// has constant term 1, but intermediate products in the recurrences are
/// stored in the same type.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MatchingPolynomial {
    coefficients: Vec<BigUint>,
}

impl MatchingPolynomial {
    pub fn new(coefficients: Vec<BigUint>) -> Self {
        let mut p = MatchingPolynomial { coefficients };
        p.trim();
        p
    }

    pub fn from_u64(coefficients: &[u64]) -> Self {
        MatchingPolynomial::new(coefficients.iter().map(|&c| BigUint::from(c)).collect())
    }

    pub fn zero() -> Self {
        MatchingPolynomial {
            coefficients: Vec::new(),
        }
    }

    pub fn one() -> Self {
        MatchingPolynomial {
            coefficients: vec![BigUint::one()],
        }
    }

    fn trim(&mut self) {
        while self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    /// `m(G, k)`, zero past the degree.
    pub fn coefficient(&self, k: usize) -> BigUint {
        self.coefficients.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Largest `k` with `m(G, k) > 0`: the matching number. Zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// `x · self`.
    pub fn shift(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coefficients = Vec::with_capacity(self.coefficients.len() + 1);
        coefficients.push(BigUint::zero());
        coefficients.extend(self.coefficients.iter().cloned());
        MatchingPolynomial { coefficients }
    }

    pub fn scale(&self, factor: usize) -> Self {
        MatchingPolynomial::new(self.coefficients.iter().map(|c| c * BigUint::from(factor)).collect())
    }

    /// `M(G, 1)`.
    pub fn sum(&self) -> BigUint {
        self.coefficients.iter().sum()
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coefficients.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * x + Rational::from_integer(BigInt::from(c.clone()))
        })
    }

    /// `q^deg · M(p / q)` for `x = p / q` in lowest terms with `q > 0`.
    ///
    /// Comparing two polynomials at the same `x` reduces to comparing these
    /// integers after padding both to a common degree, which avoids fraction
    /// normalisation in the sweeps.
    pub fn eval_scaled(&self, x: &Rational, degree: usize) -> BigInt {
        assert!(degree >= self.degree(), "scaling degree below polynomial degree");
        let p = x.numer();
        let q = x.denom();
        let mut acc = BigInt::zero();
        let mut q_power = BigInt::one();
        // Σ c_k p^k q^(deg - k), accumulated from the top coefficient down.
        for k in (0..=degree).rev() {
            acc *= p;
            acc += BigInt::from(self.coefficient(k)) * &q_power;
            q_power *= q;
        }
        acc
    }

    /// Compares `M(self, x)` and `M(other, x)` exactly.
    pub fn cmp_at(&self, other: &MatchingPolynomial, x: &Rational) -> Ordering {
        let degree = self.degree().max(other.degree());
        self.eval_scaled(x, degree).cmp(&other.eval_scaled(x, degree))
    }

    /// Decimal strings, lowest degree first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        use alloc::string::ToString;
        self.coefficients.iter().map(ToString::to_string).collect()
    }

    /// Coefficientwise `self <= other`.
    pub fn dominated_by(&self, other: &MatchingPolynomial) -> bool {
        (0..self.coefficients.len()).all(|k| self.coefficients[k] <= other.coefficient(k))
    }

    pub fn to_f64_coefficients(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.coefficients.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect()
    }
}

impl Add for &MatchingPolynomial {
    type Output = MatchingPolynomial;

    fn add(self, other: &MatchingPolynomial) -> MatchingPolynomial {
        let (long, short) = if self.coefficients.len() >= other.coefficients.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coefficients = long.coefficients.clone();
        for (c, s) in coefficients.iter_mut().zip(&short.coefficients) {
            *c += s;
        }
        MatchingPolynomial::new(coefficients)
    }
}

impl Add for MatchingPolynomial {
    type Output = MatchingPolynomial;

    fn add(self, other: MatchingPolynomial) -> MatchingPolynomial {
        &self + &other
    }
}

impl Mul for &MatchingPolynomial {
    type Output = MatchingPolynomial;

    fn mul(self, other: &MatchingPolynomial) -> MatchingPolynomial {
        if self.is_zero() || other.is_zero() {
            return MatchingPolynomial::zero();
        }
        let mut coefficients = vec![BigUint::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                coefficients[i + j] += a * b;
            }
        }
        MatchingPolynomial::new(coefficients)
    }
}

impl Mul for MatchingPolynomial {
    type Output = MatchingPolynomial;

    fn mul(self, other: MatchingPolynomial) -> MatchingPolynomial {
        &self * &other
    }
}

impl fmt::Display for MatchingPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => f.write_str("x")?,
                1 => write!(f, "{c}x")?,
                _ if c.is_one() => write!(f, "x^{k}")?,
                _ => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn arithmetic() {
        let a = MatchingPolynomial::from_u64(&[1, 1]);
        let b = MatchingPolynomial::from_u64(&[1, 2]);
        assert_eq!(&a * &b, MatchingPolynomial::from_u64(&[1, 3, 2]));
        assert_eq!(&a + &b, MatchingPolynomial::from_u64(&[2, 3]));
        assert_eq!(a.shift(), MatchingPolynomial::from_u64(&[0, 1, 1]));
        assert_eq!(MatchingPolynomial::from_u64(&[1, 0, 0]).degree(), 0);
        assert_eq!(MatchingPolynomial::from_u64(&[1, 7, 11]).to_string(), "1 + 7x + 11x^2");
    }

    #[test]
    fn evaluation() {
        assert_eq!(MatchingPolynomial::from_u64(&[1, 3]).eval(&q(1, 1)), q(4, 1));
        assert_eq!(MatchingPolynomial::from_u64(&[1, 7, 11]).eval(&q(1, 2)), q(29, 4));
        assert_eq!(MatchingPolynomial::from_u64(&[1, 7, 11, 4]).eval(&q(0, 1)), q(1, 1));
    }

    #[test]
    fn scaled_evaluation_matches_exact() {
        let p = MatchingPolynomial::from_u64(&[1, 7, 11, 4]);
        for x in [q(1, 4), q(3, 2), q(5, 1)] {
            let scaled = p.eval_scaled(&x, 5);
            let expected = p.eval(&x) * Rational::from_integer(x.denom().pow(5u32));
            assert_eq!(Rational::from_integer(scaled), expected);
        }
        let smaller = MatchingPolynomial::from_u64(&[1, 7, 11]);
        assert_eq!(smaller.cmp_at(&p, &q(1, 4)), Ordering::Less);
    }
}
