//! Exact real-root isolation for integer polynomials.
//!
//! Roots are bracketed between rational endpoints at which the polynomial is
//! evaluated exactly, so every bracket is a certificate. Multiple roots are
//! separated out first by square-free decomposition; each square-free factor
//! is isolated with a Sturm chain and then refined, first through a float
//! guess that is accepted only if an exact sign change confirms it, otherwise
//! by exact bisection.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

/// Polynomial with rational coefficients, lowest degree first, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoly {
    coefficients: Vec<Rational>,
}

impl RationalPoly {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        let mut p = RationalPoly { coefficients };
        while p.coefficients.last().is_some_and(Zero::is_zero) {
            p.coefficients.pop();
        }
        p
    }

    pub fn from_integers(coefficients: &[BigInt]) -> Self {
        RationalPoly::new(coefficients.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    fn leading(&self) -> &Rational {
        self.coefficients.last().expect("non-zero polynomial")
    }

    pub fn derivative(&self) -> Self {
        RationalPoly::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    fn sub(&self, other: &RationalPoly) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        RationalPoly::new(
            (0..len)
                .map(|k| {
                    let a = self.coefficients.get(k).cloned().unwrap_or_default();
                    let b = other.coefficients.get(k).cloned().unwrap_or_default();
                    a - b
                })
                .collect(),
        )
    }

    fn neg(&self) -> Self {
        RationalPoly::new(self.coefficients.iter().map(|c| -c).collect())
    }

    fn scale(&self, factor: &Rational) -> Self {
        RationalPoly::new(self.coefficients.iter().map(|c| c * factor).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading().recip();
        self.scale(&lead)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &RationalPoly) -> (RationalPoly, RationalPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let mut remainder = self.coefficients.clone();
        let dd = divisor.degree();
        if self.is_zero() || self.degree() < dd {
            return (RationalPoly::new(Vec::new()), self.clone());
        }
        let lead = divisor.leading().clone();
        let mut quotient = vec![Rational::zero(); self.degree() - dd + 1];
        for k in (dd..=self.degree()).rev() {
            let factor = &remainder[k] / &lead;
            if factor.is_zero() {
                continue;
            }
            for (j, c) in divisor.coefficients.iter().enumerate() {
                let t = &factor * c;
                remainder[k - dd + j] -= t;
            }
            quotient[k - dd] = factor;
        }
        remainder.truncate(dd);
        (RationalPoly::new(quotient), RationalPoly::new(remainder))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &RationalPoly) -> RationalPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Yun's square-free decomposition: pairs `(f_i, i)` with every `f_i`
    /// square-free, pairwise coprime and `self = c Π f_i^i`.
    pub fn square_free_decomposition(&self) -> Vec<(RationalPoly, usize)> {
        let mut out = Vec::new();
        if self.degree() == 0 {
            return out;
        }
        let derivative = self.derivative();
        let a0 = self.gcd(&derivative);
        let mut b = self.div_rem(&a0).0;
        let mut c = derivative.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut multiplicity = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            if a.degree() > 0 {
                out.push((a.clone(), multiplicity));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            multiplicity += 1;
        }
        out
    }

    /// Sturm chain `p, p', -rem(p, p'), ...`, each member rescaled by a
    /// positive constant.
    pub fn sturm_chain(&self) -> Vec<IntPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let (a, b) = (&chain[chain.len() - 2], &chain[chain.len() - 1]);
            if b.is_zero() {
                chain.pop();
                break;
            }
            let (_, r) = a.div_rem(b);
            if r.is_zero() {
                break;
            }
            let r = r.neg();
            let scale = r.leading().abs().recip();
            chain.push(r.scale(&scale));
        }
        chain.iter().map(IntPoly::from_rational).collect()
    }

    /// Upper bound on the absolute value of every root: `1 + max |a_k / a_d|`, rounded up.
    pub fn cauchy_bound(&self) -> Rational {
        let lead = self.leading().abs();
        let max = self.coefficients[..self.degree()]
            .iter()
            .map(|c| c.abs() / &lead)
            .fold(Rational::zero(), |m, c| if c > m { c } else { m });
        Rational::from_integer((max + Rational::one()).ceil().to_integer())
    }
}

/// Integer polynomial used for exact sign evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    coefficients: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coefficients: Vec<BigInt>) -> Self {
        while coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        IntPoly { coefficients }
    }

    /// Clears denominators with a positive multiplier, so signs are preserved.
    pub fn from_rational(p: &RationalPoly) -> Self {
        let lcm = p
            .coefficients()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        IntPoly::new(
            p.coefficients()
                .iter()
                .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Sign of `p(x)`, computed as the sign of `q^deg p(p/q)`.
    pub fn sign_at(&self, x: &Rational) -> Ordering {
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut den_power = BigInt::one();
        for c in self.coefficients.iter().rev() {
            acc *= num;
            acc += c * &den_power;
            den_power *= den;
        }
        acc.sign_cmp()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

fn sign_variations(chain: &[IntPoly], x: &Rational) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for p in chain {
        let s = p.sign_at(x);
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// A root `r` certified to lie in `[lower, upper]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CertifiedRoot {
    pub lower: Rational,
    pub upper: Rational,
    pub multiplicity: usize,
}

impl CertifiedRoot {
    pub fn midpoint_f64(&self) -> f64 {
        (to_f64(&self.lower) + to_f64(&self.upper)) / 2.0
    }

    /// Width of the bracket after the map `s ↦ √s`.
    pub fn sqrt_width(&self) -> f64 {
        libm::sqrt(to_f64(&self.upper)) - libm::sqrt(to_f64(&self.lower))
    }
}

pub(crate) fn to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// All strictly positive real roots of `p`, with multiplicities, each
/// bracketed so that its square root is known to within `sqrt_tolerance`.
pub fn positive_roots(p: &[BigInt], sqrt_tolerance: f64) -> Vec<CertifiedRoot> {
    let zeros = p.iter().take_while(|c| c.is_zero()).count();
    let poly = RationalPoly::from_integers(&p[zeros.min(p.len())..]);
    let mut roots = Vec::new();
    for (factor, multiplicity) in poly.square_free_decomposition() {
        for (lower, upper) in isolate_positive(&factor) {
            let exact = IntPoly::from_rational(&factor);
            let (lower, upper) = refine(&exact, lower, upper, sqrt_tolerance);
            roots.push(CertifiedRoot {
                lower,
                upper,
                multiplicity,
            });
        }
    }
    roots.sort_by(|a, b| a.lower.cmp(&b.lower));
    roots
}

/// Disjoint intervals `(a, b)`, each containing exactly one positive root of
/// the square-free polynomial `f`, with `f(a)` and `f(b)` non-zero.
fn isolate_positive(f: &RationalPoly) -> Vec<(Rational, Rational)> {
    let chain = f.sturm_chain();
    let exact = &chain[0];
    let upper = f.cauchy_bound();
    let lower = Rational::zero();
    let count = |a: &Rational, b: &Rational| sign_variations(&chain, a) - sign_variations(&chain, b);
    let mut out = Vec::new();
    let mut stack = vec![(lower.clone(), upper.clone(), count(&lower, &upper))];
    while let Some((a, b, n)) = stack.pop() {
        match n {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let mid = split_point(exact, &a, &b);
                let left = count(&a, &mid);
                stack.push((mid.clone(), b, n - left));
                stack.push((a, mid, left));
            }
        }
    }
    out
}

/// A point strictly inside `(a, b)`, near the midpoint, where `f` does not vanish.
fn split_point(f: &IntPoly, a: &Rational, b: &Rational) -> Rational {
    let two = Rational::from_integer(BigInt::from(2));
    let mid = (a + b) / &two;
    if f.sign_at(&mid) != Ordering::Equal {
        return mid;
    }
    let mut step = (b - a) / Rational::from_integer(BigInt::from(1024));
    loop {
        let candidate = &mid + &step;
        if f.sign_at(&candidate) != Ordering::Equal {
            return candidate;
        }
        step /= &two;
    }
}

fn sqrt_width(a: &Rational, b: &Rational) -> f64 {
    libm::sqrt(to_f64(b)) - libm::sqrt(to_f64(a))
}

/// Shrinks an isolating interval with a sign change until its image under the
/// square root is narrower than `tolerance`.
fn refine(f: &IntPoly, mut a: Rational, mut b: Rational, tolerance: f64) -> (Rational, Rational) {
    let sign_a = f.sign_at(&a);
    debug_assert!(sign_a != Ordering::Equal && f.sign_at(&b) == sign_a.reverse());
    if let Some((lo, hi)) = float_bracket(f, &a, &b, sign_a) {
        a = lo;
        b = hi;
    }
    let two = Rational::from_integer(BigInt::from(2));
    while sqrt_width(&a, &b) > tolerance {
        let mid = (&a + &b) / &two;
        match f.sign_at(&mid) {
            Ordering::Equal => return (mid.clone(), mid),
            s if s == sign_a => a = mid,
            _ => b = mid,
        }
    }
    (a, b)
}

/// Float bisection inside `(a, b)`, then an exact check that a narrow bracket
/// around the float root still shows the sign change.
fn float_bracket(f: &IntPoly, a: &Rational, b: &Rational, sign_a: Ordering) -> Option<(Rational, Rational)> {
    let (mut lo, mut hi) = (to_f64(a), to_f64(b));
    let low_negative = sign_a == Ordering::Less;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = f.eval_f64(mid);
        if !v.is_finite() {
            return None;
        }
        if (v < 0.0) == low_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    let mut delta = (root.abs() * 4.0 * f64::EPSILON).max(f64::MIN_POSITIVE);
    for _ in 0..12 {
        let lower = from_f64(root - delta)?;
        let upper = from_f64(root + delta)?;
        let lower = if &lower > a { lower } else { a.clone() };
        let upper = if &upper < b { upper } else { b.clone() };
        let (sl, su) = (f.sign_at(&lower), f.sign_at(&upper));
        if sl == sign_a && su == sign_a.reverse() {
            return Some((lower, upper));
        }
        delta *= 16.0;
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn square_free_parts() {
        // (s - 1)^2 (s - 2) = s^3 - 4s^2 + 5s - 2
        let p = RationalPoly::from_integers(&ints(&[-2, 5, -4, 1]));
        let parts = p.square_free_decomposition();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (RationalPoly::from_integers(&ints(&[-2, 1])), 1));
        assert_eq!(parts[1], (RationalPoly::from_integers(&ints(&[-1, 1])), 2));
    }

    #[test]
    fn roots_with_multiplicity() {
        let roots = positive_roots(&ints(&[0, 0, -2, 5, -4, 1]), 1e-13);
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].multiplicity, 2);
        assert!((roots[0].midpoint_f64() - 1.0).abs() < 1e-12);
        assert_eq!(roots[1].multiplicity, 1);
        assert!((roots[1].midpoint_f64() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn irrational_roots_are_bracketed() {
        // s^2 - 7s + 11, roots (7 ± √5) / 2.
        let p = ints(&[11, -7, 1]);
        let roots = positive_roots(&p, 1e-13);
        assert_eq!(roots.len(), 2);
        let exact = IntPoly::new(p);
        for r in &roots {
            assert!(r.sqrt_width() <= 1e-13);
            assert_ne!(exact.sign_at(&r.lower), exact.sign_at(&r.upper));
        }
        let s5 = libm::sqrt(5.0);
        assert!((roots[0].midpoint_f64() - (7.0 - s5) / 2.0).abs() < 1e-12);
        assert!((roots[1].midpoint_f64() - (7.0 + s5) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn sturm_counts_roots() {
        // (s - 1)(s - 2)(s - 3)
        let f = RationalPoly::from_integers(&ints(&[-6, 11, -6, 1]));
        let chain = f.sturm_chain();
        let q = |n: i64| Rational::from_integer(BigInt::from(n));
        assert_eq!(sign_variations(&chain, &q(0)) - sign_variations(&chain, &q(10)), 3);
        assert_eq!(sign_variations(&chain, &q(0)) - sign_variations(&chain, &q(2)), 2);
        assert!(f.cauchy_bound() > q(3));
    }
}
