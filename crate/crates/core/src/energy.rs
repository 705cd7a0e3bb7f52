//! Graph energy of trees by three independent methods.
//!
//! * [`energy_from_roots`]: the characteristic polynomial of a forest is
//!   `φ(λ) = Σ (-1)^k m(G, k) λ^(n-2k)`, so with `s = λ²` the nonzero
//!   eigenvalues come in pairs `±√s` over the positive roots of an integer
//!   polynomial. Roots are bracketed exactly.
//! * [`energy_coulson`]: quadrature of `(2/π) ∫₀^∞ x⁻² ln M(G, x²) dx`.
//! * [`energy_eigen`]: dense symmetric eigendecomposition of the adjacency matrix.

use alloc::format;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;

use crate::graph::Tree;
use crate::matching::matching_poly;
use crate::poly::MatchingPolynomial;
use crate::roots::positive_roots;
use crate::{Error, Result};

/// Bracket width, after taking square roots, for every certified eigenvalue.
pub const ROOT_TOLERANCE: f64 = 1e-13;

/// Default number of Simpson panels per integral.
pub const DEFAULT_QUADRATURE_STEPS: usize = 10_000;

/// Largest admissible Richardson gap for the quadrature.
pub const QUADRATURE_TOLERANCE: f64 = 1e-9;

/// Pairwise agreement required by [`energy_verified`].
pub const CROSS_CHECK_TOLERANCE: f64 = 1e-8;

/// Vertex limit for [`energy_eigen`].
pub const EIGEN_MAX_VERTICES: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnergyMethod {
    Roots,
    Coulson,
    Eigen,
}

impl EnergyMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            EnergyMethod::Roots => "roots",
            EnergyMethod::Coulson => "coulson",
            EnergyMethod::Eigen => "eigen",
        }
    }
}

impl fmt::Display for EnergyMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `En(G)` together with the method that produced it and an error bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnergyValue {
    pub value: f64,
    pub method: EnergyMethod,
    pub error_bound: f64,
}

impl EnergyValue {
    /// `self < other` with the gap exceeding both error bounds and `floor`.
    pub fn certified_less_than(&self, other: &EnergyValue, floor: f64) -> bool {
        other.value - self.value > (self.error_bound + other.error_bound).max(floor)
    }

    /// `self <= other` up to the combined error bounds.
    pub fn at_most(&self, other: &EnergyValue) -> bool {
        self.value <= other.value + self.error_bound + other.error_bound
    }
}

/// Signed coefficients of `φ(λ) = Σ_k (-1)^k m(G, k) λ^(n-2k)`, lowest degree first.
pub fn char_poly_from_matching(p: &MatchingPolynomial, vertex_count: usize) -> Result<Vec<BigInt>> {
    if 2 * p.degree() > vertex_count {
        return Err(Error::DegreeMismatch {
            degree: p.degree(),
            vertices: vertex_count,
        });
    }
    let mut coefficients = alloc::vec![BigInt::default(); vertex_count + 1];
    for (k, m) in p.coefficients().iter().enumerate() {
        let c = BigInt::from(m.clone());
        coefficients[vertex_count - 2 * k] = if k % 2 == 0 { c } else { -c };
    }
    Ok(coefficients)
}

/// `Σ_k (-1)^k m_k s^(N-k)` with `N` the matching number, lowest degree first.
/// Its positive roots are the squares of the positive eigenvalues.
pub fn squared_spectrum_poly(p: &MatchingPolynomial) -> Vec<BigInt> {
    let top = p.degree();
    let mut coefficients = alloc::vec![BigInt::default(); top + 1];
    for (k, m) in p.coefficients().iter().enumerate() {
        let c = BigInt::from(m.clone());
        coefficients[top - k] = if k % 2 == 0 { c } else { -c };
    }
    coefficients
}

/// Energy from the exactly bracketed roots of the squared spectrum polynomial.
pub fn energy_from_roots(t: &Tree) -> EnergyValue {
    energy_from_matching_poly(&matching_poly(t))
}

/// [`energy_from_roots`] for a forest given by its matching polynomial.
pub fn energy_from_matching_poly(p: &MatchingPolynomial) -> EnergyValue {
    let roots = positive_roots(&squared_spectrum_poly(p), ROOT_TOLERANCE);
    let mut value = 0.0;
    let mut error = 0.0;
    for r in &roots {
        let multiplicity = r.multiplicity as f64;
        value += 2.0 * multiplicity * libm::sqrt(r.midpoint_f64());
        error += multiplicity * r.sqrt_width();
    }
    // Rounding in the conversion to floats and in the summation.
    error += 8.0 * f64::EPSILON * value * (roots.len() as f64 + 1.0);
    EnergyValue {
        value,
        method: EnergyMethod::Roots,
        error_bound: error,
    }
}

/// Coulson integral `(2/π) ∫₀^∞ x⁻² ln M(G, x²) dx` by composite Simpson.
///
/// The range is split at `x = 1`. With `x = 1/t` on the tail, and `N` the
/// matching number,
/// `∫₁^∞ x⁻² ln M(x²) dx = 2N + ∫₀¹ ln(Σ_k m_k t^(2(N-k))) dt`,
/// which removes the logarithmic growth at infinity. Both remaining integrands
/// are smooth on `[0, 1]`; the first tends to `m₁` at the origin. The error
/// estimate is the Richardson gap between `steps` and `2 steps` panels.
pub fn energy_coulson(t: &Tree, steps: usize) -> Result<EnergyValue> {
    energy_coulson_from_matching_poly(&matching_poly(t), steps)
}

pub fn energy_coulson_from_matching_poly(p: &MatchingPolynomial, steps: usize) -> Result<EnergyValue> {
    let m = p.to_f64_coefficients();
    let top = p.degree();
    if top == 0 {
        return Ok(EnergyValue {
            value: 0.0,
            method: EnergyMethod::Coulson,
            error_bound: 0.0,
        });
    }
    let head = |x: f64| -> f64 {
        if x == 0.0 {
            return m[1];
        }
        let x2 = x * x;
        // M(x²) - 1, accumulated without the constant term.
        let tail = m[1..].iter().rev().fold(0.0, |acc, c| acc * x2 + c) * x2;
        libm::log1p(tail) / x2
    };
    let tail = |t: f64| -> f64 {
        let t2 = t * t;
        // Σ_k m_k t^(2(top - k)) = m_top + m_{top-1} t² + ...
        let r = m.iter().fold(0.0, |acc, c| acc * t2 + c);
        libm::log(r)
    };
    let steps = steps.max(2).next_multiple_of(2);
    let coarse = simpson(&head, steps) + simpson(&tail, steps);
    let fine = simpson(&head, 2 * steps) + simpson(&tail, 2 * steps);
    let gap = (fine - coarse).abs();
    let scale = 2.0 / PI;
    if gap * scale > QUADRATURE_TOLERANCE {
        return Err(Error::NonConvergent {
            gap: gap * scale,
            tolerance: QUADRATURE_TOLERANCE,
        });
    }
    let integral = fine + (fine - coarse) / 15.0 + 2.0 * top as f64;
    let value = scale * integral;
    Ok(EnergyValue {
        value,
        method: EnergyMethod::Coulson,
        error_bound: scale * gap / 15.0 + 64.0 * f64::EPSILON * value * libm::sqrt(steps as f64),
    })
}

fn simpson(f: &dyn Fn(f64) -> f64, panels: usize) -> f64 {
    let h = 1.0 / panels as f64;
    let mut sum = f(0.0) + f(1.0);
    for i in 1..panels {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += weight * f(i as f64 * h);
    }
    sum * h / 3.0
}

/// `Σ |λ_i|` over the eigenvalues of the adjacency matrix.
pub fn energy_eigen(t: &Tree) -> Result<EnergyValue> {
    let n = t.vertex_count();
    if n > EIGEN_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "dense eigensolver is limited to {EIGEN_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let mut adjacency = DMatrix::<f64>::zeros(n, n);
    for &(u, v) in t.edges() {
        adjacency[(u, v)] = 1.0;
        adjacency[(v, u)] = 1.0;
    }
    let eigen = SymmetricEigen::new(adjacency);
    let value: f64 = eigen.eigenvalues.iter().map(|l| l.abs()).sum();
    let spectral_radius = eigen.eigenvalues.iter().fold(0.0f64, |m, l| m.max(l.abs()));
    Ok(EnergyValue {
        value,
        method: EnergyMethod::Eigen,
        error_bound: 64.0 * f64::EPSILON * n as f64 * spectral_radius.max(1.0),
    })
}

/// Energy by the root method.
pub fn energy(t: &Tree) -> EnergyValue {
    energy_from_roots(t)
}

/// Energy by the root method, after checking that all three methods agree
/// within [`CROSS_CHECK_TOLERANCE`].
pub fn energy_verified(t: &Tree) -> Result<EnergyValue> {
    let roots = energy_from_roots(t);
    let coulson = energy_coulson(t, DEFAULT_QUADRATURE_STEPS)?;
    let eigen = energy_eigen(t)?;
    for other in [coulson, eigen] {
        let gap = (roots.value - other.value).abs();
        if gap > CROSS_CHECK_TOLERANCE {
            return Err(Error::CrossCheckFailed(format!(
                "roots gives {} but {} gives {} (gap {gap:e})",
                roots.value, other.method, other.value
            )));
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Caterpillar;

    fn big(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn cat_423() -> Tree {
        Caterpillar::from_spine(&[4, 2, 3]).unwrap().to_tree()
    }

    /// `2 (√((7 + √5)/2) + √((7 - √5)/2))`, the energy of `C(4, 2, 3)`.
    fn energy_423() -> f64 {
        let s5 = libm::sqrt(5.0);
        2.0 * (libm::sqrt((7.0 + s5) / 2.0) + libm::sqrt((7.0 - s5) / 2.0))
    }

    #[test]
    fn characteristic_polynomials() {
        let p2 = MatchingPolynomial::from_u64(&[1, 1]);
        assert_eq!(char_poly_from_matching(&p2, 2).unwrap(), big(&[-1, 0, 1]));
        let k13 = MatchingPolynomial::from_u64(&[1, 3]);
        assert_eq!(char_poly_from_matching(&k13, 4).unwrap(), big(&[0, 0, -3, 0, 1]));
        let c = MatchingPolynomial::from_u64(&[1, 7, 11]);
        assert_eq!(char_poly_from_matching(&c, 8).unwrap(), big(&[0, 0, 0, 0, 11, 0, -7, 0, 1]));
        assert_eq!(
            char_poly_from_matching(&c, 3),
            Err(Error::DegreeMismatch { degree: 2, vertices: 3 })
        );
    }

    #[test]
    fn root_energies() {
        let e = energy_from_roots(&Tree::path(2).unwrap());
        assert!((e.value - 2.0).abs() < 1e-12);
        assert!(e.error_bound <= 1e-12);
        assert!((energy_from_roots(&Tree::star(4)).value - 4.0).abs() < 1e-12);
        let e = energy_from_roots(&cat_423());
        assert!((e.value - energy_423()).abs() < 1e-12, "{}", e.value);
        assert!((e.value - 7.38465).abs() < 1e-4);
        assert_eq!(energy_from_roots(&Tree::single_vertex()).value, 0.0);
    }

    #[test]
    fn coulson_energies() {
        let e = energy_coulson(&Tree::path(2).unwrap(), 10_000).unwrap();
        assert!((e.value - 2.0).abs() < 1e-8, "{}", e.value);
        let e = energy_coulson(&Tree::star(3), 10_000).unwrap();
        assert!((e.value - 2.0 * libm::sqrt(3.0)).abs() < 1e-8, "{}", e.value);
        let e = energy_coulson(&cat_423(), 10_000).unwrap();
        assert!((e.value - energy_423()).abs() < 1e-8, "{}", e.value);
    }

    #[test]
    fn coulson_rejects_coarse_grids() {
        let t = Caterpillar::from_spine(&[6, 2, 2, 6]).unwrap().to_tree();
        assert!(matches!(energy_coulson(&t, 2), Err(Error::NonConvergent { .. })));
    }

    #[test]
    fn eigen_energies() {
        assert!((energy_eigen(&Tree::path(2).unwrap()).unwrap().value - 2.0).abs() < 1e-12);
        let s5 = libm::sqrt(5.0);
        let p4 = 2.0 * (libm::sqrt((3.0 + s5) / 2.0) + libm::sqrt((3.0 - s5) / 2.0));
        assert!((energy_eigen(&Tree::path(4).unwrap()).unwrap().value - p4).abs() < 1e-12);
        assert!((p4 - 4.47214).abs() < 1e-5);
    }

    #[test]
    fn dispatcher() {
        assert!((energy(&Tree::path(2).unwrap()).value - 2.0).abs() < 1e-12);
        assert!((energy_verified(&Tree::star(4)).unwrap().value - 4.0).abs() < 1e-12);
        assert!((energy_verified(&cat_423()).unwrap().value - 7.38465).abs() < 1e-4);
    }

    #[test]
    fn certified_comparisons() {
        let a = EnergyValue { value: 1.0, method: EnergyMethod::Roots, error_bound: 1e-12 };
        let b = EnergyValue { value: 1.0 + 1e-6, method: EnergyMethod::Roots, error_bound: 1e-12 };
        assert!(a.certified_less_than(&b, 1e-9));
        assert!(!b.certified_less_than(&a, 1e-9));
        assert!(!a.certified_less_than(&a, 1e-9));
        assert!(a.at_most(&a));
    }
}
