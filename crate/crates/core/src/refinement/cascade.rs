//! The cascade algorithm: power iteration with the refinement operator.
//!
//! On polynomials of degree `n`, `p ↦ 2 Σ_j m_j p(2t - j)` is the upper
//! triangular matrix `2·S₂·C_m` with diagonal `2^(j+1)·Σm`. For a mask with
//! sum `2^(-n-1)` the eigenvalues are `1, 1/2, …, 2^(-n)`, so iteration from
//! any start with nonzero leading coefficient converges to the refined
//! polynomial at rate 1/2.

use num_traits::{Signed, Zero};

use crate::algebra::{binomial, int, pow2, rpow, sup_distance, Matrix, Rational};
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::polynomial::Polynomial;

/// Result of [`cascade`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeReport {
    pub result: Polynomial,
    /// Number of refinement steps applied.
    pub iterations: usize,
    /// Sup-norm of the coefficient change in the last step.
    pub final_delta: Rational,
    pub converged: bool,
}

/// Matrix of `p ↦ 2 Σ_j m_j p(2t - j)` on coefficient vectors of length
/// `n + 1`.
///
/// Entry `(j, k)` for `j ≤ k` is `2^(j+1)·C(k, j)·Σ_i (-i)^(k-j)·m_i`.
pub fn refinement_matrix(m: &Mask, n: usize) -> Matrix {
    // moments[r] = Σ_i (-i)^r m_i
    let moments: Vec<Rational> = (0..=n)
        .map(|r| m.iter().map(|(i, mi)| rpow(&int(-i), r) * mi).sum())
        .collect();
    Matrix::from_fn(n + 1, n + 1, |j, k| {
        if j > k {
            Rational::zero()
        } else {
            pow2(j as i64 + 1) * Rational::from_integer(binomial(k, j)) * &moments[k - j]
        }
    })
}

/// The sequence `p₁, p₂, …` of cascade iterates started from `p0`.
///
/// `p0` must have the degree implied by the mask sum.
pub fn cascade_iterates(m: &Mask, p0: &Polynomial) -> Result<impl Iterator<Item = Polynomial>> {
    let n = m.degree_from_sum()?;
    if p0.degree() != Some(n) {
        return Err(Error::StartDegree {
            expected: n,
            found: p0.degree(),
        });
    }
    let step = refinement_matrix(m, n);
    let mut current = p0.padded(n + 1);
    Ok(std::iter::from_fn(move || {
        current = step
            .mul_vec(&current)
            .expect("square matrix of matching size");
        Some(Polynomial::new(current.clone()))
    }))
}

/// Runs the cascade until the sup-norm change of one step drops below `tol`
/// (or is exactly zero), or `max_iter` steps have been taken.
///
/// Not converging within `max_iter` is reported through
/// [`CascadeReport::converged`], not as an error.
pub fn cascade(
    m: &Mask,
    p0: &Polynomial,
    max_iter: usize,
    tol: &Rational,
) -> Result<CascadeReport> {
    let mut iterates = cascade_iterates(m, p0)?;
    let mut previous = p0.clone();
    let mut final_delta = Rational::zero();
    for iteration in 1..=max_iter {
        let next = iterates.next().expect("infinite iterator");
        final_delta = sup_distance(next.coeffs(), previous.coeffs());
        previous = next;
        if final_delta.is_zero() || &final_delta < tol {
            return Ok(CascadeReport {
                result: previous,
                iterations: iteration,
                final_delta,
                converged: true,
            });
        }
    }
    debug_assert!(!final_delta.is_negative());
    Ok(CascadeReport {
        result: previous,
        iterations: max_iter,
        final_delta,
        converged: false,
    })
}

/// The recommended start `(0, …, 0, 1)`, i.e. `t^n`.
pub(crate) fn default_start(m: &Mask) -> Result<Polynomial> {
    Ok(Polynomial::monomial(m.degree_from_sum()?))
}

impl CascadeReport {
    /// Cascade from `t^n` with the given limits.
    pub fn from_default_start(m: &Mask, max_iter: usize, tol: &Rational) -> Result<Self> {
        cascade(m, &default_start(m)?, max_iter, tol)
    }

    pub fn is_exact_fixed_point(&self) -> bool {
        self.converged && self.final_delta.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::refinement::poly_from_mask;

    fn mask(s: &str) -> Mask {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_matrix() {
        assert_eq!(refinement_matrix(&mask("0:1/2"), 0), Matrix::identity(1));
    }

    #[test]
    fn quadratic_matrix() {
        let m = refinement_matrix(&mask("0:1/64,3/64,3/64,1/64"), 2);
        assert_eq!(m.diagonal(), vec![ratio(1, 4), ratio(1, 2), int(1)]);
        assert!(m.is_upper_triangular());
        let fixed = vec![ratio(5, 2), int(-3), int(1)];
        assert_eq!(m.mul_vec(&fixed).unwrap(), fixed);
    }

    #[test]
    fn converges_to_refined_polynomial() {
        let m = mask("0:1/64,3/64,3/64,1/64");
        let tol = pow2(-40);
        let report = CascadeReport::from_default_start(&m, 200, &tol).unwrap();
        assert!(report.converged);
        let exact = poly_from_mask(&m).unwrap();
        assert!(sup_distance(report.result.coeffs(), exact.coeffs()) < tol);
        assert_eq!(report.result.leading_coeff(), &int(1));
    }

    #[test]
    fn fixed_point_start() {
        let m = mask("0:1/64,3/64,3/64,1/64");
        let report = cascade(&m, &poly("5/2,-3,1"), 10, &pow2(-40)).unwrap();
        assert_eq!(report.iterations, 1);
        assert!(report.is_exact_fixed_point());

        let report = cascade(&mask("0:1/16,3/16,3/16,1/16"), &poly("1"), 10, &pow2(-40)).unwrap();
        assert_eq!(report.result, poly("1"));
        assert_eq!(report.iterations, 1);
    }

    #[test]
    fn reports_non_convergence() {
        let m = mask("0:1/64,3/64,3/64,1/64");
        let report = cascade(&m, &poly("0,0,1"), 3, &pow2(-40)).unwrap();
        assert!(!report.converged);
        assert_eq!(report.iterations, 3);
        assert!(report.final_delta.is_positive());
    }

    #[test]
    fn start_degree_is_checked() {
        let m = mask("0:1/64,3/64,3/64,1/64");
        assert_eq!(
            cascade(&m, &poly("0,1"), 3, &pow2(-40)),
            Err(Error::StartDegree {
                expected: 2,
                found: Some(1)
            })
        );
        assert!(matches!(
            cascade(&mask("0:1/3"), &poly("1"), 3, &pow2(-40)),
            Err(Error::NotRefiningPolynomial(_))
        ));
    }
}
