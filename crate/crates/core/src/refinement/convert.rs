//! Mask → polynomial and polynomial → mask conversions.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::algebra::{
    binomial, int, pow2, ratio, solve_upper_triangular, solve_vandermonde, Matrix, Rational,
};
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::polynomial::Polynomial;

/// The unique monic polynomial refined by `m`.
///
/// Its degree `n` is read off the mask sum `2^(-n-1)`. Starting from the
/// constant `1`, refined by `2^n·m`, each step integrates the previous
/// polynomial and fixes the constant term so that the next mask in the chain
/// `2^(n-1)·m, …, m` refines it.
pub fn poly_from_mask(m: &Mask) -> Result<Polynomial> {
    let n = m.degree_from_sum()?;
    let mut q = Polynomial::constant(Rational::one());
    for d in 1..=n {
        // Sum of this mask is 2^(-d-1); q is monic of degree d-1 and refined by 2·level.
        let level = m.scale(&pow2((n - d) as i64));
        let big_q = q.antiderivative();
        let lead = big_q.leading_coeff().clone();
        let shifted_sum: Rational = level.iter().map(|(j, mj)| mj * big_q.eval(&int(-j))).sum();
        let constant = int(2) * shifted_sum / (&lead * (Rational::one() - pow2(-(d as i64))));
        let mut coeffs: Vec<Rational> = big_q.coeffs().iter().map(|c| c / &lead).collect();
        coeffs[0] = constant;
        q = Polynomial::new(coeffs);
    }
    Ok(q)
}

/// `U = (p, Δp, …, Δⁿp)` as columns. Column `k` has degree `n - k`, so `U`
/// is anti-triangular and `P = U · Lₙ ⋯ L₁` for the shifted-polynomial
/// matrix `P`.
pub fn difference_matrix(p: &Polynomial) -> Result<Matrix> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let mut columns = Vec::with_capacity(n + 1);
    let mut diff = p.clone();
    for _ in 0..=n {
        columns.push(diff.padded(n + 1));
        diff = diff.finite_difference();
    }
    Matrix::from_columns(columns)
}

/// The unique mask supported in `{0, …, deg p}` that refines `p`.
///
/// Solves `P·m = ½·p(t/2)` through the difference factorization: one
/// back-substitution against `U` followed by `n` passes of adjacent
/// differences. Trailing zeros are trimmed, so `p = t` yields `¼·δ₀`.
pub fn mask_from_poly(p: &Polynomial) -> Result<Mask> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let u = difference_matrix(p)?;
    let rhs = p.shrink(&ratio(1, 2)).scale(&ratio(1, 2)).padded(n + 1);
    let mut y = solve_upper_triangular(&u.reverse_columns(), &rhs)?;
    y.reverse();
    // Apply L_j^{-1} for j = n, …, 1: rows j-1..n-1 take differences with their successor.
    for j in (1..=n).rev() {
        for i in j - 1..n {
            let next = y[i + 1].clone();
            y[i] -= next;
        }
    }
    Ok(Mask::new(0, y))
}

/// The unique mask supported on the given integer nodes that refines `p`.
///
/// Uses `P = A·V` where `A[i][j] = C(i+j, i)·p_(i+j)` collects the scaled
/// derivatives of `p` and `V[i][j] = (-ℓ_j)^i` is a Vandermonde matrix in the
/// negated nodes. `A` is anti-triangular, `V` is solved by divided
/// differences.
pub fn mask_from_poly_at_nodes(p: &Polynomial, nodes: &[i64]) -> Result<Mask> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if nodes.len() != n + 1 {
        return Err(Error::InvalidNodes(format!(
            "degree {n} needs {} nodes, got {}",
            n + 1,
            nodes.len()
        )));
    }
    let distinct: BTreeSet<i64> = nodes.iter().copied().collect();
    if distinct.len() != nodes.len() {
        return Err(Error::InvalidNodes(
            "nodes must be pairwise distinct".into(),
        ));
    }

    let taylor = Matrix::from_fn(n + 1, n + 1, |i, j| {
        if i + j <= n {
            Rational::from_integer(binomial(i + j, i)) * p.coeff(i + j)
        } else {
            Rational::zero()
        }
    });
    let rhs = p.shrink(&ratio(1, 2)).scale(&ratio(1, 2)).padded(n + 1);
    let mut y = solve_upper_triangular(&taylor.reverse_columns(), &rhs)?;
    y.reverse();

    let negated: Vec<Rational> = nodes.iter().map(|&l| int(-l)).collect();
    let weights = solve_vandermonde(&negated, &y)?;

    let lo = *distinct.first().expect("at least one node");
    let hi = *distinct.last().expect("at least one node");
    let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
    for (&node, w) in nodes.iter().zip(weights) {
        coeffs[(node - lo) as usize] = w;
    }
    Ok(Mask::new(lo, coeffs))
}

/// Experimental convolution of polynomials through their short masks.
///
/// Returns the monic polynomial refined by `mask_from_poly(p) * mask_from_poly(q)`,
/// of degree `deg p + deg q + 1`. The result depends on which refining masks
/// are chosen and is not distributive over addition.
pub fn poly_convolve_via_masks(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let m = mask_from_poly(p)?.convolve(&mask_from_poly(q)?);
    poly_from_mask(&m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::solve_general;
    use crate::refinement::verify_refines;

    fn mask(s: &str) -> Mask {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn polynomials_of_the_quadratic_chain() {
        assert_eq!(
            poly_from_mask(&mask("0:1/16,3/16,3/16,1/16")).unwrap(),
            poly("1")
        );
        assert_eq!(
            poly_from_mask(&mask("0:1/32,3/32,3/32,1/32")).unwrap(),
            poly("-3/2,1")
        );
        assert_eq!(
            poly_from_mask(&mask("0:1/64,3/64,3/64,1/64")).unwrap(),
            poly("5/2,-3,1")
        );
    }

    #[test]
    fn poly_from_mask_other_cases() {
        assert_eq!(
            poly_from_mask(&mask("0:3/8,-3/8,1/8")).unwrap(),
            poly("1,2,1")
        );
        for k in 0..6 {
            let m = Mask::impulse(0, pow2(-(k as i64) - 1));
            assert_eq!(poly_from_mask(&m).unwrap(), Polynomial::monomial(k));
        }
        assert_eq!(
            poly_from_mask(&mask("0:1/8,3/8,3/8,1/8")),
            Err(Error::NotRefiningPolynomial(int(1)))
        );
    }

    #[test]
    fn difference_matrix_example() {
        let u = difference_matrix(&poly("5/2,-3,1")).unwrap();
        let expected = Matrix::from_rows(vec![
            vec![ratio(5, 2), int(4), int(2)],
            vec![int(-3), int(-2), int(0)],
            vec![int(1), int(0), int(0)],
        ])
        .unwrap();
        assert_eq!(u, expected);
    }

    #[test]
    fn short_masks() {
        assert_eq!(mask_from_poly(&poly("1")).unwrap(), mask("0:1/2"));
        assert_eq!(
            mask_from_poly(&poly("5/2,-3,1")).unwrap(),
            mask("0:1/32,0,3/32")
        );
        assert_eq!(mask_from_poly(&poly("-3/2,1")).unwrap(), mask("0:-1/8,3/8"));
        assert_eq!(mask_from_poly(&poly("0,1")).unwrap(), mask("0:1/4"));
        assert_eq!(
            mask_from_poly(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn short_mask_matches_direct_solve() {
        let p = poly("5/2,-3,1");
        let full = p.shifted_poly_matrix().unwrap();
        let rhs = p.shrink(&ratio(1, 2)).scale(&ratio(1, 2)).padded(3);
        let direct = solve_general(&full, &rhs).unwrap();
        assert_eq!(direct, vec![ratio(1, 32), int(0), ratio(3, 32)]);
        assert_eq!(mask_from_poly(&p).unwrap(), Mask::new(0, direct));
    }

    #[test]
    fn node_masks() {
        let p = poly("5/2,-3,1");
        assert_eq!(
            mask_from_poly_at_nodes(&p, &[0, 1, 2]).unwrap(),
            mask("0:1/32,0,3/32")
        );
        assert_eq!(
            mask_from_poly_at_nodes(&p, &[2, 0, 1]).unwrap(),
            mask("0:1/32,0,3/32")
        );

        let shifted = mask_from_poly_at_nodes(&p, &[1, 2, 3]).unwrap();
        assert!(shifted.offset() >= 1 && shifted.end() <= 4);
        assert!(verify_refines(&shifted, &p));

        let sparse = mask_from_poly_at_nodes(&p, &[-4, 0, 7]).unwrap();
        assert!(verify_refines(&sparse, &p));
        for (i, c) in sparse.iter() {
            assert!(c.is_zero() || [-4, 0, 7].contains(&i));
        }

        assert_eq!(
            mask_from_poly_at_nodes(&poly("1"), &[5]).unwrap(),
            Mask::impulse(5, ratio(1, 2))
        );
    }

    #[test]
    fn node_validation() {
        let p = poly("5/2,-3,1");
        assert!(matches!(
            mask_from_poly_at_nodes(&p, &[0, 1]),
            Err(Error::InvalidNodes(_))
        ));
        assert!(matches!(
            mask_from_poly_at_nodes(&p, &[0, 1, 1]),
            Err(Error::InvalidNodes(_))
        ));
        assert_eq!(
            mask_from_poly_at_nodes(&Polynomial::zero(), &[0]),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn mask_convolution_of_constants() {
        let t = poly_convolve_via_masks(&poly("1"), &poly("1")).unwrap();
        assert_eq!(t, poly("0,1"));
    }

    #[test]
    fn mask_convolution_of_lines() {
        let p = poly("-3/2,1");
        let q = poly("2,1");
        let r = poly_convolve_via_masks(&p, &q).unwrap();
        assert_eq!(r.degree(), Some(3));
        assert!(r.leading_coeff().is_one());
        let m = mask_from_poly(&p)
            .unwrap()
            .convolve(&mask_from_poly(&q).unwrap());
        assert_eq!(m.sum(), pow2(-4));
        assert!(verify_refines(&m, &r));
    }
}
