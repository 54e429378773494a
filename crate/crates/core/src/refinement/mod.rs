//! The two-scale relation `φ(t) = 2 Σ_j m_j φ(2t - j)` specialised to
//! polynomial `φ`, and everything that can be computed from it.

mod calculus;
mod cascade;
mod convert;
mod coset;

pub use calculus::{antiderivative_constant, integration_constant, IntegrationConstant};
pub use cascade::{cascade, cascade_iterates, refinement_matrix, CascadeReport};
pub use convert::{
    difference_matrix, mask_from_poly, mask_from_poly_at_nodes, poly_convolve_via_masks,
    poly_from_mask,
};
pub use coset::{equivalence_witness, extend_mask, masks_equivalent};

use num_traits::Zero;

use crate::algebra::{int, ratio, Rational};
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::polynomial::Polynomial;

/// Coefficients of `t ↦ 2 Σ_j m_j p(2t - j)`.
pub fn refine_apply(m: &Mask, p: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (j, mj) in m.iter() {
        if !mj.is_zero() {
            acc = &acc + &p.translate(j).scale(mj);
        }
    }
    acc.shrink(&int(2)).scale(&int(2))
}

/// Whether `m` refines `p`, as an exact identity of coefficient vectors.
pub fn verify_refines(m: &Mask, p: &Polynomial) -> bool {
    refine_apply(m, p) == *p
}

/// A mask together with a nonzero polynomial it refines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinablePair {
    mask: Mask,
    poly: Polynomial,
}

impl RefinablePair {
    /// Checks the refinement relation. The zero polynomial is rejected since
    /// every mask refines it.
    pub fn new(mask: Mask, poly: Polynomial) -> Result<Self> {
        if poly.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !verify_refines(&mask, &poly) {
            return Err(Error::NotRefinable);
        }
        debug_assert_eq!(mask.degree_from_sum().ok(), poly.degree());
        Ok(RefinablePair { mask, poly })
    }

    /// Pairs `m` with its monic refined polynomial.
    pub fn from_mask(mask: Mask) -> Result<Self> {
        let poly = poly_from_mask(&mask)?;
        Ok(RefinablePair { mask, poly })
    }

    pub fn mask(&self) -> &Mask {
        &self.mask
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("pair polynomial is nonzero")
    }

    pub fn into_parts(self) -> (Mask, Polynomial) {
        (self.mask, self.poly)
    }

    /// `(2·m, p')`.
    pub fn derivative_pair(&self) -> Result<Self> {
        if self.degree() == 0 {
            return Err(Error::ConstantPolynomial);
        }
        Self::new(self.mask.scale(&int(2)), self.poly.derivative())
    }

    /// `(m/2, Φ + c)` where `Φ` is the antiderivative vanishing at 0 and `c`
    /// the integration constant that keeps the relation intact. When any
    /// constant works, `c = 0` is used.
    pub fn antiderivative_pair(&self) -> Result<Self> {
        let c = match antiderivative_constant(&self.mask, &self.poly)? {
            IntegrationConstant::Unique(c) => c,
            IntegrationConstant::Arbitrary => Rational::zero(),
            IntegrationConstant::Impossible => return Err(Error::NoIntegrationConstant),
        };
        let poly = &self.poly.antiderivative() + &Polynomial::constant(c);
        Self::new(self.mask.scale(&ratio(1, 2)), poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(s: &str) -> Mask {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(
            refine_apply(&mask("0:3/8,-3/8,1/8"), &poly("1,2,1")),
            poly("1,2,1")
        );
        assert_eq!(
            refine_apply(&mask("0:1/64,3/64,3/64,1/64"), &poly("5/2,-3,1")),
            poly("5/2,-3,1")
        );
        assert!(refine_apply(&Mask::zero(), &poly("1,2,3")).is_zero());
    }

    #[test]
    fn verify_examples() {
        assert!(verify_refines(
            &mask("0:1/32,3/32,3/32,1/32"),
            &poly("-3/2,1")
        ));
        assert!(!verify_refines(
            &mask("0:1/16,3/16,3/16,1/16"),
            &poly("0,1")
        ));
        assert!(verify_refines(&mask("0:1/32,0,3/32"), &poly("5/2,-3,1")));
    }

    #[test]
    fn pair_construction() {
        assert!(RefinablePair::new(mask("0:1/2"), poly("1")).is_ok());
        assert_eq!(
            RefinablePair::new(mask("0:1/2"), poly("0,1")),
            Err(Error::NotRefinable)
        );
        assert_eq!(
            RefinablePair::new(mask("0:1/2"), Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn derivative_pairs() {
        let top = RefinablePair::new(mask("0:1/64,3/64,3/64,1/64"), poly("5/2,-3,1")).unwrap();
        let d = top.derivative_pair().unwrap();
        assert_eq!(d.mask(), &mask("0:1/32,3/32,3/32,1/32"));
        assert_eq!(d.poly(), &poly("-3,2"));

        let mid = RefinablePair::new(mask("0:1/32,3/32,3/32,1/32"), poly("-3/2,1")).unwrap();
        let d = mid.derivative_pair().unwrap();
        assert_eq!(d.mask(), &mask("0:1/16,3/16,3/16,1/16"));
        assert_eq!(d.poly(), &poly("1"));

        assert_eq!(d.derivative_pair(), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn antiderivative_pairs() {
        let base = RefinablePair::new(mask("0:1/16,3/16,3/16,1/16"), poly("1")).unwrap();
        let up = base.antiderivative_pair().unwrap();
        assert_eq!(up.mask(), &mask("0:1/32,3/32,3/32,1/32"));
        assert_eq!(up.poly(), &poly("-3/2,1"));

        let top = up.antiderivative_pair().unwrap();
        assert_eq!(top.mask(), &mask("0:1/64,3/64,3/64,1/64"));
        assert_eq!(top.poly(), &poly("5/4,-3/2,1/2"));
        assert_eq!(top.poly().monic().unwrap(), poly("5/2,-3,1"));

        assert_eq!(top.derivative_pair().unwrap(), up);
    }

    #[test]
    fn from_mask_is_monic() {
        let pair = RefinablePair::from_mask(mask("3:1/16")).unwrap();
        assert_eq!(pair.poly().leading_coeff(), &ratio(1, 1));
        assert!(verify_refines(pair.mask(), pair.poly()));
    }
}
