//! Exact refinement analysis for polynomials.
//!
//! A function `φ` is refinable with respect to a finitely supported mask `m`
//! when `φ(t) = 2 Σ_j m_j φ(2t - j)`. Polynomials are refinable: a mask with
//! sum `2^(-n-1)` refines exactly one monic polynomial of degree `n`, and a
//! polynomial of degree `n` is refined by exactly one mask supported in
//! `{0, …, n}` plus every mask that differs from it by a multiple of
//! `(1,-1)^(n+1)`.
//!
//! Everything runs over exact rationals, so each identity can be checked by
//! equality.
//!
//! ```
//! use refinemask::{mask_from_poly, poly_from_mask, verify_refines, Mask, Polynomial};
//!
//! let m: Mask = "0:1/64,3/64,3/64,1/64".parse()?;
//! let p = poly_from_mask(&m)?;
//! assert_eq!(p.to_string(), "5/2,-3,1");
//! assert!(verify_refines(&m, &p));
//! assert_eq!(mask_from_poly(&p)?.to_string(), "0:1/32,0,3/32");
//! # Ok::<(), refinemask::Error>(())
//! ```

pub mod algebra;
pub mod error;
pub mod mask;
pub mod polynomial;
pub mod refinement;

pub use algebra::{Matrix, Rational};
pub use error::{Error, Result};
pub use mask::{difference_power, reduce_mod_difference, Mask};
pub use polynomial::Polynomial;
pub use refinement::{
    antiderivative_constant, cascade, cascade_iterates, difference_matrix, equivalence_witness,
    extend_mask, integration_constant, mask_from_poly, mask_from_poly_at_nodes, masks_equivalent,
    poly_convolve_via_masks, poly_from_mask, refine_apply, refinement_matrix, verify_refines,
    CascadeReport, IntegrationConstant, RefinablePair,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/masks-to-polynomials.md")]
    mod masks_to_polynomials {}
    #[doc = include_str!("../../../book/src/polynomials-to-masks.md")]
    mod polynomials_to_masks {}
    #[doc = include_str!("../../../book/src/equivalent-masks.md")]
    mod equivalent_masks {}
    #[doc = include_str!("../../../book/src/calculus.md")]
    mod calculus {}
    #[doc = include_str!("../../../book/src/cascade.md")]
    mod cascade {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
