use num_traits::{One, Zero};

use crate::algebra::{int, Rational};
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::polynomial::Polynomial;

use super::verify_refines;

/// Which integration constants `c` make `Φ + c` refinable by `m/2`, given
/// that `m` refines `Φ'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntegrationConstant {
    /// Exactly one constant works (mask sum ≠ 1).
    Unique(Rational),
    /// Mask sum is 1 and every constant works.
    Arbitrary,
    /// Mask sum is 1 and no constant works.
    Impossible,
}

/// Classifies the integration constant from the mask and the antiderivative
/// `Φ` (with `Φ(0) = 0`) alone.
///
/// With `s = Σ m_j` and `r = Σ m_j Φ(-j)`, the constant must satisfy
/// `c·(1 - s) = r`.
pub fn integration_constant(m: &Mask, antiderivative: &Polynomial) -> IntegrationConstant {
    let s = m.sum();
    let r: Rational = m
        .iter()
        .map(|(j, mj)| mj * antiderivative.eval(&int(-j)))
        .sum();
    if !s.is_one() {
        IntegrationConstant::Unique(r / (Rational::one() - s))
    } else if r.is_zero() {
        IntegrationConstant::Arbitrary
    } else {
        IntegrationConstant::Impossible
    }
}

/// Integration constant for lifting a refinable pair `(m, phi)` to
/// `(m/2, Φ + c)`. Fails if `m` does not refine `phi`.
pub fn antiderivative_constant(m: &Mask, phi: &Polynomial) -> Result<IntegrationConstant> {
    if !verify_refines(m, phi) {
        return Err(Error::NotRefinable);
    }
    Ok(integration_constant(m, &phi.antiderivative()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::refinement::verify_refines;

    fn mask(s: &str) -> Mask {
        s.parse().unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn unique_constant_for_constant_polynomial() {
        let c = antiderivative_constant(&mask("0:1/16,3/16,3/16,1/16"), &poly("1")).unwrap();
        assert_eq!(c, IntegrationConstant::Unique(ratio(-3, 2)));
    }

    #[test]
    fn unique_constant_for_linear_polynomial() {
        let m = mask("0:1/32,3/32,3/32,1/32");
        let phi = poly("-3/2,1");
        // Φ(0), Φ(-1), Φ(-2), Φ(-3) = 0, 2, 5, 9 for Φ = -3t/2 + t²/2.
        let big_phi = phi.antiderivative();
        let values: Vec<Rational> = (0..4).map(|j| big_phi.eval(&int(-j))).collect();
        assert_eq!(values, vec![int(0), int(2), int(5), int(9)]);
        let raw = ratio(30, 32) / (int(1) - m.sum());
        let c = antiderivative_constant(&m, &phi).unwrap();
        assert_eq!(c, IntegrationConstant::Unique(raw.clone()));
        assert_eq!(raw, ratio(5, 4));
        let lifted = &big_phi + &Polynomial::constant(raw);
        assert!(verify_refines(&m.scale(&ratio(1, 2)), &lifted));
    }

    #[test]
    fn sum_one_branches() {
        // δ_0 with Φ = t: every shift term vanishes at j = 0.
        assert_eq!(
            integration_constant(&Mask::delta(), &poly("0,1")),
            IntegrationConstant::Arbitrary
        );
        // δ_1 with Φ = t: Φ(-1) = -1.
        assert_eq!(
            integration_constant(&Mask::impulse(1, int(1)), &poly("0,1")),
            IntegrationConstant::Impossible
        );
        // The zero polynomial is refined by every mask, including sum-one ones.
        assert_eq!(
            antiderivative_constant(&mask("0:1/2,1/2"), &Polynomial::zero()).unwrap(),
            IntegrationConstant::Arbitrary
        );
    }

    #[test]
    fn rejects_unrefinable_pair() {
        assert_eq!(
            antiderivative_constant(&Mask::delta(), &poly("1")),
            Err(Error::NotRefinable)
        );
    }
}
