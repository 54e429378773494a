//! All masks refining one polynomial form the coset `m + v * (1,-1)^(n+1)`.

use crate::mask::{difference_power, reduce_mod_difference, Mask};

/// `m + v * (1,-1)^(n+1)`. If `m` refines a polynomial of degree `n`, so does
/// the result.
pub fn extend_mask(m: &Mask, v: &Mask, n: usize) -> Mask {
    let d = difference_power(n as i64 + 1).expect("nonnegative order");
    m.add(&v.convolve(&d))
}

/// If `a` and `b` refine the same polynomial, returns the `v` with
/// `a = b + v * (1,-1)^(n+1)`.
pub fn equivalence_witness(a: &Mask, b: &Mask) -> Option<Mask> {
    let n = a.degree_from_sum().ok()?;
    if b.degree_from_sum().ok()? != n {
        return None;
    }
    let (ra, qa) = reduce_mod_difference(a, n);
    let (rb, qb) = reduce_mod_difference(b, n);
    (ra == rb).then(|| qa.sub(&qb))
}

/// Whether `a` and `b` refine the same polynomial.
pub fn masks_equivalent(a: &Mask, b: &Mask) -> bool {
    equivalence_witness(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn mask(s: &str) -> Mask {
        s.parse().unwrap()
    }

    #[test]
    fn extension_examples() {
        let short = mask("0:1/32,0,3/32");
        assert_eq!(extend_mask(&short, &Mask::zero(), 2), short);
        assert_eq!(
            extend_mask(&short, &mask("0:-1/64"), 2),
            mask("0:1/64,3/64,3/64,1/64")
        );
    }

    #[test]
    fn equivalence_examples() {
        let long = mask("0:1/64,3/64,3/64,1/64");
        let short = mask("0:1/32,0,3/32");
        assert!(masks_equivalent(&long, &short));
        assert_eq!(equivalence_witness(&long, &short), Some(mask("0:-1/64")));
        assert_eq!(equivalence_witness(&long, &long), Some(Mask::zero()));
        assert!(!masks_equivalent(&long, &mask("0:1/32,3/32,3/32,1/32")));
        // Same sum, different polynomials.
        assert!(!masks_equivalent(&mask("0:1/4"), &mask("1:1/4")));
        // Not refining any polynomial.
        let unit = mask("0:1/2,1/2");
        assert!(!masks_equivalent(&unit, &unit));
        assert!(masks_equivalent(
            &long.translate(0),
            &mask("0:1/32,0,3/32,0").scale(&int(1))
        ));
    }
}
