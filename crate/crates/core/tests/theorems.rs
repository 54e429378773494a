mod common;

use num_traits::{One, Zero};
use refinemask::algebra::{int, pow2, ratio, solve_general, sup_distance};
use refinemask::{
    cascade_iterates, difference_power, extend_mask, mask_from_poly, mask_from_poly_at_nodes,
    masks_equivalent, poly_from_mask, reduce_mod_difference, refine_apply, refinement_matrix,
    verify_refines, Mask, Polynomial, Rational, RefinablePair,
};

#[test]
fn refine_apply_matches_pointwise_definition() {
    let mut rng = common::rng(11);
    for _ in 0..50 {
        let m = common::mask(&mut rng, 6);
        let p = common::polynomial(&mut rng, 4);
        let q = refine_apply(&m, &p);
        for k in -3..=3 {
            let t = ratio(k, 3);
            assert_eq!(q.eval(&t), common::refine_at(&m, &p, &t));
        }
    }
}

#[test]
fn monic_round_trip() {
    let mut rng = common::rng(1);
    for degree in 0..=6 {
        for _ in 0..10 {
            let p = common::monic(&mut rng, degree);
            let m = mask_from_poly(&p).unwrap();
            assert!(verify_refines(&m, &p));
            assert_eq!(poly_from_mask(&m).unwrap(), p);
        }
    }
}

#[test]
fn every_valid_mask_refines_its_polynomial() {
    let mut rng = common::rng(2);
    for n in 0..=5 {
        for _ in 0..10 {
            let m = common::valid_mask(&mut rng, n, 9);
            let p = poly_from_mask(&m).unwrap();
            assert_eq!(p.degree(), Some(n));
            assert!(p.leading_coeff().is_one());
            assert!(verify_refines(&m, &p));
        }
    }
}

#[test]
fn non_power_of_two_sums_refine_no_polynomial() {
    for sum in [
        ratio(1, 1),
        ratio(3, 8),
        ratio(-1, 4),
        ratio(2, 1),
        ratio(0, 1),
    ] {
        let m = Mask::new(0, vec![sum.clone()]);
        assert!(poly_from_mask(&m).is_err(), "sum {sum}");
        // A monomial t^k is only refined by c·δ₀ when 2c·2^k = 1.
        for k in 0..4 {
            assert!(!verify_refines(&m, &Polynomial::monomial(k)));
        }
    }
}

#[test]
fn coset_closure() {
    let mut rng = common::rng(3);
    for _ in 0..40 {
        let degree = rng_degree(&mut rng);
        let p = common::polynomial(&mut rng, degree);
        let v = common::mask(&mut rng, 4);
        let m = extend_mask(&mask_from_poly(&p).unwrap(), &v, degree);
        assert!(verify_refines(&m, &p));
    }
}

fn rng_degree(rng: &mut impl rand::Rng) -> usize {
    rng.gen_range(0..=5)
}

/// All masks supported in {-2, …, n+2} that refine `p` are found by solving
/// the linear refinement constraints directly; each must reduce to the short
/// mask of `p`.
#[test]
fn coset_completeness_on_a_window() {
    let mut rng = common::rng(4);
    for degree in 0..=4 {
        for _ in 0..4 {
            let p = common::polynomial(&mut rng, degree);
            let window: Vec<i64> = (-2..=degree as i64 + 2).collect();
            let columns: Vec<Vec<Rational>> = window
                .iter()
                .map(|&j| refine_apply(&Mask::impulse(j, int(1)), &p).padded(degree + 1))
                .collect();
            let rows: Vec<Vec<Rational>> = (0..=degree)
                .map(|r| columns.iter().map(|c| c[r].clone()).collect())
                .collect();
            let (particular, null_basis) =
                common::affine_solutions(&rows, &p.padded(degree + 1)).expect("consistent");
            assert_eq!(null_basis.len(), window.len() - (degree + 1));

            let short = mask_from_poly(&p).unwrap();
            let as_mask = |v: &[Rational]| Mask::new(window[0], v.to_vec());
            let particular = as_mask(&particular);
            assert!(verify_refines(&particular, &p));
            assert_eq!(reduce_mod_difference(&particular, degree).0, short);
            for null in &null_basis {
                let null = as_mask(null);
                assert!(refine_apply(&null, &p).is_zero());
                assert!(reduce_mod_difference(&null, degree).0.is_zero());
                let random_member = particular.add(&null.scale(&common::rational(&mut rng)));
                assert!(masks_equivalent(&random_member, &short));
            }
        }
    }
}

#[test]
fn difference_power_annihilates_lower_degrees() {
    let mut rng = common::rng(5);
    for n in 0..=6 {
        let d = difference_power(n as i64 + 1).unwrap();
        let p = common::polynomial(&mut rng, n);
        assert!(refine_apply(&d, &p).is_zero());
        let q = common::polynomial(&mut rng, n + 1);
        assert!(!refine_apply(&d, &q).is_zero());
    }
}

#[test]
fn eigenstructure_of_refinement_matrix() {
    let mut rng = common::rng(6);
    for n in 0..=5 {
        for _ in 0..5 {
            let m = common::valid_mask(&mut rng, n, 8);
            let matrix = refinement_matrix(&m, n);
            let expected: Vec<Rational> = (0..=n).map(|j| pow2(j as i64 - n as i64)).collect();
            assert_eq!(matrix.diagonal(), expected);
            assert!(matrix.is_upper_triangular());

            // Distinct diagonal entries: the eigenvalue-1 eigenspace is spanned
            // by the refined polynomial alone.
            let p = poly_from_mask(&m).unwrap();
            assert_eq!(matrix.mul_vec(&p.padded(n + 1)).unwrap(), p.padded(n + 1));
            let shifted: Vec<Vec<Rational>> = (0..=n)
                .map(|i| {
                    let mut row = matrix.row(i).to_vec();
                    row[i] -= int(1);
                    row
                })
                .collect();
            let (_, kernel) =
                common::affine_solutions(&shifted, &vec![Rational::zero(); n + 1]).unwrap();
            assert_eq!(kernel.len(), 1);

            let mut d = p.derivative();
            let mut eigenvalue = ratio(1, 2);
            while !d.is_zero() {
                let image = matrix.mul_vec(&d.padded(n + 1)).unwrap();
                let scaled: Vec<Rational> =
                    d.padded(n + 1).iter().map(|c| c * &eigenvalue).collect();
                assert_eq!(image, scaled);
                d = d.derivative();
                eigenvalue /= int(2);
            }
        }
    }
}

#[test]
fn pair_calculus_preserves_refinement() {
    let mut rng = common::rng(7);
    for n in 0..=5 {
        for _ in 0..5 {
            let pair = RefinablePair::from_mask(common::valid_mask(&mut rng, n, 7)).unwrap();
            let up = pair.antiderivative_pair().unwrap();
            assert!(verify_refines(up.mask(), up.poly()));
            assert_eq!(up.derivative_pair().unwrap(), pair);
            if n > 0 {
                let down = pair.derivative_pair().unwrap();
                assert!(verify_refines(down.mask(), down.poly()));
            }
        }
    }
}

#[test]
fn convolution_degree_law() {
    let mut rng = common::rng(8);
    for _ in 0..30 {
        let a = rng_degree(&mut rng);
        let b = rng_degree(&mut rng);
        let h = common::valid_mask(&mut rng, a, 5);
        let g = common::valid_mask(&mut rng, b, 5);
        let hg = h.convolve(&g);
        let p = poly_from_mask(&hg).unwrap();
        assert_eq!(p.degree(), Some(a + b + 1));
        assert!(verify_refines(&hg, &p));
    }
}

#[test]
fn node_variant_agrees_with_direct_solve() {
    let mut rng = common::rng(9);
    for _ in 0..30 {
        let degree = rng_degree(&mut rng);
        let p = common::polynomial(&mut rng, degree);
        let mut nodes: Vec<i64> = Vec::new();
        while nodes.len() < degree + 1 {
            let x = rand::Rng::gen_range(&mut rng, -6..=6);
            if !nodes.contains(&x) {
                nodes.push(x);
            }
        }
        let m = mask_from_poly_at_nodes(&p, &nodes).unwrap();
        assert!(verify_refines(&m, &p));

        let columns: Vec<Vec<Rational>> = nodes
            .iter()
            .map(|&l| p.translate(l).padded(degree + 1))
            .collect();
        let shifted = refinemask::Matrix::from_columns(columns).unwrap();
        let rhs = p
            .shrink(&ratio(1, 2))
            .scale(&ratio(1, 2))
            .padded(degree + 1);
        let direct = solve_general(&shifted, &rhs).unwrap();
        for (node, w) in nodes.iter().zip(&direct) {
            assert_eq!(&m.get(*node), w);
        }
    }
}

#[test]
fn cascade_leading_coefficient_is_invariant() {
    let mut rng = common::rng(10);
    for n in 0..=4 {
        let m = common::valid_mask(&mut rng, n, 6);
        let p0 = common::polynomial(&mut rng, n);
        for p in cascade_iterates(&m, &p0).unwrap().take(15) {
            assert_eq!(p.leading_coeff(), p0.leading_coeff());
        }
    }
}

/// The cascade error at step `j0` splits along the eigenvectors `p', p'', …`
/// with eigenvalues `1/2, 1/4, …`, so the error after `j ≥ j0` steps is at
/// most `C·2^(-j)` with `C = 2^j0 · Σ_k |a_k|·‖p^(k)‖`.
#[test]
fn cascade_contracts_at_rate_one_half() {
    let mut rng = common::rng(12);
    for n in 1..=4 {
        for _ in 0..5 {
            let m = common::valid_mask(&mut rng, n, 6);
            let exact = poly_from_mask(&m).unwrap();
            let iterates: Vec<Polynomial> = cascade_iterates(&m, &Polynomial::monomial(n))
                .unwrap()
                .take(40)
                .collect();
            let error = |j: usize| sup_distance(iterates[j - 1].coeffs(), exact.coeffs());

            let j0 = 5;
            let derivatives: Vec<Polynomial> = (1..=n)
                .scan(exact.clone(), |d, _| {
                    *d = d.derivative();
                    Some(d.clone())
                })
                .collect();
            let basis = refinemask::Matrix::from_fn(n, n, |r, k| derivatives[k].coeff(r));
            let residual: Vec<Rational> = (0..n)
                .map(|r| iterates[j0 - 1].coeff(r) - exact.coeff(r))
                .collect();
            let weights = solve_general(&basis, &residual).unwrap();
            let constant: Rational = weights
                .iter()
                .zip(&derivatives)
                .map(|(a, d)| {
                    let norm = sup_distance(d.coeffs(), &[]);
                    num_traits::Signed::abs(a) * norm
                })
                .sum::<Rational>()
                * pow2(j0 as i64);

            for j in j0..=40 {
                assert!(
                    error(j) <= &constant * pow2(-(j as i64)),
                    "mask {m}, step {j}"
                );
            }
            if !weights[0].is_zero() {
                let rate = error(40) / error(39);
                assert!(
                    rate > ratio(45, 100) && rate < ratio(55, 100),
                    "rate {rate}"
                );
            }
        }
    }
}
