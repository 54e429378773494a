//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use refinemask::algebra::{pow2, ratio};
use refinemask::{Mask, Polynomial, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rational with numerator in [-100, 100] and denominator in [1, 100].
pub fn rational(rng: &mut impl Rng) -> Rational {
    ratio(rng.gen_range(-100..=100), rng.gen_range(1..=100))
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Monic polynomial of the given degree with random lower coefficients.
pub fn monic(rng: &mut impl Rng, degree: usize) -> Polynomial {
    let mut coeffs: Vec<Rational> = (0..degree).map(|_| rational(rng)).collect();
    coeffs.push(Rational::one());
    Polynomial::new(coeffs)
}

/// Nonzero polynomial of the given degree.
pub fn polynomial(rng: &mut impl Rng, degree: usize) -> Polynomial {
    let mut coeffs: Vec<Rational> = (0..degree).map(|_| rational(rng)).collect();
    coeffs.push(nonzero_rational(rng));
    Polynomial::new(coeffs)
}

/// Random mask of stored width `1..=width` and offset in [-3, 3].
pub fn mask(rng: &mut impl Rng, max_width: usize) -> Mask {
    let width = rng.gen_range(1..=max_width);
    let offset = rng.gen_range(-3..=3);
    Mask::new(offset, (0..width).map(|_| rational(rng)).collect())
}

/// Random mask with sum `2^(-n-1)`, so it refines a degree-`n` polynomial.
pub fn valid_mask(rng: &mut impl Rng, n: usize, max_width: usize) -> Mask {
    let width = rng.gen_range(1..=max_width);
    let offset = rng.gen_range(-3..=3);
    let mut coeffs: Vec<Rational> = (0..width - 1).map(|_| rational(rng)).collect();
    let partial: Rational = coeffs.iter().sum();
    coeffs.push(pow2(-(n as i64) - 1) - partial);
    Mask::new(offset, coeffs)
}

/// Reduced row echelon form of `rows`, returning pivot columns. Independent
/// of the library's solvers.
pub fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x /= &lead;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Solutions of `A x = b` as `(particular, null space basis)`, or `None` if
/// inconsistent. `A` is given by rows.
pub fn affine_solutions(
    a: &[Vec<Rational>],
    b: &[Rational],
) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let cols = a[0].len();
    let mut aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut particular = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][cols].clone();
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -aug[r][f].clone();
            }
            v
        })
        .collect();
    Some((particular, basis))
}

/// `2 Σ_j m_j p(2t - j)` evaluated pointwise at `t`, straight from the
/// definition. Used to cross-check coefficient-level computations.
pub fn refine_at(m: &Mask, p: &Polynomial, t: &Rational) -> Rational {
    let two = ratio(2, 1);
    m.iter()
        .map(|(j, mj)| &two * mj * p.eval(&(&two * t - ratio(j, 1))))
        .sum()
}
