//! Exact rational scalars and small dense rational matrices.
//!
//! Matrices here are tiny (at most a few dozen rows), so every routine is a
//! straightforward exact algorithm over ℚ. Nothing is ever rounded.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Builds `num/den` from machine integers. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `2^exp` for any integer exponent.
pub fn pow2(exp: i64) -> Rational {
    let magnitude = BigInt::one() << exp.unsigned_abs();
    if exp >= 0 {
        Rational::from_integer(magnitude)
    } else {
        Rational::new(BigInt::one(), magnitude)
    }
}

/// Integer power of a rational; `0^0 = 1`.
pub fn rpow(base: &Rational, exp: usize) -> Rational {
    num_traits::pow(base.clone(), exp)
}

/// Binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// If `r = 2^e` for some integer `e`, returns `e`.
pub fn log2_exact(r: &Rational) -> Option<i64> {
    if !r.is_positive() {
        return None;
    }
    let is_pow2 = |n: &BigInt| n.is_positive() && (n & (n - BigInt::one())).is_zero();
    let (num, den) = (r.numer(), r.denom());
    if num.is_one() && is_pow2(den) {
        Some(-(den.bits() as i64 - 1))
    } else if den.is_one() && is_pow2(num) {
        Some(num.bits() as i64 - 1)
    } else {
        None
    }
}

/// Parses an integer or `num/den` rational without whitespace or a leading `+`.
///
/// Denominators must be positive. Non-reduced fractions such as `2/4` are
/// accepted and normalized.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let parse_int = |t: &str, allow_sign: bool| -> Result<BigInt> {
        let digits = match t.strip_prefix('-') {
            Some(rest) if allow_sign => rest,
            _ => t,
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s, true)?)),
        Some((n, d)) => {
            let num = parse_int(n, true)?;
            let den = parse_int(d, false)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Comma-separated rationals, as used by the polynomial and mask text formats.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>> {
    if s.is_empty() {
        return Err(Error::Parse("empty coefficient list".into()));
    }
    s.split(',').map(parse_rational).collect()
}

pub fn format_rational_list(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(|r| r.to_string()).collect();
    parts.join(",")
}

/// Largest absolute entry of `a - b`. Vectors of different length are padded
/// with zeros.
pub fn sup_distance(a: &[Rational], b: &[Rational]) -> Rational {
    let zero = Rational::zero();
    (0..a.len().max(b.len()))
        .map(|i| (a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero)).abs())
        .max()
        .unwrap_or_else(Rational::zero)
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_columns(columns: Vec<Vec<Rational>>) -> Result<Self> {
        Ok(Self::from_rows(columns)?.transpose())
    }

    /// `V[i][j] = x_j^i`, the Vandermonde matrix with one column per node.
    pub fn vandermonde(nodes: &[Rational]) -> Self {
        let n = nodes.len();
        Self::from_fn(n, n, |i, j| rpow(&nodes[j], i))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Rational] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, col).clone()).collect()
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Same matrix with the column order reversed.
    pub fn reverse_columns(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            self.get(i, self.cols - 1 - j).clone()
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self.get(i, j).is_zero()))
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| format!("[{}]", format_rational_list(self.row(i))))
            .collect();
        write!(f, "Matrix[{}]", rows.join(", "))
    }
}

/// Exact matrix product `a · b`.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    Ok(Matrix::from_fn(a.rows, b.cols, |i, j| {
        (0..a.cols).map(|k| a.get(i, k) * b.get(k, j)).sum()
    }))
}

/// Back-substitution for an upper triangular system `u · x = b`.
///
/// Entries below the diagonal are ignored.
pub fn solve_upper_triangular(u: &Matrix, b: &[Rational]) -> Result<Vec<Rational>> {
    let n = u.rows;
    if !u.is_square() || b.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} triangular system with right-hand side of length {}",
            u.rows,
            u.cols,
            b.len()
        )));
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let pivot = u.get(i, i);
        if pivot.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let tail: Rational = (i + 1..n).map(|j| u.get(i, j) * &x[j]).sum();
        x[i] = (&b[i] - tail) / pivot;
    }
    Ok(x)
}

/// Gaussian elimination over ℚ. Any nonzero entry serves as pivot.
pub fn solve_general(a: &Matrix, b: &[Rational]) -> Result<Vec<Rational>> {
    let n = a.rows;
    if !a.is_square() || b.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} system with right-hand side of length {}",
            a.rows,
            a.cols,
            b.len()
        )));
    }
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        rows.swap(col, pivot_row);
        let pivot = rows[col][col].clone();
        for entry in rows[col][col..].iter_mut() {
            *entry /= &pivot;
        }
        let pivot_tail = rows[col][col..].to_vec();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (entry, p) in row[col..].iter_mut().zip(&pivot_tail) {
                *entry -= &factor * p;
            }
        }
    }
    Ok(rows.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Solves `Σ_j x_j^i · z_j = b_i` for `i = 0..=n`, i.e. `V · z = b` with the
/// Vandermonde matrix of [`Matrix::vandermonde`].
///
/// Björck–Pereyra elimination: Newton divided differences run backwards,
/// `O(n²)` operations and no matrix is formed. Nodes must be pairwise distinct.
pub fn solve_vandermonde(nodes: &[Rational], b: &[Rational]) -> Result<Vec<Rational>> {
    let n = nodes.len();
    if b.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "{n} nodes with right-hand side of length {}",
            b.len()
        )));
    }
    for i in 0..n {
        if nodes[i + 1..].contains(&nodes[i]) {
            return Err(Error::SingularMatrix);
        }
    }
    let mut z = b.to_vec();
    if n == 0 {
        return Ok(z);
    }
    for (k, xk) in nodes.iter().enumerate().take(n - 1) {
        for i in (k + 1..n).rev() {
            let prev = z[i - 1].clone();
            z[i] -= xk * prev;
        }
    }
    for k in (0..n - 1).rev() {
        for i in k + 1..n {
            z[i] = &z[i] / (&nodes[i] - &nodes[i - k - 1]);
        }
        for i in k..n - 1 {
            let next = z[i + 1].clone();
            z[i] -= next;
        }
    }
    Ok(z)
}

/// Integer coprimality check used by property tests on reduced rationals.
pub fn is_reduced(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[(i64, i64)]) -> Vec<Rational> {
        xs.iter().map(|&(n, d)| ratio(n, d)).collect()
    }

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_product() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        assert_eq!(mat_mul(&Matrix::identity(3), &a).unwrap(), a);
    }

    #[test]
    fn diagonal_action() {
        let d = m(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 4]]);
        let ones = m(&[&[1], &[1], &[1]]);
        assert_eq!(mat_mul(&d, &ones).unwrap(), m(&[&[1], &[2], &[4]]));
    }

    #[test]
    fn bidiagonal_inverse_pair() {
        let l1_inv = m(&[&[1, -1, 0], &[0, 1, -1], &[0, 0, 1]]);
        let l1 = m(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]);
        assert_eq!(mat_mul(&l1_inv, &l1).unwrap(), Matrix::identity(3));
    }

    #[test]
    fn mul_dimension_mismatch() {
        let a = Matrix::zeros(2, 3);
        assert!(matches!(mat_mul(&a, &a), Err(Error::DimensionMismatch(_))));
        assert!(Matrix::new(2, 2, vec![int(1)]).is_err());
    }

    #[test]
    fn upper_triangular_identity() {
        let b = v(&[(5, 2), (-3, 1), (1, 1)]);
        assert_eq!(solve_upper_triangular(&Matrix::identity(3), &b).unwrap(), b);
    }

    #[test]
    fn upper_triangular_two_by_two() {
        let u = m(&[&[1, 1], &[0, 2]]);
        let x = solve_upper_triangular(&u, &[int(3), int(4)]).unwrap();
        assert_eq!(x, vec![int(1), int(2)]);
    }

    #[test]
    fn upper_triangular_permuted_difference_matrix() {
        // Columns p, Δp, Δ²p for p = 5/2 - 3t + t², reversed into upper triangular order.
        let u2 = Matrix::from_rows(vec![
            v(&[(5, 2), (4, 1), (2, 1)]),
            v(&[(-3, 1), (-2, 1), (0, 1)]),
            v(&[(1, 1), (0, 1), (0, 1)]),
        ])
        .unwrap();
        let permuted = u2.reverse_columns();
        assert!(permuted.is_upper_triangular());
        let b = v(&[(10, 8), (-6, 8), (1, 8)]);
        let mut y = solve_upper_triangular(&permuted, &b).unwrap();
        assert_eq!(y, v(&[(3, 32), (6, 32), (4, 32)]));
        y.reverse();
        assert_eq!(y, v(&[(4, 32), (6, 32), (3, 32)]));
        assert_eq!(u2.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn upper_triangular_singular() {
        let u = m(&[&[1, 1], &[0, 0]]);
        assert_eq!(
            solve_upper_triangular(&u, &[int(1), int(1)]),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn general_identity() {
        let b = v(&[(1, 3), (-7, 2)]);
        assert_eq!(solve_general(&Matrix::identity(2), &b).unwrap(), b);
    }

    #[test]
    fn general_needs_row_swap() {
        let a = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            solve_general(&a, &[int(2), int(3)]).unwrap(),
            vec![int(3), int(2)]
        );
    }

    #[test]
    fn general_singular() {
        let a = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            solve_general(&a, &[int(1), int(1)]),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn vandermonde_matches_general_solve() {
        let nodes = v(&[(0, 1), (-1, 1), (-2, 1), (3, 2)]);
        let b = v(&[(1, 1), (2, 3), (-5, 7), (4, 1)]);
        let direct = solve_general(&Matrix::vandermonde(&nodes), &b).unwrap();
        assert_eq!(solve_vandermonde(&nodes, &b).unwrap(), direct);
    }

    #[test]
    fn vandermonde_rejects_repeated_nodes() {
        let nodes = v(&[(1, 1), (1, 1)]);
        assert_eq!(
            solve_vandermonde(&nodes, &v(&[(0, 1), (1, 1)])),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn exact_powers_of_two() {
        assert_eq!(log2_exact(&ratio(1, 64)), Some(-6));
        assert_eq!(log2_exact(&int(8)), Some(3));
        assert_eq!(log2_exact(&int(1)), Some(0));
        assert_eq!(log2_exact(&ratio(3, 64)), None);
        assert_eq!(log2_exact(&ratio(-1, 2)), None);
        assert_eq!(log2_exact(&Rational::zero()), None);
        assert_eq!(pow2(-3), ratio(1, 8));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("5/2").unwrap(), ratio(5, 2));
        assert_eq!(parse_rational("-2/4").unwrap(), ratio(-1, 2));
        for bad in ["", "+1", "1/0", "1/-2", " 1", "1.5", "a", "1/", "/2", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
        assert_eq!(ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(int(0).to_string(), "0");
    }
}
