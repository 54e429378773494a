//! Dense rational polynomials in ascending coefficient order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{self, binomial, Matrix, Rational};
use crate::error::{Error, Result};

/// A polynomial `p(t) = Σ_k p_k t^k`.
///
/// The leading coefficient is always nonzero, except for the zero polynomial
/// which is stored as the single coefficient `0` and has no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial {
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `t^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = Rational::one();
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading_coeff(&self) -> &Rational {
        self.coeffs.last().expect("never empty")
    }

    /// Coefficients padded with zeros to length `len`. Panics if the
    /// polynomial does not fit.
    pub fn padded(&self, len: usize) -> Vec<Rational> {
        assert!(
            self.degree().is_none_or(|d| d < len),
            "degree {:?} does not fit {len} coefficients",
            self.degree()
        );
        let mut v = self.coeffs.clone();
        v.resize(len, Rational::zero());
        v
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let lead = self.leading_coeff().clone();
        Ok(self.scale(&lead.recip()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Floating-point evaluation at `t`, for plotting.
    pub fn eval_f64(&self, t: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Coefficients of `t ↦ p(t - i)`.
    pub fn translate(&self, i: i64) -> Self {
        if i == 0 {
            return self.clone();
        }
        let shift = BigInt::from(-i);
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        // (t - i)^k = Σ_j C(k, j) t^j (-i)^(k-j)
        for (k, pk) in self.coeffs.iter().enumerate() {
            if pk.is_zero() {
                continue;
            }
            let mut power = BigInt::one();
            for j in (0..=k).rev() {
                out[j] += pk * Rational::from_integer(binomial(k, j) * &power);
                power *= &shift;
            }
        }
        Self::new(out)
    }

    /// Coefficients of `t ↦ p(k·t)`.
    pub fn shrink(&self, k: &Rational) -> Self {
        let mut factor = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &factor);
            factor *= k;
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * algebra::int(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Rational::zero());
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c / algebra::int(k as i64 + 1)),
        );
        Self::new(out)
    }

    /// `Δp(t) = p(t - 1) - p(t)`; lowers the degree of a nonconstant
    /// polynomial by exactly one.
    pub fn finite_difference(&self) -> Self {
        &self.translate(1) - self
    }

    /// The `(n+1)×(n+1)` matrix whose column `i` holds the coefficients of
    /// `p(t - i)`, for `n = deg p`.
    pub fn shifted_poly_matrix(&self) -> Result<Matrix> {
        let n = self.degree().ok_or(Error::ZeroPolynomial)?;
        let columns = (0..=n as i64)
            .map(|i| self.translate(i).padded(n + 1))
            .collect();
        Matrix::from_columns(columns)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&algebra::format_rational_list(&self.coeffs))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

/// Parses `c0,c1,...,cn` with ascending coefficients. Trailing zeros are
/// dropped.
impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::new(algebra::parse_rational_list(s)?))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio, solve_general};
    use proptest::prelude::*;

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..=50, 1i64..=20).prop_map(|(n, d)| ratio(n, d))
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(arb_rational(), 1..=max_len).prop_map(Polynomial::new)
    }

    #[test]
    fn normalization() {
        assert_eq!(poly("1,2,0,0").coeffs().len(), 2);
        assert!(poly("0,0").is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
        assert_eq!(poly("5/2,-3,1").degree(), Some(2));
        assert_eq!(poly("5/2,-3,1").to_string(), "5/2,-3,1");
        assert!("".parse::<Polynomial>().is_err());
        assert!("1, 2".parse::<Polynomial>().is_err());
    }

    #[test]
    fn evaluation() {
        assert_eq!(poly("5/2,-3,1").eval(&int(0)), ratio(5, 2));
        assert_eq!(Polynomial::zero().eval(&ratio(7, 3)), int(0));
        assert_eq!(poly("0,-3/2,1/2").eval(&int(-3)), int(9));
    }

    #[test]
    fn translation() {
        let p = poly("5/2,-3,1");
        assert_eq!(p.translate(0), p);
        assert_eq!(Polynomial::monomial(2).translate(1), poly("1,-2,1"));
        // p(2t - 1): shrink by 2, then shift by 1/2 in the dilated variable.
        assert_eq!(p.translate(1).shrink(&int(2)), poly("13/2,-10,4"));
    }

    #[test]
    fn shrinking() {
        let p = poly("5/2,-3,1");
        assert_eq!(p.shrink(&int(1)), p);
        assert_eq!(p.shrink(&int(2)), poly("5/2,-6,4"));
        assert_eq!(p.shrink(&ratio(1, 2)), poly("5/2,-3/2,1/4"));
    }

    #[test]
    fn calculus() {
        assert_eq!(poly("1").antiderivative(), poly("0,1"));
        assert_eq!(poly("-3/2,1").antiderivative(), poly("0,-3/2,1/2"));
        assert_eq!(poly("7").derivative(), Polynomial::zero());
        assert_eq!(Polynomial::zero().antiderivative(), Polynomial::zero());
    }

    #[test]
    fn differences() {
        let p = poly("5/2,-3,1");
        assert_eq!(p.finite_difference(), poly("4,-2"));
        assert_eq!(p.finite_difference().finite_difference(), poly("2"));
        assert!(poly("9/4").finite_difference().is_zero());
    }

    #[test]
    fn shifted_matrix() {
        assert_eq!(
            poly("1").shifted_poly_matrix().unwrap(),
            Matrix::identity(1)
        );
        let m = poly("5/2,-3,1").shifted_poly_matrix().unwrap();
        assert_eq!(m.column(0), vec![ratio(5, 2), int(-3), int(1)]);
        assert_eq!(m.column(1), vec![ratio(13, 2), int(-5), int(1)]);
        assert_eq!(m.column(2), vec![ratio(25, 2), int(-7), int(1)]);
        assert_eq!(
            Polynomial::zero().shifted_poly_matrix(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn monic_normalization() {
        assert_eq!(poly("1,2,4").monic().unwrap(), poly("1/4,1/2,1"));
        assert_eq!(Polynomial::zero().monic(), Err(Error::ZeroPolynomial));
    }

    proptest! {
        #[test]
        fn translations_compose(p in arb_poly(7), a in -5i64..=5, b in -5i64..=5) {
            prop_assert_eq!(p.translate(a).translate(b), p.translate(a + b));
        }

        #[test]
        fn shrinks_compose(p in arb_poly(7), a in arb_rational(), b in arb_rational()) {
            prop_assert_eq!(p.shrink(&a).shrink(&b), p.shrink(&(&a * &b)));
        }

        #[test]
        fn translate_matches_evaluation(p in arb_poly(7), i in -6i64..=6, t in arb_rational()) {
            prop_assert_eq!(p.translate(i).eval(&t), p.eval(&(&t - int(i))));
        }

        #[test]
        fn differences_lower_degree(p in arb_poly(7)) {
            let mut q = p.clone();
            if let Some(n) = p.degree() {
                for k in 1..=n {
                    q = q.finite_difference();
                    prop_assert_eq!(q.degree(), Some(n - k));
                }
                prop_assert!(q.finite_difference().is_zero());
            }
        }

        #[test]
        fn derivative_inverts_antiderivative(p in arb_poly(7)) {
            prop_assert_eq!(p.antiderivative().derivative(), p);
        }

        #[test]
        fn shifted_matrix_invertible(p in arb_poly(7)) {
            prop_assume!(!p.is_zero());
            let m = p.shifted_poly_matrix().unwrap();
            let rhs = vec![int(1); m.rows()];
            prop_assert!(solve_general(&m, &rhs).is_ok());
        }

        #[test]
        fn text_round_trip(p in arb_poly(7)) {
            prop_assert_eq!(p.to_string().parse::<Polynomial>().unwrap(), p);
        }
    }
}
