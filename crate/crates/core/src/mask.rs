//! Refinement masks: finitely supported rational sequences over ℤ, with the
//! Laurent polynomial arithmetic the refinement theory needs.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{self, binomial, log2_exact, Rational};
use crate::error::{Error, Result};

/// A finitely supported sequence `m: ℤ → ℚ`.
///
/// Stored trimmed: the first and last stored coefficients are nonzero. The
/// zero mask has no coefficients and offset 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mask {
    offset: i64,
    coeffs: Vec<Rational>,
}

impl Mask {
    /// Mask with `coeffs[k]` at index `offset + k`, trimmed to canonical form.
    pub fn new(offset: i64, coeffs: Vec<Rational>) -> Self {
        let Some(first) = coeffs.iter().position(|c| !c.is_zero()) else {
            return Self::zero();
        };
        let last = coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        let coeffs = coeffs[first..=last].to_vec();
        Mask {
            offset: offset + first as i64,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        Mask {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    /// `c · δ_k`.
    pub fn impulse(k: i64, c: Rational) -> Self {
        Self::new(k, vec![c])
    }

    /// `δ_0`.
    pub fn delta() -> Self {
        Self::impulse(0, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the first stored coefficient.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Number of stored coefficients.
    pub fn width(&self) -> usize {
        self.coeffs.len()
    }

    /// Index one past the last stored coefficient.
    pub fn end(&self) -> i64 {
        self.offset + self.coeffs.len() as i64
    }

    pub fn get(&self, index: i64) -> Rational {
        let k = index - self.offset;
        if k < 0 {
            return Rational::zero();
        }
        self.coeffs
            .get(k as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// `(index, coefficient)` for every stored position, zeros included.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, c)| (self.offset + k as i64, c))
    }

    /// `Σ_j m_j`.
    pub fn sum(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    /// The `n ≥ 0` with `sum = 2^(-n-1)`, the degree of the refined polynomial.
    pub fn degree_from_sum(&self) -> Result<usize> {
        let sum = self.sum();
        match log2_exact(&sum) {
            Some(e) if e <= -1 => Ok((-e - 1) as usize),
            _ => Err(Error::NotRefiningPolynomial(sum)),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.offset, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Shift every index by `k`.
    pub fn translate(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Mask {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn add(&self, other: &Mask) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(other.offset);
        let hi = self.end().max(other.end());
        Self::new(lo, (lo..hi).map(|i| self.get(i) + other.get(i)).collect())
    }

    pub fn sub(&self, other: &Mask) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Discrete convolution `(h * g)_k = Σ_j h_j g_(k-j)`.
    pub fn convolve(&self, other: &Mask) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.width() + other.width() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(self.offset + other.offset, out)
    }

    /// Applies `f` to every coefficient, keeping the indices.
    pub fn map(&self, f: impl Fn(&Rational) -> Rational) -> Self {
        Self::new(self.offset, self.coeffs.iter().map(f).collect())
    }
}

/// `(1,-1)^n` at offset 0: the `n`-fold convolution power of `δ_0 - δ_1`.
pub fn difference_power(n: i64) -> Result<Mask> {
    if n < 0 {
        return Err(Error::NegativeOrder(n));
    }
    let n = n as usize;
    let coeffs = (0..=n)
        .map(|k| {
            let c = Rational::from_integer(binomial(n, k));
            if k % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    Ok(Mask::new(0, coeffs))
}

/// Laurent division of `m` by `(1,-1)^(n+1)`.
///
/// Returns `(remainder, quotient)` with `m = remainder + quotient * (1,-1)^(n+1)`
/// and the remainder supported in `{0, …, n}`. The remainder is unique with
/// that support.
pub fn reduce_mod_difference(m: &Mask, n: usize) -> (Mask, Mask) {
    if m.is_zero() {
        return (Mask::zero(), Mask::zero());
    }
    let divisor: Vec<Rational> = difference_power(n as i64 + 1)
        .expect("nonnegative order")
        .coeffs()
        .to_vec();
    let top_sign = divisor[n + 1].clone();

    // Dense working window over [lo, hi). Eliminating below 0 touches indices
    // up to lo + n + 1, eliminating above n never goes below 0.
    let lo = m.offset().min(0);
    let hi = m.end().max(n as i64 + 1).max(lo + n as i64 + 2);
    let mut work: Vec<Rational> = (lo..hi).map(|i| m.get(i)).collect();
    let at = |i: i64| (i - lo) as usize;

    let q_lo = lo;
    let mut quotient = vec![Rational::zero(); (hi - lo) as usize];

    for i in lo..0 {
        let c = work[at(i)].clone();
        if c.is_zero() {
            continue;
        }
        for (k, d) in divisor.iter().enumerate() {
            work[at(i + k as i64)] -= &c * d;
        }
        quotient[(i - q_lo) as usize] += c;
    }
    for i in (n as i64 + 1..hi).rev() {
        let c = &work[at(i)] / &top_sign;
        if c.is_zero() {
            continue;
        }
        let shift = i - (n as i64 + 1);
        for (k, d) in divisor.iter().enumerate() {
            work[at(shift + k as i64)] -= &c * d;
        }
        quotient[(shift - q_lo) as usize] += c;
    }

    let remainder = Mask::new(0, work[at(0)..=at(n as i64)].to_vec());
    (remainder, Mask::new(q_lo, quotient))
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0:0");
        }
        write!(
            f,
            "{}:{}",
            self.offset,
            algebra::format_rational_list(&self.coeffs)
        )
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mask({self})")
    }
}

/// Parses `offset:c0,c1,...`, e.g. `0:1/64,3/64,3/64,1/64` or `-1:1/4`.
impl FromStr for Mask {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (offset, coeffs) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("mask `{s}` lacks `offset:`")))?;
        let offset_ok = {
            let digits = offset.strip_prefix('-').unwrap_or(offset);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !offset_ok {
            return Err(Error::Parse(format!("invalid mask offset `{offset}`")));
        }
        let offset: i64 = offset
            .parse::<BigInt>()
            .ok()
            .and_then(|o| i64::try_from(o).ok())
            .ok_or_else(|| Error::Parse(format!("mask offset `{offset}` out of range")))?;
        Ok(Mask::new(offset, algebra::parse_rational_list(coeffs)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, ratio};
    use proptest::prelude::*;

    fn mask(s: &str) -> Mask {
        s.parse().unwrap()
    }

    pub(crate) fn arb_mask(max_width: usize) -> impl Strategy<Value = Mask> {
        (
            -4i64..=4,
            prop::collection::vec((-20i64..=20, 1i64..=12), 0..=max_width),
        )
            .prop_map(|(off, cs)| {
                Mask::new(off, cs.into_iter().map(|(n, d)| ratio(n, d)).collect())
            })
    }

    fn canonical(m: &Mask) -> bool {
        match (m.coeffs().first(), m.coeffs().last()) {
            (Some(a), Some(b)) => !a.is_zero() && !b.is_zero(),
            _ => m.offset() == 0,
        }
    }

    #[test]
    fn sums() {
        assert_eq!(mask("0:1/8,3/8,3/8,1/8").sum(), int(1));
        assert_eq!(mask("0:1/64,3/64,3/64,1/64").sum(), ratio(1, 8));
        assert_eq!(Mask::zero().sum(), int(0));
    }

    #[test]
    fn degree_from_sums() {
        assert_eq!(mask("0:1/16,3/16,3/16,1/16").degree_from_sum(), Ok(0));
        assert_eq!(mask("0:1/64,3/64,3/64,1/64").degree_from_sum(), Ok(2));
        assert_eq!(
            mask("0:1/8,3/8,3/8,1/8").degree_from_sum(),
            Err(Error::NotRefiningPolynomial(int(1)))
        );
        assert!(mask("0:1/3").degree_from_sum().is_err());
        assert!(mask("0:-1/2").degree_from_sum().is_err());
        assert!(Mask::zero().degree_from_sum().is_err());
    }

    #[test]
    fn convolution() {
        let m = mask("2:1/64,3/64,3/64,1/64");
        assert_eq!(Mask::delta().convolve(&m), m);
        let d = mask("0:1,-1");
        assert_eq!(d.convolve(&d), mask("0:1,-2,1"));
        assert_eq!(d.convolve(&d).convolve(&d), mask("0:1,-3,3,-1"));
        assert!(m.convolve(&Mask::zero()).is_zero());
    }

    #[test]
    fn pointwise() {
        let h = mask("-1:1,2,3");
        assert_eq!(h.add(&Mask::zero()), h);
        assert_eq!(
            mask("0:1/64,3/64,3/64,1/64").scale(&int(2)),
            mask("0:1/32,3/32,3/32,1/32")
        );
        assert_eq!(mask("0:1").translate(3), Mask::impulse(3, int(1)));
        assert!(h.sub(&h).is_zero());
        assert_eq!(mask("0:1,1").add(&mask("1:-1,5")), mask("0:1,0,5"));
        assert_eq!(mask("0:1,1").add(&mask("0:-1,2")), mask("1:3"));
    }

    #[test]
    fn trimming() {
        let m = Mask::new(-2, vec![int(0), int(1), int(0), int(2), int(0)]);
        assert_eq!(m.offset(), -1);
        assert_eq!(m.coeffs(), &[int(1), int(0), int(2)]);
        assert_eq!(Mask::new(7, vec![int(0)]), Mask::zero());
    }

    #[test]
    fn difference_powers() {
        assert_eq!(difference_power(0).unwrap(), mask("0:1"));
        assert_eq!(difference_power(2).unwrap(), mask("0:1,-2,1"));
        assert_eq!(difference_power(3).unwrap(), mask("0:1,-3,3,-1"));
        assert_eq!(difference_power(-1), Err(Error::NegativeOrder(-1)));
    }

    #[test]
    fn reduction_examples() {
        let (r, q) = reduce_mod_difference(&mask("0:1/64,3/64,3/64,1/64"), 2);
        assert_eq!(r, mask("0:1/32,0,3/32"));
        assert_eq!(q, mask("0:-1/64"));

        let short = mask("0:1/32,0,3/32");
        assert_eq!(
            reduce_mod_difference(&short, 2),
            (short.clone(), Mask::zero())
        );

        let (r, _) = reduce_mod_difference(&mask("0:1/32,3/32,3/32,1/32"), 1);
        assert_eq!(r, mask("0:-1/8,3/8"));
    }

    #[test]
    fn reduction_of_negative_support() {
        let m = mask("-3:1,2,3,4,5,6,7");
        let (r, q) = reduce_mod_difference(&m, 1);
        assert!(r.offset() >= 0 && r.end() <= 2);
        let d = difference_power(2).unwrap();
        assert_eq!(r.add(&q.convolve(&d)), m);
    }

    #[test]
    fn text_format() {
        assert_eq!(
            mask("0:1/64,3/64,3/64,1/64").to_string(),
            "0:1/64,3/64,3/64,1/64"
        );
        assert_eq!(mask("-2:1,0,-1").to_string(), "-2:1,0,-1");
        assert_eq!(Mask::zero().to_string(), "0:0");
        assert_eq!(mask("0:0").to_string(), "0:0");
        for bad in ["1/2", ":1", "x:1", "0:", "0:1,,2", "+1:1", "0: 1", "0:1/0"] {
            assert!(bad.parse::<Mask>().is_err(), "{bad:?} should not parse");
        }
    }

    proptest! {
        #[test]
        fn sum_is_multiplicative(h in arb_mask(6), g in arb_mask(6)) {
            prop_assert_eq!(h.convolve(&g).sum(), h.sum() * g.sum());
        }

        #[test]
        fn convolution_commutes_and_associates(a in arb_mask(5), b in arb_mask(5), c in arb_mask(5)) {
            prop_assert_eq!(a.convolve(&b), b.convolve(&a));
            prop_assert_eq!(a.convolve(&b).convolve(&c), a.convolve(&b.convolve(&c)));
        }

        #[test]
        fn offsets_add_under_convolution(h in arb_mask(5), g in arb_mask(5)) {
            prop_assume!(!h.is_zero() && !g.is_zero());
            prop_assert_eq!(h.convolve(&g).offset(), h.offset() + g.offset());
        }

        #[test]
        fn reduction_reconstructs(m in arb_mask(9), n in 0usize..=5) {
            let (r, q) = reduce_mod_difference(&m, n);
            prop_assert!(r.is_zero() || (r.offset() >= 0 && r.end() <= n as i64 + 1));
            let d = difference_power(n as i64 + 1).unwrap();
            prop_assert_eq!(r.add(&q.convolve(&d)), m);
        }

        #[test]
        fn operations_stay_canonical(a in arb_mask(6), b in arb_mask(6), k in -3i64..=3) {
            for m in [a.add(&b), a.sub(&b), a.convolve(&b), a.translate(k), a.scale(&int(0))] {
                prop_assert!(canonical(&m));
            }
        }

        #[test]
        fn text_round_trip(m in arb_mask(8)) {
            prop_assert_eq!(m.to_string().parse::<Mask>().unwrap(), m);
        }
    }
}
