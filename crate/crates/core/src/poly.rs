//! Dense exact polynomials: big-integer coefficients for delta-vectors and
//! series numerators, big-rational coefficients for interpolated Ehrhart
//! polynomials. No floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul};

use num::{BigInt, BigRational, One, Signed, Zero};

/// Polynomial with `BigInt` coefficients, index = degree, trailing zeros
/// trimmed. The zero polynomial has an empty coefficient vector and no
/// degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::new(vec![BigInt::one()])
    }

    /// Convenience constructor for literals in tests and tables.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Divide by `t`; errors in spirit are a caller bug, so panics if the
    /// constant term is nonzero.
    pub fn shift_down(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        assert!(self.coeffs[0].is_zero(), "constant term must vanish");
        IntPolynomial::new(self.coeffs[1..].to_vec())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Coefficients read the same in both directions.
    pub fn is_symmetric(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Rises to a single peak then falls; plateaus allowed.
    pub fn is_unimodal(&self) -> bool {
        let mut i = 0;
        while i + 1 < self.coeffs.len() && self.coeffs[i] <= self.coeffs[i + 1] {
            i += 1;
        }
        while i + 1 < self.coeffs.len() && self.coeffs[i] >= self.coeffs[i + 1] {
            i += 1;
        }
        i + 1 >= self.coeffs.len()
    }

    pub fn to_rational(&self) -> RatPolynomial {
        RatPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        IntPolynomial::new(coeffs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders as `1 + 4*t + 7*t^2`; zero coefficients are skipped and the
    /// zero polynomial prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Polynomial with exact rational coefficients, used for interpolated
/// quasi-polynomial constituents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_at_int(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }
}

impl Add for &RatPolynomial {
    type Output = RatPolynomial;
    fn add(self, rhs: &RatPolynomial) -> RatPolynomial {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        RatPolynomial::new(coeffs)
    }
}

impl Mul for &RatPolynomial {
    type Output = RatPolynomial;
    fn mul(self, rhs: &RatPolynomial) -> RatPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RatPolynomial::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPolynomial::new(coeffs)
    }
}

impl fmt::Display for RatPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let rendered = format_rational(c);
            match k {
                0 => write!(f, "{rendered}")?,
                1 => write!(f, "{rendered}*n")?,
                _ => write!(f, "{rendered}*n^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `p/q` with the denominator omitted when it is 1.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Binomial coefficient as a `BigInt`; zero when `k > n`.
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

/// True iff `|v| < 2^53`, i.e. the value survives a round-trip through an
/// IEEE double; used for the JSON `numeric` hints.
pub fn fits_in_53_bits(v: &BigInt) -> bool {
    v.abs() < BigInt::from(1u64 << 53)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = IntPolynomial::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPolynomial::from_i64(&[0, 0]).is_zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn display_format() {
        let p = IntPolynomial::from_i64(&[1, 4, 7]);
        assert_eq!(p.to_string(), "1 + 4*t + 7*t^2");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        assert_eq!(IntPolynomial::from_i64(&[0, 1]).to_string(), "1*t");
    }

    #[test]
    fn symmetry_and_unimodality() {
        assert!(IntPolynomial::from_i64(&[1, 4, 7, 7, 4, 1]).is_symmetric());
        assert!(IntPolynomial::from_i64(&[1, 4, 7, 7, 4, 1]).is_unimodal());
        assert!(!IntPolynomial::from_i64(&[1, 0, 2]).is_unimodal());
        assert!(!IntPolynomial::from_i64(&[1, 2, 3]).is_symmetric());
        assert!(IntPolynomial::zero().is_unimodal());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(10, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(52, 5), BigInt::from(2598960));
    }

    #[test]
    fn mul_matches_known_product() {
        let p = IntPolynomial::from_i64(&[1, 1]);
        let cube = &(&p * &p) * &p;
        assert_eq!(cube, IntPolynomial::from_i64(&[1, 3, 3, 1]));
    }

    proptest! {
        #[test]
        fn eval_is_ring_homomorphism(
            a in proptest::collection::vec(-9i64..=9, 0..5),
            b in proptest::collection::vec(-9i64..=9, 0..5),
            x in -5i64..=5,
        ) {
            let (p, q) = (IntPolynomial::from_i64(&a), IntPolynomial::from_i64(&b));
            let x = BigInt::from(x);
            prop_assert_eq!((&p * &q).eval_int(&x), p.eval_int(&x) * q.eval_int(&x));
            prop_assert_eq!((&p + &q).eval_int(&x), p.eval_int(&x) + q.eval_int(&x));
        }
    }
}
