//! Dense univariate polynomials over an exact scalar ring.
//!
//! The polynomial type is generic over its coefficient scalar via the
//! num-traits hierarchy; the crate root fixes concrete aliases for the
//! scalars actually used ([`crate::Poly`] over `BigInt`, [`crate::Poly64`]
//! over `i64`). The `Eq` bound deliberately rules out floating-point
//! scalars: every reported coefficient in this crate is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{NumAssignOps, NumAssign, NumRef, Zero};

/// Coefficient scalar for [`Polynomial`]: an exact ring element that can be
/// cloned, compared, negated, and combined by value or by reference.
pub trait Scalar:
    Clone
    + Eq
    + fmt::Debug
    + fmt::Display
    + NumRef
    + NumAssign
    + for<'r> NumAssignOps<&'r Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + Eq
        + fmt::Debug
        + fmt::Display
        + NumRef
        + NumAssign
        + for<'r> NumAssignOps<&'r Self>
        + Neg<Output = Self>
{
}

/// Dense polynomial `c_0 + c_1 q + c_2 q^2 + ...` with exact coefficients.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial is
/// the empty coefficient vector and `degree()` is `None` exactly for zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    /// Build from coefficients indexed by exponent, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c * q^exp`.
    pub fn monomial(c: T, exp: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); exp + 1];
        coeffs[exp] = c;
        Polynomial { coeffs }
    }

    /// Degree of the polynomial, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Coefficients indexed by exponent, highest nonzero last.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Horner evaluation at an exact scalar point.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.clone();
        }
        acc
    }

    /// Sum of all coefficients, i.e. the value at `q = 1`.
    pub fn eval_at_one(&self) -> T {
        let mut acc = T::zero();
        for c in &self.coeffs {
            acc += c;
        }
        acc
    }

    /// Multiply by `q^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Substitute `q -> q^s`, spreading coefficients to multiples of `s`.
    pub fn inflated(&self, s: usize) -> Self {
        assert!(s >= 1, "inflation step must be positive");
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); (self.coeffs.len() - 1) * s + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * s] = c.clone();
        }
        Polynomial { coeffs }
    }

    /// Multiply every coefficient by `c`.
    pub fn scaled(&self, c: &T) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }
}

impl<T: Scalar> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len().max(rhs.coeffs.len()));
        coeffs.extend(self.coeffs.iter().cloned());
        coeffs.resize(self.coeffs.len().max(rhs.coeffs.len()), T::zero());
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len().max(rhs.coeffs.len()));
        coeffs.extend(self.coeffs.iter().cloned());
        coeffs.resize(self.coeffs.len().max(rhs.coeffs.len()), T::zero());
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a.clone() * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> Add for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self * &rhs
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::Polynomial;

    type P64 = Polynomial<i64>;
    type P = Polynomial<BigInt>;

    fn p64(coeffs: &[i64]) -> P64 {
        Polynomial::new(coeffs.to_vec())
    }

    #[test]
    fn trimming_and_degree() {
        assert_eq!(p64(&[0, 0, 0]), P64::zero());
        assert_eq!(p64(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(P64::zero().degree(), None);
        assert_eq!(P64::monomial(0, 5), P64::zero());
    }

    #[test]
    fn schoolbook_product() {
        // (1+q)^2 = 1 + 2q + q^2
        let a = p64(&[1, 1]);
        assert_eq!(&a * &a, p64(&[1, 2, 1]));
        // annihilator
        assert_eq!(&a * &P64::zero(), P64::zero());
        // (1+q)(1+q^2) = 1 + q + q^2 + q^3
        assert_eq!(&a * &p64(&[1, 0, 1]), p64(&[1, 1, 1, 1]));
    }

    #[test]
    fn add_sub_neg() {
        let a = p64(&[1, 2, 3]);
        let b = p64(&[0, -2, -3]);
        assert_eq!(&a + &b, p64(&[1]));
        assert_eq!(&a - &a, P64::zero());
        assert_eq!(-&a, p64(&[-1, -2, -3]));
    }

    #[test]
    fn eval_shift_inflate() {
        let a = p64(&[1, 1, 1]);
        assert_eq!(a.eval(&2), 7);
        assert_eq!(a.eval_at_one(), 3);
        assert_eq!(a.shifted(2), p64(&[0, 0, 1, 1, 1]));
        assert_eq!(a.inflated(2), p64(&[1, 0, 1, 0, 1]));
        assert_eq!(a.scaled(&3), p64(&[3, 3, 3]));
    }

    #[test]
    fn bigint_scalar_round_trip() {
        let a = P::new(vec![BigInt::from(1), BigInt::from(1)]);
        let mut acc = P::one();
        for _ in 0..64 {
            acc = &acc * &a;
        }
        // (1+q)^64 at q=1 is 2^64, exceeding any machine word
        assert_eq!(acc.eval_at_one(), BigInt::from(2u8).pow(64));
        assert_eq!(acc.coeff(32), BigInt::parse_bytes(b"1832624140942590534", 10).unwrap());
    }
}
