//! Scalar abstraction for exact game arithmetic.
//!
//! Everything in this crate — payoff tensors, strategies, the simplex
//! solver, the equilibrium verifiers — is generic over a [`Scalar`] that
//! behaves as an ordered field. Equilibrium membership is decided by exact
//! comparisons, so the trait demands a total order (`Ord`) and exact
//! division; floating-point types do not qualify. [`Rational`] is the
//! concrete instantiation used throughout the CLI and the test suites.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, NumAssign, Signed};

/// Numeric scalar for payoffs, probabilities, and LP coefficients.
///
/// Implementors must form an ordered field: `+`, `-`, `*`, `/` are exact
/// and `Ord` is compatible with them. Arbitrary precision is effectively
/// required in practice because simplex pivoting grows numerators and
/// denominators well past machine words.
pub trait Scalar:
    Num
    + NumAssign
    + Signed
    + Ord
    + Clone
    + FromPrimitive
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Num
        + NumAssign
        + Signed
        + Ord
        + Clone
        + FromPrimitive
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Arbitrary-precision rational number, always kept in reduced form with a
/// positive denominator by `num-rational`.
pub type Rational = num_rational::BigRational;

/// Embeds an integer into the scalar field.
pub fn int<S: Scalar>(value: i64) -> S {
    S::from_i64(value).expect("scalar embeds i64")
}

/// The exact fraction `num/den`.
///
/// Panics when `den` is zero.
pub fn frac<S: Scalar>(num: i64, den: i64) -> S {
    assert!(den != 0, "zero denominator");
    int::<S>(num) / int::<S>(den)
}

/// Square roots inside the scalar field, when they exist.
///
/// Used by the fully-mixed branch of Nash support enumeration, where
/// indifference systems reduce to quadratics; only roots expressible in the
/// field are real solutions there.
pub trait ExactSqrt: Sized {
    /// Exact nonnegative square root, or `None` when `self` is negative or
    /// has no square root in the field.
    fn exact_sqrt(&self) -> Option<Self>;
}

impl ExactSqrt for Rational {
    fn exact_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let numer = self.numer();
        let denom = self.denom();
        let sqrt_numer = numer.sqrt();
        let sqrt_denom = denom.sqrt();
        if &sqrt_numer * &sqrt_numer == *numer && &sqrt_denom * &sqrt_denom == *denom {
            Some(Rational::new(sqrt_numer, sqrt_denom))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn frac_reduces_to_canonical_form() {
        let x: Rational = frac(4, 8);
        assert_eq!(x, frac(1, 2));
        assert_eq!(x.numer().to_string(), "1");
        assert_eq!(x.denom().to_string(), "2");
    }

    #[test]
    fn negative_fractions_keep_positive_denominator() {
        let x: Rational = frac(3, -4);
        assert_eq!(x, frac(-3, 4));
        assert!(x.denom().sign() == num_bigint::Sign::Plus);
    }

    #[test]
    fn exact_sqrt_of_perfect_squares() {
        let x: Rational = frac(9, 4);
        assert_eq!(x.exact_sqrt(), Some(frac(3, 2)));
        let y: Rational = frac(2, 1);
        assert_eq!(y.exact_sqrt(), None);
        let z: Rational = frac(-1, 1);
        assert_eq!(z.exact_sqrt(), None);
        assert_eq!(Rational::zero().exact_sqrt(), Some(Rational::zero()));
    }
}
