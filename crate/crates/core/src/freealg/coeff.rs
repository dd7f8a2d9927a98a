use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Writes `a/b`, or just `a` when the denominator is one.
pub fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// The coefficient ring of a [`Polynomial`](super::Polynomial).
///
/// Implemented by plain rationals and by [`ScalarCoeff`](super::ScalarCoeff),
/// the commutative polynomials in the central scalar symbols.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(r: Rational) -> Self;

    fn mul_rational(&self, r: &Rational) -> Self;

    /// The value as a rational, if the coefficient has no scalar symbols.
    fn as_rational(&self) -> Option<Rational>;

    /// Substitutes values for the scalar symbols; a missing symbol is
    /// reported by its index.
    fn evaluate(&self, scalars: &BTreeMap<u32, Rational>) -> Result<Rational, u32>;

    /// Highest scalar-symbol index that occurs, 0 if none.
    fn max_symbol(&self) -> u32;

    /// Splits off a leading sign for display: `(negative, magnitude)`.
    fn split_sign(&self) -> (bool, Self);

    /// True when the printed form needs parentheses as a factor.
    fn is_compound(&self) -> bool;

    fn fmt_coeff(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl Coefficient for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn mul_rational(&self, r: &Rational) -> Self {
        self * r
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn evaluate(&self, _scalars: &BTreeMap<u32, Rational>) -> Result<Rational, u32> {
        Ok(self.clone())
    }

    fn max_symbol(&self) -> u32 {
        0
    }

    fn split_sign(&self) -> (bool, Self) {
        (self.is_negative(), self.abs())
    }

    fn is_compound(&self) -> bool {
        false
    }

    fn fmt_coeff(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(self, f)
    }
}

/// Adapter so `Coefficient::fmt_coeff` can be used with `{}`.
pub(crate) struct CoeffDisplay<'a, C>(pub &'a C);

impl<C: Coefficient> fmt::Display for CoeffDisplay<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_coeff(f)
    }
}

// Arithmetic helpers shared by the polynomial types.
pub(crate) fn add_into<K: Ord, C: Coefficient>(map: &mut BTreeMap<K, C>, key: K, c: C) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().clone() + c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}
