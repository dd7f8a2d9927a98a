use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::coeff::{add_into, CoeffDisplay, Coefficient, Rational};
use super::word::{Multiset, Word};

/// A non-commutative polynomial: a finite map from words to nonzero
/// coefficients. Terms iterate from the greatest word down.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<C = Rational> {
    terms: BTreeMap<Word, C>,
}

/// Polynomial with plain rational coefficients.
pub type Poly = Polynomial<Rational>;

impl<C: Coefficient> Default for Polynomial<C> {
    fn default() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Word::empty(), C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Word::empty(), c)
    }

    pub fn term(word: Word, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(word, c);
        p
    }

    pub fn word(word: impl Into<Word>) -> Self {
        Self::term(word.into(), C::one())
    }

    pub fn var(index: u32) -> Self {
        Self::word(Word::letter(index))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, C)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// Adds `c·word`, dropping the term if it cancels.
    pub fn add_term(&mut self, word: Word, c: C) {
        add_into(&mut self.terms, word, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the greatest word down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &C)> + ExactSizeIterator {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, word: &Word) -> Option<&C> {
        self.terms.get(word)
    }

    pub fn leading_term(&self) -> Option<(&Word, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    /// Highest word length; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.leading_word().map_or(0, Word::degree)
    }

    /// True when every word has the same length.
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Word::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn max_vector_index(&self) -> u32 {
        self.terms.keys().map(Word::max_letter).max().unwrap_or(0)
    }

    pub fn max_scalar_index(&self) -> u32 {
        self.terms.values().map(C::max_symbol).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x.clone() * c.clone())))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.mul_rational(r)))
                .collect(),
        }
    }

    /// `left · self · right` for words `left`, `right`.
    pub fn sandwich(&self, left: &[u32], right: &[u32]) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (Word::sandwich(left, w.letters(), right), c.clone()))
                .collect(),
        }
    }

    pub fn map_words(&self, mut f: impl FnMut(&Word) -> Word) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (f(w), c.clone())))
    }

    /// Reverses the letters of every word.
    pub fn reversion(&self) -> Self {
        self.map_words(Word::reversed)
    }

    /// Quaternionic conjugation for vector letters: each word is reversed
    /// and picks up `(-1)^degree`; scalar coefficients are fixed.
    pub fn conjugate(&self) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| {
                    let c = if w.degree() % 2 == 1 { -c.clone() } else { c.clone() };
                    (w.reversed(), c)
                })
                .collect(),
        }
    }

    /// Scalar part `(p + conj p) / 2`.
    pub fn bracket(&self) -> Self {
        (self + &self.conjugate()).scale_rational(&half())
    }

    /// Vector part `(p - conj p) / 2`.
    pub fn vector_part(&self) -> Self {
        (self - &self.conjugate()).scale_rational(&half())
    }

    /// Set of letter multisets among the words.
    pub fn multidegree(&self) -> BTreeSet<Multiset> {
        self.terms.keys().map(Word::multiset).collect()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn into_terms(self) -> impl DoubleEndedIterator<Item = (Word, C)> {
        self.terms.into_iter().rev()
    }

    /// Drops the scalar-symbol structure when every coefficient is rational.
    pub fn to_rational(&self) -> Option<Poly> {
        let mut out = Poly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.as_rational()?);
        }
        Some(out)
    }

    pub(crate) fn terms_mut(&mut self) -> &mut BTreeMap<Word, C> {
        &mut self.terms
    }
}

impl Poly {
    /// Lifts a rational polynomial into another coefficient ring.
    pub fn lift<D: Coefficient>(&self) -> Polynomial<D> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), D::from_rational(c.clone())))
                .collect(),
        }
    }
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.concat(b), x.clone() * y.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<C: Coefficient> $tr for Polynomial<C> {
            type Output = Polynomial<C>;

            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$method(&rhs)
            }
        }

        impl<C: Coefficient> $tr<&Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;

            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    /// Canonical text form: terms from the greatest word down, e.g.
    /// `-1/2*v3*v2*v1 + 1/2*v1*v2*v3`; the empty word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms().enumerate() {
            let (neg, mag) = c.split_sign();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let coeff = CoeffDisplay(&mag);
            let coeff = if mag.is_compound() {
                format!("({coeff})")
            } else {
                coeff.to_string()
            };
            if w.is_empty() {
                f.write_str(&coeff)?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{coeff}*{w}")?;
            }
        }
        Ok(())
    }
}

/// Sum of two polynomials.
pub fn add<C: Coefficient>(p: &Polynomial<C>, q: &Polynomial<C>) -> Polynomial<C> {
    p + q
}

/// `c · p`.
pub fn scale<C: Coefficient>(c: &C, p: &Polynomial<C>) -> Polynomial<C> {
    p.scale(c)
}

/// Concatenation product extended bilinearly.
pub fn mul<C: Coefficient>(p: &Polynomial<C>, q: &Polynomial<C>) -> Polynomial<C> {
    p * q
}

pub fn reversion<C: Coefficient>(p: &Polynomial<C>) -> Polynomial<C> {
    p.reversion()
}

/// Scalar part of a word: `(w + (-1)^k w†) / 2` for a word of length `k`.
pub fn bracket(w: &Word) -> Poly {
    Poly::word(w.clone()).bracket()
}

/// Vector part of a word: `(w - (-1)^k w†) / 2`.
pub fn vector_part(w: &Word) -> Poly {
    Poly::word(w.clone()).vector_part()
}

/// Cross product of two vector expressions, `(ab - ba) / 2`.
pub fn cross<C: Coefficient>(a: &Polynomial<C>, b: &Polynomial<C>) -> Polynomial<C> {
    (&(a * b) - &(b * a)).scale_rational(&half())
}

pub fn multidegree<C: Coefficient>(p: &Polynomial<C>) -> BTreeSet<Multiset> {
    p.multidegree()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::coeff::{int, rat};
    use crate::freealg::ScalarCoeff;

    fn w(l: &[u32]) -> Poly {
        Poly::word(Word::from(l))
    }

    #[test]
    fn distributivity_example() {
        let p = &(&w(&[1]) + &w(&[2])) * &w(&[1]);
        assert_eq!(p, &w(&[1, 1]) + &w(&[2, 1]));
    }

    #[test]
    fn identity_and_scalar_centrality() {
        let p = &w(&[1, 2]) + &w(&[3]).scale(&int(4));
        assert_eq!(&Poly::one() * &p, p);
        assert_eq!(&p * &Poly::one(), p);

        let s1 = Polynomial::constant(ScalarCoeff::symbol(1));
        let v1: Polynomial<ScalarCoeff> = Polynomial::var(1);
        let v2: Polynomial<ScalarCoeff> = Polynomial::var(2);
        let left = &(&s1 * &v1) * &v2;
        let right = &(&v1 * &v2) * &s1;
        assert_eq!(left, right);
        assert_eq!(left.to_string(), "s1*v1*v2");
    }

    #[test]
    fn reversion_examples() {
        assert_eq!(w(&[1, 2, 3]).reversion(), w(&[3, 2, 1]));
        assert_eq!(w(&[1]).reversion(), w(&[1]));
        let p = &w(&[1, 2, 2]) - &w(&[3, 1]).scale(&rat(1, 3));
        assert_eq!(p.reversion().reversion(), p);
    }

    #[test]
    fn bracket_examples() {
        let b = bracket(&Word::from([1, 2]));
        assert_eq!(b, (&w(&[1, 2]) + &w(&[2, 1])).scale(&rat(1, 2)));
        let b3 = bracket(&Word::from([1, 2, 3]));
        assert_eq!(b3, (&w(&[1, 2, 3]) - &w(&[3, 2, 1])).scale(&rat(1, 2)));
        let b4 = bracket(&Word::from([1, 2, 3, 4]));
        assert_eq!(b4, (&w(&[1, 2, 3, 4]) + &w(&[4, 3, 2, 1])).scale(&rat(1, 2)));
        assert!(bracket(&Word::letter(1)).is_zero());
        assert_eq!(vector_part(&Word::letter(1)), w(&[1]));
        assert_eq!(bracket(&Word::empty()), Poly::one());
    }

    #[test]
    fn multidegree_examples() {
        let p = &w(&[1, 2]) + &w(&[2, 2]);
        assert_eq!(p.multidegree().len(), 2);
        assert!(Poly::zero().multidegree().is_empty());
    }

    #[test]
    fn formatting() {
        let p = (&w(&[1, 2, 3]) - &w(&[3, 2, 1])).scale(&rat(-1, 2));
        assert_eq!(p.to_string(), "1/2*v3*v2*v1 - 1/2*v1*v2*v3");
        let q = &w(&[1, 1]) + &Poly::constant(int(1));
        assert_eq!(q.to_string(), "v1*v1 + 1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::one().to_string(), "1");

        let s = ScalarCoeff::symbol(1) + ScalarCoeff::symbol(2);
        let v: Polynomial<ScalarCoeff> = Polynomial::term(Word::from([1, 2]), -s);
        assert_eq!(v.to_string(), "(-s1 - s2)*v1*v2");
    }
}
