//! Polynomials in quaternionic variables `q_i` and their conjugates `q̄_i`
//! (written `qi'`), and their reduction to the vector case through
//! `q_i = s_i + v_i`, `q̄_i = s_i - v_i` with `s_i` central.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::freealg::{add_into, CoeffDisplay, Coefficient, Rational, SPoly, ScalarCoeff};
use crate::rewrite::normalize;
use crate::syzygy::gb_vector;

/// `q_i` or its conjugate `q̄_i`. Ordered `q1 < q1' < q2 < q2' < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QLetter {
    pub index: u32,
    pub barred: bool,
}

impl QLetter {
    pub fn plain(index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        QLetter { index, barred: false }
    }

    pub fn bar(index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        QLetter { index, barred: true }
    }

    pub fn conjugate(self) -> Self {
        QLetter {
            barred: !self.barred,
            ..self
        }
    }
}

impl fmt::Display for QLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q{}{}", self.index, if self.barred { "'" } else { "" })
    }
}

/// A word over the `q`/`q̄` alphabet, ordered degree-lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QWord(Vec<QLetter>);

impl QWord {
    pub fn new(letters: Vec<QLetter>) -> Self {
        QWord(letters)
    }

    pub fn empty() -> Self {
        QWord(Vec::new())
    }

    pub fn letters(&self) -> &[QLetter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, other: &QWord) -> QWord {
        QWord(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Reverses the letters and conjugates each one.
    pub fn conjugate(&self) -> QWord {
        QWord(self.0.iter().rev().map(|l| l.conjugate()).collect())
    }
}

impl Ord for QWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for QWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// A rational linear combination of [`QWord`]s.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct QPolynomial {
    terms: BTreeMap<QWord, Rational>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(QWord::empty(), Rational::one())
    }

    pub fn term(w: QWord, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn letter(l: QLetter) -> Self {
        Self::term(QWord(vec![l]), Rational::one())
    }

    pub fn add_term(&mut self, w: QWord, c: Rational) {
        add_into(&mut self.terms, w, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the greatest word down.
    pub fn terms(&self) -> impl Iterator<Item = (&QWord, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().next_back().map_or(0, QWord::degree)
    }

    pub fn max_index(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|w| w.0.iter().map(|l| l.index))
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPolynomial {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Conjugation: an anti-automorphism and an involution.
    pub fn qconjugate(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.conjugate(), c.clone());
        }
        out
    }

    /// `(p + p̄) / 2`.
    pub fn scalar_part(&self) -> Self {
        (self + &self.qconjugate()).scale(&half())
    }

    /// `(p - p̄) / 2`.
    pub fn vector_part_q(&self) -> Self {
        (self - &self.qconjugate()).scale(&half())
    }
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        let mut out = QPolynomial::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.concat(b), x * y);
            }
        }
        out
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        &self - &rhs
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for QPolynomial {
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
            if w.degree() == 0 {
                write!(f, "{}", CoeffDisplay(&mag))?;
            } else if mag.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{}*{w}", CoeffDisplay(&mag))?;
            }
        }
        Ok(())
    }
}

/// Image of a letter: `s_i + v_i` or `s_i - v_i`.
fn split_letter(l: QLetter) -> SPoly {
    let s = SPoly::constant(ScalarCoeff::symbol(l.index));
    let v = SPoly::var(l.index);
    if l.barred {
        &s - &v
    } else {
        &s + &v
    }
}

/// The ring homomorphism `q_i ↦ s_i + v_i`, `q̄_i ↦ s_i - v_i`.
pub fn split(p: &QPolynomial) -> SPoly {
    let mut out = SPoly::zero();
    for (w, c) in &p.terms {
        let mut prod = SPoly::constant(ScalarCoeff::constant(c.clone()));
        for &l in w.letters() {
            prod = &prod * &split_letter(l);
        }
        out = &out + &prod;
    }
    out
}

/// Canonical form of `p`: split into scalar and vector parts, then
/// normalized by the general vector base on `n` variables up to
/// `max_degree`.
pub fn normalize_q(p: &QPolynomial, n: u32, max_degree: usize) -> Result<SPoly> {
    if p.degree() > max_degree {
        return Err(Error::DegreeBound {
            degree: p.degree(),
            bound: max_degree,
        });
    }
    if p.max_index() > n {
        return Err(domain(format!(
            "q{} is outside the {n} declared variables",
            p.max_index()
        )));
    }
    let base = gb_vector(n, max_degree.max(3))?;
    normalize(&split(p), &base)
}

/// Builds a word from `(index, barred)` pairs.
pub fn qword(letters: &[(u32, bool)]) -> QWord {
    QWord(
        letters
            .iter()
            .map(|&(i, b)| if b { QLetter::bar(i) } else { QLetter::plain(i) })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::int;

    fn ql(i: u32) -> QPolynomial {
        QPolynomial::letter(QLetter::plain(i))
    }

    fn qb(i: u32) -> QPolynomial {
        QPolynomial::letter(QLetter::bar(i))
    }

    #[test]
    fn conjugation_examples() {
        let p = &ql(1) * &ql(2);
        assert_eq!(p.qconjugate(), &qb(2) * &qb(1));
        assert_eq!(p.qconjugate().qconjugate(), p);
        assert_eq!(qb(1).qconjugate(), ql(1));
    }

    #[test]
    fn parts() {
        let sp = ql(1).scalar_part();
        assert_eq!(sp, (&ql(1) + &qb(1)).scale(&half()));
        let p = &(&ql(1) * &qb(2)) + &ql(3).scale(&int(3));
        assert_eq!(&p.scalar_part() + &p.vector_part_q(), p);
        assert_eq!(p.scalar_part().qconjugate(), p.scalar_part());
    }

    #[test]
    fn norm_is_conjugation_fixed_after_normalizing() {
        let norm = &ql(1) * &qb(1);
        assert!(normalize_q(&norm.vector_part_q(), 1, 3).unwrap().is_zero());
    }

    #[test]
    fn split_examples() {
        assert_eq!(split(&ql(1)).to_string(), "v1 + s1");
        assert_eq!(split(&qb(1)).to_string(), "-v1 + s1");
        assert_eq!(split(&(&ql(1) * &qb(1))).to_string(), "-v1*v1 + s1^2");
        let q0 = &(&ql(1) * &qb(1)) - &(&qb(1) * &ql(1));
        assert!(split(&q0).is_zero());
    }

    #[test]
    fn split_is_multiplicative_and_conjugation_compatible() {
        let a = &(&ql(1) * &qb(2)) + &ql(2).scale(&int(-2));
        let b = &qb(1) + &(&ql(2) * &ql(1));
        assert_eq!(split(&(&a * &b)), &split(&a) * &split(&b));
        assert_eq!(split(&a.qconjugate()), split(&a).conjugate());
    }

    #[test]
    fn normalize_q_examples() {
        assert_eq!(normalize_q(&ql(1), 1, 3).unwrap(), split(&ql(1)));
        let p = &(&ql(2) * &ql(2)) * &ql(1);
        assert!(normalize_q(&p, 1, 3).is_err());
        assert!(normalize_q(&p, 2, 2).is_err());
    }
}
