//! Commutative polynomials in the central scalar symbols `s1, s2, ...`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Pow, Signed, Zero};

use super::coeff::{add_into, fmt_rational, Coefficient, Rational};

/// Exponent vector of a scalar monomial; `exps[i]` is the power of `s(i+1)`.
/// Trailing zeros are trimmed so equal monomials compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ScalarMonomial(Vec<u32>);

impl ScalarMonomial {
    pub fn one() -> Self {
        ScalarMonomial(Vec::new())
    }

    pub fn symbol(index: u32) -> Self {
        Self::power(index, 1)
    }

    pub fn power(index: u32, exp: u32) -> Self {
        assert!(index >= 1, "scalar symbols start at s1");
        let mut exps = vec![0; index as usize];
        exps[index as usize - 1] = exp;
        let mut m = ScalarMonomial(exps);
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let exps = (0..len)
            .map(|i| self.0.get(i).copied().unwrap_or(0) + other.0.get(i).copied().unwrap_or(0))
            .collect();
        ScalarMonomial(exps)
    }
}

// graded, then lexicographic on exponents (s1 heaviest)
impl Ord for ScalarMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let len = self.0.len().max(other.0.len());
            for i in 0..len {
                let a = self.0.get(i).copied().unwrap_or(0);
                let b = other.0.get(i).copied().unwrap_or(0);
                if a != b {
                    return a.cmp(&b);
                }
            }
            std::cmp::Ordering::Equal
        })
    }
}

impl PartialOrd for ScalarMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ScalarMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "s{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A commutative polynomial in the scalar symbols with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScalarCoeff {
    terms: BTreeMap<ScalarMonomial, Rational>,
}

impl ScalarCoeff {
    pub fn constant(r: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert(ScalarMonomial::one(), r);
        }
        ScalarCoeff { terms }
    }

    pub fn symbol(index: u32) -> Self {
        Self::monomial(ScalarMonomial::symbol(index), Rational::one())
    }

    pub fn monomial(m: ScalarMonomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ScalarCoeff { terms }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ScalarMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = ScalarCoeff::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Zero for ScalarCoeff {
    fn zero() -> Self {
        ScalarCoeff::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for ScalarCoeff {
    fn one() -> Self {
        ScalarCoeff::constant(Rational::one())
    }
}

impl Add for ScalarCoeff {
    type Output = ScalarCoeff;

    fn add(mut self, rhs: ScalarCoeff) -> ScalarCoeff {
        for (m, c) in rhs.terms {
            add_into(&mut self.terms, m, c);
        }
        self
    }
}

impl Sub for ScalarCoeff {
    type Output = ScalarCoeff;

    fn sub(self, rhs: ScalarCoeff) -> ScalarCoeff {
        self + (-rhs)
    }
}

impl Neg for ScalarCoeff {
    type Output = ScalarCoeff;

    fn neg(self) -> ScalarCoeff {
        ScalarCoeff {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for ScalarCoeff {
    type Output = ScalarCoeff;

    fn mul(self, rhs: ScalarCoeff) -> ScalarCoeff {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                add_into(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        ScalarCoeff { terms }
    }
}

impl Coefficient for ScalarCoeff {
    fn from_rational(r: Rational) -> Self {
        ScalarCoeff::constant(r)
    }

    fn mul_rational(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return ScalarCoeff::zero();
        }
        ScalarCoeff {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * r)).collect(),
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn evaluate(&self, scalars: &BTreeMap<u32, Rational>) -> Result<Rational, u32> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let idx = i as u32 + 1;
                let s = scalars.get(&idx).ok_or(idx)?;
                value *= Pow::pow(s, e);
            }
            total += value;
        }
        Ok(total)
    }

    fn max_symbol(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.0.len() as u32)
            .max()
            .unwrap_or(0)
    }

    fn split_sign(&self) -> (bool, Self) {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if c.is_negative() {
                return (true, ScalarCoeff::monomial(m.clone(), -c.clone()));
            }
        }
        (false, self.clone())
    }

    fn is_compound(&self) -> bool {
        self.terms.len() > 1
    }

    fn fmt_coeff(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.degree() == 0 {
                fmt_rational(&mag, f)?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                fmt_rational(&mag, f)?;
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ScalarCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_coeff(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::coeff::{int, rat};

    #[test]
    fn arithmetic_and_display() {
        let s1 = ScalarCoeff::symbol(1);
        let s2 = ScalarCoeff::symbol(2);
        let p = (s1.clone() + s2.clone()) * (s1.clone() - s2.clone());
        assert_eq!(p.to_string(), "s1^2 - s2^2");
        let q = s1.clone() * s2.mul_rational(&rat(-3, 2)) + ScalarCoeff::constant(int(4));
        assert_eq!(q.to_string(), "-3/2*s1*s2 + 4");
        assert!((s1.clone() - s1).is_zero());
    }

    #[test]
    fn evaluate() {
        let s1 = ScalarCoeff::symbol(1);
        let p = s1.pow(2).mul_rational(&rat(1, 2)) + ScalarCoeff::symbol(3);
        let mut vals = BTreeMap::new();
        vals.insert(1, int(3));
        assert_eq!(p.evaluate(&vals), Err(3));
        vals.insert(3, int(-1));
        assert_eq!(p.evaluate(&vals), Ok(rat(7, 2)));
    }

    #[test]
    fn sign_split() {
        let m = ScalarCoeff::symbol(2).mul_rational(&int(-2));
        let (neg, mag) = m.split_sign();
        assert!(neg);
        assert_eq!(mag.to_string(), "2*s2");
        assert_eq!(ScalarCoeff::constant(int(5)).as_rational(), Some(int(5)));
        assert_eq!(ScalarCoeff::symbol(1).as_rational(), None);
    }
}
