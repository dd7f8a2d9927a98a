use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::quaternion::{qmul, Quaternion};
use crate::error::{Error, Result};
use crate::freealg::{Coefficient, Polynomial, Rational, Variable, Word};

/// Values for vector variables (pure imaginary quaternions) and scalar
/// symbols (rationals).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Assignment {
    pub vectors: BTreeMap<u32, Quaternion<Rational>>,
    pub scalars: BTreeMap<u32, Rational>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Assigns a vector variable. Panics if `value` has a real part.
    pub fn with_vector(mut self, index: u32, value: Quaternion<Rational>) -> Self {
        assert!(value.is_pure(), "vector values are pure imaginary");
        self.vectors.insert(index, value);
        self
    }

    pub fn with_scalar(mut self, index: u32, value: Rational) -> Self {
        self.scalars.insert(index, value);
        self
    }

    /// `v1 = i, v2 = j, v3 = k`.
    pub fn standard_basis() -> Self {
        Self::new()
            .with_vector(1, Quaternion::i())
            .with_vector(2, Quaternion::j())
            .with_vector(3, Quaternion::k())
    }

    // every vector coordinate as an i128, if all are integers that fit
    fn integer_vectors(&self) -> Option<BTreeMap<u32, Quaternion<i128>>> {
        self.vectors
            .iter()
            .map(|(&i, q)| {
                let to_int = |x: &Rational| -> Option<i128> {
                    x.is_integer().then(|| x.to_integer().to_i128()).flatten()
                };
                Some((i, Quaternion::new(to_int(&q.a)?, to_int(&q.b)?, to_int(&q.c)?, to_int(&q.d)?)))
            })
            .collect()
    }
}

/// Uniform integer coordinates in `[-9, 9]` for `v1..vn` (redrawn when all
/// three are zero) and uniform integers in `[-9, 9]` for `s1..sn`.
pub fn random_assignment(n: u32, seed: u64) -> Assignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = Assignment::new();
    for i in 1..=n {
        let v = loop {
            let (x, y, z) = (
                rng.gen_range(-9i64..=9),
                rng.gen_range(-9i64..=9),
                rng.gen_range(-9i64..=9),
            );
            if (x, y, z) != (0, 0, 0) {
                break Quaternion::pure(x, y, z);
            }
        };
        a.vectors.insert(i, v.map(|x: &i64| Rational::from_integer((*x).into())));
    }
    for i in 1..=n {
        a.scalars
            .insert(i, Rational::from_integer(rng.gen_range(-9i64..=9).into()));
    }
    a
}

fn unassigned_vector(w: &Word, a: &Assignment) -> Option<u32> {
    w.letters().iter().copied().find(|l| !a.vectors.contains_key(l))
}

/// Image of `p` under the evaluation homomorphism: vector letters become
/// their assigned quaternions, words become products, scalar symbols their
/// assigned values.
pub fn evaluate<C: Coefficient>(p: &Polynomial<C>, a: &Assignment) -> Result<Quaternion<Rational>> {
    // scalar coefficients first, then clear denominators
    let mut terms: Vec<(&Word, Rational)> = Vec::with_capacity(p.len());
    for (w, c) in p.terms() {
        if let Some(l) = unassigned_vector(w, a) {
            return Err(Error::Unassigned(Variable::vector(l)));
        }
        let value = c
            .evaluate(&a.scalars)
            .map_err(|s| Error::Unassigned(Variable::scalar(s)))?;
        terms.push((w, value));
    }
    if let Some(ints) = a.integer_vectors() {
        let lcm = terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let scaled: Vec<(&Word, BigInt)> = terms
            .iter()
            .map(|(w, c)| (*w, (c * Rational::from_integer(lcm.clone())).to_integer()))
            .collect();
        let sum = evaluate_i128(&scaled, &ints).unwrap_or_else(|| evaluate_bigint(&scaled, &ints));
        let denom = Rational::from_integer(lcm);
        return Ok(sum.map(|x| Rational::from_integer(x.clone()) / denom.clone()));
    }
    let mut sum = Quaternion::<Rational>::zero();
    for (w, c) in terms {
        sum = sum + word_value(w, &a.vectors).scale(&c);
    }
    Ok(sum)
}

fn word_value<T>(w: &Word, vals: &BTreeMap<u32, Quaternion<T>>) -> Quaternion<T>
where
    T: Clone + Zero + One + std::ops::Neg<Output = T> + std::ops::Sub<Output = T>,
{
    let mut acc = Quaternion::<T>::one();
    for l in w.letters() {
        acc = qmul(&acc, &vals[l]);
    }
    acc
}

fn evaluate_i128(
    terms: &[(&Word, BigInt)],
    vals: &BTreeMap<u32, Quaternion<i128>>,
) -> Option<Quaternion<BigInt>> {
    let mut sum = Quaternion::<i128>::zero();
    for (w, c) in terms {
        let c = c.to_i128()?;
        let mut acc = Quaternion::<i128>::one();
        for l in w.letters() {
            acc = acc.checked_mul(&vals[l])?;
        }
        sum = sum.checked_add(&acc.checked_scale(c)?)?;
    }
    Some(sum.map(|&x| BigInt::from(x)))
}

fn evaluate_bigint(
    terms: &[(&Word, BigInt)],
    vals: &BTreeMap<u32, Quaternion<i128>>,
) -> Quaternion<BigInt> {
    let vals: BTreeMap<u32, Quaternion<BigInt>> =
        vals.iter().map(|(&i, q)| (i, q.map(|&x| BigInt::from(x)))).collect();
    let mut sum = Quaternion::<BigInt>::zero();
    for (w, c) in terms {
        sum = sum + word_value(w, &vals).scale(c);
    }
    sum
}

/// Evaluation with every coordinate treated as a general rational; used to
/// cross-check the integer fast path.
pub fn evaluate_rational<C: Coefficient>(
    p: &Polynomial<C>,
    a: &Assignment,
) -> Result<Quaternion<Rational>> {
    let mut sum = Quaternion::<Rational>::zero();
    for (w, c) in p.terms() {
        if let Some(l) = unassigned_vector(w, a) {
            return Err(Error::Unassigned(Variable::vector(l)));
        }
        let value = c
            .evaluate(&a.scalars)
            .map_err(|s| Error::Unassigned(Variable::scalar(s)))?;
        sum = sum + word_value(w, &a.vectors).scale(&value);
    }
    Ok(sum)
}

/// Outcome of a randomized zero test.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Verdict {
    /// Exactly zero at every trial assignment.
    Zero { trials: usize },
    /// The first trial (by index) with a nonzero value.
    Counterexample {
        trial: usize,
        assignment: Assignment,
        value: Quaternion<Rational>,
    },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Zero { .. })
    }
}

/// Seed of trial `t` in a zero test started from `seed`.
pub fn trial_seed(seed: u64, t: usize) -> u64 {
    seed.wrapping_add((t as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

/// Evaluates `p` at `trials` seeded random assignments. Trials run in
/// parallel, but the reported witness is always the lowest failing trial.
pub fn zero_test<C: Coefficient>(p: &Polynomial<C>, trials: usize, seed: u64) -> Verdict {
    let n = p.max_vector_index().max(p.max_scalar_index());
    let witness = (0..trials)
        .into_par_iter()
        .find_map_first(|t| {
            let a = random_assignment(n, trial_seed(seed, t));
            let value = evaluate(p, &a).expect("random assignments cover every variable");
            (!value.is_zero()).then_some((t, a, value))
        });
    match witness {
        None => Verdict::Zero { trials },
        Some((trial, assignment, value)) => Verdict::Counterexample {
            trial,
            assignment,
            value,
        },
    }
}
