use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::rank::bareiss_rank;
use crate::error::{domain, Error, Result};
use crate::freealg::{Multiset, Poly, Rational, Word};
use crate::rewrite::{is_normal_factorfree, is_normal_structural, NormalMode, RuleSet};

/// Default cap on the number of words (matrix columns) in a slice.
pub const DEFAULT_GUARD: usize = 10_000;

/// Which graded piece of the free algebra to count in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slice {
    /// All words of length `d` over `v1..vn`.
    Full { n: u32, d: usize },
    /// All rearrangements of one multiset of letters.
    Multiset(Multiset),
}

impl Slice {
    /// Permutations of `v1..vn`.
    pub fn multilinear(n: u32) -> Slice {
        Slice::Multiset(Multiset::new((1..=n).collect()))
    }

    /// The words of the slice in increasing order.
    pub fn words(&self) -> Vec<Word> {
        match self {
            Slice::Full { n, d } => all_words(*n, *d),
            Slice::Multiset(ms) => arrangements(ms.letters()),
        }
    }

    fn size_hint(&self) -> usize {
        match self {
            Slice::Full { n, d } => (*n as usize).saturating_pow(*d as u32),
            Slice::Multiset(ms) => (1..=ms.len()).fold(1usize, |a, k| a.saturating_mul(k)),
        }
    }

    fn structural_mode(&self) -> NormalMode {
        match self {
            Slice::Multiset(ms) if ms.letters().windows(2).all(|p| p[0] != p[1]) => {
                NormalMode::Multilinear
            }
            _ => NormalMode::General,
        }
    }
}

impl fmt::Display for Slice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slice::Full { n, d } => write!(f, "n={n} d={d}"),
            Slice::Multiset(ms) => write!(f, "multiset {ms}"),
        }
    }
}

/// Words of length `d` over `1..=n`, in increasing order.
pub fn all_words(n: u32, d: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|w: Vec<u32>| {
                (1..=n).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Word::new).collect()
}

/// Distinct rearrangements of `letters`, in increasing order.
pub fn arrangements(letters: &[u32]) -> Vec<Word> {
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    let mut used = vec![false; sorted.len()];
    let mut cur = Vec::with_capacity(sorted.len());
    fn rec(sorted: &[u32], used: &mut [bool], cur: &mut Vec<u32>, out: &mut Vec<Word>) {
        if cur.len() == sorted.len() {
            out.push(Word::new(cur.clone()));
            return;
        }
        for i in 0..sorted.len() {
            // skip a letter equal to an unused earlier copy
            if used[i] || (i > 0 && sorted[i] == sorted[i - 1] && !used[i - 1]) {
                continue;
            }
            used[i] = true;
            cur.push(sorted[i]);
            rec(sorted, used, cur, out);
            cur.pop();
            used[i] = false;
        }
    }
    rec(&sorted, &mut used, &mut cur, &mut out);
    out
}

/// Counts of normal words in one slice by three independent routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionReport {
    pub slice: Slice,
    pub words: usize,
    /// Rank of the ideal's piece of the slice.
    pub rank: usize,
    /// Words containing no lead of the base.
    pub factorfree: usize,
    /// Words with the structural normal shape.
    pub structural: usize,
}

impl DimensionReport {
    /// `words - rank`: the dimension of the quotient in this slice.
    pub fn quotient_dimension(&self) -> usize {
        self.words - self.rank
    }

    pub fn agrees(&self) -> bool {
        self.quotient_dimension() == self.factorfree && self.factorfree == self.structural
    }
}

impl fmt::Display for DimensionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} words, rank {}, quotient {}, factor-free {}, structural {}",
            self.slice,
            self.words,
            self.rank,
            self.quotient_dimension(),
            self.factorfree,
            self.structural
        )
    }
}

/// Compares `#words - rank(ideal slice)` with the number of words that are
/// normal for `base`, counted by factor search and by shape.
pub fn dimension_check(slice: &Slice, generators: &[Poly], base: &RuleSet) -> Result<DimensionReport> {
    dimension_check_with_guard(slice, generators, base, DEFAULT_GUARD)
}

pub fn dimension_check_with_guard(
    slice: &Slice,
    generators: &[Poly],
    base: &RuleSet,
    guard: usize,
) -> Result<DimensionReport> {
    let size = slice.size_hint();
    if size > guard {
        return Err(Error::Guard { size, limit: guard });
    }
    let words = slice.words();
    let degree = words.first().map_or(0, Word::degree);
    if degree > base.degree_bound() {
        return Err(Error::DegreeBound {
            degree,
            bound: base.degree_bound(),
        });
    }
    let column: HashMap<&Word, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();

    let mut rows: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    let mut push = |p: Poly| {
        if p.is_zero() {
            return;
        }
        let lcm = p
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let scale = Rational::from_integer(lcm);
        let mut row = vec![BigInt::from(0); words.len()];
        for (w, c) in p.terms() {
            row[column[w]] = (c * &scale).to_integer();
        }
        rows.insert(row);
    };

    for g in generators {
        let mds = g.multidegree();
        if mds.len() > 1 {
            return Err(domain(format!("generator {g} mixes letter multisets")));
        }
        let Some(md) = mds.into_iter().next() else {
            continue;
        };
        let e = md.len();
        if e > degree {
            continue;
        }
        match slice {
            Slice::Full { n, .. } => {
                if g.max_vector_index() > *n {
                    continue;
                }
                for a in 0..=degree - e {
                    for w1 in all_words(*n, a) {
                        for w2 in all_words(*n, degree - e - a) {
                            push(g.sandwich(w1.letters(), w2.letters()));
                        }
                    }
                }
            }
            Slice::Multiset(target) => {
                let Some(rest) = multiset_difference(target.letters(), md.letters()) else {
                    continue;
                };
                for u in arrangements(&rest) {
                    let u = u.letters();
                    for a in 0..=u.len() {
                        push(g.sandwich(&u[..a], &u[a..]));
                    }
                }
            }
        }
    }

    let rank = bareiss_rank(rows.into_iter().collect());
    let factorfree = words.iter().filter(|w| is_normal_factorfree(w, base)).count();
    let mode = slice.structural_mode();
    let structural = words
        .iter()
        .filter(|w| is_normal_structural(w, mode).expect("mode matches the slice"))
        .count();
    Ok(DimensionReport {
        slice: slice.clone(),
        words: words.len(),
        rank,
        factorfree,
        structural,
    })
}

/// `big - small` as sorted multisets, if `small` is contained in `big`.
fn multiset_difference(big: &[u32], small: &[u32]) -> Option<Vec<u32>> {
    let mut rest = big.to_vec();
    for l in small {
        let i = rest.iter().position(|x| x == l)?;
        rest.remove(i);
    }
    Some(rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration() {
        assert_eq!(all_words(2, 3).len(), 8);
        assert_eq!(all_words(3, 0), vec![Word::empty()]);
        assert_eq!(arrangements(&[1, 2, 3]).len(), 6);
        assert_eq!(arrangements(&[1, 1, 2]).len(), 3);
        let w = all_words(3, 3);
        assert!(w.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn multiset_difference_cases() {
        assert_eq!(multiset_difference(&[1, 2, 2, 3], &[2, 3]), Some(vec![1, 2]));
        assert_eq!(multiset_difference(&[1, 2], &[3]), None);
    }

    #[test]
    fn guard() {
        let base = RuleSet::empty(20);
        let err = dimension_check(&Slice::Full { n: 10, d: 5 }, &[], &base).unwrap_err();
        assert_eq!(err, Error::Guard { size: 100_000, limit: 10_000 });
    }
}
