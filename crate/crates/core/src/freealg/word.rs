use std::cmp::Ordering;
use std::fmt;

/// Whether a variable is a vector letter or a central scalar symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarKind {
    Vector,
    Scalar,
}

/// A named variable `v_i` or `s_i`; indices start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Variable {
    pub kind: VarKind,
    pub index: u32,
}

impl Variable {
    pub fn vector(index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        Variable {
            kind: VarKind::Vector,
            index,
        }
    }

    pub fn scalar(index: u32) -> Self {
        assert!(index >= 1, "variable indices start at 1");
        Variable {
            kind: VarKind::Scalar,
            index,
        }
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarKind::Vector => write!(f, "v{}", self.index),
            VarKind::Scalar => write!(f, "s{}", self.index),
        }
    }
}

/// A monomial of the free monoid on `v1, v2, ...`, stored as letter indices.
///
/// Words are ordered degree-lexicographically: longer words are greater, and
/// words of equal length compare letter by letter from the left with
/// `v1 < v2 < ... < vn`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        assert!(
            letters.iter().all(|&l| l >= 1),
            "variable indices start at 1"
        );
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(index: u32) -> Self {
        Word::new(vec![index])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Highest letter index, or 0 for the empty word.
    pub fn max_letter(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + other.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `left · self · right` as a single word.
    pub fn sandwich(left: &[u32], middle: &[u32], right: &[u32]) -> Word {
        let mut letters = Vec::with_capacity(left.len() + middle.len() + right.len());
        letters.extend_from_slice(left);
        letters.extend_from_slice(middle);
        letters.extend_from_slice(right);
        Word(letters)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// The multiset of letters, as a sorted list.
    pub fn multiset(&self) -> Multiset {
        let mut letters = self.0.clone();
        letters.sort_unstable();
        Multiset(letters)
    }

    /// True when no letter repeats.
    pub fn is_multilinear(&self) -> bool {
        let ms = self.multiset();
        ms.0.windows(2).all(|w| w[0] != w[1])
    }
}

impl From<&[u32]> for Word {
    fn from(letters: &[u32]) -> Self {
        Word::new(letters.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for Word {
    fn from(letters: [u32; N]) -> Self {
        Word::new(letters.to_vec())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "v{l}")?;
        }
        Ok(())
    }
}

/// Degree-lexicographic comparison of two words.
pub fn word_cmp(a: &Word, b: &Word) -> Ordering {
    a.cmp(b)
}

/// A multiset of vector letters, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset(Vec<u32>);

impl Multiset {
    pub fn new(mut letters: Vec<u32>) -> Self {
        letters.sort_unstable();
        Multiset(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "v{l}")?;
        }
        f.write_str("}")
    }
}
