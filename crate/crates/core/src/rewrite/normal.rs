//! Structural description of normal words, independent of any rule set.
//!
//! A multilinear normal word is `Y1 z1 Y2 z2 ... Yk zk [Y(k+1)]` where the
//! `Y` blocks are ascending and nonempty, their concatenation is ascending,
//! the `z` letters ascend, and each `z` lies below the trailing letter of
//! the block before it.
//!
//! A general normal word is `Y1 h1 z1 ... Yk hk zk [Y(k+1)]` where blocks may
//! be empty and the `Y`/`h` letters form one non-descending sequence, the
//! `z` letters are non-descending, each `h` lies strictly above its `z`,
//! and a nonempty block ends strictly below the following `h`.

use crate::error::{domain, Result};
use crate::freealg::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalMode {
    /// Words with pairwise distinct letters, against the multilinear base.
    Multilinear,
    /// Arbitrary words, against the general base.
    General,
}

/// Whether `w` has the shape of a normal word. In multilinear mode a word
/// with a repeated letter is a domain error.
pub fn is_normal_structural(w: &Word, mode: NormalMode) -> Result<bool> {
    match mode {
        NormalMode::Multilinear => {
            if !w.is_multilinear() {
                return Err(domain(format!("{w} repeats a letter")));
            }
            Ok(multilinear_shape(w.letters()))
        }
        NormalMode::General => Ok(general_shape(w.letters())),
    }
}

/// Offsets of the bottoms: every strict descent `w[p] > w[p+1]` must put a
/// bottom at `p + 1`, since nothing else in the shape descends.
fn bottoms(w: &[u32]) -> Option<Vec<usize>> {
    let mut out: Vec<usize> = Vec::new();
    for p in 1..w.len() {
        if w[p - 1] > w[p] {
            // two bottoms in a row would leave the second without a peak
            if out.last() == Some(&(p - 1)) {
                return None;
            }
            out.push(p);
        }
    }
    Some(out)
}

fn is_sorted_by(seq: impl Iterator<Item = u32>, ok: impl Fn(u32, u32) -> bool) -> bool {
    let v: Vec<u32> = seq.collect();
    v.windows(2).all(|p| ok(p[0], p[1]))
}

fn multilinear_shape(w: &[u32]) -> bool {
    let Some(z) = bottoms(w) else {
        return false;
    };
    let ascending = |a: u32, b: u32| a < b;
    // the letter before each bottom is the trailing letter of its block and
    // lies above it by construction
    is_sorted_by(z.iter().map(|&p| w[p]), ascending)
        && is_sorted_by(
            (0..w.len()).filter(|p| !z.contains(p)).map(|p| w[p]),
            ascending,
        )
}

fn general_shape(w: &[u32]) -> bool {
    let Some(z) = bottoms(w) else {
        return false;
    };
    let nondescending = |a: u32, b: u32| a <= b;
    if !is_sorted_by(z.iter().map(|&p| w[p]), nondescending) {
        return false;
    }
    if !is_sorted_by(
        (0..w.len()).filter(|p| !z.contains(p)).map(|p| w[p]),
        nondescending,
    ) {
        return false;
    }
    // peak at p - 1; a nonempty block before it ends at p - 2
    z.iter().all(|&p| {
        let peak = p - 1;
        peak == 0 || z.contains(&(peak - 1)) || w[peak - 1] < w[peak]
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn general(l: &[u32]) -> bool {
        is_normal_structural(&Word::from(l), NormalMode::General).unwrap()
    }

    fn multi(l: &[u32]) -> bool {
        is_normal_structural(&Word::from(l), NormalMode::Multilinear).unwrap()
    }

    #[test]
    fn examples() {
        assert!(multi(&[1, 2, 3]) && general(&[1, 2, 3]));
        assert!(!multi(&[3, 2, 4, 1]) && !general(&[3, 2, 4, 1]));
        assert!(!multi(&[2, 4, 1, 3]) && !general(&[2, 4, 1, 3]));
        assert!(multi(&[1, 3, 2, 4]));
        assert!(multi(&[2, 1]) && general(&[2, 1]));
        assert!(multi(&[]) && general(&[]));
    }

    #[test]
    fn general_squares() {
        // v2 v2 v1 and v2 v1 v1 are leads
        assert!(!general(&[2, 2, 1]));
        assert!(!general(&[2, 1, 1]));
        assert!(general(&[1, 2, 2]));
        assert!(general(&[2, 1, 2]));
        assert!(general(&[1, 1, 1, 1]));
    }

    #[test]
    fn repeated_letter_is_domain_error() {
        assert!(is_normal_structural(&Word::from([1, 1]), NormalMode::Multilinear).is_err());
    }
}
