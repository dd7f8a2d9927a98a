use num_bigint::BigInt;
use num_traits::Zero;

use crate::freealg::Rational;

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
/// Every division in the elimination is exact.
pub fn bareiss_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (top, rest) = rows.split_at_mut(rank + 1);
        let p = &top[rank];
        for row in rest.iter_mut() {
            let f = row[col].clone();
            for c in col..ncols {
                let v = &p[col] * &row[c] - &f * &p[c];
                debug_assert!((&v % &prev).is_zero());
                row[c] = v / &prev;
            }
        }
        prev = rows[rank][col].clone();
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank over the rationals by ordinary Gaussian elimination; an independent
/// check on [`bareiss_rank`].
pub fn rational_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        let p: Vec<Rational> = rows[rank].iter().map(|x| x * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[col].clone();
            if f.is_zero() {
                continue;
            }
            for c in col..ncols {
                row[c] -= &f * &p[c];
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        m.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect()
    }

    fn to_rat(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
        m.iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(bareiss_rank(to_big(&[vec![1, 2], vec![2, 4]])), 1);
        assert_eq!(bareiss_rank(to_big(&[vec![0, 1], vec![1, 0]])), 2);
        assert_eq!(bareiss_rank(to_big(&[vec![0, 0, 0]])), 0);
        assert_eq!(bareiss_rank(Vec::new()), 0);
        let m = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2], vec![1, 0, -1]];
        assert_eq!(bareiss_rank(to_big(&m)), 3);
    }

    proptest! {
        #[test]
        fn agrees_with_rational(
            m in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..7)
        ) {
            prop_assert_eq!(bareiss_rank(to_big(&m)), rational_rank(to_rat(&m)));
        }
    }
}
