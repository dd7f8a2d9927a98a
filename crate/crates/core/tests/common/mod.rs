#![allow(dead_code)]

use proptest::prelude::*;
use quatnorm::freealg::{rat, Poly, Word};

pub fn w(letters: &[u32]) -> Poly {
    Poly::word(Word::from(letters))
}

pub fn arb_word(n: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=n, 0..=max_len).prop_map(Word::new)
}

/// Sparse polynomials in `v1..vn` with small rational coefficients.
pub fn arb_poly(n: u32, max_len: usize, max_terms: usize) -> impl Strategy<Value = Poly> {
    let term = (arb_word(n, max_len), -9i64..=9, 1i64..=4);
    prop::collection::vec(term, 0..=max_terms)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(w, a, b)| (w, rat(a, b)))))
}
