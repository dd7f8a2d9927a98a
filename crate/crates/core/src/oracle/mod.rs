//! Independent checks on the rewriting layer: exact quaternion arithmetic,
//! evaluation of polynomials at random vectors, graded rank computations,
//! and a corpus of polynomial identities that must vanish.

mod corpus;
mod dimension;
mod eval;
mod quaternion;
mod rank;

pub use corpus::{
    check_corpus, identity_corpus, identity_corpus_up_to, order_types, permutations, CorpusCheck,
    CorpusItem,
};
pub use dimension::{
    all_words, arrangements, dimension_check, dimension_check_with_guard, DimensionReport, Slice,
    DEFAULT_GUARD,
};
pub use eval::{
    evaluate, evaluate_rational, random_assignment, trial_seed, zero_test, Assignment, Verdict,
};
pub use quaternion::{qconj, qmul, Quaternion};
pub use rank::{bareiss_rank, rational_rank};
