//! The free associative algebra over the rationals in vector letters
//! `v1, v2, ...`, with optional central scalar symbols `s1, s2, ...` as
//! coefficient indeterminates.

mod coeff;
mod poly;
mod scalar;
mod word;

pub use coeff::{fmt_rational, int, rat, Coefficient, Rational};
pub use poly::{add, bracket, cross, mul, multidegree, reversion, scale, vector_part, Poly, Polynomial};
pub use scalar::{ScalarCoeff, ScalarMonomial};
pub use word::{word_cmp, Multiset, VarKind, Variable, Word};

pub(crate) use coeff::{add_into, CoeffDisplay};

/// Polynomial whose coefficients may involve scalar symbols.
pub type SPoly = Polynomial<ScalarCoeff>;
