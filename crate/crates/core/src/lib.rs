//! Canonical forms for quaternionic polynomials.
//!
//! Vector variables are pure imaginary quaternions; polynomials in them live
//! in the free associative algebra modulo the syzygy ideal that encodes the
//! quaternionic product. This crate builds the explicit Gröbner bases of that
//! ideal, rewrites polynomials to normal form, and checks the results against
//! exact quaternion evaluation and linear algebra.

pub mod cli;
pub mod error;
pub mod freealg;
pub mod oracle;
pub mod qvars;
pub mod rewrite;
pub mod syzygy;

pub use error::{Error, Result};
