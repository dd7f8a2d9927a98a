//! Exact evaluation at rational quaternions, and the seeded zero test with
//! its counterexample report.

use quatnorm::cli::{parse_expression, Expression};
use quatnorm::freealg::rat;
use quatnorm::oracle::{evaluate, zero_test, Assignment, Quaternion, Verdict};

fn vector(text: &str) -> quatnorm::Result<quatnorm::freealg::SPoly> {
    match parse_expression(text)? {
        Expression::Vector(p) => Ok(p),
        Expression::Quaternion(_) => unreachable!("only vector expressions here"),
    }
}

fn main() -> quatnorm::Result<()> {
    // v1 = i, v2 = j: v1 v2 = k and v1^2 = -1.
    let a = Assignment::new()
        .with_vector(1, Quaternion::i())
        .with_vector(2, Quaternion::j())
        .with_scalar(1, rat(3, 2));
    for text in ["v1*v2", "v1^2", "s1*v1 + v2*v1"] {
        println!("{text} at (i, j, 3/2) = {}", evaluate(&vector(text)?, &a)?);
    }

    for text in ["v1*v2 + v2*v1 - 2*S(v1*v2)", "v1*v2*v3 - v3*v2*v1", "v1*v2 - v2*v1"] {
        match zero_test(&vector(text)?, 100, 0) {
            Verdict::Zero { trials } => println!("{text}: zero at {trials} trials"),
            Verdict::Counterexample { trial, value, .. } => {
                println!("{text}: nonzero at trial {trial}, value {value}")
            }
        }
    }
    Ok(())
}
