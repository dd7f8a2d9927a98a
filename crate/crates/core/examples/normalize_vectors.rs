//! Parses expressions in vector variables and prints their normal forms
//! modulo the closed-form base, largest word first.

use quatnorm::cli::{parse_expression, Expression};
use quatnorm::rewrite::normalize;
use quatnorm::syzygy::gb_vector;

fn main() -> quatnorm::Result<()> {
    let inputs = [
        "v2*v1",
        "v1*v2*v1",
        "v2^2*v1",
        "v3*v2*v1",
        "v1*v3*v2 - v2*v3*v1",
        "cross(v1, v2)*v3 + v3*cross(v1, v2)",
        "S(v1*v2*v3) - S(v2*v3*v1)",
        "s1*v2*v1 + (1/2)*v1*v2",
    ];
    let base = gb_vector(3, 4)?;
    for text in inputs {
        let Expression::Vector(p) = parse_expression(text)? else {
            unreachable!("only vector expressions above");
        };
        println!("{text:<40} -> {}", normalize(&p, &base)?);
    }
    Ok(())
}
