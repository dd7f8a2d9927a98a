//! Expressions in general quaternion variables `qi` and conjugates `qi'`
//! are split into scalar and vector parts and then normalized.

use quatnorm::cli::{parse_expression, Expression};
use quatnorm::qvars::{normalize_q, split};
use quatnorm::syzygy::gen_quaternion_syzygies;

fn main() -> quatnorm::Result<()> {
    for text in ["q1*q1' - q1'*q1", "q1*q2 - q2*q1", "q1*q2*q2' - q2*q2'*q1", "(q1*q2)' - q2'*q1'"] {
        let Expression::Quaternion(q) = parse_expression(text)? else {
            unreachable!("only q expressions above");
        };
        println!("{text}");
        println!("  split:      {}", split(&q));
        println!("  normalized: {}", normalize_q(&q, q.max_index(), q.degree())?);
    }

    let mut by_tag = std::collections::BTreeMap::new();
    for g in gen_quaternion_syzygies(3)? {
        let zero = normalize_q(&g.element, 3, g.element.degree())?.is_zero();
        let e = by_tag.entry(g.tag).or_insert((0, 0));
        e.0 += 1;
        e.1 += zero as usize;
    }
    println!("\nquaternion syzygies in 3 variables:");
    for (tag, (total, zero)) in by_tag {
        println!("  {tag}: {zero}/{total} normalize to 0");
    }
    Ok(())
}
