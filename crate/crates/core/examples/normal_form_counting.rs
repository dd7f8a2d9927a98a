//! Counts normal words per slice three ways: as the codimension of the
//! ideal (exact rank), as words avoiding every lead, and by the structural
//! description of normal words.

use quatnorm::oracle::{all_words, dimension_check, Slice};
use quatnorm::rewrite::{is_normal_structural, NormalMode};
use quatnorm::syzygy::{gb_multilinear, gb_vector, gen_vector_syzygies};

fn main() -> quatnorm::Result<()> {
    for (n, d) in [(2, 3), (2, 4), (3, 3), (3, 4)] {
        let gens: Vec<_> = gen_vector_syzygies(n)?.into_iter().map(|g| g.element).collect();
        println!("{}", dimension_check(&Slice::Full { n, d }, &gens, &gb_vector(n, d.max(3))?)?);
    }
    for n in [3, 4] {
        let gens: Vec<_> = gen_vector_syzygies(n)?.into_iter().map(|g| g.element).collect();
        println!("{}", dimension_check(&Slice::multilinear(n), &gens, &gb_multilinear(n)?)?);
    }

    println!("\nnormal words of degree 3 in 3 variables:");
    let normal: Vec<String> = all_words(3, 3)
        .into_iter()
        .filter(|w| is_normal_structural(w, NormalMode::General).unwrap_or(false))
        .map(|w| w.to_string())
        .collect();
    println!("  {}", normal.join(", "));
    Ok(())
}
