//! Runs degree-bounded completion from the vector syzygies and compares the
//! resulting lead words with the closed-form base.

use std::time::Instant;

use quatnorm::rewrite::complete;
use quatnorm::syzygy::{gb_vector, gen_vector_syzygies};

fn main() -> quatnorm::Result<()> {
    for (n, d) in [(2, 5), (3, 5), (4, 4)] {
        let start = Instant::now();
        let gens: Vec<_> = gen_vector_syzygies(n)?.into_iter().map(|g| g.element).collect();
        let completed = complete(&gens, d)?;
        let same = completed.lead_set() == gb_vector(n, d)?.lead_set();
        println!(
            "n={n} d={d}: {} rules in {:.1?}, lead set {} the closed form",
            completed.len(),
            start.elapsed(),
            if same { "matches" } else { "differs from" }
        );
    }

    let gens: Vec<_> = gen_vector_syzygies(2)?.into_iter().map(|g| g.element).collect();
    println!("\ncompleted base for 2 variables up to degree 4:");
    print!("{}", complete(&gens, 4)?);
    Ok(())
}
