//! Prints the closed-form bases and checks that every overlap and every
//! generator reduces to zero.

use quatnorm::rewrite::{check_groebner_for, check_groebner_multilinear};
use quatnorm::syzygy::{gb_multilinear, gb_vector, gen_vector_syzygies, FamilyTag};

fn main() -> quatnorm::Result<()> {
    let base = gb_vector(3, 4)?;
    println!("general base, 3 variables, degree <= 4:");
    print!("{}", base.tail_reduced());

    let multilinear = gb_multilinear(4)?;
    println!("\nmultilinear base, 4 variables:");
    print!("{multilinear}");

    for (n, d) in [(2, 6), (3, 6), (4, 6)] {
        let gens: Vec<_> = gen_vector_syzygies(n)?.into_iter().map(|g| g.element).collect();
        let report = check_groebner_for(&gb_vector(n, d)?, &gens, d)?;
        println!(
            "n={n} d={d}: {} overlaps, {} generators, {} nonzero residues",
            report.obstructions,
            report.generators,
            report.residues.len()
        );
    }

    // Without the degree-4 element the multilinear check is no longer confluent.
    let gens: Vec<_> = gen_vector_syzygies(4)?.into_iter().map(|g| g.element).collect();
    let partial = multilinear.without(|r| r.tag == Some(FamilyTag::Gm));
    let report = check_groebner_multilinear(&partial, &gens, 6)?;
    println!("multilinear n=4 without G4: {} nonzero residues", report.residues.len());
    if let Some(r) = report.residues.first() {
        println!("  first residue: {}", r.residue);
    }
    Ok(())
}
