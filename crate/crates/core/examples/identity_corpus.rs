//! Checks every corpus identity two ways: normal form modulo the vector
//! base, and exact evaluation at random quaternion vectors.

use std::collections::BTreeMap;
use std::time::Instant;

use quatnorm::oracle::{check_corpus, identity_corpus};

fn main() -> quatnorm::Result<()> {
    let start = Instant::now();
    let items = identity_corpus();
    let checks = check_corpus(&items, 100, 0)?;

    let mut families: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for c in &checks {
        let e = families.entry(c.family).or_default();
        e.0 += 1;
        if c.passed() {
            e.1 += 1;
        } else {
            println!("{c}");
        }
    }
    for (family, (total, passed)) in &families {
        println!("{family:<36} {passed}/{total}");
    }
    println!("{} items in {:.1?}", checks.len(), start.elapsed());
    Ok(())
}
