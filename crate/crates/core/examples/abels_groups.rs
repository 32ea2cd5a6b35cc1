//! Orders and structural checks for Abels groups and their subgroup families.

use abelslab::abels::{abels_group, abels_suite, contracting_family, horospherical_family};
use abelslab::Ring;

fn main() -> abelslab::Result<()> {
    let ring = Ring::zmod(3)?;
    for n in [4, 5] {
        println!("|A_{n}(Z/3)| = {}", abels_group(n, &ring)?.order()?);
        for s in horospherical_family(n, &ring)?.iter().chain(&contracting_family(n, &ring)?) {
            println!("  {:<4} order {}", s.name, s.order()?);
        }
    }
    for rec in abels_suite(4, &ring, 1_000_000)? {
        println!("{:<40} {}", rec.id, rec.status);
    }
    Ok(())
}
