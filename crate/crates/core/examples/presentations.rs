//! Canonical and economic presentations of U_n(R), enumerated by Todd-Coxeter.

use abelslab::presentation::checks::{check_missing_relations, check_presentation_equivalence};
use abelslab::presentation::todd_coxeter;
use abelslab::presentation::unipotent::un_economic_presentation;
use abelslab::Ring;

fn main() -> abelslab::Result<()> {
    let ring = Ring::zmod(2)?;
    let econ = un_economic_presentation(5, &ring.additive_presentation()?)?;
    println!("economic generators: {}", econ.presentation.names().join(" "));
    println!("economic relators: {}", econ.presentation.relators().len());
    let table = todd_coxeter(&econ.presentation, &[], 1_000_000);
    println!("economic U_5(Z/2): {:?}, index {}", table.status, table.index());

    for (n, d) in [(4, "zmod:2"), (4, "zmod:3"), (5, "zmod:2")] {
        let r = Ring::parse(d)?;
        for rec in check_presentation_equivalence(n, &r, 1_000_000)? {
            println!("{:<40} {} {:?}", rec.id, rec.status, rec.counts);
        }
        println!("{:<40} {}", format!("missing relations n={n} {d}"), check_missing_relations(n, &r, 1_000_000)?.status);
    }
    Ok(())
}
