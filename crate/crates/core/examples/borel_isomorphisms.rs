//! Rank-one Borel subgroups mapped onto products of small triangular groups.

use abelslab::chevalley::borel::{borel_cases, borel_isomorphism_check};
use abelslab::chevalley::matrix_model;
use abelslab::Ring;

fn main() -> abelslab::Result<()> {
    for d in ["zmod:3", "zmod:4"] {
        let ring = Ring::parse(d)?;
        for case in borel_cases() {
            let rec = borel_isomorphism_check(&matrix_model(case.label), &case.root, &ring)?;
            let size = rec.counts.get("domain_order").copied().unwrap_or(0);
            println!("{:<28} |domain| = {size:<6} {}", rec.id, rec.status);
        }
    }
    Ok(())
}
