//! Compares the topology of coset complexes with colimits of subgroup diagrams.

use abelslab::presentation::tits::{standard_instances, tits_criterion_check};

fn main() -> abelslab::Result<()> {
    for inst in standard_instances(1_000_000)? {
        for rec in tits_criterion_check(&inst, 1_000_000)? {
            println!("{:<42} {:<6} {}", rec.id, rec.status.to_string(), rec.detail.unwrap_or_default());
        }
    }
    Ok(())
}
