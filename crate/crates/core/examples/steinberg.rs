//! Steinberg relations for the tabulated matrix models over Z/5.

use abelslab::chevalley::checks::{check_g2_torus_display, check_steinberg};
use abelslab::chevalley::{matrix_model, CartanType};
use abelslab::Ring;

fn main() -> abelslab::Result<()> {
    let ring = Ring::zmod(5)?;
    for t in CartanType::ALL {
        let model = matrix_model(t);
        let records = check_steinberg(&model, &ring)?;
        let cases: u64 = records.iter().map(|r| r.counts.get("cases").copied().unwrap_or(0)).sum();
        let failed = records.iter().filter(|r| r.status == abelslab::report::Status::Fail).count();
        println!("{t:<3} {} x {}  {cases} cases, {failed} failing checks", model.n, model.n);
    }
    println!("G2 torus display: {}", check_g2_torus_display(&ring)?.status);
    Ok(())
}
