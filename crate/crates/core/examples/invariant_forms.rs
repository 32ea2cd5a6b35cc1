//! Solves for bilinear forms preserved by every tabulated generator.

use abelslab::chevalley::forms::{check_form_invariance, solve_invariant_forms};
use abelslab::chevalley::{matrix_model, CartanType};
use abelslab::Ring;

fn main() -> abelslab::Result<()> {
    let ring = Ring::zmod(5)?;
    for t in [CartanType::C2, CartanType::C3, CartanType::B3, CartanType::D4] {
        let model = matrix_model(t);
        let sol = solve_invariant_forms(&model, &ring)?;
        let rec = check_form_invariance(&model, &ring)?;
        println!("{t}: {sol:?}\n  check {}", rec.status);
    }
    Ok(())
}
