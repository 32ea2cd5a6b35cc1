//! Elementary matrices over a few finite rings and the commutator formula.

use abelslab::relations::{check_commutator_formula, check_diagonal_conjugation};
use abelslab::{Matrix, Ring};

fn main() -> abelslab::Result<()> {
    let dual = Ring::parse("polyq:2:0,0,1")?;
    let x = dual.variable(0)?;
    let a = Matrix::elementary(&dual, 3, 1, 2, &x)?;
    let b = Matrix::elementary(&dual, 3, 2, 3, &dual.one())?;
    println!("[e12(x), e23(1)] over {} =\n{}", dual.descriptor(), a.commutator(&b)?);

    for d in ["zmod:2", "zmod:3", "zmod:4", "polyq:2:0,0,1"] {
        let r = Ring::parse(d)?;
        for n in 2..=4 {
            let c = check_commutator_formula(&r, n)?;
            let t = check_diagonal_conjugation(&r, n)?;
            println!("{d:<16} n={n}  commutator {}  conjugation {}", c.status, t.status);
        }
    }
    Ok(())
}
