//! The coset complex of the horospherical family and its invariants.

use abelslab::complex::analysis::{abels_complex, action_analysis, Family};
use abelslab::Ring;

fn main() -> abelslab::Result<()> {
    let ring = Ring::zmod(2)?;
    for n in [4, 5] {
        let (group, cc) = abels_complex(n, &ring, Family::Horospherical, 1_000_000)?;
        let c = &cc.complex;
        println!("n={n}: |G| = {}, f-vector {:?}, euler {}", group.order(), c.f_vector(), c.euler_characteristic());
        println!("  connected {}, H1 = {}, simply connected {}", c.is_connected(), c.homology_h1(), c.is_simply_connected(100_000));
        let pi = c.fundamental_group(0)?;
        println!("  edge-path group: {} generators, simplified to {}", pi.raw.generator_count(), pi.simplified.generator_count());
        println!("  action {}", action_analysis(&group, &cc, &format!("n{n}"))?.status);
    }
    Ok(())
}
