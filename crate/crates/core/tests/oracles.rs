//! Computed nerves, homology and presentation orders against independent
//! brute-force computations.

mod common;

use abelslab::complex::{coset_complex, SimplicialComplex, Verdict};
use abelslab::presentation::tits::TitsInstance;
use abelslab::presentation::tits::tits_criterion_check;
use abelslab::report::Status;
use common::{brute_nerve, nerve_as_cosets, rational_betti, rational_h1_rank, small_instances};

#[test]
fn nerve_matches_subset_enumeration() {
    for (name, g, fam) in small_instances() {
        assert!(g.order() <= 200);
        let cc = coset_complex(&g, &fam, 1_000_000).unwrap();
        assert_eq!(nerve_as_cosets(&g, &cc), brute_nerve(&g, &fam), "{name}");
    }
}

#[test]
fn h1_rank_matches_rational_rank() {
    for (name, g, fam) in small_instances() {
        let cc = coset_complex(&g, &fam, 1_000_000).unwrap();
        let c = &cc.complex;
        if !c.is_connected() {
            continue;
        }
        assert_eq!(c.homology_h1().rank, rational_h1_rank(c), "{name}");
        assert_eq!(c.betti_numbers(), rational_betti(c), "{name}");
    }
}

#[test]
fn euler_characteristic_from_rational_betti() {
    for (name, g, fam) in small_instances() {
        let cc = coset_complex(&g, &fam, 1_000_000).unwrap();
        let c = &cc.complex;
        let chi: i64 = rational_betti(c).iter().enumerate().map(|(d, &b)| if d % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        assert_eq!(c.euler_characteristic(), chi, "{name}");
    }
}

#[test]
fn coxeter_complex_of_s4_is_a_sphere() {
    let (name, g, fam) = small_instances().into_iter().find(|(n, ..)| n == "S4/coxeter").unwrap();
    let cc = coset_complex(&g, &fam, 1_000).unwrap();
    let c = &cc.complex;
    assert_eq!(c.f_vector(), vec![14, 36, 24], "{name}");
    assert_eq!(rational_betti(c), vec![1, 0, 1]);
    assert_eq!(c.is_simply_connected(10_000), Verdict::Yes);
    let inst = TitsInstance::cayley(&name, g, fam).unwrap();
    let recs = tits_criterion_check(&inst, 100_000).unwrap();
    assert!(recs.iter().all(|r| r.status == Status::Pass), "{recs:?}");
}

#[test]
fn tits_sides_agree_on_small_instances() {
    for (name, g, fam) in small_instances() {
        let inst = TitsInstance::cayley(&name, g, fam).unwrap();
        for rec in tits_criterion_check(&inst, 200_000).unwrap() {
            assert_ne!(rec.status, Status::Fail, "{rec:?}");
        }
    }
}

#[test]
fn rational_rank_of_known_complexes() {
    // boundary of a tetrahedron: a 2-sphere
    let faces: Vec<Vec<u32>> = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
    let sphere = SimplicialComplex::from_simplices(vec![0, 1, 2, 3], &faces);
    assert_eq!(rational_betti(&sphere), vec![1, 0, 1]);
    assert_eq!(sphere.betti_numbers(), vec![1, 0, 1]);
}
