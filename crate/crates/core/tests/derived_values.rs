//! Frozen reference values, each recomputed here by a route that does not
//! go through the code path under test where one exists.

use abelslab::abels::{
    abels_group, center_check, check_abels_retraction, check_h4_fiber_product, check_torus_invariance, horospherical, torus,
    unipotent,
};
use abelslab::chevalley::affine::{check_affine_iso, check_borel_retraction};
use abelslab::chevalley::borel::borel_isomorphism_check;
use abelslab::chevalley::checks::{check_steinberg, check_weyl_conjugation};
use abelslab::chevalley::forms::{solve_invariant_forms, FormKind};
use abelslab::chevalley::{matrix_model, root_system, CartanType};
use abelslab::complex::analysis::{abels_complex, action_analysis, compare_complexes, Family};
use abelslab::complex::{coset_complex, Verdict};
use abelslab::group::FiniteGroup;
use abelslab::presentation::checks::check_missing_relations;
use abelslab::presentation::colimit::{colimit_presentation, unipotent_diagram};
use abelslab::presentation::tits::{proper_subgroup_control, s3_control};
use abelslab::presentation::unipotent::{un_canonical_presentation, un_economic_presentation};
use abelslab::presentation::{todd_coxeter, von_dyck_check, Presentation, TcStatus};
use abelslab::relations::check_commutator_identities;
use abelslab::report::{CheckRecord, Status};
use abelslab::{Matrix, Ring};

fn zm(m: u32) -> Ring {
    Ring::zmod(m).unwrap()
}

fn pass(r: &CheckRecord) {
    assert_eq!(r.status, Status::Pass, "{r:#?}");
}

#[test]
fn ring_values() {
    let z4 = zm(4);
    let three = z4.from_int(3);
    assert_eq!(z4.try_inverse(&three), Some(three.clone()));
    // exhaustive search for the inverse of 3 mod 4
    let by_search: Vec<i64> = (0..4).filter(|x| (3 * x) % 4 == 1).collect();
    assert_eq!(by_search, vec![3]);
    assert_eq!(z4.units().unwrap(), vec![z4.one(), three]);

    let dual = Ring::parse("polyq:2:0,0,1").unwrap();
    let ap = dual.additive_presentation().unwrap();
    assert_eq!(ap.generators.len(), 2);
    assert_eq!(ap.relators, vec![vec![2, 0], vec![0, 2]]);
    assert_eq!(ap.product(1, 1), &vec![0, 0]);
}

#[test]
fn matrix_values() {
    let z4 = zm(4);
    let two = z4.from_int(2);
    let c = Matrix::elementary(&z4, 3, 1, 2, &two).unwrap().commutator(&Matrix::elementary(&z4, 3, 2, 3, &two).unwrap()).unwrap();
    assert!(c.is_identity());

    let z5 = zm(5);
    let d1 = Matrix::diagonal(&z5, &[z5.from_int(2), z5.from_int(3)]).unwrap();
    let d2 = Matrix::diagonal(&z5, &[z5.from_int(3), z5.from_int(2)]).unwrap();
    assert!(d1.mul(&d2).unwrap().is_identity());

    let z7 = zm(7);
    let d = Matrix::diagonal(&z7, &[z7.one(), z7.from_int(3)]).unwrap();
    let e = Matrix::elementary(&z7, 2, 1, 2, &z7.from_int(2)).unwrap();
    let conj = d.mul(&e).unwrap().mul(&d.inverse().unwrap()).unwrap();
    assert_eq!(conj, Matrix::elementary(&z7, 2, 1, 2, &z7.from_int(3)).unwrap());
}

#[test]
fn commutator_identities() {
    let z3 = zm(3);
    let one = z3.one();
    let a = Matrix::elementary(&z3, 4, 1, 2, &one).unwrap();
    let b = Matrix::elementary(&z3, 4, 2, 3, &one).unwrap();
    let c = Matrix::elementary(&z3, 4, 3, 4, &one).unwrap();
    // [a, bc] = [a, b] b [a, c] b^-1
    let lhs = a.commutator(&b.mul(&c).unwrap()).unwrap();
    let rhs = a.commutator(&b).unwrap().mul(&b).unwrap().mul(&a.commutator(&c).unwrap()).unwrap().mul(&b.inverse().unwrap()).unwrap();
    assert_eq!(lhs, rhs);
    pass(&check_commutator_identities(&zm(4), 5, 100, 1).unwrap());
}

#[test]
fn root_systems() {
    let a2 = root_system(CartanType::A2);
    assert_eq!(a2.len(), 6);
    for x in 0..6 {
        for y in 0..6 {
            assert!((-2..=2).contains(&a2.pairing(x, y)));
        }
    }
    let g2 = root_system(CartanType::G2);
    assert_eq!(g2.len(), 12);
    assert!((0..12).any(|x| (0..12).any(|y| g2.pairing(x, y).abs() == 3)));
}

#[test]
fn a1_weyl_element() {
    let z5 = zm(5);
    let m = matrix_model(CartanType::A1);
    let w = m.weyl_element(&z5, 0).unwrap();
    assert_eq!(w, Matrix::from_int_rows(&z5, &[&[0, 1], &[-1, 0]]).unwrap());
    for r in check_weyl_conjugation(&m, &zm(3)).unwrap() {
        pass(&r);
    }
}

#[test]
fn c2_steinberg_over_z5() {
    let recs = check_steinberg(&matrix_model(CartanType::C2), &zm(5)).unwrap();
    recs.iter().for_each(pass);
}

#[test]
fn invariant_forms() {
    let c2 = solve_invariant_forms(&matrix_model(CartanType::C2), &zm(5)).unwrap();
    assert_eq!((c2.kind, c2.rank), (FormKind::Alternating, 4));
    let b3 = solve_invariant_forms(&matrix_model(CartanType::B3), &zm(7)).unwrap();
    assert_eq!((b3.kind, b3.rank), (FormKind::Symmetric, 7));
}

#[test]
fn borel_values() {
    // over Z/2 the tori are trivial and the maps are still bijective
    let z2 = zm(2);
    pass(&borel_isomorphism_check(&matrix_model(CartanType::A2), "a1", &z2).unwrap());
    let aff = check_affine_iso(&zm(5)).unwrap();
    pass(&aff);
    assert_eq!(aff.counts["order"], 20);
    pass(&check_borel_retraction(4, &zm(3), 1_000_000).unwrap());
}

#[test]
fn abels_orders_by_closure() {
    let z3 = zm(3);
    let a4 = abels_group(4, &z3).unwrap();
    assert_eq!(a4.order().unwrap(), 2916);
    let closure = FiniteGroup::generate("A4", &z3, 4, &a4.generators().unwrap(), 10_000).unwrap();
    assert_eq!(closure.order(), 2916);

    let z5 = zm(5);
    let t = torus(4, &z5).unwrap();
    assert_eq!(t.order().unwrap(), 16);
    assert_eq!(FiniteGroup::generate("T4", &z5, 4, &t.generators().unwrap(), 100).unwrap().order(), 16);

    // H4 over Z/3: the closure of its displayed generators
    let h4 = horospherical(4, &z3, 4).unwrap();
    let closure = FiniteGroup::generate("H4", &z3, 4, &h4.generators().unwrap(), 10_000).unwrap();
    assert_eq!(closure.order(), 108);
    assert_eq!(h4.order().unwrap(), 108);
}

#[test]
fn centers_by_centralizer_scan() {
    for (n, m, expected) in [(4, 2, 2), (3, 3, 3)] {
        let r = zm(m);
        let g = abels_group(n, &r).unwrap().to_group(100_000).unwrap();
        let central = (0..g.order() as u32).filter(|&x| (0..g.order() as u32).all(|y| g.mul(x, y) == g.mul(y, x))).count();
        assert_eq!(central, expected);
        let rec = center_check(n, &r, 100_000).unwrap();
        pass(&rec);
        assert_eq!(rec.counts["center_order"], expected as u64);
    }
}

#[test]
fn abels_structure_over_z3() {
    let z3 = zm(3);
    pass(&check_torus_invariance(4, &z3, 1_000_000).unwrap());
    pass(&check_torus_invariance(5, &z3, 1_000_000).unwrap());
    pass(&check_abels_retraction(4, &z3, 1_000_000).unwrap());
    pass(&check_h4_fiber_product(&z3, 1_000_000).unwrap());
}

#[test]
fn unipotent_presentation_orders() {
    let z2 = zm(2);
    let ap = z2.additive_presentation().unwrap();
    let u3 = un_canonical_presentation(3, &ap).unwrap();
    assert_eq!(u3.presentation.generator_count(), 3);
    assert_eq!(todd_coxeter(&u3.presentation, &[], 1000).index(), 8);
    let u4 = un_canonical_presentation(4, &ap).unwrap();
    assert_eq!(todd_coxeter(&u4.presentation, &[], 10_000).index(), 64);
    // matrix count by closure
    assert_eq!(unipotent(4, &z2).unwrap().to_group(1000).unwrap().order(), 64);
    let e4 = un_economic_presentation(4, &ap).unwrap();
    assert_eq!(todd_coxeter(&e4.presentation, &[], 10_000).index(), 64);
    let e5 = un_economic_presentation(5, &ap).unwrap();
    assert_eq!(todd_coxeter(&e5.presentation, &[], 1_000_000).index(), 1024);

    let z4 = zm(4);
    let c4 = un_canonical_presentation(4, &z4.additive_presentation().unwrap()).unwrap();
    assert!(von_dyck_check(&c4.presentation, &c4.assignment(&z4).unwrap()).unwrap());
}

#[test]
fn colimit_orders() {
    let fam = abelslab::abels::contracting_family(5, &zm(2)).unwrap();
    let col = colimit_presentation(&unipotent_diagram(&fam[..3]).unwrap()).unwrap();
    assert_eq!(todd_coxeter(&col.presentation, &[], 1_000_000).index(), 1024);

    let free = Presentation::from_text("a b\na a\nb b").unwrap();
    assert_eq!(todd_coxeter(&free, &[], 1000).status, TcStatus::Overflow);
    let s3 = Presentation::from_text("a b\na a\nb b\na b a b a b").unwrap();
    assert_eq!(todd_coxeter(&s3, &[], 1000).index(), 6);
}

#[test]
fn missing_relations_full_sweep_n5_z3() {
    pass(&check_missing_relations(5, &zm(3), 1_000_000).unwrap());
}

#[test]
fn s3_hexagon_values() {
    let inst = s3_control().unwrap();
    let cc = coset_complex(&inst.group, &inst.family, 1000).unwrap();
    let c = &cc.complex;
    assert_eq!(c.f_vector(), vec![6, 6]);
    assert_eq!(c.components(), 1);
    let pi = c.fundamental_group(0).unwrap();
    assert_eq!(pi.raw.generator_count(), 1);
    assert!(pi.raw.relators().is_empty());
    assert_eq!(c.is_simply_connected(1000), Verdict::No);
    assert_eq!(c.homology_h1().rank, 1);
}

#[test]
fn proper_subgroup_components() {
    let inst = proper_subgroup_control().unwrap();
    let cc = coset_complex(&inst.group, &inst.family, 1000).unwrap();
    assert_eq!(cc.complex.components(), 64 / 8);
}

#[test]
fn abels_complex_values() {
    let z2 = zm(2);
    let (_, h4) = abels_complex(4, &z2, Family::Horospherical, 1_000_000).unwrap();
    assert!(h4.complex.is_homogeneous_colorable(3));
    assert!(h4.complex.homology_h1().is_trivial());
    let (_, hu) = abels_complex(4, &z2, Family::Contracting, 1_000_000).unwrap();
    assert_eq!(hu.complex.is_simply_connected(100_000), Verdict::Yes);
    let (_, h5) = abels_complex(5, &z2, Family::Horospherical, 1_000_000).unwrap();
    assert!(h5.complex.is_homogeneous_colorable(2));
    assert_eq!(h5.complex.is_simply_connected(1_000_000), Verdict::Yes);
}

#[test]
fn stabilizers_over_z3() {
    let (g, cc) = abels_complex(4, &zm(3), Family::Horospherical, 1_000_000).unwrap();
    pass(&action_analysis(&g, &cc, "n4/zmod:3").unwrap());
}

#[test]
fn comparison_verdicts() {
    pass(&compare_complexes(4, &zm(2), 1_000_000, 1_000_000).unwrap());
    pass(&compare_complexes(4, &zm(3), 1_000_000, 1_000_000).unwrap());
}
