//! Checks on the presentations of `U_n(R)`: orders by coset enumeration,
//! von Dyck against elementary matrices, and the equivalence of the
//! canonical and economic presentations, certified by tracing each
//! presentation's relators in the regular coset table of the other.

use super::colimit::{colimit_presentation, unipotent_diagram};
use super::unipotent::{un_canonical_presentation, un_economic_presentation, Position, UnipotentPresentation};
use super::{commutator, concat, first_violation, inverse, todd_coxeter, CosetTable, Letter, Presentation, Word};
use crate::abels::contracting_family;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::matrix::Matrix;
use crate::report::{anchors, Check, CheckRecord};
use crate::ring::Ring;

/// `|R|^(n(n-1)/2)`, or `None` when it does not fit.
pub fn unipotent_order(n: usize, ring: &Ring) -> Result<Option<usize>> {
    let q = ring.elements()?.len();
    let e = (n * (n - 1) / 2) as u32;
    Ok(q.checked_pow(e))
}

/// First word that does not fix coset 0 of a complete regular table.
pub fn first_nontrivial(table: &CosetTable, words: &[Word]) -> Option<usize> {
    words.iter().position(|w| table.trace(0, w) != 0)
}

/// The corner generator written in the economic generators:
/// `e_1n(t) = [e_12(t), e_2n(1)]`.
pub fn corner_word(econ: &UnipotentPresentation, k: usize) -> Word {
    let n = econ.n;
    let a = econ.letter((1, 2), k, false).expect("e12 present");
    let b = econ.letter((2, n), 0, false).expect("e2n present");
    commutator(&[a], &[b])
}

/// Economic words for every canonical generator, in canonical order.
fn canonical_in_economic(canon: &UnipotentPresentation, econ: &UnipotentPresentation) -> Vec<Word> {
    let mut out = Vec::new();
    for &p in &canon.positions {
        for k in 0..canon.t.len() {
            out.push(match econ.letter(p, k, false) {
                Some(l) => vec![l],
                None => corner_word(econ, k),
            });
        }
    }
    out
}

fn substitute(word: &[Letter], images: &[Word]) -> Word {
    let parts: Vec<Word> = word
        .iter()
        .map(|&l| {
            let w = &images[super::generator_of(l)];
            if l > 0 {
                w.clone()
            } else {
                inverse(w)
            }
        })
        .collect();
    let refs: Vec<&[Letter]> = parts.iter().map(|w| w.as_slice()).collect();
    concat(&refs)
}

fn enumerate_order(check: &mut Check, label: &str, pres: &Presentation, expected: usize, budget: usize) -> Option<CosetTable> {
    let table = todd_coxeter(pres, &[], budget);
    check.set_count(&format!("{label}_generators"), pres.generator_count() as u64);
    check.set_count(&format!("{label}_relators"), pres.relators().len() as u64);
    if !table.is_complete() {
        check.inconclusive(format!("{label}: coset enumeration exceeded {budget} cosets"));
        return None;
    }
    check.set_count(&format!("{label}_index"), table.index() as u64);
    check.expect(table.index() == expected, || format!("{label}: index {} != {expected}", table.index()));
    Some(table)
}

fn von_dyck_and_surjective(check: &mut Check, label: &str, pres: &Presentation, images: &[Matrix], ring: &Ring, n: usize, expected: usize) -> Result<()> {
    let violation = first_violation(pres, images)?;
    check.expect(violation.is_none(), || {
        format!("{label}: relator {} fails on matrices", pres.format_word(&pres.relators()[violation.unwrap_or(0)]))
    });
    let image = FiniteGroup::generate(label, ring, n, images, expected + 1)?;
    check.expect(image.order() == expected, || format!("{label}: images generate {} elements", image.order()));
    Ok(())
}

/// Canonical and economic presentations of `U_n(R)` both have index
/// `|R|^(n(n-1)/2)`, both hold on elementary matrices whose images generate
/// `U_n(R)`, and each one's relators are trivial in the other's regular
/// coset table, so the evident maps are mutually inverse isomorphisms.
pub fn check_presentation_equivalence(n: usize, ring: &Ring, budget: usize) -> Result<Vec<CheckRecord>> {
    let tag = format!("n{n}/{}", ring.descriptor());
    let expected = unipotent_order(n, ring)?
        .filter(|&q| q <= budget)
        .ok_or_else(|| Error::BudgetExceeded(format!("|U_{n}| over {} exceeds {budget}", ring.descriptor())))?;
    let ap = ring.additive_presentation()?;
    let canon = un_canonical_presentation(n, &ap)?;
    let econ = un_economic_presentation(n, &ap)?;

    let mut c1 = Check::new(format!("presentation/canonical/{tag}"), anchors::CANONICAL_PRESENTATION);
    let canon_table = enumerate_order(&mut c1, "canonical", &canon.presentation, expected, budget);
    von_dyck_and_surjective(&mut c1, "canonical", &canon.presentation, &canon.assignment(ring)?, ring, n, expected)?;

    let mut c2 = Check::new(format!("presentation/economic/{tag}"), anchors::ECONOMIC_PRESENTATION);
    let econ_table = enumerate_order(&mut c2, "economic", &econ.presentation, expected, budget);
    von_dyck_and_surjective(&mut c2, "economic", &econ.presentation, &econ.assignment(ring)?, ring, n, expected)?;

    match (&canon_table, &econ_table) {
        (Some(ct), Some(et)) => {
            // economic generators are canonical generators of the same name
            let into_canon: Vec<Word> = econ
                .positions
                .iter()
                .flat_map(|&p| (0..econ.t.len()).map(move |k| (p, k)))
                .map(|(p, k)| vec![canon.letter(p, k, false).expect("economic positions are canonical")])
                .collect();
            let traced: Vec<Word> = econ.presentation.relators().iter().map(|r| substitute(r, &into_canon)).collect();
            let bad = first_nontrivial(ct, &traced);
            c2.expect(bad.is_none(), || format!("economic relator {} is nontrivial in the canonical group", bad.unwrap_or(0)));
            let into_econ = canonical_in_economic(&canon, &econ);
            let traced: Vec<Word> = canon.presentation.relators().iter().map(|r| substitute(r, &into_econ)).collect();
            let bad = first_nontrivial(et, &traced);
            c2.expect(bad.is_none(), || {
                format!(
                    "canonical relator {} is nontrivial in the economic group",
                    canon.presentation.format_word(&canon.presentation.relators()[bad.unwrap_or(0)])
                )
            });
            c2.set_count("traced_relators", (econ.presentation.relators().len() + canon.presentation.relators().len()) as u64);
        }
        _ => c2.inconclusive("no complete table to trace relators in".into()),
    }
    Ok(vec![c1.finish(), c2.finish()])
}

/// The relations involving the corner `e_1n`: commutation of `e_1j` and
/// `e_kn`, the two commutator expressions for `e_1n(t)`, centrality of
/// `e_1n`, and additivity of `e_1n`. Checked on matrices for all ring
/// elements, and as words traced in the economic group.
pub fn check_missing_relations(n: usize, ring: &Ring, budget: usize) -> Result<CheckRecord> {
    if n < 4 {
        return Err(Error::InvalidSize(format!("n = {n} < 4")));
    }
    let mut check = Check::new(format!("missing-relations/n{n}/{}", ring.descriptor()), anchors::MISSING_RELATIONS);
    let elements = ring.elements()?;
    let one = ring.one();
    let e = |i: usize, j: usize, t: &crate::ring::RingElement| Matrix::elementary(ring, n, i, j, t);
    let inner: Vec<usize> = (2..n).collect();
    let pairs: Vec<(usize, usize)> = inner
        .iter()
        .flat_map(|&j| inner.iter().map(move |&k| (j, k)))
        .filter(|&(j, k)| j != k && (j, k) != (2, n - 1))
        .collect();
    for t in &elements {
        let corner = e(1, n, t)?;
        for &j in &inner {
            let a = e(1, j, t)?.commutator(&e(j, n, &one)?)?;
            let b = e(1, j, &one)?.commutator(&e(j, n, t)?)?;
            check.expect(a == corner && b == corner, || format!("e1{j}/e{j}{n} commutator with t = {}", ring.format(t)));
        }
        for s in &elements {
            for &(j, k) in &pairs {
                let c = e(1, j, t)?.commutator(&e(k, n, s)?)?;
                check.expect(c.is_identity(), || format!("[e1{j}, e{k}{n}] nontrivial"));
            }
            let cs = e(1, n, s)?;
            for (i, j) in super::unipotent::upper_positions(n) {
                let c = e(i, j, t)?.commutator(&cs)?;
                check.expect(c.is_identity(), || format!("[e{i}{j}, e1{n}] nontrivial"));
            }
            let sum = corner.mul(&cs)?;
            check.expect(sum == e(1, n, &ring.add(t, s))?, || "e1n is not additive".into());
        }
    }

    // the same relations as words in the economic group
    let ap = ring.additive_presentation()?;
    let econ = un_economic_presentation(n, &ap)?;
    let table = todd_coxeter(&econ.presentation, &[], budget);
    if !table.is_complete() {
        check.inconclusive(format!("economic coset enumeration exceeded {budget} cosets"));
        return Ok(check.finish());
    }
    let kk = econ.t.len();
    let g = |p: Position, k: usize| -> Word { vec![econ.letter(p, k, false).expect("economic position")] };
    let corner = |k: usize| corner_word(&econ, k);
    let mut words: Vec<(String, Word)> = Vec::new();
    for t in 0..kk {
        for s in 0..kk {
            for &(j, k) in &pairs {
                words.push((format!("[e1{j}, e{k}{n}]"), commutator(&g((1, j), t), &g((k, n), s))));
            }
            for &p in &econ.positions {
                words.push((format!("[e{}{}, e1{n}]", p.0, p.1), commutator(&g(p, t), &corner(s))));
            }
        }
        for &j in &inner {
            let c = corner(t);
            let a = concat(&[&commutator(&g((1, j), t), &g((j, n), 0)), &inverse(&c)]);
            let b = concat(&[&commutator(&g((1, j), 0), &g((j, n), t)), &inverse(&c)]);
            words.push((format!("[e1{j}(t), e{j}{n}(1)] = e1{n}(t)"), a));
            words.push((format!("[e1{j}(1), e{j}{n}(t)] = e1{n}(t)"), b));
        }
    }
    for r in &ap.relators {
        let parts: Vec<Word> = r.iter().enumerate().map(|(k, &a)| super::power(&corner(k), a)).collect();
        let refs: Vec<&[Letter]> = parts.iter().map(|w| w.as_slice()).collect();
        words.push(("additive relator on e1n".into(), concat(&refs)));
    }
    for (label, w) in &words {
        check.expect(table.trace(0, w) == 0, || format!("{label} fails in the economic group"));
    }
    check.set_count("traced_words", words.len() as u64);
    Ok(check.finish())
}

/// The colimit of the contracting family presents `U_n(R)`: its coset
/// enumeration has index `|U_n(R)|`.
pub fn check_contracting_colimit(n: usize, ring: &Ring, budget: usize) -> Result<CheckRecord> {
    let mut check = Check::new(format!("contracting-colimit/n{n}/{}", ring.descriptor()), anchors::TITS_SIMPLY_CONNECTED);
    let expected = unipotent_order(n, ring)?.unwrap_or(usize::MAX);
    let col = colimit_presentation(&unipotent_diagram(&contracting_family(n, ring)?)?)?;
    enumerate_order(&mut check, "colimit", &col.presentation, expected, budget);
    Ok(check.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn equivalence_n4_z2() {
        let r = Ring::zmod(2).unwrap();
        let recs = check_presentation_equivalence(4, &r, 1_000_000).unwrap();
        for rec in &recs {
            assert_eq!(rec.status, Status::Pass, "{rec:?}");
        }
        assert_eq!(recs[1].counts["economic_index"], 64);
    }

    #[test]
    fn missing_relations_n5_z2() {
        let r = Ring::zmod(2).unwrap();
        let rec = check_missing_relations(5, &r, 1_000_000).unwrap();
        assert_eq!(rec.status, Status::Pass, "{rec:?}");
    }

    #[test]
    fn budget_too_small() {
        let r = Ring::zmod(3).unwrap();
        assert!(check_presentation_equivalence(4, &r, 100).is_err());
    }
}
