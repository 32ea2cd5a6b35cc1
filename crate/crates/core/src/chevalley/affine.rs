//! The affine groups `Aff(R)`, `Aff_-(R)` and the triangular groups
//! `B_2(R)`, `B_2°(R)`, with the isomorphism `Aff -> Aff_-` and the
//! retraction of `B_n(R)` onto its top-left `B_2(R)`.

use std::collections::HashSet;

use crate::abels::{borel, Cell, SubgroupSpec};
use crate::error::{Error, Result};
use crate::group::{matrix_code, Code, FastRing};
use crate::matrix::Matrix;
use crate::report::{anchors, Check, CheckRecord};
use crate::ring::{Ring, RingDescriptor, RingElement};

/// `(u r; 0 1)`.
pub fn aff(ring: &Ring) -> SubgroupSpec {
    SubgroupSpec::from_fn("Aff", ring, 2, |i, j| match (i, j) {
        (1, 1) => Cell::Unit,
        (1, 2) => Cell::Free,
        (2, 2) => Cell::One,
        _ => Cell::Zero,
    })
}

/// `(1 r; 0 u)`.
pub fn aff_minus(ring: &Ring) -> SubgroupSpec {
    SubgroupSpec::from_fn("Aff-", ring, 2, |i, j| match (i, j) {
        (1, 1) => Cell::One,
        (1, 2) => Cell::Free,
        (2, 2) => Cell::Unit,
        _ => Cell::Zero,
    })
}

/// Invertible upper triangular 2x2 matrices.
pub fn b2(ring: &Ring) -> SubgroupSpec {
    borel(2, ring).expect("n = 2 is valid").rename("B2")
}

/// Membership in `B_2°(R)`: upper triangular of determinant 1.
pub fn in_b2_special(m: &Matrix) -> bool {
    let r = m.ring();
    m.size() == 2 && r.is_zero(m.get(2, 1)) && r.is_one(&r.mul(m.get(1, 1), m.get(2, 2)))
}

/// Generators of `B_2°(R)`: `e_12(t)` and `Diag(u, u^-1)`.
pub fn b2_special_generators(ring: &Ring) -> Result<Vec<Matrix>> {
    let mut out = Vec::new();
    for t in ring.additive_presentation()?.generators {
        out.push(Matrix::elementary(ring, 2, 1, 2, &t)?);
    }
    for u in ring.unit_generators()? {
        let inv = ring.try_inverse(&u).expect("unit");
        out.push(Matrix::diagonal(ring, &[u, inv])?);
    }
    Ok(out)
}

/// `(u r; 0 1) -> (1, r u^-1; 0, u^-1)`.
pub fn affine_map(m: &Matrix) -> Result<Matrix> {
    let ring = m.ring();
    let u_inv = ring.try_inverse(m.get(1, 1)).ok_or_else(|| Error::NonUnit(ring.format(m.get(1, 1))))?;
    Matrix::from_rows(
        ring,
        vec![vec![ring.one(), ring.mul(m.get(1, 2), &u_inv)], vec![ring.zero(), u_inv]],
    )
}

fn affine_element(ring: &Ring, u: &RingElement, r: &RingElement) -> Result<Matrix> {
    Matrix::from_rows(ring, vec![vec![u.clone(), r.clone()], vec![ring.zero(), ring.one()]])
}

/// The map `Aff -> Aff_-` is an isomorphism. Finite rings are swept
/// (all pairs when small, element x generator otherwise); Laurent rings get
/// one generic pair.
pub fn check_affine_iso(ring: &Ring) -> Result<CheckRecord> {
    let mut check = Check::new(format!("affine-iso/{}", ring.descriptor()), anchors::AFFINE_ISOMORPHISM);
    let target = aff_minus(ring);
    if let RingDescriptor::Laurent(k) = ring.descriptor() {
        if *k < 4 {
            return Err(Error::UnsupportedKind("symbolic check needs laurent:4 or more".into()));
        }
        let v = |i| ring.variable(i);
        let x = affine_element(ring, &v(0)?, &v(1)?)?;
        let y = affine_element(ring, &v(2)?, &v(3)?)?;
        let lhs = affine_map(&x.mul(&y)?)?;
        let rhs = affine_map(&x)?.mul(&affine_map(&y)?)?;
        check.expect(lhs == rhs, || "generic pair is not multiplicative".into());
        check.expect(target.contains(&affine_map(&x)?), || "image leaves Aff-".into());
        return Ok(check.finish());
    }
    let source = aff(ring);
    let mut elements = Vec::new();
    source.for_each_code(|c| elements.push(crate::group::code_matrix(ring, 2, c)))?;
    let pairs_all = elements.len() <= 2000;
    let gens = source.generators()?;
    let right: &[Matrix] = if pairs_all { &elements } else { &gens };
    let mut images = HashSet::new();
    for x in &elements {
        let fx = affine_map(x)?;
        check.expect(target.contains(&fx), || format!("image of {x} leaves Aff-"));
        for y in right {
            let ok = affine_map(&x.mul(y)?)? == fx.mul(&affine_map(y)?)?;
            check.expect(ok, || format!("not multiplicative at {x} * {y}"));
        }
        images.insert(fx);
    }
    let order = elements.len() as u64;
    check.set_count("order", order);
    check.expect(images.len() as u64 == order && source.order()? == target.order()?, || {
        format!("{} images for {order} elements", images.len())
    });
    Ok(check.finish())
}

/// `B_n(R) -> B_2(R)`, keeping entries (1,1), (1,2), (2,2): multiplicative
/// on (every element) x (every generator) when `|B_n|` fits the budget, on
/// generator pairs otherwise, and the identity on the embedded `B_2`.
pub fn check_borel_retraction(n: usize, ring: &Ring, budget: u64) -> Result<CheckRecord> {
    if n < 2 {
        return Err(Error::InvalidSize(format!("n = {n} < 2")));
    }
    let mut check = Check::new(format!("borel-retraction/n{n}/{}", ring.descriptor()), anchors::BOREL_RETRACTION);
    let bn = borel(n, ring)?;
    let fast = FastRing::new(ring)?;
    let gens: Vec<Code> = bn.generators()?.iter().map(matrix_code).collect::<Result<_>>()?;
    let at = |m: &[u8], i: usize, j: usize| m[(i - 1) * n + (j - 1)];
    let block = |m: &[u8]| (at(m, 1, 1), at(m, 1, 2), at(m, 2, 2));
    let product_block = |x: &[u8], y: &[u8]| {
        let entry = |i: usize, j: usize| (1..=n).fold(0u8, |acc, k| fast.add(acc, fast.mul(at(x, i, k), at(y, k, j))));
        (entry(1, 1), entry(1, 2), entry(2, 2))
    };
    let compose = |p: (u8, u8, u8), q: (u8, u8, u8)| {
        (fast.mul(p.0, q.0), fast.add(fast.mul(p.0, q.1), fast.mul(p.1, q.2)), fast.mul(p.2, q.2))
    };
    let mut cases = 0u64;
    let mut failures = 0u64;
    let mut visit = |x: &[u8]| {
        for g in &gens {
            cases += 1;
            if product_block(x, g) != compose(block(x), block(g)) {
                failures += 1;
            }
        }
    };
    if bn.order()? <= budget as u128 {
        bn.for_each_code(|x| visit(x))?;
        check.detail("every element against every generator");
    } else {
        for x in &gens {
            visit(x);
        }
        check.detail("generator pairs only");
    }
    check.count("cases", cases);
    if failures > 0 {
        check.count("failures", failures);
        check.fail(format!("{failures} pairs break multiplicativity"));
    }
    let embedded = SubgroupSpec::from_fn("B2", ring, n, |i, j| match (i, j) {
        (1, 1) | (2, 2) => Cell::Unit,
        (1, 2) => Cell::Free,
        _ if i == j => Cell::One,
        _ => Cell::Zero,
    });
    embedded.for_each_code(|c| {
        let b = block(c);
        let mut back = vec![0u8; n * n];
        for i in 0..n {
            back[i * n + i] = 1;
        }
        back[0] = b.0;
        back[1] = b.1;
        back[n + 1] = b.2;
        check.expect(&back[..] == c, || "retraction moves an embedded element".into());
    })?;
    Ok(check.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn affine_iso_small_and_symbolic() {
        let r = Ring::zmod(5).unwrap();
        let rec = check_affine_iso(&r).unwrap();
        assert_eq!(rec.status, Status::Pass);
        assert_eq!(rec.counts["order"], 20);
        let l = Ring::parse("laurent:4").unwrap();
        assert_eq!(check_affine_iso(&l).unwrap().status, Status::Pass);
    }

    #[test]
    fn identity_maps_to_identity() {
        let r = Ring::zmod(7).unwrap();
        assert!(affine_map(&Matrix::identity(&r, 2)).unwrap().is_identity());
    }

    #[test]
    fn retraction() {
        let r = Ring::zmod(3).unwrap();
        assert_eq!(check_borel_retraction(4, &r, 1_000_000).unwrap().status, Status::Pass);
        assert_eq!(check_borel_retraction(2, &r, 1_000_000).unwrap().status, Status::Pass);
    }

    #[test]
    fn b2_special_membership() {
        let r = Ring::zmod(5).unwrap();
        for g in b2_special_generators(&r).unwrap() {
            assert!(in_b2_special(&g));
        }
    }
}
