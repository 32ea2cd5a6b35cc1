//! Exhaustive checks of the elementary-matrix relations over finite rings.

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::matrix::{hall_identity_check, Matrix};
use crate::report::{anchors, Check, CheckRecord};
use crate::ring::{Ring, RingElement};

fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push((i, j));
            }
        }
    }
    out
}

/// Commutator formula for elementary matrices: `[e_ij(r), e_jl(s)] = e_il(rs)`
/// when `i != l`, trivial commutators when `i != l` and `j != k`, additivity
/// `e_ij(r) e_ij(s) = e_ij(r+s)`, and the inverse form
/// `[e_ij(r), e_kl(s)^-1] = [e_ij(r), e_kl(s)]^-1` in both cases.
pub fn check_commutator_formula(ring: &Ring, n: usize) -> Result<CheckRecord> {
    let mut check = Check::new(format!("commutators/{}/n{n}", ring.descriptor()), anchors::COMMUTATOR_FORMULA);
    let els = ring.elements()?;
    let pairs = ordered_pairs(n);
    let e = |i, j, r: &RingElement| Matrix::elementary(ring, n, i, j, r);
    for &(i, j) in &pairs {
        for r in &els {
            let x = e(i, j, r)?;
            for s in &els {
                let lhs = x.mul(&e(i, j, s)?)?;
                check.expect(lhs == e(i, j, &ring.add(r, s))?, || {
                    format!("e{i}{j}({})e{i}{j}({})", ring.format(r), ring.format(s))
                });
            }
        }
    }
    for &(i, j) in &pairs {
        for &(k, l) in &pairs {
            let adjacent = j == k && i != l;
            let disjoint = i != l && j != k;
            if !adjacent && !disjoint {
                continue;
            }
            for r in &els {
                let x = e(i, j, r)?;
                for s in &els {
                    let y = e(k, l, s)?;
                    let c = x.commutator(&y)?;
                    let expected = if adjacent { e(i, l, &ring.mul(r, s))? } else { Matrix::identity(ring, n) };
                    check.expect(c == expected, || {
                        format!("[e{i}{j}({}), e{k}{l}({})] = {c}", ring.format(r), ring.format(s))
                    });
                    let c_inv = x.commutator(&y.inverse()?)?;
                    check.expect(c_inv == c.inverse()?, || {
                        format!("[e{i}{j}({}), e{k}{l}({})^-1]", ring.format(r), ring.format(s))
                    });
                }
            }
        }
    }
    Ok(check.finish())
}

/// All tuples of units of length `n`.
fn unit_tuples(units: &[RingElement], n: usize) -> Vec<Vec<RingElement>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                units.iter().map(move |u| {
                    let mut t = t.clone();
                    t.push(u.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// `Diag(u) e_ij(r) Diag(u)^-1 = e_ij(u_i u_j^-1 r)` for every unit tuple,
/// every `r` and every position.
pub fn check_diagonal_conjugation(ring: &Ring, n: usize) -> Result<CheckRecord> {
    let mut check = Check::new(format!("diagonal/{}/n{n}", ring.descriptor()), anchors::DIAGONAL_CONJUGATION);
    let els = ring.elements()?;
    let units = ring.units()?;
    for tuple in unit_tuples(&units, n) {
        let d = Matrix::diagonal(ring, &tuple)?;
        let d_inv = d.inverse()?;
        for (i, j) in ordered_pairs(n) {
            let scale = ring.mul(&tuple[i - 1], &ring.try_inverse(&tuple[j - 1]).expect("unit"));
            for r in &els {
                let x = Matrix::elementary(ring, n, i, j, r)?;
                let lhs = d.mul(&x)?.mul(&d_inv)?;
                let rhs = Matrix::elementary(ring, n, i, j, &ring.mul(&scale, r))?;
                check.expect(lhs == rhs, || {
                    let t: Vec<String> = tuple.iter().map(|u| ring.format(u)).collect();
                    format!("Diag({}) e{i}{j}({})", t.join(","), ring.format(r))
                });
            }
        }
    }
    Ok(check.finish())
}

/// Random unitriangular matrix.
pub fn random_unitriangular(ring: &Ring, n: usize, rng: &mut ChaCha8Rng) -> Result<Matrix> {
    let els = ring.elements()?;
    Ok(Matrix::from_fn(ring, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => ring.one(),
        std::cmp::Ordering::Less => els[rng.gen_range(0..els.len())].clone(),
        std::cmp::Ordering::Greater => ring.zero(),
    }))
}

/// Hall–Witt and product-commutator identities on random unitriangular triples.
pub fn check_commutator_identities(ring: &Ring, n: usize, samples: usize, seed: u64) -> Result<CheckRecord> {
    let mut check = Check::new(format!("hall/{}/n{n}", ring.descriptor()), anchors::COMMUTATOR_IDENTITIES);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let a = random_unitriangular(ring, n, &mut rng)?;
        let b = random_unitriangular(ring, n, &mut rng)?;
        let c = random_unitriangular(ring, n, &mut rng)?;
        let ok = hall_identity_check(&a, &b, &c)?;
        check.expect(ok, || format!("a={a} b={b} c={c}"));
    }
    Ok(check.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn small_relation_sweeps() {
        let r = Ring::zmod(3).unwrap();
        assert_eq!(check_commutator_formula(&r, 3).unwrap().status, Status::Pass);
        assert_eq!(check_diagonal_conjugation(&r, 3).unwrap().status, Status::Pass);
        assert_eq!(check_commutator_identities(&r, 4, 20, 1).unwrap().status, Status::Pass);
    }
}
