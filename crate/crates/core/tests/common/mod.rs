//! Independent oracles shared by the integration and acceptance tests: a
//! brute-force nerve of coset covers, and ranks over Q by exact Gaussian
//! elimination.
#![allow(dead_code)]

use std::collections::BTreeSet;

use abelslab::complex::analysis::{abels_family, Family};
use abelslab::complex::{CosetComplex, SimplicialComplex};
use abelslab::group::{FiniteGroup, Subgroup};
use abelslab::presentation::tits::{proper_subgroup_control, s3_control};
use abelslab::{Matrix, Ring};
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A simplex of a nerve as the set of its cosets, each a sorted member list.
pub type CosetSimplex = BTreeSet<Vec<u32>>;

/// Left cosets `gH` of every family member, as sorted member lists.
fn all_cosets(group: &FiniteGroup, h: &Subgroup) -> Vec<Vec<u32>> {
    let mut seen = BTreeSet::new();
    for g in 0..group.order() as u32 {
        let mut c: Vec<u32> = h.members.iter().map(|&x| group.mul(g, x)).collect();
        c.sort_unstable();
        seen.insert(c);
    }
    seen.into_iter().collect()
}

/// Every choice of at most one coset per family member whose cosets share
/// an element.
pub fn brute_nerve(group: &FiniteGroup, family: &[Subgroup]) -> BTreeSet<CosetSimplex> {
    let cosets: Vec<Vec<Vec<u32>>> = family.iter().map(|h| all_cosets(group, h)).collect();
    let mut out = BTreeSet::new();
    // each member contributes nothing, or one coset meeting the running intersection
    fn walk(
        i: usize,
        cosets: &[Vec<Vec<u32>>],
        chosen: &mut Vec<Vec<u32>>,
        common: Option<BTreeSet<u32>>,
        out: &mut BTreeSet<CosetSimplex>,
    ) {
        if i == cosets.len() {
            if !chosen.is_empty() {
                out.insert(chosen.iter().cloned().collect());
            }
            return;
        }
        walk(i + 1, cosets, chosen, common.clone(), out);
        for c in &cosets[i] {
            let set: BTreeSet<u32> = c.iter().copied().collect();
            let meet: BTreeSet<u32> = match &common {
                Some(s) => s.intersection(&set).copied().collect(),
                None => set,
            };
            if meet.is_empty() {
                continue;
            }
            chosen.push(c.clone());
            walk(i + 1, cosets, chosen, Some(meet), out);
            chosen.pop();
        }
    }
    walk(0, &cosets, &mut Vec::new(), None, &mut out);
    out
}

/// The simplices of a computed coset complex, translated back to cosets.
pub fn nerve_as_cosets(group: &FiniteGroup, cc: &CosetComplex) -> BTreeSet<CosetSimplex> {
    cc.complex
        .simplices
        .iter()
        .flatten()
        .map(|s| s.iter().map(|&v| cc.coset(group, v)).collect())
        .collect()
}

/// Rank over Q.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for x in m[rank].iter_mut() {
            *x = &*x / &pivot;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in c..cols {
                    let d = &m[rank][k] * &f;
                    m[r][k] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Dense boundary `C_d -> C_{d-1}` built from the simplex lists alone.
pub fn dense_boundary(c: &SimplicialComplex, d: usize) -> Vec<Vec<i64>> {
    let lower = &c.simplices[d - 1];
    let upper = &c.simplices[d];
    let mut rows = vec![vec![0i64; upper.len()]; lower.len()];
    for (j, s) in upper.iter().enumerate() {
        for k in 0..s.len() {
            let mut face = s.clone();
            face.remove(k);
            let i = lower.iter().position(|f| *f == face).expect("face present");
            rows[i][j] = if k % 2 == 0 { 1 } else { -1 };
        }
    }
    rows
}

/// Betti numbers over Q.
pub fn rational_betti(c: &SimplicialComplex) -> Vec<usize> {
    let top = c.simplices.len();
    let ranks: Vec<usize> = (0..=top)
        .map(|d| if d == 0 || d >= top || c.simplices[d].is_empty() { 0 } else { rational_rank(&dense_boundary(c, d)) })
        .collect();
    (0..top).map(|d| c.simplices[d].len() - ranks[d] - ranks[d + 1]).collect()
}

/// `H_1` rank over Q for a connected complex.
pub fn rational_h1_rank(c: &SimplicialComplex) -> usize {
    rational_betti(c).get(1).copied().unwrap_or(0)
}

fn perm_matrix(ring: &Ring, perm: &[usize]) -> Matrix {
    let n = perm.len();
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(perm[i] == j)).collect()).collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_int_rows(ring, &refs).expect("square")
}

/// `S_n` as permutation matrices over `Z/2`, with the adjacent transpositions.
pub fn symmetric_group(n: usize) -> (FiniteGroup, Vec<u32>) {
    let r = Ring::zmod(2).unwrap();
    let gens: Vec<Matrix> = (0..n - 1)
        .map(|i| {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(i, i + 1);
            perm_matrix(&r, &p)
        })
        .collect();
    let g = FiniteGroup::generate(&format!("S{n}"), &r, n, &gens, 1000).unwrap();
    let idx = gens.iter().map(|m| g.index_of_matrix(m).unwrap()).collect();
    (g, idx)
}

/// Group and family pairs with `|G| <= 200`.
pub fn small_instances() -> Vec<(String, FiniteGroup, Vec<Subgroup>)> {
    let mut out = Vec::new();
    for inst in [s3_control().unwrap(), proper_subgroup_control().unwrap()] {
        out.push((inst.name, inst.group, inst.family));
    }
    let z2 = Ring::zmod(2).unwrap();
    for fam in [Family::Horospherical, Family::Contracting] {
        let (g, f) = abels_family(4, &z2, fam, 1_000_000).unwrap();
        out.push((format!("{}/n4/zmod:2", fam.tag()), g, f));
    }
    let (s3, t) = symmetric_group(3);
    let all3: Vec<Subgroup> = t.iter().enumerate().map(|(i, &x)| Subgroup::generated(&s3, &format!("s{i}"), vec![x])).collect();
    out.push(("S3/simple-reflections".into(), s3, all3));

    let (s4, s) = symmetric_group(4);
    let parabolic: Vec<Subgroup> = (0..3)
        .map(|skip| {
            let gens = (0..3).filter(|&i| i != skip).map(|i| s[i]).collect();
            Subgroup::generated(&s4, &format!("P{skip}"), gens)
        })
        .collect();
    out.push(("S4/coxeter".into(), s4, parabolic));

    // seeded random families of cyclic subgroups
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..4 {
        let (g, _) = symmetric_group(4);
        let size = 2 + k % 3;
        let fam = (0..size)
            .map(|i| {
                let x = loop {
                    let x = rng.gen_range(0..g.order() as u32);
                    if x != g.identity() {
                        break x;
                    }
                };
                Subgroup::generated(&g, &format!("C{i}"), vec![x])
            })
            .collect();
        out.push((format!("S4/random{k}"), g, fam));
    }
    out
}
