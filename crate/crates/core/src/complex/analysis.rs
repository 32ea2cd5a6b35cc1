//! The left action of the group on its coset complex, and the comparison
//! of the horospherical and contracting coset complexes of Abels groups.

use std::collections::HashMap;

use crate::abels::{abels_group, contracting_family, horospherical_family, unipotent};
use crate::complex::{coset_complex, CosetComplex, Simplex, Verdict};
use crate::error::Result;
use crate::group::{FiniteGroup, Subgroup};
use crate::report::{anchors, Check, CheckRecord};
use crate::ring::Ring;

/// Which Abels family to cover with.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Horospherical subgroups inside `A_n(R)`.
    Horospherical,
    /// Contracting subgroups inside `U_n(R)`.
    Contracting,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Horospherical => "H",
            Family::Contracting => "Hu",
        }
    }
}

/// The ambient group and the family as indexed subgroups.
pub fn abels_family(n: usize, ring: &Ring, family: Family, budget: u64) -> Result<(FiniteGroup, Vec<Subgroup>)> {
    let (ambient, specs) = match family {
        Family::Horospherical => (abels_group(n, ring)?, horospherical_family(n, ring)?),
        Family::Contracting => (unipotent(n, ring)?, contracting_family(n, ring)?),
    };
    let group = ambient.to_group(budget)?;
    let subs = specs.iter().map(|s| s.subgroup_of(&group)).collect::<Result<_>>()?;
    Ok((group, subs))
}

/// Coset complex of an Abels family.
pub fn abels_complex(n: usize, ring: &Ring, family: Family, budget: u64) -> Result<(FiniteGroup, CosetComplex)> {
    let (group, subs) = abels_family(n, ring, family, budget)?;
    let cc = coset_complex(&group, &subs, budget as usize)?;
    Ok((group, cc))
}

/// Image of a simplex under left multiplication by `x`.
fn translate(group: &FiniteGroup, cc: &CosetComplex, x: u32, s: &[u32]) -> Simplex {
    let mut out: Simplex = s
        .iter()
        .map(|&v| {
            let vert = &cc.vertices[v as usize];
            cc.labels[vert.color][group.mul(x, vert.representative) as usize]
        })
        .collect();
    out.sort_unstable();
    out
}

/// Type preservation, orbit counts per dimension, transitivity on maximal
/// simplices, the base simplex as fundamental domain, and every stabilizer
/// equal to the conjugated intersection of its vertex subgroups.
pub fn action_analysis(group: &FiniteGroup, cc: &CosetComplex, id: &str) -> Result<CheckRecord> {
    let mut check = Check::new(format!("action/{id}"), anchors::ACTION);
    let k = cc.family.len();
    // type preservation: a generator maps a whole coset into one coset of the same colour
    for &s in group.generators() {
        for v in 0..cc.vertices.len() as u32 {
            let color = cc.vertices[v as usize].color;
            let members = cc.coset(group, v);
            let target = cc.labels[color][group.mul(s, members[0]) as usize];
            let ok = members.iter().all(|&y| cc.labels[color][group.mul(s, y) as usize] == target);
            check.expect(ok, || format!("generator {s} splits vertex {v}"));
        }
    }
    // orbits of simplices under the generators
    let mut orbit_counts = Vec::new();
    for (d, list) in cc.complex.simplices.iter().enumerate() {
        let index: HashMap<&Simplex, usize> = list.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut parent: Vec<usize> = (0..list.len()).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, s) in list.iter().enumerate() {
            for &g in group.generators() {
                let t = translate(group, cc, g, s);
                let j = index[&t];
                let (a, b) = (root(&mut parent, i), root(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let orbits = (0..list.len()).filter(|&i| root(&mut parent, i) == i).count();
        check.set_count(&format!("orbits_dim{d}"), orbits as u64);
        orbit_counts.push(orbits);
        // one orbit per colour set of size d+1
        let expected = binomial(k, d + 1);
        check.expect(orbits == expected, || format!("{orbits} orbits in dimension {d}, expected {expected}"));
    }
    check.expect(orbit_counts.last() == Some(&1), || "maximal simplices form several orbits".into());
    // the base simplex: cosets containing the identity
    let e = group.identity() as usize;
    let base: Simplex = (0..k).map(|c| cc.labels[c][e]).collect();
    check.expect(cc.complex.simplices.get(k - 1).is_some_and(|top| top.binary_search(&base).is_ok()), || {
        "base simplex missing".into()
    });
    // stabilizers
    let mut stabilizers = 0u64;
    for list in &cc.complex.simplices {
        for s in list {
            let stab: Vec<u32> = (0..group.order() as u32).filter(|&x| translate(group, cc, x, s) == *s).collect();
            // common element g of the cosets and the intersection of the vertex subgroups
            let cosets: Vec<Vec<u32>> = s.iter().map(|&v| cc.coset(group, v)).collect();
            let g = *cosets[0].iter().find(|x| cosets.iter().all(|c| c.binary_search(x).is_ok())).expect("simplex");
            let mut inter: Vec<u32> = cc.family[cc.vertices[s[0] as usize].color].members.clone();
            for &v in &s[1..] {
                let h = &cc.family[cc.vertices[v as usize].color];
                inter.retain(|x| h.contains(*x));
            }
            let g_inv = group.inverse(g);
            let mut conj: Vec<u32> = inter.iter().map(|&x| group.mul(group.mul(g, x), g_inv)).collect();
            conj.sort_unstable();
            check.expect(stab == conj, || format!("stabilizer of {s:?} is not g(∩H)g^-1"));
            stabilizers += 1;
        }
    }
    check.set_count("stabilizers", stabilizers);
    Ok(check.finish())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Structural record of one coset complex.
#[derive(Clone, Debug)]
pub struct ComplexSummary {
    pub components: usize,
    pub dimension: isize,
    pub h1: String,
    pub simply_connected: Verdict,
}

pub fn summarize(cc: &CosetComplex, max_cosets: usize) -> ComplexSummary {
    let c = &cc.complex;
    let components = c.components();
    ComplexSummary {
        components,
        dimension: c.dimension(),
        h1: if components == 1 { c.homology_h1().to_string() } else { "-".into() },
        simply_connected: if components == 1 { c.is_simply_connected(max_cosets) } else { Verdict::No },
    }
}

/// Compares `CC(H(n,R))` in `A_n(R)` with `CC(H_u(n,R))` in `U_n(R)`.
pub fn compare_complexes(n: usize, ring: &Ring, budget: u64, max_cosets: usize) -> Result<CheckRecord> {
    let mut check = Check::new(format!("compare/n{n}/{}", ring.descriptor()), anchors::COMPARISON);
    let (_, full) = abels_complex(n, ring, Family::Horospherical, budget)?;
    let (_, unip) = abels_complex(n, ring, Family::Contracting, budget)?;
    let a = summarize(&full, max_cosets);
    let b = summarize(&unip, max_cosets);
    for (tag, s) in [("H", &a), ("Hu", &b)] {
        check.set_count(&format!("{tag}_components"), s.components as u64);
        check.set_count(&format!("{tag}_dimension"), s.dimension.max(0) as u64);
    }
    check.expect(a.components == b.components, || format!("components {} vs {}", a.components, b.components));
    check.expect(a.h1 == b.h1, || format!("H1 {} vs {}", a.h1, b.h1));
    if a.simply_connected == Verdict::Inconclusive || b.simply_connected == Verdict::Inconclusive {
        check.inconclusive("coset enumeration of a fundamental group overflowed".into());
    } else {
        check.expect(a.simply_connected == b.simply_connected, || {
            format!("simply connected {} vs {}", a.simply_connected, b.simply_connected)
        });
    }
    check.detail(format!(
        "H: connected={} H1={} simply-connected={}; Hu: connected={} H1={} simply-connected={}",
        a.components == 1,
        a.h1,
        a.simply_connected,
        b.components == 1,
        b.h1,
        b.simply_connected
    ));
    Ok(check.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn abels_n4_z2() {
        let r = Ring::zmod(2).unwrap();
        let (g, cc) = abels_complex(4, &r, Family::Horospherical, 1_000_000).unwrap();
        assert_eq!(cc.complex.dimension(), 3);
        assert!(cc.complex.is_homogeneous_colorable(3));
        assert!(cc.complex.is_connected());
        assert!(cc.complex.homology_h1().is_trivial());
        assert_eq!(cc.complex.is_simply_connected(100_000), Verdict::Yes);
        assert_eq!(action_analysis(&g, &cc, "t").unwrap().status, Status::Pass);
    }

    #[test]
    fn compare_n4_z2() {
        let r = Ring::zmod(2).unwrap();
        assert_eq!(compare_complexes(4, &r, 1_000_000, 100_000).unwrap().status, Status::Pass);
    }
}
