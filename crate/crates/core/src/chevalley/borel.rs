//! Rank-one Borel subgroups `x_eta(R) ⋊ T(R)` of the matrix models and
//! their isomorphisms onto products of two-by-two triangular groups and
//! copies of `G_m`.

use std::collections::HashSet;

use crate::chevalley::models::MatrixModel;
use crate::chevalley::roots::CartanType;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{anchors, Check, CheckRecord};
use crate::ring::{Ring, RingElement};

/// Factor of a target product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    /// Invertible upper triangular 2x2.
    B2,
    /// Upper triangular 2x2 of determinant 1.
    B2Special,
    /// `(1 r; 0 u)`.
    AffMinus,
    /// Units.
    Gm,
}

impl Factor {
    fn size(self) -> usize {
        if self == Factor::Gm {
            1
        } else {
            2
        }
    }

    fn contains(self, ring: &Ring, m: &Matrix) -> bool {
        match self {
            Factor::Gm => ring.is_unit(m.get(1, 1)),
            _ => {
                let lower = ring.is_zero(m.get(2, 1));
                let (a, d) = (m.get(1, 1), m.get(2, 2));
                lower
                    && match self {
                        Factor::B2 => ring.is_unit(a) && ring.is_unit(d),
                        Factor::B2Special => ring.is_one(&ring.mul(a, d)),
                        _ => ring.is_one(a) && ring.is_unit(d),
                    }
            }
        }
    }

    /// `(additive, multiplicative)` exponents of the factor's order.
    fn order_exponents(self) -> (u32, u32) {
        match self {
            Factor::B2 => (1, 2),
            Factor::B2Special | Factor::AffMinus => (1, 1),
            Factor::Gm => (0, 1),
        }
    }
}

impl std::fmt::Display for Factor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Factor::B2 => "B2",
            Factor::B2Special => "B2°",
            Factor::AffMinus => "Aff-",
            Factor::Gm => "Gm",
        };
        write!(f, "{s}")
    }
}

/// Source of one entry of a target block.
#[derive(Clone, Copy, Debug)]
enum Entry {
    Zero,
    One,
    At(usize, usize),
    /// `M_37 * M_77^-1 * M_22`, the only composite read-off needed.
    G2Short,
}

/// A tabulated `(type, root)` case.
#[derive(Clone, Debug)]
pub struct BorelCase {
    pub label: CartanType,
    pub root: String,
    /// Diagonal of the torus: entry `i` is `prod_j t_j^e[i][j]`.
    torus: Vec<Vec<i64>>,
    factors: Vec<(Factor, Vec<Entry>)>,
}

fn a_torus(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n - 1).map(|j| if i == n - 1 { -1 } else { (i == j) as i64 }).collect())
        .collect()
}

/// `Diag(c, t_1, .., t_k, t_1^-1, .., t_k^-1)` with `c` an optional leading 1.
fn paired_torus(k: usize, lead: bool) -> Vec<Vec<i64>> {
    let mut rows = Vec::new();
    if lead {
        rows.push(vec![0; k]);
    }
    for sign in [1, -1] {
        for i in 0..k {
            rows.push((0..k).map(|j| if i == j { sign } else { 0 }).collect());
        }
    }
    rows
}

fn block(a: (usize, usize), b: (usize, usize), d: (usize, usize)) -> Vec<Entry> {
    vec![Entry::At(a.0, a.1), Entry::At(b.0, b.1), Entry::Zero, Entry::At(d.0, d.1)]
}

fn gm(i: usize) -> Vec<Entry> {
    vec![Entry::At(i, i)]
}

/// Every tabulated pair.
pub fn borel_cases() -> Vec<BorelCase> {
    use CartanType::*;
    use Factor::*;
    let case = |label, root: &str, torus, factors| BorelCase { label, root: root.to_string(), torus, factors };
    vec![
        case(A1, "a1", a_torus(2), vec![(B2Special, block((1, 1), (1, 2), (2, 2)))]),
        case(A2, "a1", a_torus(3), vec![(B2, block((1, 1), (1, 2), (2, 2)))]),
        case(A3, "a2", a_torus(4), vec![(B2, block((2, 2), (2, 3), (3, 3))), (Gm, gm(1))]),
        case(C2, "alpha", paired_torus(2, false), vec![(B2, block((1, 1), (1, 2), (2, 2)))]),
        case(C2, "beta", paired_torus(2, false), vec![(B2Special, block((2, 2), (2, 4), (4, 4))), (Gm, gm(1))]),
        case(C3, "alpha2", paired_torus(3, false), vec![(B2, block((2, 2), (2, 3), (3, 3))), (Gm, gm(1))]),
        case(
            D4,
            "alpha2",
            paired_torus(4, false),
            vec![(B2, block((2, 2), (2, 3), (3, 3))), (Gm, gm(1)), (Gm, gm(4))],
        ),
        case(B3, "alpha2", paired_torus(3, true), vec![(B2, block((3, 3), (3, 4), (4, 4))), (Gm, gm(2))]),
        case(
            G2,
            "alpha",
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![-1, -1], vec![-1, 0], vec![0, -1], vec![1, 1]],
            vec![(B2, block((2, 2), (2, 3), (3, 3)))],
        ),
        case(
            G2,
            "gamma",
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![-1, -1], vec![-1, 0], vec![0, -1], vec![1, 1]],
            vec![(AffMinus, vec![Entry::One, Entry::G2Short, Entry::Zero, Entry::At(2, 2)]), (Gm, gm(7))],
        ),
    ]
}

/// The tabulated case for `(label, root)`.
pub fn borel_case(label: CartanType, root: &str) -> Result<BorelCase> {
    borel_cases()
        .into_iter()
        .find(|c| c.label == label && c.root == root)
        .ok_or_else(|| Error::UnsupportedPair(label.to_string(), root.to_string()))
}

impl BorelCase {
    pub fn rank(&self) -> usize {
        self.torus[0].len()
    }

    pub fn factors(&self) -> Vec<Factor> {
        self.factors.iter().map(|(f, _)| *f).collect()
    }

    /// `|R| * |R^x|^k` as the pair of exponents `(1, k)` summed over factors.
    pub fn target_exponents(&self) -> (u32, u32) {
        self.factors.iter().fold((0, 0), |(a, m), (f, _)| {
            let (x, y) = f.order_exponents();
            (a + x, m + y)
        })
    }

    pub fn torus_element(&self, ring: &Ring, t: &[RingElement]) -> Result<Matrix> {
        let diag: Vec<RingElement> = self
            .torus
            .iter()
            .map(|row| {
                row.iter().zip(t).try_fold(ring.one(), |acc, (&e, u)| Ok::<_, Error>(ring.mul(&acc, &ring.pow(u, e)?)))
            })
            .collect::<Result<_>>()?;
        Matrix::diagonal(ring, &diag)
    }

    /// The displayed map, as a block-diagonal matrix of the target factors.
    pub fn apply(&self, ring: &Ring, m: &Matrix) -> Result<Vec<Matrix>> {
        let read = |e: &Entry| -> Result<RingElement> {
            Ok(match e {
                Entry::Zero => ring.zero(),
                Entry::One => ring.one(),
                Entry::At(i, j) => m.get(*i, *j).clone(),
                Entry::G2Short => {
                    let inv = ring.try_inverse(m.get(7, 7)).ok_or_else(|| Error::NonUnit(ring.format(m.get(7, 7))))?;
                    ring.mul(&ring.mul(m.get(3, 7), &inv), m.get(2, 2))
                }
            })
        };
        self.factors
            .iter()
            .map(|(f, entries)| {
                let vals: Vec<RingElement> = entries.iter().map(read).collect::<Result<_>>()?;
                let k = f.size();
                Matrix::from_rows(ring, vals.chunks(k).map(|c| c.to_vec()).collect())
            })
            .collect()
    }
}

fn tuples(values: &[RingElement], k: usize) -> Vec<Vec<RingElement>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                values.iter().map(move |v| {
                    let mut t = t.clone();
                    t.push(v.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// Verifies the displayed map on `x_eta(R) ⋊ T(R)` is a bijective
/// homomorphism onto its target.
pub fn borel_isomorphism_check(model: &MatrixModel, root: &str, ring: &Ring) -> Result<CheckRecord> {
    model.check_ring(ring)?;
    if !ring.is_finite() {
        return Err(Error::InfiniteRing);
    }
    let case = borel_case(model.label(), root)?;
    let eta = model
        .datum
        .by_name(root)
        .ok_or_else(|| Error::UnsupportedPair(model.label().to_string(), root.to_string()))?;
    let mut check = Check::new(
        format!("borel-iso/{}/{}/{}", model.label(), ring.descriptor(), root),
        anchors::BOREL_ISOMORPHISM,
    );
    let els = ring.elements()?;
    let units = ring.units()?;
    let k = case.rank();
    let torus: Vec<Matrix> =
        tuples(&units, k).iter().map(|t| case.torus_element(ring, t)).collect::<Result<_>>()?;
    let root_elems: Vec<Matrix> = els.iter().map(|r| model.root_element(ring, eta, r)).collect::<Result<_>>()?;
    let mut domain: Vec<Matrix> = Vec::new();
    for x in &root_elems {
        for t in &torus {
            domain.push(x.mul(t)?);
        }
    }
    let members: HashSet<Matrix> = domain.iter().cloned().collect();
    check.set_count("domain_order", members.len() as u64);
    check.expect(members.len() == domain.len(), || "x_eta(R) and T(R) overlap".into());
    // the model's own torus lies in T, so T is the right diagonal group
    for s in 0..model.datum.rank() {
        for u in &units {
            let h = model.semisimple_element(ring, s, u)?;
            check.expect(torus.contains(&h), || format!("h_{}({}) outside the torus", s + 1, ring.format(u)));
        }
    }
    let mut generators: Vec<Matrix> = root_elems.clone();
    let unit_gens = ring.unit_generators()?;
    for j in 0..k {
        for u in &unit_gens {
            let mut t = vec![ring.one(); k];
            t[j] = u.clone();
            generators.push(case.torus_element(ring, &t)?);
        }
    }
    let image = |m: &Matrix| -> Result<Vec<Matrix>> { case.apply(ring, m) };
    let factors = case.factors();
    let mut images: HashSet<Vec<Matrix>> = HashSet::new();
    for x in &domain {
        let fx = image(x)?;
        let inside = fx.iter().zip(&factors).all(|(b, f)| f.contains(ring, b));
        check.expect(inside, || format!("image of {x} leaves the target"));
        for g in &generators {
            let xg = x.mul(g)?;
            check.expect(members.contains(&xg), || format!("domain not closed at {x} * {g}"));
            let lhs = image(&xg)?;
            let fg = image(g)?;
            let rhs: Vec<Matrix> = fx.iter().zip(&fg).map(|(a, b)| a.mul(b)).collect::<Result<_>>()?;
            check.expect(lhs == rhs, || format!("not multiplicative at {x} * {g}"));
        }
        images.insert(fx);
    }
    check.expect(images.len() == domain.len(), || "map is not injective".into());
    let (add, mul) = case.target_exponents();
    let target = (els.len() as u64).pow(add) * (units.len() as u64).pow(mul);
    check.set_count("target_order", target);
    check.expect(add == 1 && mul as usize == k, || format!("target is R^{add} x (R^x)^{mul}, expected k = {k}"));
    check.expect(target == domain.len() as u64, || format!("|target| = {target}, |domain| = {}", domain.len()));
    let names: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
    check.detail(format!("onto {}", names.join(" x ")));
    Ok(check.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::matrix_model;
    use crate::report::Status;

    #[test]
    fn every_case_over_zmod3() {
        let r = Ring::zmod(3).unwrap();
        for case in borel_cases() {
            let rec = borel_isomorphism_check(&matrix_model(case.label), &case.root, &r).unwrap();
            assert_eq!(rec.status, Status::Pass, "{rec:#?}");
        }
    }

    #[test]
    fn c2_beta_target() {
        let case = borel_case(CartanType::C2, "beta").unwrap();
        assert_eq!(case.factors(), vec![Factor::B2Special, Factor::Gm]);
    }

    #[test]
    fn unknown_pair() {
        assert!(matches!(borel_case(CartanType::A2, "a2"), Err(Error::UnsupportedPair(..))));
    }
}
