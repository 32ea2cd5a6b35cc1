//! Presentations of unipotent groups on elementary generators `e_ij(t)`,
//! `t` in an additive generating set `T` of the ring: the canonical one for
//! `U_n(R)`, its restriction to any closed set of positions, and the
//! economic one that omits the corner generator `e_1n`.

use std::collections::BTreeMap;

use super::{commutator, concat, inverse, letter, power, Letter, Presentation, Word};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{AdditivePresentation, Ring, RingElement};

pub type Position = (usize, usize);

/// A presentation whose generators are `e_p(t)` for positions `p` and
/// `t` in `T`.
#[derive(Clone, Debug)]
pub struct UnipotentPresentation {
    pub presentation: Presentation,
    pub n: usize,
    pub positions: Vec<Position>,
    pub t: Vec<RingElement>,
    index: BTreeMap<Position, usize>,
}

fn position_name(n: usize, (i, j): Position) -> String {
    if n < 10 {
        format!("e{i}{j}")
    } else {
        format!("e{i}_{j}")
    }
}

impl UnipotentPresentation {
    fn new(n: usize, positions: &[Position], ap: &AdditivePresentation) -> Result<UnipotentPresentation> {
        let mut presentation = Presentation::new();
        let mut index = BTreeMap::new();
        for (k, &p) in positions.iter().enumerate() {
            if p.0 >= p.1 || p.1 > n || p.0 == 0 {
                return Err(Error::IndexOutOfRange(p.0, p.1, n));
            }
            index.insert(p, k);
            for t in 0..ap.generators.len() {
                let name = if ap.generators.len() == 1 {
                    position_name(n, p)
                } else {
                    format!("{}t{t}", position_name(n, p))
                };
                presentation.add_generator(name)?;
            }
        }
        Ok(UnipotentPresentation { presentation, n, positions: positions.to_vec(), t: ap.generators.clone(), index })
    }

    pub fn contains(&self, p: Position) -> bool {
        self.index.contains_key(&p)
    }

    /// Letter of `e_p(T[k])`.
    pub fn letter(&self, p: Position, k: usize, inv: bool) -> Option<Letter> {
        self.index.get(&p).map(|&q| letter(q * self.t.len() + k, inv))
    }

    fn gen(&self, p: Position, k: usize) -> Word {
        vec![self.letter(p, k, false).expect("position present")]
    }

    /// `prod_u e_p(u)^{a_u}` for an integer combination of `T`.
    pub fn combination(&self, p: Position, combo: &[i64]) -> Word {
        let parts: Vec<Word> = combo.iter().enumerate().map(|(k, &a)| power(&self.gen(p, k), a)).collect();
        let refs: Vec<&[Letter]> = parts.iter().map(|w| w.as_slice()).collect();
        concat(&refs)
    }

    /// Adds the commutator relators for every ordered pair of positions
    /// drawn from `window`.
    fn add_commutators(&mut self, window: &[Position], ap: &AdditivePresentation) {
        let k = self.t.len();
        for &(i, j) in window {
            for &(a, l) in window {
                let adjacent = j == a;
                if !adjacent && i == l {
                    continue;
                }
                if adjacent && !self.contains((i, l)) {
                    continue;
                }
                for t in 0..k {
                    for s in 0..k {
                        let c = commutator(&self.gen((i, j), t), &self.gen((a, l), s));
                        let rel = if adjacent {
                            concat(&[&c, &inverse(&self.combination((i, l), ap.product(t, s)))])
                        } else {
                            c
                        };
                        self.presentation.add_relator(&rel);
                    }
                }
            }
        }
    }

    fn add_additive(&mut self, window: &[Position], ap: &AdditivePresentation) {
        for &p in window {
            for r in &ap.relators {
                let w = self.combination(p, r);
                self.presentation.add_relator(&w);
            }
        }
    }

    /// `e_p(t) -> e_ij(t)` as matrices.
    pub fn assignment(&self, ring: &Ring) -> Result<Vec<Matrix>> {
        let mut out = Vec::new();
        for &(i, j) in &self.positions {
            for t in &self.t {
                out.push(Matrix::elementary(ring, self.n, i, j, t)?);
            }
        }
        Ok(out)
    }
}

/// Canonical presentation restricted to a set of positions closed under
/// `(i,j), (j,l) -> (i,l)`.
pub fn pattern_presentation(n: usize, positions: &[Position], ap: &AdditivePresentation) -> Result<UnipotentPresentation> {
    let mut up = UnipotentPresentation::new(n, positions, ap)?;
    up.add_commutators(positions, ap);
    up.add_additive(positions, ap);
    Ok(up)
}

pub fn upper_positions(n: usize) -> Vec<Position> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Canonical presentation of `U_n(R)` on all `e_ij(t)`, `i < j`.
pub fn un_canonical_presentation(n: usize, ap: &AdditivePresentation) -> Result<UnipotentPresentation> {
    if n < 2 {
        return Err(Error::InvalidSize(format!("n = {n} < 2")));
    }
    pattern_presentation(n, &upper_positions(n), ap)
}

/// Economic presentation: the positions of the two index windows
/// `{1..n-1}` and `{2..n}`, the canonical relators inside each window, the
/// corner commutation `[e_12, e_{n-1,n}] = 1`, and for `n = 4` also
/// `[e_13, e_24] = 1`.
pub fn un_economic_presentation(n: usize, ap: &AdditivePresentation) -> Result<UnipotentPresentation> {
    if n < 4 {
        return Err(Error::InvalidSize(format!("n = {n} < 4")));
    }
    let low: Vec<Position> = upper_positions(n).into_iter().filter(|&(_, j)| j < n).collect();
    let high: Vec<Position> = upper_positions(n).into_iter().filter(|&(i, _)| i >= 2).collect();
    let mut positions = low.clone();
    positions.extend(high.iter().filter(|&&(_, j)| j == n));
    let mut up = UnipotentPresentation::new(n, &positions, ap)?;
    up.add_commutators(&low, ap);
    up.add_commutators(&high, ap);
    let k = up.t.len();
    let mut extra = vec![((1, 2), (n - 1, n))];
    if n == 4 {
        extra.push(((1, 3), (2, 4)));
    }
    for (p, q) in extra {
        for t in 0..k {
            for s in 0..k {
                let c = commutator(&up.gen(p, t), &up.gen(q, s));
                up.presentation.add_relator(&c);
            }
        }
    }
    up.add_additive(&positions, ap);
    Ok(up)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{todd_coxeter, von_dyck_check};

    fn ap(r: &Ring) -> AdditivePresentation {
        r.additive_presentation().unwrap()
    }

    #[test]
    fn small_canonical_orders() {
        let z4 = Ring::zmod(4).unwrap();
        let u2 = un_canonical_presentation(2, &ap(&z4)).unwrap();
        assert_eq!(u2.presentation.generator_count(), 1);
        assert_eq!(u2.presentation.relators().len(), 1);
        assert_eq!(todd_coxeter(&u2.presentation, &[], 100).index(), 4);
        let z2 = Ring::zmod(2).unwrap();
        let u3 = un_canonical_presentation(3, &ap(&z2)).unwrap();
        assert_eq!(todd_coxeter(&u3.presentation, &[], 1000).index(), 8);
    }

    #[test]
    fn economic_lacks_corner() {
        let z2 = Ring::zmod(2).unwrap();
        let e = un_economic_presentation(4, &ap(&z2)).unwrap();
        assert!(!e.contains((1, 4)));
        assert_eq!(e.presentation.generator_count(), 5);
        assert_eq!(todd_coxeter(&e.presentation, &[], 100_000).index(), 64);
    }

    #[test]
    fn dual_numbers_von_dyck() {
        let r = Ring::parse("polyq:2:0,0,1").unwrap();
        let u = un_canonical_presentation(3, &ap(&r)).unwrap();
        assert_eq!(u.presentation.generator_count(), 6);
        assert!(von_dyck_check(&u.presentation, &u.assignment(&r).unwrap()).unwrap());
        assert_eq!(todd_coxeter(&u.presentation, &[], 10_000).index(), 64);
    }
}
