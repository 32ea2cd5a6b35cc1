//! Finite matrix groups over small finite rings, stored element by element.
//!
//! Elements are row-major byte vectors of ring codes, so rings must have at
//! most 256 elements. The element list is sorted, which fixes the global
//! element order used for coset representatives and spanning trees.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Ring, RingElement};

/// Row-major ring codes of a matrix.
pub type Code = Box<[u8]>;

/// Lookup tables for a finite ring with at most 256 elements.
#[derive(Debug)]
pub struct FastRing {
    size: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl FastRing {
    pub fn new(ring: &Ring) -> Result<FastRing> {
        let size = ring.cardinality().ok_or(Error::InfiniteRing)? as usize;
        if size > 256 {
            return Err(Error::UnsupportedKind(format!("{ring} has more than 256 elements")));
        }
        let els = ring.elements()?;
        let mut add = Vec::with_capacity(size * size);
        let mut mul = Vec::with_capacity(size * size);
        for a in &els {
            for b in &els {
                add.push(ring.add(a, b).code().unwrap() as u8);
                mul.push(ring.mul(a, b).code().unwrap() as u8);
            }
        }
        Ok(FastRing { size, add, mul })
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.size + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.size + b as usize]
    }

    /// Product of two `n x n` code matrices.
    pub fn matmul(&self, n: usize, a: &[u8], b: &[u8]) -> Code {
        let mut out = vec![0u8; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let y = b[k * n + j];
                    if y != 0 {
                        out[i * n + j] = self.add(out[i * n + j], self.mul(x, y));
                    }
                }
            }
        }
        out.into_boxed_slice()
    }
}

/// A finite group of `n x n` matrices with an element index.
pub struct FiniteGroup {
    name: String,
    ring: Ring,
    fast: Arc<FastRing>,
    n: usize,
    elements: Vec<Code>,
    index: HashMap<Code, u32>,
    generators: Vec<u32>,
    identity: u32,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.elements.len())
    }
}

pub fn matrix_code(m: &Matrix) -> Result<Code> {
    let codes = m.codes().ok_or(Error::InfiniteRing)?;
    if codes.iter().any(|&c| c > 255) {
        return Err(Error::UnsupportedKind("ring codes exceed one byte".into()));
    }
    Ok(codes.into_iter().map(|c| c as u8).collect())
}

pub fn code_matrix(ring: &Ring, n: usize, code: &[u8]) -> Matrix {
    Matrix::from_fn(ring, n, |i, j| RingElement::Code(code[i * n + j] as u32))
}

impl FiniteGroup {
    /// Group from an explicit element list (must be closed; not checked)
    /// and generators given as matrices.
    pub fn from_elements(
        name: &str,
        ring: &Ring,
        n: usize,
        mut elements: Vec<Code>,
        generators: &[Matrix],
    ) -> Result<FiniteGroup> {
        elements.sort();
        elements.dedup();
        let fast = Arc::new(FastRing::new(ring)?);
        let index: HashMap<Code, u32> = elements.iter().enumerate().map(|(i, c)| (c.clone(), i as u32)).collect();
        let identity = *index
            .get(&matrix_code(&Matrix::identity(ring, n))?)
            .ok_or_else(|| Error::InvalidSize("element list lacks the identity".into()))?;
        let mut gens = Vec::new();
        for g in generators {
            let c = matrix_code(g)?;
            let i = *index.get(&c).ok_or_else(|| Error::InvalidSize(format!("generator {g} not in {name}")))?;
            gens.push(i);
        }
        Ok(FiniteGroup { name: name.to_string(), ring: ring.clone(), fast, n, elements, index, generators: gens, identity })
    }

    /// Closure of the generators under multiplication, failing beyond `budget` elements.
    pub fn generate(name: &str, ring: &Ring, n: usize, generators: &[Matrix], budget: usize) -> Result<FiniteGroup> {
        let fast = FastRing::new(ring)?;
        let gens: Vec<Code> = generators.iter().map(matrix_code).collect::<Result<_>>()?;
        let id = matrix_code(&Matrix::identity(ring, n))?;
        let mut seen: HashMap<Code, ()> = HashMap::from([(id.clone(), ())]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = fast.matmul(n, &x, g);
                if !seen.contains_key(&y) {
                    if seen.len() >= budget {
                        return Err(Error::BudgetExceeded(format!("{name}: more than {budget} elements")));
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        FiniteGroup::from_elements(name, ring, n, seen.into_keys().collect(), generators)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn fast(&self) -> &FastRing {
        &self.fast
    }

    pub fn code(&self, i: u32) -> &[u8] {
        &self.elements[i as usize]
    }

    pub fn matrix(&self, i: u32) -> Matrix {
        code_matrix(&self.ring, self.n, &self.elements[i as usize])
    }

    pub fn index_of(&self, code: &[u8]) -> Option<u32> {
        self.index.get(code).copied()
    }

    pub fn index_of_matrix(&self, m: &Matrix) -> Option<u32> {
        matrix_code(m).ok().and_then(|c| self.index_of(&c))
    }

    /// Product of two elements, by index.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let c = self.fast.matmul(self.n, &self.elements[a as usize], &self.elements[b as usize]);
        self.index[&c]
    }

    pub fn inverse(&self, a: u32) -> u32 {
        // the order of an element divides |G|; walk powers until identity
        let mut prev = self.identity;
        let mut cur = a;
        while cur != self.identity {
            prev = cur;
            cur = self.mul(cur, a);
        }
        prev
    }

    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    /// Indices of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.order()];
        seen[self.identity as usize] = true;
        let mut queue = VecDeque::from([self.identity]);
        let mut out = vec![self.identity];
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Elements satisfying a predicate on their matrix codes.
    pub fn filter(&self, pred: impl Fn(&[u8]) -> bool) -> Vec<u32> {
        (0..self.order() as u32).filter(|&i| pred(self.code(i))).collect()
    }
}

/// A subgroup of a [`FiniteGroup`], as a sorted list of element indices
/// with a generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    pub name: String,
    pub members: Vec<u32>,
    pub generators: Vec<u32>,
}

impl Subgroup {
    pub fn new(name: &str, mut members: Vec<u32>, generators: Vec<u32>) -> Subgroup {
        members.sort_unstable();
        members.dedup();
        Subgroup { name: name.to_string(), members, generators }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(group: &FiniteGroup, name: &str, gens: Vec<u32>) -> Subgroup {
        Subgroup::new(name, group.closure(&gens), gens)
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Set intersection; generators are all members (callers needing a
    /// small generating set should supply one).
    pub fn intersect(&self, other: &Subgroup, name: &str) -> Subgroup {
        let members: Vec<u32> = self.members.iter().copied().filter(|x| other.contains(*x)).collect();
        Subgroup { name: name.to_string(), generators: members.clone(), members }
    }

    /// Whether the generated closure equals the member set.
    pub fn generators_generate(&self, group: &FiniteGroup) -> bool {
        group.closure(&self.generators) == self.members
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_from_permutation_matrices() {
        let r = Ring::zmod(2).unwrap();
        let s = Matrix::from_int_rows(&r, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).unwrap();
        let t = Matrix::from_int_rows(&r, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]).unwrap();
        let g = FiniteGroup::generate("S3", &r, 3, &[s, t], 100).unwrap();
        assert_eq!(g.order(), 6);
        for i in 0..6 {
            assert_eq!(g.mul(i, g.inverse(i)), g.identity());
        }
        assert!(matches!(
            FiniteGroup::generate("S3", &r, 3, &[g.matrix(1), g.matrix(2), g.matrix(3)], 3),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
