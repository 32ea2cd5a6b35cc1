//! Explicit matrix models: root elements `x_a(r)` for the simple roots and
//! their negatives, and torus elements `h_a(u)` for the simple roots.
//!
//! A root element is stored as a list of terms `(i, j, c, k)`, meaning
//! `x(r) = I + sum c * r^k * E_ij`. Torus elements are diagonal with
//! entries `u^e_i`.

use crate::chevalley::roots::{root_system, CartanType, RootDatum};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Ring, RingElement};

/// One summand `c * r^k * E_ij` (1-based positions).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub i: usize,
    pub j: usize,
    pub coeff: i64,
    pub power: u32,
}

const fn t(i: usize, j: usize, coeff: i64, power: u32) -> Term {
    Term { i, j, coeff, power }
}

#[derive(Clone, Debug)]
pub struct MatrixModel {
    pub datum: RootDatum,
    pub n: usize,
    positive: Vec<Vec<Term>>,
    negative: Vec<Vec<Term>>,
    torus: Vec<Vec<i64>>,
}

fn transpose(terms: &[Term]) -> Vec<Term> {
    terms.iter().map(|x| t(x.j, x.i, x.coeff, x.power)).collect()
}

fn type_a(rank: usize) -> (Vec<Vec<Term>>, Vec<Vec<i64>>) {
    let n = rank + 1;
    let pos = (1..=rank).map(|i| vec![t(i, i + 1, 1, 1)]).collect();
    let torus = (1..=rank)
        .map(|i| {
            let mut e = vec![0; n];
            e[i - 1] = 1;
            e[i] = -1;
            e
        })
        .collect();
    (pos, torus)
}

/// The model of a tabulated type.
pub fn matrix_model(label: CartanType) -> MatrixModel {
    let (n, positive, negative, torus): (usize, Vec<Vec<Term>>, Option<Vec<Vec<Term>>>, Vec<Vec<i64>>) = match label {
        CartanType::A1 | CartanType::A2 | CartanType::A3 => {
            let rank = match label {
                CartanType::A1 => 1,
                CartanType::A2 => 2,
                _ => 3,
            };
            let (pos, torus) = type_a(rank);
            (rank + 1, pos, None, torus)
        }
        CartanType::C2 => (
            4,
            vec![vec![t(1, 2, 1, 1), t(4, 3, -1, 1)], vec![t(2, 4, 1, 1)]],
            None,
            vec![vec![1, -1, -1, 1], vec![0, 1, 0, -1]],
        ),
        CartanType::C3 => (
            6,
            vec![vec![t(1, 2, 1, 1), t(5, 4, -1, 1)], vec![t(2, 3, 1, 1), t(6, 5, -1, 1)], vec![t(3, 6, 1, 1)]],
            None,
            vec![vec![1, -1, 0, -1, 1, 0], vec![0, 1, -1, 0, -1, 1], vec![0, 0, 1, 0, 0, -1]],
        ),
        CartanType::D4 => (
            8,
            vec![
                vec![t(1, 2, 1, 1), t(6, 5, -1, 1)],
                vec![t(2, 3, 1, 1), t(7, 6, -1, 1)],
                vec![t(3, 4, 1, 1), t(8, 7, -1, 1)],
                vec![t(3, 8, 1, 1), t(4, 7, -1, 1)],
            ],
            None,
            vec![
                vec![1, -1, 0, 0, -1, 1, 0, 0],
                vec![0, 1, -1, 0, 0, -1, 1, 0],
                vec![0, 0, 1, -1, 0, 0, -1, 1],
                vec![0, 0, 1, 1, 0, 0, -1, -1],
            ],
        ),
        CartanType::B3 => {
            let pos = vec![
                vec![t(2, 3, 1, 1), t(6, 5, -1, 1)],
                vec![t(3, 4, 1, 1), t(7, 6, -1, 1)],
                vec![t(4, 1, 2, 1), t(1, 7, -1, 1), t(4, 7, -1, 2)],
            ];
            let neg = vec![
                transpose(&pos[0]),
                transpose(&pos[1]),
                vec![t(1, 4, 1, 1), t(7, 1, -2, 1), t(7, 4, -1, 2)],
            ];
            (
                7,
                pos,
                Some(neg),
                vec![vec![0, 1, -1, 0, -1, 1, 0], vec![0, 0, 1, -1, 0, -1, 1], vec![0, 0, 0, 2, 0, 0, -2]],
            )
        }
        CartanType::G2 => {
            let pos = vec![
                vec![t(2, 3, 1, 1), t(6, 5, -1, 1)],
                vec![t(1, 2, 2, 1), t(3, 7, 1, 1), t(4, 6, -1, 1), t(5, 1, -1, 1), t(5, 2, -1, 2)],
            ];
            let neg = vec![
                transpose(&pos[0]),
                vec![t(2, 1, 1, 1), t(7, 3, 1, 1), t(6, 4, -1, 1), t(1, 5, -2, 1), t(2, 5, -1, 2)],
            ];
            (7, pos, Some(neg), vec![vec![0, 1, -1, 0, -1, 1, 0], vec![0, -2, 1, 1, 2, -1, -1]])
        }
    };
    let negative = negative.unwrap_or_else(|| positive.iter().map(|p| transpose(p)).collect());
    MatrixModel { datum: root_system(label), n, positive, negative, torus }
}

impl MatrixModel {
    pub fn label(&self) -> CartanType {
        self.datum.label
    }

    /// Refuses characteristic-2 rings for B3 and G2.
    pub fn check_ring(&self, ring: &Ring) -> Result<()> {
        if self.label().needs_odd_characteristic() && ring.is_zero(&ring.from_int(2)) {
            return Err(Error::Char2Unsupported(self.label().to_string()));
        }
        Ok(())
    }

    /// Roots with a tabulated root element: simple roots and their negatives.
    pub fn tabulated_roots(&self) -> Vec<usize> {
        let d = &self.datum;
        let mut out: Vec<usize> = (0..d.rank()).map(|i| d.simple(i)).collect();
        out.extend((0..d.rank()).map(|i| d.negative(d.simple(i))));
        out
    }

    /// Terms of `x_root`.
    pub fn terms(&self, root: usize) -> Result<&[Term]> {
        let d = &self.datum;
        if let Some(i) = d.simple_index(root) {
            return Ok(&self.positive[i]);
        }
        if let Some(i) = d.simple_index(d.negative(root)) {
            return Ok(&self.negative[i]);
        }
        Err(Error::UnknownRoot(d.name(root)))
    }

    /// Torus exponents of `h_{alpha_i}`.
    pub fn torus_exponents(&self, simple: usize) -> &[i64] {
        &self.torus[simple]
    }

    /// `x_root(r)`.
    pub fn root_element(&self, ring: &Ring, root: usize, r: &RingElement) -> Result<Matrix> {
        self.check_ring(ring)?;
        let terms = self.terms(root)?;
        let mut m = Matrix::identity(ring, self.n);
        for term in terms {
            let v = ring.mul(&ring.from_int(term.coeff), &ring.pow(r, term.power as i64)?);
            let cur = m.get(term.i, term.j).clone();
            m.set(term.i, term.j, ring.add(&cur, &v));
        }
        Ok(m)
    }

    /// `h_{alpha_i}(u)`.
    pub fn semisimple_element(&self, ring: &Ring, simple: usize, u: &RingElement) -> Result<Matrix> {
        self.check_ring(ring)?;
        if !ring.is_unit(u) {
            return Err(Error::NonUnit(ring.format(u)));
        }
        let diag: Vec<RingElement> = self.torus[simple].iter().map(|&e| ring.pow(u, e)).collect::<Result<_>>()?;
        Matrix::diagonal(ring, &diag)
    }

    /// `w_a = x_a(1) x_{-a}(1)^-1 x_a(1)` for a simple root index.
    pub fn weyl_element(&self, ring: &Ring, simple: usize) -> Result<Matrix> {
        let a = self.datum.simple(simple);
        let one = ring.one();
        let x = self.root_element(ring, a, &one)?;
        let y = self.root_element(ring, self.datum.negative(a), &one)?;
        x.mul(&y.inverse()?)?.mul(&x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let sizes = [2, 3, 4, 4, 6, 7, 8, 7];
        for (label, n) in CartanType::ALL.into_iter().zip(sizes) {
            assert_eq!(matrix_model(label).n, n);
        }
    }

    #[test]
    fn g2_short_root_entries() {
        let r = Ring::zmod(7).unwrap();
        let m = matrix_model(CartanType::G2);
        let g = m.datum.simple(1);
        let x = m.root_element(&r, g, &r.from_int(3)).unwrap();
        assert_eq!(x.get(1, 2), &r.from_int(6));
        assert_eq!(x.get(5, 1), &r.from_int(-3));
        assert_eq!(x.get(5, 2), &r.from_int(-9));
    }

    #[test]
    fn c2_short_root_is_product_of_elementaries() {
        let r = Ring::zmod(5).unwrap();
        let m = matrix_model(CartanType::C2);
        for k in 0..5 {
            let s = r.from_int(k);
            let x = m.root_element(&r, m.datum.simple(0), &s).unwrap();
            let e = Matrix::elementary(&r, 4, 1, 2, &s).unwrap();
            let f = Matrix::elementary(&r, 4, 4, 3, &s).unwrap().inverse().unwrap();
            assert_eq!(x, e.mul(&f).unwrap());
        }
    }

    #[test]
    fn torus_displays() {
        let r = Ring::zmod(7).unwrap();
        let b3 = matrix_model(CartanType::B3);
        let h = b3.semisimple_element(&r, 2, &r.from_int(3)).unwrap();
        let expect: Vec<RingElement> = [1, 1, 1, 9, 1, 1, 4].iter().map(|&k| r.from_int(k)).collect();
        // 3^-2 = 2^2 = 4 mod 7
        assert_eq!(h, Matrix::diagonal(&r, &expect).unwrap());
        let d4 = matrix_model(CartanType::D4);
        let h = d4.semisimple_element(&r, 3, &r.from_int(2)).unwrap();
        let expect: Vec<RingElement> = [1, 1, 2, 2, 1, 1, 4, 4].iter().map(|&k| r.from_int(k)).collect();
        assert_eq!(h, Matrix::diagonal(&r, &expect).unwrap());
    }

    #[test]
    fn a1_weyl_element() {
        let r = Ring::zmod(5).unwrap();
        let m = matrix_model(CartanType::A1);
        let w = m.weyl_element(&r, 0).unwrap();
        assert_eq!(w, Matrix::from_int_rows(&r, &[&[0, 1], &[-1, 0]]).unwrap());
    }

    #[test]
    fn characteristic_two_is_refused() {
        let r = Ring::zmod(2).unwrap();
        let m = matrix_model(CartanType::B3);
        assert!(matches!(m.root_element(&r, 0, &r.one()), Err(Error::Char2Unsupported(_))));
        assert!(matrix_model(CartanType::C3).root_element(&r, 0, &r.one()).is_ok());
    }
}
