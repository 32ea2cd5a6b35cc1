//! Dense square matrices over a [`Ring`].
//!
//! Positions in the public API are 1-based, matching the usual `e_ij`
//! notation. Matrices carry their ring; mixing rings is an error.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::ring::{Ring, RingElement};

#[derive(Clone)]
pub struct Matrix {
    ring: Ring,
    n: usize,
    entries: Vec<RingElement>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.entries == other.entries && self.ring == other.ring
    }
}

impl Eq for Matrix {}

impl Hash for Matrix {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.entries.hash(state);
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = (0..self.n).map(|j| self.ring.format(&self.entries[i * self.n + j])).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

fn check_index(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(Error::IndexOutOfRange(i, j, n));
    }
    Ok(())
}

impl Matrix {
    pub fn identity(ring: &Ring, n: usize) -> Matrix {
        Matrix::from_fn(ring, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn zero(ring: &Ring, n: usize) -> Matrix {
        Matrix::from_fn(ring, n, |_, _| ring.zero())
    }

    /// Builds a matrix from a function of 0-based positions.
    pub fn from_fn(ring: &Ring, n: usize, mut f: impl FnMut(usize, usize) -> RingElement) -> Matrix {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { ring: ring.clone(), n, entries }
    }

    pub fn from_rows(ring: &Ring, rows: Vec<Vec<RingElement>>) -> Result<Matrix> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSize(format!("rows of a {n}x{n} matrix must have length {n}")));
        }
        Ok(Matrix { ring: ring.clone(), n, entries: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from integer rows.
    pub fn from_int_rows(ring: &Ring, rows: &[&[i64]]) -> Result<Matrix> {
        Matrix::from_rows(ring, rows.iter().map(|r| r.iter().map(|&k| ring.from_int(k)).collect()).collect())
    }

    /// `e_ij(r)`: the identity plus `r` at position `(i, j)`.
    pub fn elementary(ring: &Ring, n: usize, i: usize, j: usize, r: &RingElement) -> Result<Matrix> {
        check_index(n, i, j)?;
        if i == j {
            return Err(Error::EqualIndices(i));
        }
        let mut m = Matrix::identity(ring, n);
        m.entries[(i - 1) * n + (j - 1)] = r.clone();
        Ok(m)
    }

    /// `Diag(u_1, ..., u_n)`; every entry must be a unit.
    pub fn diagonal(ring: &Ring, units: &[RingElement]) -> Result<Matrix> {
        if let Some(bad) = units.iter().find(|u| !ring.is_unit(u)) {
            return Err(Error::NonUnit(ring.format(bad)));
        }
        let n = units.len();
        Ok(Matrix::from_fn(ring, n, |i, j| if i == j { units[i].clone() } else { ring.zero() }))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at 1-based position `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: RingElement) {
        self.entries[(i - 1) * self.n + (j - 1)] = value;
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    fn at(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.n + j]
    }

    fn compatible(&self, other: &Matrix) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| self.ring.add(a, b)).collect();
        Ok(Matrix { ring: self.ring.clone(), n: self.n, entries })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| self.ring.sub(a, b)).collect();
        Ok(Matrix { ring: self.ring.clone(), n: self.n, entries })
    }

    pub fn scale(&self, c: &RingElement) -> Matrix {
        let entries = self.entries.iter().map(|a| self.ring.mul(c, a)).collect();
        Matrix { ring: self.ring.clone(), n: self.n, entries }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.compatible(other)?;
        let r = &self.ring;
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = r.zero();
                for k in 0..n {
                    let a = self.at(i, k);
                    if r.is_zero(a) {
                        continue;
                    }
                    acc = r.add(&acc, &r.mul(a, other.at(k, j)));
                }
                entries.push(acc);
            }
        }
        Ok(Matrix { ring: r.clone(), n, entries })
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.ring, self.n, |i, j| self.at(j, i).clone())
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(&self.ring, self.n)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.ring.is_zero(self.at(i, j))))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.ring.is_zero(self.at(i, j))))
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.transpose().is_upper_triangular()
    }

    /// Determinant by Laplace expansion memoised over column subsets.
    pub fn determinant(&self) -> RingElement {
        let r = &self.ring;
        let n = self.n;
        if n == 0 {
            return r.one();
        }
        // minors[mask] = det of rows (n - |mask|).. against the columns in mask
        let mut minors: HashMap<u32, RingElement> = HashMap::new();
        minors.insert(0, r.one());
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut masks: Vec<u32> = (1..=full).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let row = n - mask.count_ones() as usize;
            let mut acc = r.zero();
            let mut sign_pos = 0;
            for col in 0..n {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let a = self.at(row, col);
                if !r.is_zero(a) {
                    let term = r.mul(a, &minors[&(mask & !(1 << col))]);
                    acc = if sign_pos % 2 == 0 { r.add(&acc, &term) } else { r.sub(&acc, &term) };
                }
                sign_pos += 1;
            }
            minors.insert(mask, acc);
        }
        minors.remove(&full).unwrap()
    }

    /// Inverse: back-substitution for triangular matrices with unit diagonal
    /// entries, adjugate otherwise.
    pub fn inverse(&self) -> Result<Matrix> {
        if self.is_upper_triangular() {
            return self.upper_inverse();
        }
        if self.is_lower_triangular() {
            return Ok(self.transpose().upper_inverse()?.transpose());
        }
        self.adjugate_inverse()
    }

    fn upper_inverse(&self) -> Result<Matrix> {
        let r = &self.ring;
        let n = self.n;
        let mut diag_inv = Vec::with_capacity(n);
        for i in 0..n {
            diag_inv.push(r.try_inverse(self.at(i, i)).ok_or(Error::NotInvertible)?);
        }
        let mut inv = Matrix::zero(r, n);
        for j in 0..n {
            inv.entries[j * n + j] = diag_inv[j].clone();
            for i in (0..j).rev() {
                let mut acc = r.zero();
                for k in i + 1..=j {
                    acc = r.add(&acc, &r.mul(self.at(i, k), inv.at(k, j)));
                }
                inv.entries[i * n + j] = r.neg(&r.mul(&diag_inv[i], &acc));
            }
        }
        Ok(inv)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Matrix {
        let n = self.n - 1;
        Matrix::from_fn(&self.ring, n, |i, j| {
            let si = if i >= skip_row { i + 1 } else { i };
            let sj = if j >= skip_col { j + 1 } else { j };
            self.at(si, sj).clone()
        })
    }

    fn adjugate_inverse(&self) -> Result<Matrix> {
        let r = &self.ring;
        let det_inv = r.try_inverse(&self.determinant()).ok_or(Error::NotInvertible)?;
        let n = self.n;
        Ok(Matrix::from_fn(r, n, |i, j| {
            let c = self.minor(j, i).determinant();
            let c = if (i + j) % 2 == 0 { c } else { r.neg(&c) };
            r.mul(&det_inv, &c)
        }))
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.mul(&self.inverse()?)?.mul(&other.inverse()?)
    }

    /// `a b a^-1`.
    pub fn conjugate(&self, other: &Matrix) -> Result<Matrix> {
        self.mul(other)?.mul(&self.inverse()?)
    }

    /// `d e d^-1` for a diagonal `d` with unit entries.
    pub fn conjugate_by_diagonal(d: &Matrix, e: &Matrix) -> Result<Matrix> {
        d.compatible(e)?;
        if !d.is_diagonal() {
            return Err(Error::NotInvertible);
        }
        d.conjugate(e)
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Result<Matrix> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Matrix::identity(&self.ring, self.n);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Finite-ring codes of the entries, row-major.
    pub fn codes(&self) -> Option<Vec<u32>> {
        self.entries.iter().map(|e| e.code()).collect()
    }

    /// Block-diagonal sum.
    pub fn block_diagonal(blocks: &[Matrix]) -> Result<Matrix> {
        let ring = blocks.first().ok_or_else(|| Error::InvalidSize("no blocks".into()))?.ring.clone();
        if blocks.iter().any(|b| b.ring != ring) {
            return Err(Error::RingMismatch);
        }
        let n: usize = blocks.iter().map(|b| b.n).sum();
        let mut m = Matrix::zero(&ring, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.n {
                for j in 0..b.n {
                    m.entries[(off + i) * n + off + j] = b.at(i, j).clone();
                }
            }
            off += b.n;
        }
        Ok(m)
    }
}

/// Checks the Hall–Witt identity and the product-commutator expansion
/// `[ab, c] = a [b, c] a^-1 [a, c]` for one triple.
pub fn hall_identity_check(a: &Matrix, b: &Matrix, c: &Matrix) -> Result<bool> {
    let conj = |x: &Matrix, y: &Matrix| x.conjugate(y);
    let t1 = conj(c, a)?.commutator(&b.commutator(c)?)?;
    let t2 = conj(a, b)?.commutator(&c.commutator(a)?)?;
    let t3 = conj(b, c)?.commutator(&a.commutator(b)?)?;
    let hall = t1.mul(&t3)?.mul(&t2)?;
    let lhs = a.mul(b)?.commutator(c)?;
    let rhs = a.mul(&b.commutator(c)?)?.mul(&a.inverse()?)?.mul(&a.commutator(c)?)?;
    Ok(hall.is_identity() && lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zm(m: u32) -> Ring {
        Ring::zmod(m).unwrap()
    }

    #[test]
    fn elementary_errors() {
        let r = zm(3);
        assert!(matches!(Matrix::elementary(&r, 3, 0, 1, &r.one()), Err(Error::IndexOutOfRange(..))));
        assert!(matches!(Matrix::elementary(&r, 3, 2, 2, &r.one()), Err(Error::EqualIndices(2))));
        assert!(Matrix::elementary(&r, 3, 1, 2, &r.zero()).unwrap().is_identity());
    }

    #[test]
    fn commutator_of_twos_mod_four() {
        let r = zm(4);
        let two = r.from_int(2);
        let a = Matrix::elementary(&r, 3, 1, 2, &two).unwrap();
        let b = Matrix::elementary(&r, 3, 2, 3, &two).unwrap();
        assert!(a.commutator(&b).unwrap().is_identity());
    }

    #[test]
    fn diagonal_examples() {
        let r = zm(5);
        let d1 = Matrix::diagonal(&r, &[r.from_int(2), r.from_int(3)]).unwrap();
        let d2 = Matrix::diagonal(&r, &[r.from_int(3), r.from_int(2)]).unwrap();
        assert!(d1.mul(&d2).unwrap().is_identity());
        assert!(matches!(Matrix::diagonal(&r, &[r.zero()]), Err(Error::NonUnit(_))));

        let r = zm(7);
        let d = Matrix::diagonal(&r, &[r.one(), r.from_int(3)]).unwrap();
        let e = Matrix::elementary(&r, 2, 1, 2, &r.from_int(2)).unwrap();
        let c = Matrix::conjugate_by_diagonal(&d, &e).unwrap();
        assert_eq!(c, Matrix::elementary(&r, 2, 1, 2, &r.from_int(3)).unwrap());
    }

    #[test]
    fn determinant_and_adjugate() {
        let r = zm(7);
        let m = Matrix::from_int_rows(&r, &[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]).unwrap();
        // det = 0*(0*8+9) - 1*(8-12) + 2*(-3-0) = 4 - 6 = -2
        assert_eq!(m.determinant(), r.from_int(-2));
        assert!(m.inverse().unwrap().mul(&m).unwrap().is_identity());
        let singular = Matrix::from_int_rows(&r, &[&[1, 2], &[2, 4]]).unwrap();
        assert!(matches!(singular.inverse(), Err(Error::NotInvertible)));
    }

    #[test]
    fn cross_ring_is_an_error() {
        let a = Matrix::identity(&zm(3), 2);
        let b = Matrix::identity(&zm(5), 2);
        assert!(matches!(a.mul(&b), Err(Error::RingMismatch)));
        let c = Matrix::identity(&zm(3), 3);
        assert!(matches!(a.mul(&c), Err(Error::SizeMismatch(2, 3))));
    }

    #[test]
    fn hall_on_unitriangular_generators() {
        let r = zm(3);
        let one = r.one();
        let a = Matrix::elementary(&r, 4, 1, 2, &one).unwrap();
        let b = Matrix::elementary(&r, 4, 2, 3, &one).unwrap();
        let c = Matrix::elementary(&r, 4, 3, 4, &one).unwrap();
        assert!(hall_identity_check(&a, &b, &c).unwrap());
    }
}
