//! Multivariate Laurent polynomials with integer coefficients.
//!
//! Used as the coefficient ring for symbolic identity checks: an identity
//! that holds in `Z[x1^±1, ..., xk^±1]` holds after specialising the
//! variables in any commutative ring.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Canonical form: a map from exponent vectors to non-zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars], c);
        }
        LaurentPoly { terms }
    }

    pub fn monomial(exponents: Vec<i32>, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        LaurentPoly { terms }
    }

    /// The variable `x_index` in a ring with `vars` variables.
    pub fn variable(vars: usize, index: usize) -> Self {
        let mut e = vec![0; vars];
        e[index] = 1;
        Self::monomial(e, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(e);
            }
        }
        LaurentPoly { terms }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }

    /// Units of a Laurent polynomial ring over Z are exactly `±monomial`.
    pub fn try_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if !c.abs().is_one() {
            return None;
        }
        Some(Self::monomial(e.iter().map(|x| -x).collect(), c.clone()))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = ["r", "s", "u", "v", "w", "x", "y", "z"];
        let mut first = true;
        for (e, c) in &self.terms {
            let mut mono = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                let name = names.get(i).map(|s| s.to_string()).unwrap_or(format!("x{i}"));
                match k {
                    0 => {}
                    1 => mono.push(name),
                    _ => mono.push(format!("{name}^{k}")),
                }
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomials_are_units() {
        let u = LaurentPoly::variable(2, 1);
        let inv = u.try_inverse().unwrap();
        assert_eq!(u.mul(&inv), LaurentPoly::constant(2, BigInt::one()));
        let two = LaurentPoly::constant(2, BigInt::from(2));
        assert!(two.try_inverse().is_none());
        let sum = u.add(&LaurentPoly::constant(2, BigInt::one()));
        assert!(sum.try_inverse().is_none());
    }

    #[test]
    fn cancellation_is_canonical() {
        let r = LaurentPoly::variable(1, 0);
        assert!(r.add(&r.neg()).is_zero());
        assert_eq!(r.add(&r.neg()), LaurentPoly::zero());
    }
}
