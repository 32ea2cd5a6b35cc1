//! Exact commutative rings with unity.
//!
//! A [`Ring`] is a cheap, shareable handle built from a [`RingDescriptor`].
//! Elements ([`RingElement`]) carry only their canonical representation and
//! are interpreted relative to the ring that produced them; every arithmetic
//! operation goes through the ring handle.
//!
//! Finite rings encode elements as integer codes: residues for `zmod`/`gf`,
//! and base-`m` packed coefficient vectors (low degree = least significant
//! digit) for polynomial quotients. Code order is the enumeration order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Rings up to this size get precomputed addition/multiplication tables.
const TABLE_LIMIT: u64 = 256;

/// Structural description of a ring. Two descriptors are equal iff they are
/// structurally identical; no isomorphism testing happens anywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    /// The integers.
    Integers,
    /// `Z/mZ`, `m >= 2`.
    ZMod(u32),
    /// The prime field `F_p`; arithmetic identical to `ZMod(p)`.
    Gf(u32),
    /// `(Z/mZ)[x]/(f)` with `f` monic; coefficients low-to-high, last one is 1.
    PolyQuotient { base: u32, modulus: Vec<u32> },
    /// `Z[1/m]`.
    LocalizedIntegers(u64),
    /// `Z[x1^±1, ..., xk^±1]`, used for symbolic identity checks.
    Laurent(usize),
}

impl RingDescriptor {
    fn validate(&self) -> Result<()> {
        match self {
            RingDescriptor::Integers => Ok(()),
            RingDescriptor::ZMod(m) if *m >= 2 => Ok(()),
            RingDescriptor::ZMod(m) => Err(Error::InvalidDescriptor(format!("zmod needs m >= 2, got {m}"))),
            RingDescriptor::Gf(p) if is_prime(*p as u64) => Ok(()),
            RingDescriptor::Gf(p) => Err(Error::InvalidDescriptor(format!("gf needs a prime, got {p}"))),
            RingDescriptor::PolyQuotient { base, modulus } => {
                if *base < 2 {
                    return Err(Error::InvalidDescriptor(format!("polyq base must be >= 2, got {base}")));
                }
                if modulus.len() < 2 {
                    return Err(Error::InvalidDescriptor("polyq modulus must have degree >= 1".into()));
                }
                if modulus.iter().any(|c| c >= base) {
                    return Err(Error::InvalidDescriptor("polyq coefficients must be reduced".into()));
                }
                if *modulus.last().unwrap() != 1 {
                    return Err(Error::InvalidDescriptor("polyq modulus must be monic".into()));
                }
                let size = (*base as u64).checked_pow(modulus.len() as u32 - 1);
                match size {
                    Some(s) if s <= u32::MAX as u64 => Ok(()),
                    _ => Err(Error::InvalidDescriptor("polyq ring too large".into())),
                }
            }
            RingDescriptor::LocalizedIntegers(m) if *m >= 2 => Ok(()),
            RingDescriptor::LocalizedIntegers(m) => {
                Err(Error::InvalidDescriptor(format!("zloc needs m >= 2, got {m}")))
            }
            RingDescriptor::Laurent(k) if *k >= 1 => Ok(()),
            RingDescriptor::Laurent(_) => Err(Error::InvalidDescriptor("laurent needs >= 1 variable".into())),
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "z"),
            RingDescriptor::ZMod(m) => write!(f, "zmod:{m}"),
            RingDescriptor::Gf(p) => write!(f, "gf:{p}"),
            RingDescriptor::PolyQuotient { base, modulus } => {
                let cs: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
                write!(f, "polyq:{base}:{}", cs.join(","))
            }
            RingDescriptor::LocalizedIntegers(m) => write!(f, "zloc:{m}"),
            RingDescriptor::Laurent(k) => write!(f, "laurent:{k}"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = Error;

    /// Grammar: `z`, `zmod:<m>`, `gf:<p>`, `polyq:<p>:<c0,c1,...,1>`,
    /// `zloc:<m>`, `laurent:<k>`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |t: &str| -> Result<u64> {
            t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad number '{t}' in '{s}'")))
        };
        let small = |t: &str| -> Result<u32> {
            let v = num(t)?;
            u32::try_from(v).map_err(|_| Error::Parse(format!("'{t}' too large")))
        };
        let d = match parts.as_slice() {
            ["z"] => RingDescriptor::Integers,
            ["zmod", m] => RingDescriptor::ZMod(small(m)?),
            ["gf", p] => RingDescriptor::Gf(small(p)?),
            ["zloc", m] => RingDescriptor::LocalizedIntegers(num(m)?),
            ["laurent", k] => RingDescriptor::Laurent(num(k)? as usize),
            ["polyq", p, coeffs] => {
                let base = small(p)?;
                let modulus = coeffs.split(',').map(small).collect::<Result<Vec<_>>>()?;
                RingDescriptor::PolyQuotient { base, modulus }
            }
            _ => return Err(Error::Parse(format!("unrecognised ring descriptor '{s}'"))),
        };
        d.validate()?;
        Ok(d)
    }
}

/// Canonical representation of a ring element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingElement {
    /// Element of a finite ring, by code.
    Code(u32),
    /// Element of `Z` or `Z[1/m]` as a reduced fraction.
    Rational(BigRational),
    Laurent(LaurentPoly),
}

impl RingElement {
    /// The code of a finite-ring element.
    pub fn code(&self) -> Option<u32> {
        match self {
            RingElement::Code(c) => Some(*c),
            _ => None,
        }
    }
}

/// Integer combination of the additive generators, one coefficient per generator.
pub type Combination = Vec<i64>;

/// A finite additive presentation of a ring: generators `T` (with `T[0] = 1`),
/// additive relators, and a chosen product expansion for every pair.
#[derive(Clone, Debug, PartialEq)]
pub struct AdditivePresentation {
    pub generators: Vec<RingElement>,
    pub relators: Vec<Combination>,
    products: BTreeMap<(usize, usize), Combination>,
}

impl AdditivePresentation {
    /// The chosen expansion `m(t, s)`; symmetric in its arguments.
    pub fn product(&self, t: usize, s: usize) -> &Combination {
        let key = if t <= s { (t, s) } else { (s, t) };
        &self.products[&key]
    }

    /// Image of an integer combination in the ring.
    pub fn evaluate(&self, ring: &Ring, combo: &[i64]) -> RingElement {
        let mut acc = ring.zero();
        for (g, &a) in self.generators.iter().zip(combo) {
            acc = ring.add(&acc, &ring.mul(&ring.from_int(a), g));
        }
        acc
    }

    /// Checks `1 ∈ T`, `m(1, s) = s`, symmetry, and that every `m(t, s)`
    /// evaluates to the ring product `t·s`.
    pub fn check(&self, ring: &Ring) -> bool {
        if self.generators.first() != Some(&ring.one()) {
            return false;
        }
        let k = self.generators.len();
        for s in 0..k {
            let mut unit = vec![0; k];
            unit[s] = 1;
            if self.product(0, s) != &unit {
                return false;
            }
        }
        for t in 0..k {
            for s in 0..k {
                if self.product(t, s) != self.product(s, t) {
                    return false;
                }
                let expect = ring.mul(&self.generators[t], &self.generators[s]);
                if self.evaluate(ring, self.product(t, s)) != expect {
                    return false;
                }
            }
        }
        self.relators.iter().all(|r| ring.is_zero(&self.evaluate(ring, r)))
    }
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
}

struct Inner {
    descriptor: RingDescriptor,
    /// Cardinality of finite rings.
    size: Option<u64>,
    /// Coefficient modulus for finite rings.
    base: u32,
    /// Polynomial degree (1 for `zmod`/`gf`).
    degree: usize,
    modulus: Vec<u32>,
    tables: Option<Tables>,
    inverses: Option<Vec<Option<u32>>>,
    loc_primes: Vec<u64>,
    vars: usize,
}

/// Shareable handle to a ring.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.descriptor == other.0.descriptor
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.0.descriptor)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.descriptor)
    }
}

impl Ring {
    /// Builds a ring from a validated descriptor.
    pub fn new(descriptor: RingDescriptor) -> Result<Ring> {
        descriptor.validate()?;
        let mut inner = Inner {
            descriptor: descriptor.clone(),
            size: None,
            base: 0,
            degree: 1,
            modulus: Vec::new(),
            tables: None,
            inverses: None,
            loc_primes: Vec::new(),
            vars: 0,
        };
        match &descriptor {
            RingDescriptor::ZMod(m) | RingDescriptor::Gf(m) => {
                inner.size = Some(*m as u64);
                inner.base = *m;
            }
            RingDescriptor::PolyQuotient { base, modulus } => {
                inner.base = *base;
                inner.degree = modulus.len() - 1;
                inner.modulus = modulus.clone();
                inner.size = Some((*base as u64).pow(inner.degree as u32));
            }
            RingDescriptor::LocalizedIntegers(m) => inner.loc_primes = prime_factors(*m),
            RingDescriptor::Laurent(k) => inner.vars = *k,
            RingDescriptor::Integers => {}
        }
        let mut ring = Ring(Arc::new(inner));
        if let Some(size) = ring.0.size {
            let inverses = if size <= 1 << 16 {
                let mut inv = vec![None; size as usize];
                for a in 0..size as u32 {
                    if inv[a as usize].is_some() {
                        continue;
                    }
                    for b in 0..size as u32 {
                        if ring.code_mul(a, b) == ring.one_code() {
                            inv[a as usize] = Some(b);
                            inv[b as usize] = Some(a);
                            break;
                        }
                    }
                }
                Some(inv)
            } else {
                None
            };
            let tables = (size <= TABLE_LIMIT).then(|| {
                let n = size as u32;
                let mut add = Vec::with_capacity((n * n) as usize);
                let mut mul = Vec::with_capacity((n * n) as usize);
                for a in 0..n {
                    for b in 0..n {
                        add.push(ring.code_add(a, b));
                        mul.push(ring.code_mul(a, b));
                    }
                }
                Tables { add, mul }
            });
            let inner = Arc::get_mut(&mut ring.0).expect("fresh ring handle is unique");
            inner.inverses = inverses;
            inner.tables = tables;
        }
        Ok(ring)
    }

    /// Parses a descriptor string and builds the ring.
    pub fn parse(s: &str) -> Result<Ring> {
        Ring::new(s.parse()?)
    }

    pub fn integers() -> Ring {
        Ring::new(RingDescriptor::Integers).expect("integers are valid")
    }

    pub fn zmod(m: u32) -> Result<Ring> {
        Ring::new(RingDescriptor::ZMod(m))
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.0.descriptor
    }

    pub fn is_finite(&self) -> bool {
        self.0.size.is_some()
    }

    pub fn cardinality(&self) -> Option<u64> {
        self.0.size
    }

    /// Number of variables of a Laurent ring (0 otherwise).
    pub fn variables(&self) -> usize {
        self.0.vars
    }

    pub fn zero(&self) -> RingElement {
        self.from_int(0)
    }

    pub fn one(&self) -> RingElement {
        self.from_int(1)
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        *a == self.zero()
    }

    pub fn is_one(&self, a: &RingElement) -> bool {
        *a == self.one()
    }

    /// Image of an integer under the unique ring map `Z -> R`.
    pub fn from_int(&self, k: i64) -> RingElement {
        match &self.0.descriptor {
            RingDescriptor::Integers | RingDescriptor::LocalizedIntegers(_) => {
                RingElement::Rational(BigRational::from_integer(BigInt::from(k)))
            }
            RingDescriptor::Laurent(v) => RingElement::Laurent(LaurentPoly::constant(*v, BigInt::from(k))),
            _ => RingElement::Code(k.rem_euclid(self.0.base as i64) as u32),
        }
    }

    /// The `index`-th variable of a Laurent ring.
    pub fn variable(&self, index: usize) -> Result<RingElement> {
        match &self.0.descriptor {
            RingDescriptor::Laurent(v) if index < *v => Ok(RingElement::Laurent(LaurentPoly::variable(*v, index))),
            RingDescriptor::PolyQuotient { .. } if index == 0 => {
                Ok(RingElement::Code(if self.0.degree > 1 { self.0.base } else { self.reduce_x() }))
            }
            _ => Err(Error::UnsupportedKind(format!("no variable {index} in {}", self.0.descriptor))),
        }
    }

    /// `x mod f` for degree-one moduli.
    fn reduce_x(&self) -> u32 {
        let c0 = self.0.modulus[0];
        (self.0.base - c0) % self.0.base
    }

    /// Element from a rational number; fails if it is not in the ring.
    pub fn from_rational(&self, q: &BigRational) -> Result<RingElement> {
        match &self.0.descriptor {
            RingDescriptor::Integers if q.is_integer() => Ok(RingElement::Rational(q.clone())),
            RingDescriptor::LocalizedIntegers(_) if self.admissible_denominator(q.denom()) => {
                Ok(RingElement::Rational(q.clone()))
            }
            _ if self.is_finite() => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                let inv = self.try_inverse(&den).ok_or_else(|| Error::NonUnit(q.to_string()))?;
                Ok(self.mul(&num, &inv))
            }
            _ => Err(Error::NonUnit(format!("{q} is not in {}", self.0.descriptor))),
        }
    }

    fn from_bigint(&self, k: &BigInt) -> RingElement {
        match &self.0.descriptor {
            RingDescriptor::Integers | RingDescriptor::LocalizedIntegers(_) => {
                RingElement::Rational(BigRational::from_integer(k.clone()))
            }
            RingDescriptor::Laurent(v) => RingElement::Laurent(LaurentPoly::constant(*v, k.clone())),
            _ => {
                let r = k.mod_floor(&BigInt::from(self.0.base));
                RingElement::Code(r.to_u32().expect("residue fits"))
            }
        }
    }

    fn admissible_denominator(&self, d: &BigInt) -> bool {
        let mut d = d.abs();
        for &p in &self.0.loc_primes {
            let p = BigInt::from(p);
            while (&d % &p).is_zero() {
                d /= &p;
            }
        }
        d.is_one()
    }

    fn one_code(&self) -> u32 {
        1 % self.0.base
    }

    fn decode(&self, code: u32) -> Vec<u64> {
        let m = self.0.base as u64;
        let mut c = code as u64;
        (0..self.0.degree)
            .map(|_| {
                let d = c % m;
                c /= m;
                d
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u64]) -> u32 {
        let m = self.0.base as u64;
        coeffs.iter().rev().fold(0u64, |acc, &c| acc * m + c) as u32
    }

    /// Coefficient vector (low to high) of a finite-ring element.
    pub fn coefficients(&self, a: &RingElement) -> Option<Vec<u64>> {
        a.code().map(|c| self.decode(c))
    }

    fn code_add(&self, a: u32, b: u32) -> u32 {
        if self.0.degree == 1 {
            return ((a as u64 + b as u64) % self.0.base as u64) as u32;
        }
        let m = self.0.base as u64;
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<u64> = x.iter().zip(&y).map(|(p, q)| (p + q) % m).collect();
        self.encode(&s)
    }

    fn code_mul(&self, a: u32, b: u32) -> u32 {
        let m = self.0.base as u64;
        if self.0.degree == 1 {
            return ((a as u64 * b as u64) % m) as u32;
        }
        let d = self.0.degree;
        let (x, y) = (self.decode(a), self.decode(b));
        let mut prod = vec![0u64; 2 * d - 1];
        for i in 0..d {
            for j in 0..d {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % m;
            }
        }
        for k in (d..2 * d - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..d {
                let sub = (c * self.0.modulus[i] as u64) % m;
                prod[k - d + i] = (prod[k - d + i] + m - sub) % m;
            }
        }
        self.encode(&prod[..d])
    }

    fn code_neg(&self, a: u32) -> u32 {
        let m = self.0.base as u64;
        let x = self.decode(a);
        let n: Vec<u64> = x.iter().map(|c| (m - c) % m).collect();
        self.encode(&n)
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (a, b) {
            (RingElement::Code(x), RingElement::Code(y)) => RingElement::Code(match &self.0.tables {
                Some(t) => t.add[(*x as usize) * self.0.size.unwrap() as usize + *y as usize],
                None => self.code_add(*x, *y),
            }),
            (RingElement::Rational(x), RingElement::Rational(y)) => RingElement::Rational(x + y),
            (RingElement::Laurent(x), RingElement::Laurent(y)) => RingElement::Laurent(x.add(y)),
            _ => panic!("mixed element representations in {}", self.0.descriptor),
        }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        match a {
            RingElement::Code(x) => RingElement::Code(self.code_neg(*x)),
            RingElement::Rational(x) => RingElement::Rational(-x),
            RingElement::Laurent(x) => RingElement::Laurent(x.neg()),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (a, b) {
            (RingElement::Code(x), RingElement::Code(y)) => RingElement::Code(match &self.0.tables {
                Some(t) => t.mul[(*x as usize) * self.0.size.unwrap() as usize + *y as usize],
                None => self.code_mul(*x, *y),
            }),
            (RingElement::Rational(x), RingElement::Rational(y)) => RingElement::Rational(x * y),
            (RingElement::Laurent(x), RingElement::Laurent(y)) => RingElement::Laurent(x.mul(y)),
            _ => panic!("mixed element representations in {}", self.0.descriptor),
        }
    }

    /// `a^k`; negative exponents require `a` to be a unit.
    pub fn pow(&self, a: &RingElement, k: i64) -> Result<RingElement> {
        let base = if k < 0 {
            self.try_inverse(a).ok_or_else(|| Error::NonUnit(self.format(a)))?
        } else {
            a.clone()
        };
        let mut acc = self.one();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        Ok(acc)
    }

    /// Multiplicative inverse, if any.
    pub fn try_inverse(&self, a: &RingElement) -> Option<RingElement> {
        match a {
            RingElement::Code(x) => match &self.0.inverses {
                Some(inv) => inv[*x as usize].map(RingElement::Code),
                None => {
                    let size = self.0.size? as u32;
                    (0..size).find(|&y| self.code_mul(*x, y) == self.one_code()).map(RingElement::Code)
                }
            },
            RingElement::Rational(q) => {
                if q.is_zero() {
                    return None;
                }
                let inv = q.recip();
                match &self.0.descriptor {
                    RingDescriptor::Integers => inv.is_integer().then_some(RingElement::Rational(inv)),
                    _ => self.admissible_denominator(inv.denom()).then_some(RingElement::Rational(inv)),
                }
            }
            RingElement::Laurent(p) => p.try_inverse().map(RingElement::Laurent),
        }
    }

    pub fn is_unit(&self, a: &RingElement) -> bool {
        self.try_inverse(a).is_some()
    }

    /// True when 2 is invertible.
    pub fn two_invertible(&self) -> bool {
        self.is_unit(&self.from_int(2))
    }

    /// All elements of a finite ring in code order.
    pub fn elements(&self) -> Result<Vec<RingElement>> {
        let size = self.0.size.ok_or(Error::InfiniteRing)?;
        Ok((0..size as u32).map(RingElement::Code).collect())
    }

    /// All units of a finite ring in code order.
    pub fn units(&self) -> Result<Vec<RingElement>> {
        Ok(self.elements()?.into_iter().filter(|a| self.is_unit(a)).collect())
    }

    /// A generating set of the unit group. Each step adds the unit that
    /// enlarges the generated subgroup most, ties broken by code order.
    pub fn unit_generators(&self) -> Result<Vec<RingElement>> {
        let units = self.units()?;
        let close = |gens: &[RingElement]| -> BTreeSet<RingElement> {
            let mut span = BTreeSet::from([self.one()]);
            let mut frontier = vec![self.one()];
            while let Some(x) = frontier.pop() {
                for g in gens {
                    let y = self.mul(&x, g);
                    if span.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
            span
        };
        let mut gens: Vec<RingElement> = Vec::new();
        let mut span = close(&gens);
        while span.len() < units.len() {
            let mut best: Option<(usize, &RingElement)> = None;
            for u in units.iter().filter(|u| !span.contains(*u)) {
                let mut trial = gens.clone();
                trial.push(u.clone());
                let size = close(&trial).len();
                if best.is_none_or(|(s, _)| size > s) {
                    best = Some((size, u));
                }
            }
            gens.push(best.expect("some unit lies outside the span").1.clone());
            span = close(&gens);
        }
        Ok(gens)
    }

    /// Additive presentation `(T, R_add, m)`.
    ///
    /// `Z` gets `T = {1}` with no relators. `Z[1/m]` and Laurent rings are
    /// not finitely generated as abelian groups and are rejected.
    pub fn additive_presentation(&self) -> Result<AdditivePresentation> {
        let (generators, relators): (Vec<RingElement>, Vec<Combination>) = match &self.0.descriptor {
            RingDescriptor::Integers => (vec![self.one()], vec![]),
            RingDescriptor::ZMod(m) | RingDescriptor::Gf(m) => (vec![self.one()], vec![vec![*m as i64]]),
            RingDescriptor::PolyQuotient { base, .. } => {
                let d = self.0.degree;
                let gens = (0..d)
                    .map(|i| {
                        let mut c = vec![0u64; d];
                        c[i] = 1;
                        RingElement::Code(self.encode(&c))
                    })
                    .collect();
                let rels = (0..d)
                    .map(|i| {
                        let mut r = vec![0i64; d];
                        r[i] = *base as i64;
                        r
                    })
                    .collect();
                (gens, rels)
            }
            other => return Err(Error::UnsupportedKind(format!("no finite additive presentation for {other}"))),
        };
        let k = generators.len();
        let mut products = BTreeMap::new();
        for t in 0..k {
            for s in t..k {
                let combo = if t == 0 {
                    let mut c = vec![0; k];
                    c[s] = 1;
                    c
                } else {
                    let p = self.mul(&generators[t], &generators[s]);
                    match &p {
                        RingElement::Code(_) => {
                            self.coefficients(&p).unwrap().into_iter().map(|c| c as i64).collect()
                        }
                        // Z with T = {1} never reaches here
                        _ => unreachable!("only the unit generator exists over Z"),
                    }
                };
                products.insert((t, s), combo);
            }
        }
        Ok(AdditivePresentation { generators, relators, products })
    }

    /// Human-readable canonical form.
    pub fn format(&self, a: &RingElement) -> String {
        match a {
            RingElement::Code(c) if self.0.degree == 1 => c.to_string(),
            RingElement::Code(c) => {
                let coeffs = self.decode(*c);
                let mut parts = Vec::new();
                for (i, &k) in coeffs.iter().enumerate() {
                    if k == 0 {
                        continue;
                    }
                    let mono = match i {
                        0 => String::new(),
                        1 => "x".to_string(),
                        _ => format!("x^{i}"),
                    };
                    parts.push(match (k, i) {
                        (_, 0) => k.to_string(),
                        (1, _) => mono,
                        _ => format!("{k}{mono}"),
                    });
                }
                if parts.is_empty() {
                    "0".into()
                } else {
                    parts.join("+")
                }
            }
            RingElement::Rational(q) => q.to_string(),
            RingElement::Laurent(p) => p.to_string(),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(k: u32) -> RingElement {
        RingElement::Code(k)
    }

    #[test]
    fn zmod_arithmetic() {
        let r = Ring::zmod(4).unwrap();
        assert_eq!(r.add(&el(2), &el(2)), el(0));
        assert_eq!(r.try_inverse(&el(3)), Some(el(3)));
        assert_eq!(r.try_inverse(&el(2)), None);
    }

    #[test]
    fn integers_have_only_sign_units() {
        let z = Ring::integers();
        assert!(z.try_inverse(&z.from_int(2)).is_none());
        assert_eq!(z.try_inverse(&z.from_int(-1)), Some(z.from_int(-1)));
        assert!(matches!(z.elements(), Err(Error::InfiniteRing)));
        assert!(matches!(z.units(), Err(Error::InfiniteRing)));
    }

    #[test]
    fn descriptor_validation() {
        assert!(matches!(Ring::zmod(1), Err(Error::InvalidDescriptor(_))));
        assert!(matches!(Ring::parse("gf:4"), Err(Error::InvalidDescriptor(_))));
        assert!(matches!(Ring::parse("polyq:2:1,0,2"), Err(Error::InvalidDescriptor(_))));
        assert!(matches!(Ring::parse("polyq:3:1,2"), Err(Error::InvalidDescriptor(_))));
        assert!(matches!(Ring::parse("zmod"), Err(Error::Parse(_))));
        assert!(matches!(Ring::parse("q"), Err(Error::Parse(_))));
        for s in ["z", "zmod:4", "gf:5", "polyq:2:0,0,1", "zloc:6", "laurent:2"] {
            assert_eq!(Ring::parse(s).unwrap().descriptor().to_string(), s);
        }
    }

    #[test]
    fn descriptors_compare_structurally() {
        assert_ne!(Ring::parse("gf:5").unwrap(), Ring::parse("zmod:5").unwrap());
        assert_eq!(Ring::parse("zmod:5").unwrap(), Ring::zmod(5).unwrap());
    }

    #[test]
    fn enumeration() {
        assert_eq!(Ring::zmod(3).unwrap().elements().unwrap(), vec![el(0), el(1), el(2)]);
        assert_eq!(Ring::parse("polyq:2:0,0,1").unwrap().elements().unwrap().len(), 4);
    }

    #[test]
    fn units_by_exhaustive_search() {
        // Oracle: x is a unit iff some y has x*y = 1 (mod m).
        for m in 2..=12u32 {
            let r = Ring::zmod(m).unwrap();
            let expected: Vec<RingElement> =
                (0..m).filter(|&x| (0..m).any(|y| (x * y) % m == 1 % m)).map(el).collect();
            assert_eq!(r.units().unwrap(), expected, "m = {m}");
        }
        assert_eq!(Ring::zmod(4).unwrap().units().unwrap(), vec![el(1), el(3)]);
        assert_eq!(Ring::zmod(5).unwrap().units().unwrap(), vec![el(1), el(2), el(3), el(4)]);
        assert_eq!(Ring::zmod(2).unwrap().units().unwrap(), vec![el(1)]);
    }

    #[test]
    fn dual_numbers_over_f2() {
        let r = Ring::parse("polyq:2:0,0,1").unwrap();
        let x = r.variable(0).unwrap();
        assert!(r.is_zero(&r.mul(&x, &x)));
        let one_plus_x = r.add(&r.one(), &x);
        assert_eq!(r.units().unwrap(), vec![r.one(), one_plus_x.clone()]);
        assert_eq!(r.format(&one_plus_x), "1+x");
    }

    #[test]
    fn additive_presentations() {
        let r = Ring::zmod(4).unwrap();
        let p = r.additive_presentation().unwrap();
        assert_eq!(p.generators, vec![el(1)]);
        assert_eq!(p.relators, vec![vec![4]]);
        assert_eq!(p.product(0, 0), &vec![1]);
        assert!(p.check(&r));

        let d = Ring::parse("polyq:2:0,0,1").unwrap();
        let p = d.additive_presentation().unwrap();
        assert_eq!(p.generators, vec![d.one(), d.variable(0).unwrap()]);
        assert_eq!(p.relators, vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(p.product(1, 1), &vec![0, 0]);
        assert!(p.check(&d));

        let f = Ring::parse("polyq:3:1,0,1").unwrap();
        let p = f.additive_presentation().unwrap();
        // x^2 = -1 = 2 in F_3[x]/(x^2+1)
        assert_eq!(p.product(1, 1), &vec![2, 0]);
        assert!(p.check(&f));

        let z = Ring::integers();
        let p = z.additive_presentation().unwrap();
        assert!(p.relators.is_empty());
        assert!(matches!(Ring::parse("zloc:2").unwrap().additive_presentation(), Err(Error::UnsupportedKind(_))));
    }

    #[test]
    fn localized_integers() {
        let r = Ring::parse("zloc:6").unwrap();
        let half = r.from_rational(&BigRational::new(1.into(), 2.into())).unwrap();
        assert!(r.is_unit(&half));
        assert!(r.is_unit(&r.from_int(12)));
        assert!(!r.is_unit(&r.from_int(5)));
        assert!(r.from_rational(&BigRational::new(1.into(), 5.into())).is_err());
        assert_eq!(r.mul(&half, &r.from_int(2)), r.one());
    }

    #[test]
    fn unit_generators_generate() {
        let r = Ring::zmod(8).unwrap();
        let gens = r.unit_generators().unwrap();
        assert_eq!(gens, vec![el(3), el(5)]);
        let r = Ring::zmod(7).unwrap();
        assert_eq!(r.unit_generators().unwrap().len(), 1);
    }

    #[test]
    fn exhaustive_ring_axioms_small_rings() {
        for d in ["zmod:2", "zmod:3", "zmod:4", "zmod:6", "gf:7", "polyq:2:0,0,1", "polyq:2:1,1,1", "polyq:3:0,0,1"] {
            let r = Ring::parse(d).unwrap();
            let els = r.elements().unwrap();
            assert!(els.len() <= 16);
            for a in &els {
                assert_eq!(r.add(a, &r.zero()), *a);
                assert_eq!(r.mul(a, &r.one()), *a);
                assert!(r.is_zero(&r.add(a, &r.neg(a))));
                if let Some(inv) = r.try_inverse(a) {
                    assert_eq!(r.mul(a, &inv), r.one());
                }
                for b in &els {
                    assert_eq!(r.add(a, b), r.add(b, a));
                    assert_eq!(r.mul(a, b), r.mul(b, a));
                    for c in &els {
                        assert_eq!(r.mul(&r.mul(a, b), c), r.mul(a, &r.mul(b, c)), "{d}");
                        assert_eq!(r.add(&r.add(a, b), c), r.add(a, &r.add(b, c)));
                        assert_eq!(r.mul(a, &r.add(b, c)), r.add(&r.mul(a, b), &r.mul(a, c)), "{d}");
                    }
                }
            }
            let units = r.units().unwrap();
            for u in &units {
                for v in &units {
                    assert!(r.is_unit(&r.mul(u, v)));
                }
            }
        }
    }
}
