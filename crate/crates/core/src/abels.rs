//! Abels groups `A_n(R)` and their entry-pattern subgroups.
//!
//! A [`SubgroupSpec`] fixes every matrix position to one of four cell kinds
//! (zero, one, free, unit). All the subgroups used here (the Abels group, its
//! unipotent part and torus, horospherical and contracting subgroups,
//! intersections of these) are of this shape, so membership is a pattern
//! match and orders are products of cell counts.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::group::{code_matrix, matrix_code, Code, FastRing, FiniteGroup, Subgroup};
use crate::matrix::Matrix;
use crate::report::{anchors, Check, CheckRecord, Status};
use crate::ring::Ring;

/// Default cap on the number of elements any exhaustive scan may touch.
pub const DEFAULT_ORDER_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    Zero,
    One,
    Free,
    Unit,
}

impl Cell {
    fn meet(self, other: Cell) -> Result<Cell> {
        use Cell::*;
        Ok(match (self, other) {
            (a, b) if a == b => a,
            (Free, x) | (x, Free) => x,
            (Unit, One) | (One, Unit) => One,
            (a, b) => return Err(Error::InvalidSize(format!("cells {a:?} and {b:?} have no common value"))),
        })
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupSpec {
    pub name: String,
    pub n: usize,
    ring: Ring,
    cells: Vec<Cell>,
}

impl PartialEq for SubgroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.cells == other.cells && self.ring == other.ring
    }
}

impl SubgroupSpec {
    /// Pattern from a function of 1-based positions.
    pub fn from_fn(name: &str, ring: &Ring, n: usize, f: impl Fn(usize, usize) -> Cell) -> SubgroupSpec {
        let mut cells = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                cells.push(f(i, j));
            }
        }
        SubgroupSpec { name: name.to_string(), n, ring: ring.clone(), cells }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Cell at a 1-based position.
    pub fn cell(&self, i: usize, j: usize) -> Cell {
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Free positions, 1-based, row-major.
    pub fn free_positions(&self) -> Vec<(usize, usize)> {
        self.positions(Cell::Free)
    }

    /// Diagonal positions holding units.
    pub fn unit_positions(&self) -> Vec<usize> {
        self.positions(Cell::Unit).into_iter().map(|(i, _)| i).collect()
    }

    fn positions(&self, kind: Cell) -> Vec<(usize, usize)> {
        let n = self.n;
        (0..n * n).filter(|&k| self.cells[k] == kind).map(|k| (k / n + 1, k % n + 1)).collect()
    }

    pub fn rename(mut self, name: &str) -> SubgroupSpec {
        self.name = name.to_string();
        self
    }

    /// Cell-wise intersection of two patterns.
    pub fn intersect(&self, other: &SubgroupSpec, name: &str) -> Result<SubgroupSpec> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let cells = self.cells.iter().zip(&other.cells).map(|(a, b)| a.meet(*b)).collect::<Result<_>>()?;
        Ok(SubgroupSpec { name: name.to_string(), n: self.n, ring: self.ring.clone(), cells })
    }

    /// `|R|^#free * |R^x|^#unit`.
    pub fn order(&self) -> Result<u128> {
        let size = self.ring.cardinality().ok_or(Error::InfiniteRing)? as u128;
        let units = self.ring.units()?.len() as u128;
        Ok(size.pow(self.free_positions().len() as u32) * units.pow(self.unit_positions().len() as u32))
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        if m.size() != self.n || m.ring() != &self.ring {
            return false;
        }
        let r = &self.ring;
        m.entries().iter().zip(&self.cells).all(|(e, c)| match c {
            Cell::Zero => r.is_zero(e),
            Cell::One => r.is_one(e),
            Cell::Free => true,
            Cell::Unit => r.is_unit(e),
        })
    }

    /// Membership on byte codes, given a unit table indexed by code.
    pub fn contains_code(&self, code: &[u8], unit: &[bool]) -> bool {
        code.iter().zip(&self.cells).all(|(&e, c)| match c {
            Cell::Zero => e == 0,
            Cell::One => e == 1,
            Cell::Free => true,
            Cell::Unit => unit[e as usize],
        })
    }

    /// `e_ij(t)` for free cells and additive generators `t`, and
    /// `D_i(u)` for unit cells and unit-group generators `u`.
    pub fn generators(&self) -> Result<Vec<Matrix>> {
        let r = &self.ring;
        let pres = r.additive_presentation()?;
        let unit_gens = if r.is_finite() { r.unit_generators()? } else { vec![r.from_int(-1)] };
        let mut out = Vec::new();
        for (i, j) in self.free_positions() {
            for t in &pres.generators {
                out.push(Matrix::elementary(r, self.n, i, j, t)?);
            }
        }
        for i in self.unit_positions() {
            for u in &unit_gens {
                let mut m = Matrix::identity(r, self.n);
                m.set(i, i, u.clone());
                out.push(m);
            }
        }
        Ok(out)
    }

    /// Streams every member's code in lexicographic order.
    pub fn for_each_code(&self, mut f: impl FnMut(&[u8])) -> Result<()> {
        let size = self.ring.cardinality().ok_or(Error::InfiniteRing)? as usize;
        if size > 256 {
            return Err(Error::UnsupportedKind("ring too large for byte codes".into()));
        }
        let units: Vec<u8> = self.ring.units()?.iter().map(|u| u.code().unwrap() as u8).collect();
        let all: Vec<u8> = (0..size).map(|c| c as u8).collect();
        let choices: Vec<&[u8]> = self
            .cells
            .iter()
            .map(|c| match c {
                Cell::Zero => &[0u8][..],
                Cell::One => &[1u8][..],
                Cell::Free => &all[..],
                Cell::Unit => &units[..],
            })
            .collect();
        if choices.iter().any(|c| c.is_empty()) {
            return Ok(());
        }
        let mut idx = vec![0usize; choices.len()];
        let mut code: Vec<u8> = choices.iter().map(|c| c[0]).collect();
        loop {
            f(&code);
            let mut k = choices.len();
            loop {
                if k == 0 {
                    return Ok(());
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    code[k] = choices[k][idx[k]];
                    break;
                }
                idx[k] = 0;
                code[k] = choices[k][0];
            }
        }
    }

    /// All member codes, sorted; fails beyond `budget`.
    pub fn enumerate(&self, budget: u64) -> Result<Vec<Code>> {
        let order = self.order()?;
        if order > budget as u128 {
            return Err(Error::BudgetExceeded(format!("|{}| = {order} > {budget}", self.name)));
        }
        let mut out = Vec::with_capacity(order as usize);
        self.for_each_code(|c| out.push(c.into()))?;
        Ok(out)
    }

    /// The subgroup as a standalone indexed group.
    pub fn to_group(&self, budget: u64) -> Result<FiniteGroup> {
        FiniteGroup::from_elements(&self.name, &self.ring, self.n, self.enumerate(budget)?, &self.generators()?)
    }

    /// The subgroup inside an ambient indexed group.
    pub fn subgroup_of(&self, group: &FiniteGroup) -> Result<Subgroup> {
        let mut members = Vec::new();
        let mut missing = false;
        self.for_each_code(|c| match group.index_of(c) {
            Some(i) => members.push(i),
            None => missing = true,
        })?;
        if missing {
            return Err(Error::InvalidSize(format!("{} is not contained in {}", self.name, group.name())));
        }
        let generators = self
            .generators()?
            .iter()
            .map(|g| group.index_of_matrix(g).expect("generators are members"))
            .collect();
        Ok(Subgroup::new(&self.name, members, generators))
    }
}

fn upper(i: usize, j: usize, diag: impl Fn(usize) -> Cell, free: impl Fn(usize, usize) -> bool) -> Cell {
    if i == j {
        diag(i)
    } else if i < j && free(i, j) {
        Cell::Free
    } else {
        Cell::Zero
    }
}

fn abels_diag(n: usize) -> impl Fn(usize) -> Cell {
    move |i| if i == 1 || i == n { Cell::One } else { Cell::Unit }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::InvalidSize(format!("n = {n} < {min}")));
    }
    Ok(())
}

/// `A_n(R)`: upper triangular, corner diagonal entries 1, inner diagonal units.
pub fn abels_group(n: usize, ring: &Ring) -> Result<SubgroupSpec> {
    check_n(n, 2)?;
    Ok(SubgroupSpec::from_fn("A", ring, n, |i, j| upper(i, j, abels_diag(n), |_, _| true)))
}

/// `U_n(R)`: upper unitriangular.
pub fn unipotent(n: usize, ring: &Ring) -> Result<SubgroupSpec> {
    check_n(n, 2)?;
    Ok(SubgroupSpec::from_fn("U", ring, n, |i, j| upper(i, j, |_| Cell::One, |_, _| true)))
}

/// `T_n(R) = A_n(R) ∩ D_n(R)`.
pub fn torus(n: usize, ring: &Ring) -> Result<SubgroupSpec> {
    check_n(n, 2)?;
    Ok(SubgroupSpec::from_fn("T", ring, n, |i, j| upper(i, j, abels_diag(n), |_, _| false)))
}

/// `E_1n(R)`, the expected center.
pub fn center(n: usize, ring: &Ring) -> Result<SubgroupSpec> {
    check_n(n, 2)?;
    Ok(SubgroupSpec::from_fn("Z", ring, n, |i, j| upper(i, j, |_| Cell::One, |a, b| a == 1 && b == n)))
}

/// Upper triangular invertible matrices `B_n(R)`.
pub fn borel(n: usize, ring: &Ring) -> Result<SubgroupSpec> {
    check_n(n, 1)?;
    Ok(SubgroupSpec::from_fn("B", ring, n, |i, j| upper(i, j, |_| Cell::Unit, |_, _| true)))
}

/// Free positions of the horospherical subgroup `H_k`.
fn horospherical_free(n: usize, k: usize) -> impl Fn(usize, usize) -> bool {
    move |i, j| match k {
        1 => j < n,
        2 => i >= 2,
        3 => (i, j) == (1, 2) || (i, j) == (n - 1, n),
        _ => matches!((i, j), (1, 3) | (2, 3) | (2, 4)),
    }
}

fn check_family_index(n: usize, k: usize) -> Result<()> {
    check_n(n, 4)?;
    match k {
        1..=3 => Ok(()),
        4 if n == 4 => Ok(()),
        4 => Err(Error::InvalidSize(format!("H4 exists only for n = 4, got n = {n}"))),
        _ => Err(Error::InvalidSize(format!("no horospherical subgroup H{k}"))),
    }
}

/// Horospherical subgroup `H_k` of `A_n(R)`, `k` in 1..=3 (and 4 when `n = 4`).
pub fn horospherical(n: usize, ring: &Ring, k: usize) -> Result<SubgroupSpec> {
    check_family_index(n, k)?;
    let free = horospherical_free(n, k);
    Ok(SubgroupSpec::from_fn(&format!("H{k}"), ring, n, |i, j| upper(i, j, abels_diag(n), &free)))
}

/// Contracting subgroup `U_k = H_k ∩ U_n`.
pub fn contracting(n: usize, ring: &Ring, k: usize) -> Result<SubgroupSpec> {
    horospherical(n, ring, k)?.intersect(&unipotent(n, ring)?, &format!("U{k}"))
}

/// Number of members of the horospherical family for a given `n`.
pub fn family_size(n: usize) -> usize {
    if n == 4 {
        4
    } else {
        3
    }
}

/// The family `{H_1, ..., H_k}`.
pub fn horospherical_family(n: usize, ring: &Ring) -> Result<Vec<SubgroupSpec>> {
    (1..=family_size(n)).map(|k| horospherical(n, ring, k)).collect()
}

/// The family `{U_1, ..., U_k}`.
pub fn contracting_family(n: usize, ring: &Ring) -> Result<Vec<SubgroupSpec>> {
    (1..=family_size(n)).map(|k| contracting(n, ring, k)).collect()
}

/// Subgroup by CLI name: `A`, `U`, `T`, `Z`, `H1..H4`, `U1..U4`.
pub fn by_name(name: &str, n: usize, ring: &Ring) -> Result<SubgroupSpec> {
    match name {
        "A" => abels_group(n, ring),
        "U" => unipotent(n, ring),
        "T" => torus(n, ring),
        "Z" => center(n, ring),
        _ => {
            let (kind, idx) = name.split_at(1);
            let k: usize = idx.parse().map_err(|_| Error::Parse(format!("unknown subgroup '{name}'")))?;
            match kind {
                "H" => horospherical(n, ring, k),
                "U" => contracting(n, ring, k),
                _ => Err(Error::Parse(format!("unknown subgroup '{name}'"))),
            }
        }
    }
}

fn unit_table(ring: &Ring) -> Result<Vec<bool>> {
    Ok(ring.elements()?.iter().map(|e| ring.is_unit(e)).collect())
}

fn prefix(n: usize, ring: &Ring) -> String {
    format!("n{n}/{}", ring.descriptor())
}

/// The closure of the generators equals the pattern set, whose size is the
/// pattern count.
pub fn check_pattern_closure(spec: &SubgroupSpec, budget: u64) -> Result<CheckRecord> {
    let mut check =
        Check::new(format!("closure/{}/{}", prefix(spec.n, spec.ring()), spec.name), anchors::ABELS_ORDER);
    let expected = spec.order()?;
    check.set_count("pattern_order", expected as u64);
    if expected > budget as u128 {
        check.inconclusive(format!("order {expected} exceeds budget {budget}"));
        return Ok(check.finish());
    }
    let generated = FiniteGroup::generate(&spec.name, spec.ring(), spec.n, &spec.generators()?, budget as usize)?;
    check.set_count("generated_order", generated.order() as u64);
    let units = unit_table(spec.ring())?;
    let all_match = (0..generated.order() as u32).all(|i| spec.contains_code(generated.code(i), &units));
    check.expect(all_match && generated.order() as u128 == expected, || {
        format!("closure has {} elements, pattern {expected}", generated.order())
    });
    Ok(check.finish())
}

/// `U_n` is normal in `A_n`, `U_n ∩ T_n = 1`, and every element factors
/// uniquely as `u t`.
pub fn check_semidirect(n: usize, ring: &Ring, budget: u64) -> Result<CheckRecord> {
    let mut check = Check::new(format!("semidirect/{}", prefix(n, ring)), anchors::SEMIDIRECT);
    let a = abels_group(n, ring)?;
    let u = unipotent(n, ring)?;
    let t = torus(n, ring)?;
    let inter = u.intersect(&t, "U∩T")?;
    check.expect(inter.order()? == 1, || "U ∩ T is not trivial".into());
    for g in a.generators()? {
        for x in u.generators()? {
            check.expect(u.contains(&g.conjugate(&x)?), || format!("{g} does not normalise U at {x}"));
        }
    }
    let order = a.order()?;
    if order > budget as u128 {
        check.inconclusive(format!("|A| = {order} exceeds budget"));
        return Ok(check.finish());
    }
    let fast = FastRing::new(ring)?;
    let units = unit_table(ring)?;
    let inverse: Vec<u8> = ring
        .elements()?
        .iter()
        .map(|e| ring.try_inverse(e).and_then(|v| v.code()).unwrap_or(0) as u8)
        .collect();
    let mut seen: HashSet<(Code, Code)> = HashSet::new();
    let mut count = 0u64;
    let mut ok = true;
    a.for_each_code(|g| {
        count += 1;
        // t = diagonal part of g, u = g t^-1
        let mut tc = vec![0u8; n * n];
        let mut tinv = vec![0u8; n * n];
        for i in 0..n {
            tc[i * n + i] = g[i * n + i];
            tinv[i * n + i] = inverse[g[i * n + i] as usize];
        }
        let uc = fast.matmul(n, g, &tinv);
        let back = fast.matmul(n, &uc, &tc);
        ok &= u.contains_code(&uc, &units) && t.contains_code(&tc, &units) && &back[..] == g;
        seen.insert((uc, tc.into()));
    })?;
    check.expect(ok, || "some element does not factor as u t".into());
    check.set_count("order", count);
    let product = u.order()? * t.order()?;
    check.expect(seen.len() as u64 == count && count as u128 == product, || {
        format!("{} distinct factorizations for {count} elements, |U||T| = {product}", seen.len())
    });
    Ok(check.finish())
}

/// Brute-force center of `A_n(R)` against `E_1n(R)` (the whole group when `n = 2`).
pub fn center_check(n: usize, ring: &Ring, budget: u64) -> Result<CheckRecord> {
    let mut check = Check::new(format!("center/{}", prefix(n, ring)), anchors::CENTER);
    let a = abels_group(n, ring)?;
    let order = a.order()?;
    if order > budget as u128 {
        check.inconclusive(format!("|A| = {order} exceeds budget {budget}"));
        return Ok(check.finish());
    }
    let fast = FastRing::new(ring)?;
    let gens: Vec<Code> = a.generators()?.iter().map(matrix_code).collect::<Result<_>>()?;
    let expected = if n == 2 { a.clone() } else { center(n, ring)? };
    let units = unit_table(ring)?;
    let mut central = 0u64;
    let mut mismatch: Option<Code> = None;
    a.for_each_code(|g| {
        let is_central = gens.iter().all(|x| fast.matmul(n, g, x) == fast.matmul(n, x, g));
        if is_central {
            central += 1;
        }
        if is_central != expected.contains_code(g, &units) && mismatch.is_none() {
            mismatch = Some(g.into());
        }
    })?;
    check.set_count("center_order", central);
    check.set_count("group_order", order as u64);
    check.expect(mismatch.is_none() && central as u128 == expected.order()?, || {
        format!("center differs at {}", code_matrix(ring, n, mismatch.as_deref().unwrap_or(&[])))
    });
    Ok(check.finish())
}

/// Every torus element conjugates every generator of every contracting
/// subgroup back into that subgroup.
pub fn check_torus_invariance(n: usize, ring: &Ring, budget: u64) -> Result<CheckRecord> {
    let mut check = Check::new(format!("torus-invariance/{}", prefix(n, ring)), anchors::TORUS_INVARIANCE);
    let t = torus(n, ring)?;
    let family = contracting_family(n, ring)?;
    let fast = FastRing::new(ring)?;
    let units = unit_table(ring)?;
    let tori = t.enumerate(budget)?;
    let inverse: Vec<u8> = ring
        .elements()?
        .iter()
        .map(|e| ring.try_inverse(e).and_then(|v| v.code()).unwrap_or(0) as u8)
        .collect();
    for spec in &family {
        let gens: Vec<Code> = spec.generators()?.iter().map(matrix_code).collect::<Result<_>>()?;
        for d in &tori {
            let d_inv: Code = d.iter().map(|&x| inverse[x as usize]).enumerate().map(|(k, x)| if k % (n + 1) == 0 { x } else { 0 }).collect();
            for x in &gens {
                let c = fast.matmul(n, &fast.matmul(n, d, x), &d_inv);
                check.expect(spec.contains_code(&c, &units), || {
                    format!("{} leaves {} at {}", code_matrix(ring, n, d), spec.name, code_matrix(ring, n, x))
                });
            }
        }
    }
    check.set_count("torus_order", tori.len() as u64);
    Ok(check.finish())
}

/// The retraction onto the `(2,2),(2,3),(3,3)` block is a homomorphism on
/// (every element) x (every generator), fixes the embedded `B_2`, and kills `E_1n`.
pub fn check_abels_retraction(n: usize, ring: &Ring, budget: u64) -> Result<CheckRecord> {
    check_n(n, 4)?;
    let mut check = Check::new(format!("abels-retraction/{}", prefix(n, ring)), anchors::ABELS_RETRACTION);
    let a = abels_group(n, ring)?;
    let order = a.order()?;
    if order > budget as u128 {
        check.inconclusive(format!("|A| = {order} exceeds budget {budget}"));
        return Ok(check.finish());
    }
    let fast = FastRing::new(ring)?;
    let gens: Vec<Code> = a.generators()?.iter().map(matrix_code).collect::<Result<_>>()?;
    // block (x22, x23, x33) of a product, reading only the needed entries
    let at = |m: &[u8], i: usize, j: usize| m[(i - 1) * n + (j - 1)];
    let block = |m: &[u8]| (at(m, 2, 2), at(m, 2, 3), at(m, 3, 3));
    let product_block = |x: &[u8], y: &[u8]| {
        let entry = |i: usize, j: usize| (1..=n).fold(0u8, |acc, k| fast.add(acc, fast.mul(at(x, i, k), at(y, k, j))));
        (entry(2, 2), entry(2, 3), entry(3, 3))
    };
    let compose = |p: (u8, u8, u8), q: (u8, u8, u8)| {
        (fast.mul(p.0, q.0), fast.add(fast.mul(p.0, q.1), fast.mul(p.1, q.2)), fast.mul(p.2, q.2))
    };
    let mut failures = 0u64;
    let mut cases = 0u64;
    a.for_each_code(|x| {
        for g in &gens {
            cases += 1;
            if product_block(x, g) != compose(block(x), block(g)) {
                failures += 1;
            }
        }
    })?;
    check.count("cases", cases);
    if failures > 0 {
        check.count("failures", failures);
        check.fail(format!("{failures} element-generator pairs break multiplicativity"));
    }
    // identity on the embedded copy, trivial on the corner root group
    let embedded = SubgroupSpec::from_fn("B2", ring, n, |i, j| match (i, j) {
        (2, 2) | (3, 3) => Cell::Unit,
        (2, 3) => Cell::Free,
        _ if i == j => Cell::One,
        _ => Cell::Zero,
    });
    let retract = |m: &Matrix| -> Matrix {
        let mut out = Matrix::identity(ring, n);
        for (i, j) in [(2, 2), (2, 3), (3, 3)] {
            out.set(i, j, m.get(i, j).clone());
        }
        out
    };
    embedded.for_each_code(|c| {
        let m = code_matrix(ring, n, c);
        check.expect(retract(&m) == m, || format!("retraction moves {m}"));
    })?;
    for r in ring.elements()? {
        let e = Matrix::elementary(ring, n, 1, n, &r)?;
        check.expect(retract(&e).is_identity(), || format!("e_1n({}) survives", ring.format(&r)));
    }
    Ok(check.finish())
}

/// `H_4` against the fiber product of `Gamma_1` and `Gamma_2` over `Q`.
pub fn check_h4_fiber_product(ring: &Ring, budget: u64) -> Result<CheckRecord> {
    let n = 4;
    let mut check = Check::new(format!("fiber-product/{}", ring.descriptor()), anchors::FIBER_PRODUCT);
    let diag = |i: usize| if i == 1 || i == 4 { Cell::One } else { Cell::Unit };
    let gamma1 = SubgroupSpec::from_fn("Gamma1", ring, n, |i, j| {
        upper(i, j, |k| if k == 2 || k == 3 { Cell::Unit } else { Cell::One }, |a, b| matches!((a, b), (1, 3) | (2, 3)))
    });
    let gamma2 = SubgroupSpec::from_fn("Gamma2", ring, n, |i, j| {
        upper(i, j, |k| if k == 2 { Cell::Unit } else { Cell::One }, |a, b| (a, b) == (2, 4))
    });
    let q = SubgroupSpec::from_fn("Q", ring, n, |i, j| upper(i, j, |k| if k == 2 { Cell::Unit } else { Cell::One }, |_, _| false));
    let h4 = horospherical(n, ring, 4)?;
    debug_assert!((1..=4).all(|i| h4.cell(i, i) == diag(i)));
    let g1 = gamma1.enumerate(budget)?;
    let g2 = gamma2.enumerate(budget)?;
    let h = h4.to_group(budget)?;
    // p1(g) = p2(h) iff the (2,2) entries agree
    let p = |c: &[u8]| c[n + 1];
    let mut pairs: Vec<(Code, Code)> = Vec::new();
    for a in &g1 {
        for b in &g2 {
            if p(a) == p(b) {
                pairs.push((a.clone(), b.clone()));
            }
        }
    }
    check.set_count("fiber_product_order", pairs.len() as u64);
    check.set_count("h4_order", h.order() as u64);
    check.set_count("q_order", q.order()? as u64);
    check.expect(pairs.len() as u128 * q.order()? == g1.len() as u128 * g2.len() as u128, || {
        "|P| |Q| != |Gamma1| |Gamma2|".into()
    });
    check.expect(pairs.len() == h.order(), || format!("|P| = {} but |H4| = {}", pairs.len(), h.order()));
    let fast = h.fast();
    let pos24 = n + 3;
    let psi = |x: &[u8]| -> (Code, Code) {
        let mut g: Code = x.into();
        g[pos24] = 0;
        let mut k = vec![0u8; n * n];
        for i in 0..n {
            k[i * n + i] = 1;
        }
        k[n + 1] = x[n + 1];
        k[pos24] = x[pos24];
        (g, k.into())
    };
    let units = unit_table(ring)?;
    let mut images = HashSet::new();
    for x in 0..h.order() as u32 {
        let (g, k) = psi(h.code(x));
        check.expect(gamma1.contains_code(&g, &units) && gamma2.contains_code(&k, &units) && p(&g) == p(&k), || {
            format!("image of {} leaves P", h.matrix(x))
        });
        // inverse correspondence (g, k) -> g + k24 E24
        let mut back = g.clone();
        back[pos24] = k[pos24];
        check.expect(&back[..] == h.code(x), || format!("inverse fails at {}", h.matrix(x)));
        images.insert((g, k));
    }
    check.expect(images.len() == h.order(), || "correspondence is not injective".into());
    for x in 0..h.order() as u32 {
        for &y in h.generators() {
            let xy = h.mul(x, y);
            let (a, b) = psi(h.code(x));
            let (c, d) = psi(h.code(y));
            let lhs = psi(h.code(xy));
            let rhs = (fast.matmul(n, &a, &c), fast.matmul(n, &b, &d));
            check.expect(lhs == rhs, || format!("not multiplicative at {} * {}", h.matrix(x), h.matrix(y)));
        }
    }
    Ok(check.finish())
}

/// `U_1 ∩ U_2` is the `U_{n-2}` pattern on indices `2..n-1`, and `U_3`
/// (and `U_4` when `n = 4`) is abelian.
pub fn check_contracting_structure(n: usize, ring: &Ring, budget: u64) -> Result<CheckRecord> {
    let mut check = Check::new(format!("contracting/{}", prefix(n, ring)), anchors::CONTRACTING);
    let u1 = contracting(n, ring, 1)?;
    let u2 = contracting(n, ring, 2)?;
    let inter = u1.intersect(&u2, "U1∩U2")?;
    let expected: Vec<(usize, usize)> =
        (2..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    check.expect(inter.free_positions() == expected, || format!("U1 ∩ U2 has free cells {:?}", inter.free_positions()));
    let abelian: Vec<usize> = if n == 4 { vec![3, 4] } else { vec![3] };
    for k in abelian {
        let spec = contracting(n, ring, k)?;
        let g = spec.to_group(budget)?;
        for x in 0..g.order() as u32 {
            for y in 0..g.order() as u32 {
                check.expect(g.mul(x, y) == g.mul(y, x), || format!("U{k} is not abelian"));
            }
        }
    }
    Ok(check.finish())
}

/// Runs every structural Abels check for one `(n, R)`.
pub fn abels_suite(n: usize, ring: &Ring, budget: u64) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let mut specs = vec![abels_group(n, ring)?, unipotent(n, ring)?, torus(n, ring)?];
    if n >= 4 {
        specs.extend(horospherical_family(n, ring)?);
        specs.extend(contracting_family(n, ring)?);
    }
    for s in &specs {
        out.push(check_pattern_closure(s, budget)?);
    }
    out.push(check_semidirect(n, ring, budget)?);
    out.push(center_check(n, ring, budget)?);
    if n >= 4 {
        out.push(check_torus_invariance(n, ring, budget)?);
        out.push(check_abels_retraction(n, ring, budget)?);
        out.push(check_contracting_structure(n, ring, budget)?);
    }
    if n == 4 {
        out.push(check_h4_fiber_product(ring, budget)?);
    }
    Ok(out)
}

/// True when no record failed.
pub fn all_pass(records: &[CheckRecord]) -> bool {
    records.iter().all(|r| r.status != Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zm(m: u32) -> Ring {
        Ring::zmod(m).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(abels_group(4, &zm(2)).unwrap().order().unwrap(), 64);
        assert_eq!(abels_group(4, &zm(3)).unwrap().order().unwrap(), 2916);
        assert_eq!(abels_group(2, &zm(5)).unwrap().order().unwrap(), 5);
        assert_eq!(torus(4, &zm(5)).unwrap().order().unwrap(), 16);
        assert_eq!(horospherical(4, &zm(2), 1).unwrap().order().unwrap(), 8);
        assert_eq!(contracting(4, &zm(2), 1).unwrap().order().unwrap(), 8);
        // three free cells and two unit cells
        assert_eq!(horospherical(4, &zm(3), 4).unwrap().order().unwrap(), 108);
    }

    #[test]
    fn h3_pattern() {
        let h3 = horospherical(4, &zm(3), 3).unwrap();
        assert_eq!(h3.free_positions(), vec![(1, 2), (3, 4)]);
        assert_eq!(h3.unit_positions(), vec![2, 3]);
    }

    #[test]
    fn family_errors() {
        assert!(horospherical(5, &zm(2), 4).is_err());
        assert!(horospherical(3, &zm(2), 1).is_err());
        assert!(abels_group(1, &zm(2)).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_complete() {
        let spec = abels_group(3, &zm(3)).unwrap();
        let codes = spec.enumerate(1000).unwrap();
        assert_eq!(codes.len(), 27 * 2);
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn small_centers() {
        assert_eq!(center_check(4, &zm(2), 1000).unwrap().counts["center_order"], 2);
        assert_eq!(center_check(3, &zm(3), 1000).unwrap().counts["center_order"], 3);
        let r = center_check(2, &zm(3), 1000).unwrap();
        assert_eq!(r.counts["center_order"], 3);
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn suite_n4_z3() {
        let recs = abels_suite(4, &zm(3), DEFAULT_ORDER_BUDGET).unwrap();
        assert!(recs.iter().all(|r| r.status == Status::Pass), "{recs:#?}");
    }
}
