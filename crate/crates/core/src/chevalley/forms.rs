//! Invariant bilinear forms of the matrix models over prime fields.
//!
//! The condition `g^T F g = F` is imposed symbolically in the generator
//! parameter: writing `x(r) = sum r^k M_k`, every coefficient of
//! `sum_{a+b=k} M_a^T F M_b` for `k >= 1` must vanish, and the torus forces
//! `F_ij = 0` unless the weights of `i` and `j` cancel. The solution space
//! is computed over `F_p`; a nondegenerate solution is then checked against
//! every generator value exhaustively.

use crate::chevalley::models::MatrixModel;
use crate::chevalley::roots::CartanType;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{anchors, Check, CheckRecord};
use crate::ring::{Ring, RingDescriptor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    Alternating,
    Symmetric,
}

impl FormKind {
    pub fn for_type(label: CartanType) -> Option<FormKind> {
        match label {
            CartanType::C2 | CartanType::C3 => Some(FormKind::Alternating),
            CartanType::B3 | CartanType::D4 | CartanType::G2 => Some(FormKind::Symmetric),
            _ => None,
        }
    }
}

/// Reduced row echelon form over `F_p`; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<usize> {
    let inv = |a: u64| -> u64 { pow_mod(a, p - 2, p) };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pr);
        let f = inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = *x * f % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + p * p - f * rows[r][j]) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

/// Basis of the nullspace of `rows` over `F_p`.
pub fn nullspace(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let pivots = rref(&mut rows, ncols, p);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0; ncols];
            v[f] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Rank over `F_p`.
pub fn rank_mod_p(rows: &[Vec<u64>], ncols: usize, p: u64) -> usize {
    let mut rows = rows.to_vec();
    rref(&mut rows, ncols, p).len()
}

/// Outcome of the form search.
#[derive(Clone, Debug)]
pub struct FormSolution {
    pub kind: FormKind,
    /// Dimension of the space of invariant forms of this kind.
    pub dimension: usize,
    /// A chosen invariant form (row-major, entries in `[0, p)`).
    pub form: Vec<Vec<u64>>,
    pub rank: usize,
}

fn prime_of(ring: &Ring) -> Result<u64> {
    match ring.descriptor() {
        RingDescriptor::ZMod(p) | RingDescriptor::Gf(p) if is_prime(*p as u64) => Ok(*p as u64),
        other => Err(Error::UnsupportedKind(format!("form search needs a prime field, got {other}"))),
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Solves for invariant forms of the model's kind over `F_p`.
pub fn solve_invariant_forms(model: &MatrixModel, ring: &Ring) -> Result<FormSolution> {
    model.check_ring(ring)?;
    let p = prime_of(ring)?;
    let kind = FormKind::for_type(model.label())
        .ok_or_else(|| Error::UnsupportedKind(format!("no invariant form for type {}", model.label())))?;
    let n = model.n;
    let var = |k: usize, l: usize| k * n + l;
    let nv = n * n;
    let md = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut rows: Vec<Vec<u64>> = Vec::new();
    // parameter-coefficient matrices of every tabulated root element
    for root in model.tabulated_roots() {
        let terms = model.terms(root)?;
        let max_pow = terms.iter().map(|t| t.power).max().unwrap_or(0) as usize;
        let mut coeff = vec![vec![vec![0i64; n]; n]; max_pow + 1];
        for (i, row) in coeff[0].iter_mut().enumerate() {
            row[i] = 1;
        }
        for t in terms {
            coeff[t.power as usize][t.i - 1][t.j - 1] += t.coeff;
        }
        for k in 1..=2 * max_pow {
            for i in 0..n {
                for j in 0..n {
                    // entry (i, j) of sum_{a+b=k} M_a^T F M_b
                    let mut row = vec![0u64; nv];
                    for a in 0..=max_pow.min(k) {
                        let b = k - a;
                        if b > max_pow {
                            continue;
                        }
                        for x in 0..n {
                            let ma = coeff[a][x][i];
                            if ma == 0 {
                                continue;
                            }
                            for y in 0..n {
                                let mb = coeff[b][y][j];
                                if mb != 0 {
                                    let v = &mut row[var(x, y)];
                                    *v = (*v + md(ma * mb)) % p;
                                }
                            }
                        }
                    }
                    if row.iter().any(|&x| x != 0) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    for s in 0..model.datum.rank() {
        let e = model.torus_exponents(s);
        for i in 0..n {
            for j in 0..n {
                if e[i] + e[j] != 0 {
                    let mut row = vec![0u64; nv];
                    row[var(i, j)] = 1;
                    rows.push(row);
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut row = vec![0u64; nv];
            match kind {
                FormKind::Symmetric if i < j => {
                    row[var(i, j)] = 1;
                    row[var(j, i)] = p - 1;
                }
                FormKind::Alternating if i < j => {
                    row[var(i, j)] = 1;
                    row[var(j, i)] = 1;
                }
                FormKind::Alternating if i == j => row[var(i, i)] = 1,
                _ => continue,
            }
            rows.push(row);
        }
    }
    let basis = nullspace(rows, nv, p);
    let to_form = |v: &[u64]| -> Vec<Vec<u64>> { (0..n).map(|i| v[i * n..(i + 1) * n].to_vec()).collect() };
    // prefer a nondegenerate member: basis vectors, then their sum
    let mut candidates: Vec<Vec<u64>> = basis.clone();
    if basis.len() > 1 {
        candidates.push((0..nv).map(|k| basis.iter().map(|b| b[k]).sum::<u64>() % p).collect());
    }
    let best = candidates
        .iter()
        .map(|v| {
            let f = to_form(v);
            let r = rank_mod_p(&f, n, p);
            (r, f)
        })
        .max_by_key(|(r, _)| *r);
    let (rank, form) = best.unwrap_or((0, vec![vec![0; n]; n]));
    Ok(FormSolution { kind, dimension: basis.len(), form, rank })
}

/// Finds an invariant form and checks `g^T F g = F` for every generator value.
pub fn check_form_invariance(model: &MatrixModel, ring: &Ring) -> Result<CheckRecord> {
    let sol = solve_invariant_forms(model, ring)?;
    let mut check = Check::new(format!("forms/{}/{}", model.label(), ring.descriptor()), anchors::INVARIANT_FORM);
    check.set_count("solution_dimension", sol.dimension as u64);
    check.set_count("form_rank", sol.rank as u64);
    if sol.dimension == 0 {
        check.fail(format!("no invariant {:?} form", sol.kind));
        return Ok(check.finish());
    }
    let f = Matrix::from_rows(ring, sol.form.iter().map(|r| r.iter().map(|&x| ring.from_int(x as i64)).collect()).collect())?;
    let preserves = |g: &Matrix| -> Result<bool> { Ok(g.transpose().mul(&f)?.mul(g)? == f) };
    for root in model.tabulated_roots() {
        for r in ring.elements()? {
            let g = model.root_element(ring, root, &r)?;
            let ok = preserves(&g)?;
            check.expect(ok, || format!("x_{}({}) moves the form", model.datum.name(root), ring.format(&r)));
        }
    }
    for s in 0..model.datum.rank() {
        for u in ring.units()? {
            let g = model.semisimple_element(ring, s, &u)?;
            let ok = preserves(&g)?;
            check.expect(ok, || format!("h_{}({}) moves the form", s + 1, ring.format(&u)));
        }
    }
    let kind_ok = match sol.kind {
        FormKind::Symmetric => f == f.transpose(),
        FormKind::Alternating => f.transpose() == f.scale(&ring.from_int(-1)) && (1..=model.n).all(|i| ring.is_zero(f.get(i, i))),
    };
    check.expect(kind_ok, || format!("chosen form is not {:?}", sol.kind));
    check.expect(sol.rank == model.n, || format!("form has rank {} < {}", sol.rank, model.n));
    check.detail(format!("{:?} form {f}", sol.kind));
    Ok(check.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::matrix_model;

    #[test]
    fn nullspace_small() {
        // x + y = 0 over F_5
        let ns = nullspace(vec![vec![1, 1]], 2, 5);
        assert_eq!(ns, vec![vec![4, 1]]);
    }

    #[test]
    fn c2_form_has_full_rank() {
        let r = Ring::zmod(5).unwrap();
        let sol = solve_invariant_forms(&matrix_model(CartanType::C2), &r).unwrap();
        assert_eq!(sol.kind, FormKind::Alternating);
        assert_eq!(sol.rank, 4);
    }

    #[test]
    fn type_a_has_no_form_kind() {
        let r = Ring::zmod(5).unwrap();
        assert!(matches!(solve_invariant_forms(&matrix_model(CartanType::A2), &r), Err(Error::UnsupportedKind(_))));
    }
}
