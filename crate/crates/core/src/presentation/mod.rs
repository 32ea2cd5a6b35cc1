//! Finitely presented groups: words, presentations, coset enumeration,
//! Tietze simplification, and the presentations of unipotent groups and of
//! colimits of subgroup diagrams.

pub mod checks;
pub mod colimit;
pub mod tietze;
pub mod tits;
pub mod todd_coxeter;
pub mod unipotent;

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::snf::{cokernel, AbelianInvariants, SparseMatrix};

pub use todd_coxeter::{todd_coxeter, CosetTable, TcStatus};

/// A letter is `g + 1` for generator `g`, or `-(g + 1)` for its inverse.
pub type Letter = i32;
pub type Word = Vec<Letter>;

pub fn letter(generator: usize, inverse: bool) -> Letter {
    let l = generator as Letter + 1;
    if inverse {
        -l
    } else {
        l
    }
}

pub fn generator_of(l: Letter) -> usize {
    (l.unsigned_abs() - 1) as usize
}

/// Free reduction.
pub fn reduce(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free and cyclic reduction.
pub fn cyclic_reduce(word: &[Letter]) -> Word {
    let w = reduce(word);
    let mut a = 0;
    let mut b = w.len();
    while b > a + 1 && w[a] == -w[b - 1] {
        a += 1;
        b -= 1;
    }
    w[a..b].to_vec()
}

pub fn inverse(word: &[Letter]) -> Word {
    word.iter().rev().map(|l| -l).collect()
}

pub fn concat(words: &[&[Letter]]) -> Word {
    reduce(&words.concat())
}

/// `[a, b] = a b a^-1 b^-1`.
pub fn commutator(a: &[Letter], b: &[Letter]) -> Word {
    concat(&[a, b, &inverse(a), &inverse(b)])
}

/// `w^k` for any integer `k`.
pub fn power(word: &[Letter], k: i64) -> Word {
    let base = if k < 0 { inverse(word) } else { word.to_vec() };
    let mut out = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
    for _ in 0..k.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    reduce(&out)
}

/// Canonical representative of a relator up to cyclic permutation and
/// inversion, used to drop duplicates.
fn relator_key(word: &[Letter]) -> Word {
    let mut best: Option<Word> = None;
    for w in [word.to_vec(), inverse(word)] {
        for k in 0..w.len().max(1) {
            let rot: Word = w[k..].iter().chain(&w[..k]).copied().collect();
            if best.as_ref().is_none_or(|b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap_or_default()
}

/// A finite presentation `< generators | relators >`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
    seen: HashSet<Word>,
}

impl Presentation {
    pub fn new() -> Presentation {
        Presentation::default()
    }

    /// Presentation on the given generator names and no relators.
    pub fn on(names: impl IntoIterator<Item = impl Into<String>>) -> Result<Presentation> {
        let mut p = Presentation::new();
        for n in names {
            p.add_generator(n)?;
        }
        Ok(p)
    }

    /// Adds a generator and returns its index. Names must be unique, contain
    /// a letter, and not collide with the case-swapped form of another name.
    pub fn add_generator(&mut self, name: impl Into<String>) -> Result<usize> {
        let name = name.into();
        if !name.chars().any(|c| c.is_alphabetic()) || name.chars().any(char::is_whitespace) {
            return Err(Error::Parse(format!("bad generator name '{name}'")));
        }
        let swapped = swap_case(&name);
        if self.names.iter().any(|n| *n == name || *n == swapped) || swapped == name {
            return Err(Error::Parse(format!("generator name '{name}' is ambiguous")));
        }
        self.names.push(name);
        Ok(self.names.len() - 1)
    }

    /// Adds a relator after cyclic reduction; trivial and duplicate relators
    /// are dropped.
    pub fn add_relator(&mut self, word: &[Letter]) {
        debug_assert!(word.iter().all(|&l| l != 0 && generator_of(l) < self.names.len()));
        let w = cyclic_reduce(word);
        if w.is_empty() {
            return;
        }
        if self.seen.insert(relator_key(&w)) {
            self.relators.push(w);
        }
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Total relator length.
    pub fn length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    /// Word from generator names; a name with its letter case swapped
    /// denotes the inverse.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(|tok| {
                if let Some(g) = self.index_of(tok) {
                    Ok(letter(g, false))
                } else if let Some(g) = self.index_of(&swap_case(tok)) {
                    Ok(letter(g, true))
                } else {
                    Err(Error::Parse(format!("unknown generator '{tok}'")))
                }
            })
            .collect()
    }

    pub fn format_word(&self, word: &[Letter]) -> String {
        let toks: Vec<String> = word
            .iter()
            .map(|&l| {
                let n = &self.names[generator_of(l)];
                if l < 0 {
                    swap_case(n)
                } else {
                    n.clone()
                }
            })
            .collect();
        toks.join(" ")
    }

    /// Plain-text form: the generator names on the first line, then one
    /// relator per line.
    pub fn to_text(&self) -> String {
        let mut out = self.names.join(" ");
        out.push('\n');
        for r in &self.relators {
            out.push_str(&self.format_word(r));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Presentation> {
        let mut lines = text.lines();
        let head = lines.next().ok_or_else(|| Error::Parse("empty presentation".into()))?;
        let mut p = Presentation::on(head.split_whitespace())?;
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let w = p.parse_word(line)?;
            p.add_relator(&w);
        }
        Ok(p)
    }

    /// Abelian invariants of the abelianization, from the exponent-sum matrix.
    pub fn abelianization(&self) -> AbelianInvariants {
        let mut m = SparseMatrix::new(self.relators.len(), self.names.len());
        for (r, w) in self.relators.iter().enumerate() {
            for &l in w {
                m.add(r, generator_of(l), l.signum() as i64);
            }
        }
        cokernel(&m)
    }

    /// Evaluates a word under an assignment of generators to matrices.
    pub fn evaluate(&self, word: &[Letter], images: &[Matrix], inverses: &[Matrix]) -> Result<Matrix> {
        let first = images.first().ok_or(Error::SizeMismatch(self.names.len(), 0))?;
        let mut acc = Matrix::identity(first.ring(), first.size());
        for &l in word {
            let g = generator_of(l);
            acc = acc.mul(if l > 0 { &images[g] } else { &inverses[g] })?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

fn swap_case(s: &str) -> String {
    s.chars()
        .map(|c| if c.is_uppercase() { c.to_lowercase().next().unwrap() } else { c.to_uppercase().next().unwrap() })
        .collect()
}

/// True iff every relator maps to the identity under the assignment.
pub fn von_dyck_check(pres: &Presentation, assignment: &[Matrix]) -> Result<bool> {
    Ok(first_violation(pres, assignment)?.is_none())
}

/// The first relator not sent to the identity, if any.
pub fn first_violation(pres: &Presentation, assignment: &[Matrix]) -> Result<Option<usize>> {
    if assignment.len() != pres.generator_count() {
        return Err(Error::SizeMismatch(assignment.len(), pres.generator_count()));
    }
    if let Some(first) = assignment.first() {
        for m in assignment {
            if m.size() != first.size() {
                return Err(Error::SizeMismatch(m.size(), first.size()));
            }
            if m.ring() != first.ring() {
                return Err(Error::RingMismatch);
            }
        }
    }
    let inverses: Vec<Matrix> = assignment.iter().map(Matrix::inverse).collect::<Result<_>>()?;
    for (k, r) in pres.relators().iter().enumerate() {
        if !pres.evaluate(r, assignment, &inverses)?.is_identity() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn reductions() {
        assert_eq!(reduce(&[1, 2, -2, -1, 3]), vec![3]);
        assert_eq!(cyclic_reduce(&[1, 2, 3, -1]), vec![2, 3]);
        assert_eq!(commutator(&[1], &[1]), Vec::<Letter>::new());
        assert_eq!(power(&[1, 2], -2), vec![-2, -1, -2, -1]);
    }

    #[test]
    fn text_round_trip() {
        let p = Presentation::from_text("a b\na a\nb b\na b a b a b\n").unwrap();
        assert_eq!(p.relators().len(), 3);
        let q = Presentation::from_text(&p.to_text()).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.parse_word("a B").unwrap(), vec![1, -2]);
    }

    #[test]
    fn duplicate_relators_dropped() {
        let mut p = Presentation::on(["a", "b"]).unwrap();
        p.add_relator(&[1, 2, -1, -2]);
        p.add_relator(&[2, 1, -2, -1]);
        p.add_relator(&[2, -1, -2, 1]);
        assert_eq!(p.relators().len(), 1);
    }

    #[test]
    fn abelianization_of_s3() {
        let p = Presentation::from_text("a b\na a\nb b\na b a b a b").unwrap();
        assert_eq!(p.abelianization().to_string(), "Z/2");
    }

    #[test]
    fn von_dyck_negative_control() {
        let r = Ring::zmod(3).unwrap();
        let mut p = Presentation::on(["x"]).unwrap();
        p.add_relator(&[1, 1, 1]);
        let m = Matrix::elementary(&r, 2, 1, 2, &r.one()).unwrap();
        assert!(von_dyck_check(&p, std::slice::from_ref(&m)).unwrap());
        let mut q = Presentation::on(["x"]).unwrap();
        q.add_relator(&[1, 1]);
        assert!(!von_dyck_check(&q, &[m]).unwrap());
    }

    #[test]
    fn ambiguous_names_rejected() {
        let mut p = Presentation::on(["a"]).unwrap();
        assert!(p.add_generator("A").is_err());
        assert!(p.add_generator("12").is_err());
    }
}
