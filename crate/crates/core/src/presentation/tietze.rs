//! Tietze simplification: generators killed or identified by relators of
//! length one or two are eliminated, repeatedly, until none remain.

use super::{cyclic_reduce, generator_of, letter, Letter, Presentation, Word};

/// A simplified presentation and the image of every original generator.
#[derive(Clone, Debug)]
pub struct Simplified {
    pub presentation: Presentation,
    /// Word in the new generators equal to each old generator.
    pub images: Vec<Word>,
}

struct Links {
    /// `g = parent^sign`, or `g` is a root.
    parent: Vec<Option<(usize, i32)>>,
    trivial: Vec<bool>,
}

impl Links {
    /// `g = root^sign`, or `None` when `g = 1`.
    fn find(&mut self, g: usize) -> Option<(usize, i32)> {
        let mut sign = 1;
        let mut r = g;
        while let Some((p, s)) = self.parent[r] {
            sign *= s;
            r = p;
        }
        if r != g {
            self.parent[g] = Some((r, sign));
        }
        if self.trivial[r] {
            None
        } else {
            Some((r, sign))
        }
    }

    /// Imposes `a = 1` for a letter.
    fn kill(&mut self, l: Letter) -> bool {
        match self.find(generator_of(l)) {
            Some((r, _)) => {
                self.trivial[r] = true;
                true
            }
            None => false,
        }
    }

    /// Imposes `a b = 1` for two letters; returns whether anything changed.
    fn identify(&mut self, a: Letter, b: Letter) -> bool {
        let fa = self.find(generator_of(a));
        let fb = self.find(generator_of(b));
        match (fa, fb) {
            (None, None) => false,
            (None, Some((r, _))) | (Some((r, _)), None) => {
                self.trivial[r] = true;
                true
            }
            (Some((ra, sa)), Some((rb, sb))) => {
                // ra^(sa*sign(a)) = rb^(-sb*sign(b))
                let ea = sa * a.signum();
                let eb = -sb * b.signum();
                if ra == rb {
                    return false;
                }
                let (hi, lo) = if ra > rb { (ra, rb) } else { (rb, ra) };
                self.parent[hi] = Some((lo, ea * eb));
                true
            }
        }
    }

    fn rewrite(&mut self, word: &[Letter]) -> Word {
        let mut out = Vec::with_capacity(word.len());
        for &l in word {
            if let Some((r, s)) = self.find(generator_of(l)) {
                out.push(letter(r, s * l.signum() < 0));
            }
        }
        cyclic_reduce(&out)
    }
}

/// Eliminates generators through short relators.
pub fn simplify(pres: &Presentation) -> Simplified {
    let n = pres.generator_count();
    let mut links = Links { parent: vec![None; n], trivial: vec![false; n] };
    let mut relators: Vec<Word> = pres.relators().to_vec();
    loop {
        let mut changed = false;
        for r in &relators {
            match r.len() {
                1 => changed |= links.kill(r[0]),
                2 if generator_of(r[0]) != generator_of(r[1]) => changed |= links.identify(r[0], r[1]),
                _ => {}
            }
        }
        if !changed {
            break;
        }
        relators = relators.iter().map(|r| links.rewrite(r)).filter(|r| !r.is_empty()).collect();
    }
    let mut new_index = vec![usize::MAX; n];
    let mut out = Presentation::new();
    for g in 0..n {
        if links.parent[g].is_none() && !links.trivial[g] {
            new_index[g] = out.add_generator(pres.name(g)).expect("names already valid");
        }
    }
    let renumber = |w: &[Letter]| -> Word { w.iter().map(|&l| letter(new_index[generator_of(l)], l < 0)).collect() };
    for r in &relators {
        out.add_relator(&renumber(r));
    }
    let images = (0..n)
        .map(|g| match links.find(g) {
            Some((r, s)) => vec![letter(new_index[r], s < 0)],
            None => Vec::new(),
        })
        .collect();
    Simplified { presentation: out, images }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::todd_coxeter;

    #[test]
    fn eliminates_and_preserves_group() {
        // <a, b, c, d | c, a B, d a, a a a> is Z/3
        let p = Presentation::from_text("a b c d\nc\na B\nd a\na a a").unwrap();
        let s = simplify(&p);
        assert_eq!(s.presentation.generator_count(), 1);
        assert_eq!(todd_coxeter(&s.presentation, &[], 100).index(), 3);
        assert!(s.images[2].is_empty());
        assert_eq!(s.images[3], vec![-1]);
    }

    #[test]
    fn involution_survives() {
        let p = Presentation::from_text("a b\na b\na A a a").unwrap();
        let s = simplify(&p);
        assert_eq!(todd_coxeter(&s.presentation, &[], 100).index(), 2);
    }

    #[test]
    fn s3_unchanged() {
        let p = Presentation::from_text("a b\na a\nb b\na b a b a b").unwrap();
        let s = simplify(&p);
        assert_eq!(s.presentation.generator_count(), 2);
        assert_eq!(todd_coxeter(&s.presentation, &[], 100).index(), 6);
    }
}
