//! Root systems from simple-root Gram matrices.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The tabulated Cartan types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CartanType {
    A1,
    A2,
    A3,
    C2,
    C3,
    B3,
    D4,
    G2,
}

impl CartanType {
    pub const ALL: [CartanType; 8] =
        [CartanType::A1, CartanType::A2, CartanType::A3, CartanType::C2, CartanType::C3, CartanType::B3, CartanType::D4, CartanType::G2];

    /// Types whose matrix models are only used away from characteristic 2.
    pub fn needs_odd_characteristic(self) -> bool {
        matches!(self, CartanType::B3 | CartanType::G2)
    }

    /// Gram matrix of the simple roots and their names, in model order.
    fn simple_data(self) -> (Vec<Vec<i64>>, Vec<&'static str>) {
        let a = |k: usize| {
            let mut g = vec![vec![0; k]; k];
            for i in 0..k {
                g[i][i] = 2;
                if i + 1 < k {
                    g[i][i + 1] = -1;
                    g[i + 1][i] = -1;
                }
            }
            g
        };
        match self {
            CartanType::A1 => (a(1), vec!["a1"]),
            CartanType::A2 => (a(2), vec!["a1", "a2"]),
            CartanType::A3 => (a(3), vec!["a1", "a2", "a3"]),
            CartanType::C2 => (vec![vec![2, -2], vec![-2, 4]], vec!["alpha", "beta"]),
            CartanType::C3 => {
                (vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -2, 4]], vec!["alpha1", "alpha2", "beta"])
            }
            CartanType::B3 => {
                (vec![vec![4, -2, 0], vec![-2, 4, -2], vec![0, -2, 2]], vec!["alpha1", "alpha2", "beta"])
            }
            CartanType::D4 => (
                vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]],
                vec!["alpha1", "alpha2", "alpha3", "alpha4"],
            ),
            CartanType::G2 => (vec![vec![6, -3], vec![-3, 2]], vec!["alpha", "gamma"]),
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CartanType::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnsupportedLabel(s.to_string()))
    }
}

/// Roots as integer coordinate vectors in the simple-root basis.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub label: CartanType,
    gram: Vec<Vec<i64>>,
    simple_names: Vec<&'static str>,
    /// Positive roots by height, then their negatives in the same order.
    roots: Vec<Vec<i64>>,
    lookup: HashMap<Vec<i64>, usize>,
    /// `cartan[a][b] = (root_a, root_b)`.
    cartan: Vec<Vec<i64>>,
    /// `reflections[i][a]` is the index of `r_{alpha_i}(root_a)`.
    reflections: Vec<Vec<usize>>,
}

/// Builds the root datum of a tabulated type by reflection closure.
pub fn root_system(label: CartanType) -> RootDatum {
    let (gram, simple_names) = label.simple_data();
    let k = gram.len();
    let inner = |a: &[i64], b: &[i64]| -> i64 {
        let mut s = 0;
        for i in 0..k {
            for j in 0..k {
                s += a[i] * gram[i][j] * b[j];
            }
        }
        s
    };
    let unit = |i: usize| {
        let mut v = vec![0; k];
        v[i] = 1;
        v
    };
    let mut roots: Vec<Vec<i64>> = (0..k).map(unit).collect();
    let mut frontier = roots.clone();
    while let Some(b) = frontier.pop() {
        for i in 0..k {
            let a = unit(i);
            let c = 2 * inner(&b, &a) / inner(&a, &a);
            let mut img = b.clone();
            img[i] -= c;
            if !roots.contains(&img) {
                roots.push(img.clone());
                frontier.push(img);
            }
        }
    }
    let mut positive: Vec<Vec<i64>> = roots.into_iter().filter(|r| r.iter().all(|&c| c >= 0)).collect();
    positive.sort_by_key(|r| (r.iter().sum::<i64>(), r.iter().map(|c| -c).collect::<Vec<_>>()));
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
    let lookup: HashMap<Vec<i64>, usize> = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    let cartan = roots.iter().map(|a| roots.iter().map(|b| 2 * inner(a, b) / inner(b, b)).collect()).collect();
    let reflections = (0..k)
        .map(|i| {
            let a = unit(i);
            roots
                .iter()
                .map(|b| {
                    let c = 2 * inner(b, &a) / inner(&a, &a);
                    let mut img = b.clone();
                    img[i] -= c;
                    lookup[&img]
                })
                .collect()
        })
        .collect();
    RootDatum { label, gram, simple_names, roots, lookup, cartan, reflections }
}

impl RootDatum {
    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.lookup.get(coords).copied()
    }

    /// Index of the `i`-th simple root.
    pub fn simple(&self, i: usize) -> usize {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        self.lookup[&v]
    }

    pub fn simple_index(&self, root: usize) -> Option<usize> {
        (0..self.rank()).find(|&i| self.simple(i) == root)
    }

    pub fn negative(&self, root: usize) -> usize {
        let v: Vec<i64> = self.roots[root].iter().map(|c| -c).collect();
        self.lookup[&v]
    }

    pub fn is_positive(&self, root: usize) -> bool {
        root < self.len() / 2
    }

    /// Cartan integer `(a, b) = 2<a,b>/<b,b>`.
    pub fn pairing(&self, a: usize, b: usize) -> i64 {
        self.cartan[a][b]
    }

    /// `r_{alpha_i}` applied to a root.
    pub fn reflect(&self, simple: usize, root: usize) -> usize {
        self.reflections[simple][root]
    }

    pub fn simple_names(&self) -> &[&'static str] {
        &self.simple_names
    }

    /// Name like `beta`, `-gamma` or `alpha1+alpha2`.
    pub fn name(&self, root: usize) -> String {
        let v = &self.roots[root];
        let (sign, v): (&str, Vec<i64>) =
            if self.is_positive(root) { ("", v.clone()) } else { ("-", v.iter().map(|c| -c).collect()) };
        let parts: Vec<String> = v
            .iter()
            .zip(&self.simple_names)
            .filter(|(c, _)| **c != 0)
            .map(|(c, n)| if *c == 1 { n.to_string() } else { format!("{c}{n}") })
            .collect();
        if parts.len() == 1 {
            format!("{sign}{}", parts[0])
        } else {
            format!("{sign}({})", parts.join("+"))
        }
    }

    pub fn by_name(&self, name: &str) -> Option<usize> {
        (0..self.len()).find(|&r| self.name(r) == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let expected = [2, 6, 12, 8, 18, 18, 24, 12];
        for (t, n) in CartanType::ALL.into_iter().zip(expected) {
            assert_eq!(root_system(t).len(), n, "{t}");
        }
    }

    #[test]
    fn pairings_and_reflections() {
        for t in CartanType::ALL {
            let d = root_system(t);
            for a in 0..d.len() {
                assert_eq!(d.pairing(a, a), 2);
                for b in 0..d.len() {
                    assert!(d.pairing(a, b).abs() <= 3);
                }
            }
            for i in 0..d.rank() {
                let s = d.simple(i);
                assert_eq!(d.reflect(i, s), d.negative(s));
                let mut img: Vec<usize> = (0..d.len()).map(|r| d.reflect(i, r)).collect();
                img.sort_unstable();
                assert_eq!(img, (0..d.len()).collect::<Vec<_>>());
            }
        }
        let a2 = root_system(CartanType::A2);
        assert!((0..6).all(|a| (0..6).all(|b| [0, 1, -1, 2, -2].contains(&a2.pairing(a, b)))));
        let g2 = root_system(CartanType::G2);
        assert!((0..12).any(|a| (0..12).any(|b| g2.pairing(a, b).abs() == 3)));
    }

    #[test]
    fn short_and_long_conventions() {
        let c2 = root_system(CartanType::C2);
        let (alpha, beta) = (c2.simple(0), c2.simple(1));
        assert_eq!(c2.pairing(alpha, beta), -1);
        assert_eq!(c2.pairing(beta, alpha), -2);
        let g2 = root_system(CartanType::G2);
        assert_eq!(g2.pairing(g2.simple(0), g2.simple(1)), -3);
        assert_eq!(g2.name(g2.negative(g2.simple(1))), "-gamma");
        assert_eq!("g2".parse::<CartanType>().unwrap(), CartanType::G2);
        assert!(matches!("E8".parse::<CartanType>(), Err(Error::UnsupportedLabel(_))));
    }
}
