//! Colimits of subgroup diagrams: one node per subgroup of a family, one
//! edge per pairwise intersection, and inclusion maps from each edge into
//! its two nodes. The colimit is presented by all node generators and
//! relators plus one relator identifying the two images of every edge
//! generator.

use std::collections::{HashMap, VecDeque};

use super::unipotent::pattern_presentation;
use super::{concat, first_violation, inverse, letter, Letter, Presentation, Word};
use crate::abels::SubgroupSpec;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::matrix::Matrix;

#[derive(Clone, Debug)]
pub struct Node {
    pub name: String,
    pub presentation: Presentation,
    /// Image of each generator in the ambient group.
    pub images: Vec<Matrix>,
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub presentation: Presentation,
    pub images: Vec<Matrix>,
    /// Each edge generator as a word in the generators of node `a` (`b`).
    pub into_a: Vec<Word>,
    pub into_b: Vec<Word>,
}

#[derive(Clone, Debug, Default)]
pub struct ColimitDiagram {
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

/// The colimit presentation with the ambient image of every generator.
#[derive(Clone, Debug)]
pub struct Colimit {
    pub presentation: Presentation,
    pub images: Vec<Matrix>,
}

fn shift(word: &[Letter], offset: usize) -> Word {
    word.iter().map(|&l| l.signum() * (l.abs() + offset as Letter)).collect()
}

fn word_matrix(word: &[Letter], images: &[Matrix]) -> Result<Matrix> {
    let first = &images[0];
    let mut acc = Matrix::identity(first.ring(), first.size());
    for &l in word {
        let m = &images[super::generator_of(l)];
        acc = acc.mul(&if l > 0 { m.clone() } else { m.inverse()? })?;
    }
    Ok(acc)
}

impl ColimitDiagram {
    /// Every node and edge presentation holds in its ambient images, and the
    /// two inclusions of every edge generator agree with its own image.
    pub fn check(&self) -> Result<()> {
        for node in &self.nodes {
            if let Some(k) = first_violation(&node.presentation, &node.images)? {
                return Err(Error::VonDyckViolation(format!(
                    "{}: {}",
                    node.name,
                    node.presentation.format_word(&node.presentation.relators()[k])
                )));
            }
        }
        for e in &self.edges {
            if let Some(k) = first_violation(&e.presentation, &e.images)? {
                return Err(Error::VonDyckViolation(format!("edge relator {k}")));
            }
            for (g, img) in e.images.iter().enumerate() {
                let via_a = word_matrix(&e.into_a[g], &self.nodes[e.a].images)?;
                let via_b = word_matrix(&e.into_b[g], &self.nodes[e.b].images)?;
                if &via_a != img || &via_b != img {
                    return Err(Error::VonDyckViolation(format!(
                        "inclusion of generator {g} of {} ∩ {}",
                        self.nodes[e.a].name, self.nodes[e.b].name
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Disjoint union of the node presentations plus identification relators
/// `into_a(g) into_b(g)^-1`.
pub fn colimit_presentation(diagram: &ColimitDiagram) -> Result<Colimit> {
    diagram.check()?;
    let mut pres = Presentation::new();
    let mut offsets = Vec::new();
    let mut images = Vec::new();
    for node in &diagram.nodes {
        offsets.push(pres.generator_count());
        for name in node.presentation.names() {
            pres.add_generator(format!("{}.{name}", node.name))?;
        }
        images.extend(node.images.iter().cloned());
    }
    for (node, &off) in diagram.nodes.iter().zip(&offsets) {
        for r in node.presentation.relators() {
            pres.add_relator(&shift(r, off));
        }
    }
    for e in &diagram.edges {
        for (wa, wb) in e.into_a.iter().zip(&e.into_b) {
            let rel = concat(&[&shift(wa, offsets[e.a]), &inverse(&shift(wb, offsets[e.b]))]);
            pres.add_relator(&rel);
        }
    }
    Ok(Colimit { presentation: pres, images })
}

/// Diagram of pattern subgroups of `U_n`, every node and edge presented by
/// the canonical relators restricted to its positions.
pub fn unipotent_diagram(specs: &[SubgroupSpec]) -> Result<ColimitDiagram> {
    let first = specs.first().ok_or_else(|| Error::InvalidSize("empty family".into()))?;
    let ring = first.ring().clone();
    let n = first.n;
    let ap = ring.additive_presentation()?;
    let present = |s: &SubgroupSpec| -> Result<_> {
        if !s.unit_positions().is_empty() {
            return Err(Error::UnsupportedKind(format!("{} is not unipotent", s.name)));
        }
        pattern_presentation(n, &s.free_positions(), &ap)
    };
    let pres: Vec<_> = specs.iter().map(present).collect::<Result<_>>()?;
    let mut diagram = ColimitDiagram::default();
    for (s, p) in specs.iter().zip(&pres) {
        diagram.nodes.push(Node { name: s.name.clone(), presentation: p.presentation.clone(), images: p.assignment(&ring)? });
    }
    for a in 0..specs.len() {
        for b in a + 1..specs.len() {
            let inter = specs[a].intersect(&specs[b], &format!("{}∩{}", specs[a].name, specs[b].name))?;
            let ip = present(&inter)?;
            let mut into_a = Vec::new();
            let mut into_b = Vec::new();
            for &p in &ip.positions {
                for k in 0..ip.t.len() {
                    into_a.push(vec![pres[a].letter(p, k, false).expect("intersection inside node")]);
                    into_b.push(vec![pres[b].letter(p, k, false).expect("intersection inside node")]);
                }
            }
            diagram.edges.push(Edge { a, b, images: ip.assignment(&ring)?, presentation: ip.presentation, into_a, into_b });
        }
    }
    Ok(diagram)
}

/// Presentation of a subgroup from its Cayley graph on the subgroup's
/// generators: a BFS tree, and one relator `w(x) s w(xs)^-1` for every
/// non-tree edge. Also returns the tree word of every member.
pub fn cayley_presentation(group: &FiniteGroup, sub: &Subgroup) -> Result<(Presentation, HashMap<u32, Word>)> {
    let gens = &sub.generators;
    let mut pres = Presentation::new();
    for k in 0..gens.len() {
        pres.add_generator(format!("g{k}"))?;
    }
    let id = group.identity();
    let mut words: HashMap<u32, Word> = HashMap::from([(id, Vec::new())]);
    let mut queue = VecDeque::from([id]);
    let mut order = Vec::new();
    while let Some(x) = queue.pop_front() {
        order.push(x);
        for (k, &s) in gens.iter().enumerate() {
            let y = group.mul(x, s);
            if !words.contains_key(&y) {
                let mut w = words[&x].clone();
                w.push(letter(k, false));
                words.insert(y, w);
                queue.push_back(y);
            }
        }
    }
    if words.len() != sub.order() {
        return Err(Error::InvalidSize(format!("generators of {} reach {} of {} members", sub.name, words.len(), sub.order())));
    }
    for &x in &order {
        for (k, &s) in gens.iter().enumerate() {
            let y = group.mul(x, s);
            let rel = concat(&[&words[&x], &[letter(k, false)], &inverse(&words[&y])]);
            pres.add_relator(&rel);
        }
    }
    Ok((pres, words))
}

/// A small generating set of a subgroup given by its members: members in
/// increasing order, each kept when not already generated.
pub fn greedy_generators(group: &FiniteGroup, members: &[u32]) -> Vec<u32> {
    let mut gens = Vec::new();
    let mut closure = vec![group.identity()];
    for &x in members {
        if closure.binary_search(&x).is_err() {
            gens.push(x);
            closure = group.closure(&gens);
        }
    }
    gens
}

/// Diagram of arbitrary subgroups of a finite group, presented through
/// Cayley graphs.
pub fn cayley_diagram(group: &FiniteGroup, family: &[Subgroup]) -> Result<ColimitDiagram> {
    let mut diagram = ColimitDiagram::default();
    let mut trees = Vec::new();
    for h in family {
        let (p, words) = cayley_presentation(group, h)?;
        let images = h.generators.iter().map(|&g| group.matrix(g)).collect();
        diagram.nodes.push(Node { name: h.name.clone(), presentation: p, images });
        trees.push(words);
    }
    for a in 0..family.len() {
        for b in a + 1..family.len() {
            let members: Vec<u32> = family[a].members.iter().copied().filter(|x| family[b].contains(*x)).collect();
            let gens = greedy_generators(group, &members);
            let inter = Subgroup::new(&format!("{}∩{}", family[a].name, family[b].name), members, gens.clone());
            let (p, _) = cayley_presentation(group, &inter)?;
            let into_a = gens.iter().map(|g| trees[a][g].clone()).collect();
            let into_b = gens.iter().map(|g| trees[b][g].clone()).collect();
            let images = gens.iter().map(|&g| group.matrix(g)).collect();
            diagram.edges.push(Edge { a, b, presentation: p, images, into_a, into_b });
        }
    }
    Ok(diagram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abels::contracting_family;
    use crate::presentation::{todd_coxeter, TcStatus};
    use crate::ring::Ring;

    fn s3() -> (FiniteGroup, Vec<Subgroup>) {
        let r = Ring::zmod(2).unwrap();
        let a = Matrix::from_int_rows(&r, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]).unwrap();
        let b = Matrix::from_int_rows(&r, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]).unwrap();
        let g = FiniteGroup::generate("S3", &r, 3, &[a.clone(), b.clone()], 100).unwrap();
        let ia = g.index_of_matrix(&a).unwrap();
        let ib = g.index_of_matrix(&b).unwrap();
        let fam = vec![Subgroup::generated(&g, "P", vec![ia]), Subgroup::generated(&g, "Q", vec![ib])];
        (g, fam)
    }

    #[test]
    fn cayley_presentation_presents_the_group() {
        let (g, fam) = s3();
        let all = Subgroup::generated(&g, "G", fam.iter().map(|h| h.generators[0]).collect());
        let (p, _) = cayley_presentation(&g, &all).unwrap();
        assert_eq!(todd_coxeter(&p, &[], 1000).index(), 6);
    }

    #[test]
    fn free_product_of_two_involutions() {
        let (g, fam) = s3();
        let col = colimit_presentation(&cayley_diagram(&g, &fam).unwrap()).unwrap();
        assert_eq!(col.presentation.abelianization().to_string(), "Z/2 + Z/2");
        assert_eq!(todd_coxeter(&col.presentation, &[], 2000).status, TcStatus::Overflow);
    }

    #[test]
    fn contracting_colimit_n5() {
        let r = Ring::zmod(2).unwrap();
        let fam = contracting_family(5, &r).unwrap();
        let col = colimit_presentation(&unipotent_diagram(&fam).unwrap()).unwrap();
        assert_eq!(todd_coxeter(&col.presentation, &[], 1_000_000).index(), 1024);
    }

    #[test]
    fn broken_inclusion_detected() {
        let (g, fam) = s3();
        let mut d = cayley_diagram(&g, &fam).unwrap();
        d.nodes[0].images[0] = g.matrix(fam[1].generators[0]);
        d.nodes[0].presentation.add_relator(&[1, 1, 1]);
        assert!(matches!(colimit_presentation(&d), Err(Error::VonDyckViolation(_))));
    }
}
