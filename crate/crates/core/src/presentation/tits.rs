//! Both sides of the coset-complex criterion, computed independently: the
//! coset complex of a family is connected iff the family generates the
//! group, and simply connected iff the group is the colimit of the
//! family's intersection diagram.

use super::colimit::{cayley_diagram, cayley_presentation, colimit_presentation, unipotent_diagram, ColimitDiagram};
use super::tietze::simplify;
use super::todd_coxeter;
use crate::abels::{contracting_family, horospherical_family, unipotent};
use crate::complex::analysis::{abels_family, Family};
use crate::complex::{coset_complex, Verdict};
use crate::error::Result;
use crate::group::{FiniteGroup, Subgroup};
use crate::matrix::Matrix;
use crate::report::{anchors, Check, CheckRecord};
use crate::ring::Ring;

/// A group, a family of subgroups, and the diagram presenting the family.
pub struct TitsInstance {
    pub name: String,
    pub group: FiniteGroup,
    pub family: Vec<Subgroup>,
    pub diagram: ColimitDiagram,
}

impl TitsInstance {
    /// Nodes and edges presented through Cayley graphs.
    pub fn cayley(name: &str, group: FiniteGroup, family: Vec<Subgroup>) -> Result<TitsInstance> {
        let diagram = cayley_diagram(&group, &family)?;
        Ok(TitsInstance { name: name.to_string(), group, family, diagram })
    }
}

/// Horospherical family in `A_n(R)` (Cayley presentations), or
/// contracting family in `U_n(R)` (pattern presentations).
pub fn abels_instance(n: usize, ring: &Ring, family: Family, budget: u64) -> Result<TitsInstance> {
    let (group, subs) = abels_family(n, ring, family, budget)?;
    let name = format!("{}/n{n}/{}", family.tag(), ring.descriptor());
    match family {
        Family::Horospherical => {
            let _ = horospherical_family(n, ring)?;
            TitsInstance::cayley(&name, group, subs)
        }
        Family::Contracting => {
            let diagram = unipotent_diagram(&contracting_family(n, ring)?)?;
            Ok(TitsInstance { name, group, family: subs, diagram })
        }
    }
}

/// `S_3` as permutation matrices over `Z/2` with the subgroups generated by
/// the transpositions `(12)` and `(13)`: the coset complex is a hexagon.
pub fn s3_control() -> Result<TitsInstance> {
    let r = Ring::zmod(2)?;
    let a = Matrix::from_int_rows(&r, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])?;
    let b = Matrix::from_int_rows(&r, &[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])?;
    let g = FiniteGroup::generate("S3", &r, 3, &[a.clone(), b.clone()], 100)?;
    let ia = g.index_of_matrix(&a).expect("generator");
    let ib = g.index_of_matrix(&b).expect("generator");
    let family = vec![Subgroup::generated(&g, "P12", vec![ia]), Subgroup::generated(&g, "P13", vec![ib])];
    TitsInstance::cayley("S3/transpositions", g, family)
}

/// `<e_12>` and `<e_23>` inside `U_4(Z/2)`: they generate a proper
/// subgroup, so the complex falls apart into index-many components.
pub fn proper_subgroup_control() -> Result<TitsInstance> {
    let r = Ring::zmod(2)?;
    let g = unipotent(4, &r)?.to_group(1_000_000)?;
    let one = r.one();
    let x = g.index_of_matrix(&Matrix::elementary(&r, 4, 1, 2, &one)?).expect("element");
    let y = g.index_of_matrix(&Matrix::elementary(&r, 4, 2, 3, &one)?).expect("element");
    let family = vec![Subgroup::generated(&g, "E12", vec![x]), Subgroup::generated(&g, "E23", vec![y])];
    TitsInstance::cayley("U4/proper", g, family)
}

/// Verdict on whether the colimit maps isomorphically onto the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColimitVerdict {
    pub verdict: Verdict,
    pub reason: String,
}

/// Tietze-simplify the colimit, then enumerate cosets. `yes` needs a
/// complete table of index `|G|` and a generating family; `no` follows
/// from a different index or a different abelianization.
pub fn colimit_verdict(inst: &TitsInstance, generates: bool, max_cosets: usize) -> Result<ColimitVerdict> {
    let col = colimit_presentation(&inst.diagram)?;
    let simple = simplify(&col.presentation).presentation;
    let table = todd_coxeter(&simple, &[], max_cosets);
    let order = inst.group.order();
    if table.is_complete() {
        let idx = table.index();
        let verdict = if idx == order && generates { Verdict::Yes } else { Verdict::No };
        return Ok(ColimitVerdict { verdict, reason: format!("colimit order {idx}, group order {order}") });
    }
    let all = Subgroup::generated(&inst.group, "G", inst.group.generators().to_vec());
    let (gp, _) = cayley_presentation(&inst.group, &all)?;
    let ab_col = simple.abelianization();
    let ab_g = gp.abelianization();
    if ab_col != ab_g {
        return Ok(ColimitVerdict {
            verdict: Verdict::No,
            reason: format!("colimit abelianization {ab_col}, group abelianization {ab_g}"),
        });
    }
    Ok(ColimitVerdict { verdict: Verdict::Inconclusive, reason: format!("enumeration exceeded {max_cosets} cosets") })
}

/// Both halves of the criterion for one instance.
pub fn tits_criterion_check(inst: &TitsInstance, max_cosets: usize) -> Result<Vec<CheckRecord>> {
    let g = &inst.group;
    let cc = coset_complex(g, &inst.family, max_cosets.max(g.order()))?;
    let complex = &cc.complex;
    let gens: Vec<u32> = inst.family.iter().flat_map(|h| h.generators.iter().copied()).collect();
    let generated = g.closure(&gens).len();
    let generates = generated == g.order();

    let mut c1 = Check::new(format!("tits-connected/{}", inst.name), anchors::TITS_CONNECTED);
    let components = complex.components();
    c1.set_count("components", components as u64);
    c1.set_count("index", (g.order() / generated) as u64);
    c1.expect(complex.is_connected() == generates, || format!("connected = {}, generates = {generates}", complex.is_connected()));
    c1.expect(components * generated == g.order(), || format!("{components} components, index {}", g.order() / generated));

    let mut c2 = Check::new(format!("tits-simply-connected/{}", inst.name), anchors::TITS_SIMPLY_CONNECTED);
    let sc = complex.is_simply_connected(max_cosets);
    let col = colimit_verdict(inst, generates, max_cosets)?;
    let h1 = if complex.is_connected() { complex.homology_h1().to_string() } else { "-".into() };
    c2.detail(format!("complex: simply connected {sc}, H1 {h1}; colimit: iso {}, {}", col.verdict, col.reason));
    if complex.is_connected() {
        c2.set_count("h1_rank", complex.homology_h1().rank as u64);
    }
    if sc == Verdict::Inconclusive || col.verdict == Verdict::Inconclusive {
        let why = format!("complex {sc}, colimit {}: {}", col.verdict, col.reason);
        c2.inconclusive(why);
    } else {
        c2.expect(sc == col.verdict, || format!("complex {sc} but colimit {}", col.verdict));
    }
    Ok(vec![c1.finish(), c2.finish()])
}

/// Abels instances expected to satisfy both sides positively, followed by
/// the two negative controls.
pub fn standard_instances(budget: u64) -> Result<Vec<TitsInstance>> {
    let z2 = Ring::zmod(2)?;
    let z3 = Ring::zmod(3)?;
    Ok(vec![
        abels_instance(4, &z2, Family::Horospherical, budget)?,
        abels_instance(4, &z3, Family::Horospherical, budget)?,
        abels_instance(4, &z2, Family::Contracting, budget)?,
        abels_instance(5, &z2, Family::Contracting, budget)?,
        s3_control()?,
        proper_subgroup_control()?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn s3_hexagon() {
        let inst = s3_control().unwrap();
        let recs = tits_criterion_check(&inst, 10_000).unwrap();
        assert!(recs.iter().all(|r| r.status == Status::Pass), "{recs:?}");
        assert_eq!(recs[0].counts["components"], 1);
        assert_eq!(recs[1].counts["h1_rank"], 1);
    }

    #[test]
    fn proper_subgroup_components() {
        let inst = proper_subgroup_control().unwrap();
        let recs = tits_criterion_check(&inst, 10_000).unwrap();
        assert!(recs.iter().all(|r| r.status == Status::Pass), "{recs:?}");
        assert_eq!(recs[0].counts["components"], 8);
    }

    #[test]
    fn abels_positive_n4_z2() {
        let z2 = Ring::zmod(2).unwrap();
        let inst = abels_instance(4, &z2, Family::Horospherical, 1_000_000).unwrap();
        let recs = tits_criterion_check(&inst, 200_000).unwrap();
        assert!(recs.iter().all(|r| r.status == Status::Pass), "{recs:?}");
        assert!(recs[1].detail.as_deref().unwrap().contains("simply connected yes"));
    }
}
