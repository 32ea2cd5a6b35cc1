//! Verification suites: each runs a fixed battery of checks over default
//! or configured parameters and returns a report sorted by check id.

use std::fmt;
use std::str::FromStr;

use crate::abels::abels_suite;
use crate::chevalley::affine::{check_affine_iso, check_borel_retraction};
use crate::chevalley::borel::{borel_cases, borel_isomorphism_check};
use crate::chevalley::checks::{check_g2_torus_display, check_root_subgroups, check_steinberg, check_weyl_conjugation};
use crate::chevalley::forms::check_form_invariance;
use crate::chevalley::{matrix_model, CartanType};
use crate::complex::analysis::{abels_complex, action_analysis, compare_complexes, Family};
use crate::complex::Verdict;
use crate::error::{Error, Result};
use crate::presentation::checks::{check_contracting_colimit, check_missing_relations, check_presentation_equivalence};
use crate::presentation::tits::{standard_instances, tits_criterion_check};
use crate::relations::{check_commutator_formula, check_commutator_identities, check_diagonal_conjugation};
use crate::report::{anchors, Check, CheckRecord, Report};
use crate::ring::Ring;

pub const DEFAULT_MAX_COSETS: usize = 1_000_000;
pub const DEFAULT_MAX_ORDER: u64 = 1_000_000;
pub const BUDGET_ENV: &str = "ABELSLAB_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Steinberg,
    Commutators,
    Forms,
    BorelIso,
    Abels,
    Presentations,
    Complex,
    Tits,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Commutators,
        Suite::Steinberg,
        Suite::Forms,
        Suite::BorelIso,
        Suite::Abels,
        Suite::Presentations,
        Suite::Complex,
        Suite::Tits,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Steinberg => "steinberg",
            Suite::Commutators => "commutators",
            Suite::Forms => "forms",
            Suite::BorelIso => "borel-iso",
            Suite::Abels => "abels",
            Suite::Presentations => "presentations",
            Suite::Complex => "complex",
            Suite::Tits => "tits",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s}")))
    }
}

/// Parameters shared by all suites. `None` means the suite's defaults.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub ring: Option<String>,
    pub n: Option<usize>,
    pub cartan: Option<String>,
    pub max_cosets: usize,
    pub max_order: u64,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig { ring: None, n: None, cartan: None, max_cosets: DEFAULT_MAX_COSETS, max_order: DEFAULT_MAX_ORDER, seed: 0 }
    }
}

impl SuiteConfig {
    /// Defaults, with both budgets replaced by `ABELSLAB_BUDGET` when set.
    pub fn from_env() -> Result<SuiteConfig> {
        let mut c = SuiteConfig::default();
        if let Ok(v) = std::env::var(BUDGET_ENV) {
            let b: u64 = v.trim().parse().map_err(|_| Error::Parse(format!("{BUDGET_ENV}={v}")))?;
            c.max_cosets = b as usize;
            c.max_order = b;
        }
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_cosets == 0 || self.max_order == 0 {
            return Err(Error::BudgetExceeded("budgets must be positive".into()));
        }
        if let Some(r) = &self.ring {
            Ring::parse(r)?;
        }
        if let Some(t) = &self.cartan {
            t.parse::<CartanType>()?;
        }
        Ok(())
    }

    fn rings(&self, defaults: &[&str]) -> Result<Vec<Ring>> {
        match &self.ring {
            Some(r) => Ok(vec![Ring::parse(r)?]),
            None => defaults.iter().map(|d| Ring::parse(d)).collect(),
        }
    }

    fn sizes(&self, defaults: &[usize]) -> Vec<usize> {
        self.n.map_or_else(|| defaults.to_vec(), |n| vec![n])
    }

    fn types(&self, defaults: &[CartanType]) -> Result<Vec<CartanType>> {
        match &self.cartan {
            Some(t) => Ok(vec![t.parse()?]),
            None => Ok(defaults.to_vec()),
        }
    }

    fn echo(&self, report: Report) -> Report {
        report
            .with_config("ring", self.ring.as_deref().unwrap_or("default"))
            .with_config("n", self.n.map_or("default".into(), |n| n.to_string()))
            .with_config("type", self.cartan.as_deref().unwrap_or("default"))
            .with_config("max_cosets", self.max_cosets)
            .with_config("max_order", self.max_order)
            .with_config("seed", self.seed)
    }
}

fn is_char2(ring: &Ring) -> bool {
    ring.is_zero(&ring.from_int(2))
}

/// Runs one suite; `All` runs every suite and merges the reports.
pub fn run_suite(suite: Suite, config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let records = match suite {
        Suite::All => {
            let reports = Suite::EACH.iter().map(|&s| run_suite(s, config)).collect::<Result<Vec<_>>>()?;
            return Ok(config.echo(Report::merge(reports)));
        }
        Suite::Commutators => commutators(config)?,
        Suite::Steinberg => steinberg(config)?,
        Suite::Forms => forms(config)?,
        Suite::BorelIso => borel_iso(config)?,
        Suite::Abels => abels(config)?,
        Suite::Presentations => presentations(config)?,
        Suite::Complex => complex(config)?,
        Suite::Tits => tits(config)?,
    };
    let mut report = config.echo(Report::new(suite.name()));
    report.extend(records);
    report.sort();
    Ok(report)
}

fn commutators(c: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for ring in c.rings(&["zmod:2", "zmod:3", "zmod:4", "polyq:2:0,0,1"])? {
        for n in c.sizes(&[2, 3, 4, 5]) {
            out.push(check_commutator_formula(&ring, n)?);
            out.push(check_diagonal_conjugation(&ring, n)?);
        }
        let n = c.n.unwrap_or(4).max(3);
        out.push(check_commutator_identities(&ring, n, 200, c.seed)?);
    }
    Ok(out)
}

fn steinberg(c: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let types = c.types(&CartanType::ALL)?;
    for ring in c.rings(&["zmod:5", "zmod:7"])? {
        for &t in &types {
            // defaults skip the odd-characteristic models on char-2 rings; explicit requests are refused
            if c.cartan.is_none() && t.needs_odd_characteristic() && is_char2(&ring) {
                continue;
            }
            let model = matrix_model(t);
            model.check_ring(&ring)?;
            out.push(check_root_subgroups(&model, &ring)?);
            out.extend(check_steinberg(&model, &ring)?);
            out.extend(check_weyl_conjugation(&model, &ring)?);
            if t == CartanType::G2 {
                out.push(check_g2_torus_display(&ring)?);
            }
        }
    }
    Ok(out)
}

fn forms(c: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for ring in c.rings(&["zmod:5"])? {
        for t in c.types(&[CartanType::C2, CartanType::C3, CartanType::B3, CartanType::D4])? {
            out.push(check_form_invariance(&matrix_model(t), &ring)?);
        }
    }
    Ok(out)
}

fn borel_iso(c: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let types = c.types(&CartanType::ALL)?;
    for ring in c.rings(&["zmod:3", "zmod:4"])? {
        for case in borel_cases().iter().filter(|case| types.contains(&case.label)) {
            out.push(borel_isomorphism_check(&matrix_model(case.label), &case.root, &ring)?);
        }
        out.push(check_affine_iso(&ring)?);
        for n in c.sizes(&[3, 4]) {
            out.push(check_borel_retraction(n, &ring, c.max_order)?);
        }
    }
    Ok(out)
}

fn abels(c: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for ring in c.rings(&["zmod:2", "zmod:3"])? {
        for n in c.sizes(&[4, 5]) {
            out.extend(abels_suite(n, &ring, c.max_order)?);
        }
    }
    Ok(out)
}

fn presentations(c: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let pairs: Vec<(usize, Ring)> = if c.ring.is_none() && c.n.is_none() {
        vec![(4, Ring::zmod(2)?), (4, Ring::zmod(3)?), (5, Ring::zmod(2)?)]
    } else {
        let mut v = Vec::new();
        for ring in c.rings(&["zmod:2"])? {
            for n in c.sizes(&[4]) {
                v.push((n, ring.clone()));
            }
        }
        v
    };
    let mut out = Vec::new();
    for (n, ring) in pairs {
        out.extend(check_presentation_equivalence(n, &ring, c.max_cosets)?);
        out.push(check_missing_relations(n, &ring, c.max_cosets)?);
        out.push(check_contracting_colimit(n, &ring, c.max_cosets)?);
    }
    Ok(out)
}

/// Structure of `CC(H(n,R))`: dimension, homogeneity, colourability,
/// connectivity, `H_1`, and simple connectivity by coset enumeration.
pub fn complex_structure(n: usize, ring: &Ring, max_order: u64, max_cosets: usize) -> Result<Vec<CheckRecord>> {
    let tag = format!("n{n}/{}", ring.descriptor());
    let (group, cc) = abels_complex(n, ring, Family::Horospherical, max_order)?;
    let c = &cc.complex;
    let dim = cc.family.len() - 1;
    let mut shape = Check::new(format!("complex/{tag}/shape"), anchors::HOMOGENEOUS);
    shape.set_count("dimension", c.dimension().max(0) as u64);
    shape.set_count("vertices", c.vertex_count() as u64);
    for (d, k) in c.f_vector().iter().enumerate() {
        shape.set_count(&format!("f{d}"), *k as u64);
    }
    shape.expect(c.dimension() == dim as isize, || format!("dimension {} != {dim}", c.dimension()));
    shape.expect(c.is_homogeneous_colorable(dim), || "not homogeneous and colourable".into());

    let mut topo = Check::new(format!("complex/{tag}/topology"), anchors::NERVE);
    let connected = c.is_connected();
    topo.set_count("components", c.components() as u64);
    topo.expect(connected, || format!("{} components", c.components()));
    let h1 = c.homology_h1();
    topo.expect(h1.is_trivial(), || format!("H1 = {h1}"));
    let sc = c.is_simply_connected(max_cosets);
    match sc {
        Verdict::Yes => topo.expect(true, String::new),
        Verdict::No => topo.fail("fundamental group is nontrivial".into()),
        Verdict::Inconclusive => topo.inconclusive(format!("enumeration exceeded {max_cosets} cosets")),
    }
    if topo.status() != crate::report::Status::Inconclusive {
        topo.detail(format!("connected: {}, H1 = {h1}, simply connected: {sc}", if connected { "yes" } else { "no" }));
    }
    Ok(vec![shape.finish(), topo.finish(), action_analysis(&group, &cc, &tag)?])
}

fn complex(c: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for ring in c.rings(&["zmod:2"])? {
        for n in c.sizes(&[4, 5]) {
            out.extend(complex_structure(n, &ring, c.max_order, c.max_cosets)?);
            out.push(compare_complexes(n, &ring, c.max_order, c.max_cosets)?);
        }
    }
    Ok(out)
}

fn tits(c: &SuiteConfig) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    for inst in standard_instances(c.max_order)? {
        out.extend(tits_criterion_check(&inst, c.max_cosets)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn explicit_char2_b3_refused() {
        let c = SuiteConfig { cartan: Some("B3".into()), ring: Some("zmod:2".into()), ..SuiteConfig::default() };
        assert!(matches!(run_suite(Suite::Steinberg, &c), Err(Error::Char2Unsupported(_))));
    }

    #[test]
    fn small_forms_run() {
        let c = SuiteConfig { cartan: Some("C2".into()), ..SuiteConfig::default() };
        assert_eq!(run_suite(Suite::Forms, &c).unwrap().status(), Status::Pass);
    }
}
