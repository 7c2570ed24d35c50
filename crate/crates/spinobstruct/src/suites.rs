//! Algebra verification suites behind `spinobstruct algebra`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use spinobstruct_core::jetalg::{anchor, bracket_jet_capped, extension_independence_check, JetField};
use spinobstruct_core::poly::{int, rat};
use spinobstruct_core::vecalg::{
    cocycle_check, density_change_check, enumerate_graded_ideals_vec1, graded_ideal_closure, sl_span_check, OneForm, Truncation, VecElem,
    MAX_EXHAUSTIVE_DEGREE,
};
use spinobstruct_core::{Poly, Rational};

use crate::random;

pub const SUITES: [&str; 4] = ["vec1-ideals", "sl-span", "jet-jacobi", "cocycle"];

/// Coefficient-degree cap for nested jet brackets.
const JET_CAP: u32 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: String,
    pub checks: Vec<Check>,
    pub summary: String,
    pub pass: bool,
}

impl SuiteReport {
    fn new(suite: &str, params: String, checks: Vec<Check>, summary: String) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        SuiteReport { suite: suite.into(), params, checks, summary, pass }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite {} ({})", self.suite, self.params);
        for c in &self.checks {
            let _ = writeln!(out, "  [{}] {}: {}", if c.pass { "pass" } else { "FAIL" }, c.name, c.detail);
        }
        let _ = writeln!(out, "{}: {}", if self.pass { "PASS" } else { "FAIL" }, self.summary);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite report serializes") + "\n"
    }
}

fn check(name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), pass, detail: detail.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    pub n: Option<usize>,
    pub k: Option<u32>,
    pub seed: u64,
    pub samples: Option<usize>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { n: None, k: None, seed: 42, samples: None }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}; expected one of {SUITES:?}")]
    Unknown(String),
    #[error("{0}")]
    Param(String),
}

pub fn run_suite(name: &str, p: &SuiteParams) -> Result<SuiteReport, SuiteError> {
    match name {
        "vec1-ideals" => vec1_ideals(p.k.unwrap_or(10)),
        "sl-span" => sl_span(p.n.unwrap_or(2), p.k.unwrap_or(3)),
        "jet-jacobi" => jet_jacobi(p.n.unwrap_or(2), p.k.unwrap_or(2), p.seed, p.samples.unwrap_or(100), 20),
        "cocycle" => cocycle(p.n.unwrap_or(2), p.seed, p.samples.unwrap_or(50)),
        other => Err(SuiteError::Unknown(other.into())),
    }
}

/// The two families, cut at degree `k`: tails `{j..k}` (including the empty
/// one) and `{1} u {3..k}`.
pub fn vec1_family_members(k: u32) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = (0..=k + 1).map(|j| (j..=k).collect()).collect();
    out.push(std::iter::once(1).chain(3..=k).collect());
    out.sort();
    out
}

pub fn vec1_ideals(k: u32) -> Result<SuiteReport, SuiteError> {
    if !(3..=MAX_EXHAUSTIVE_DEGREE).contains(&k) {
        return Err(SuiteError::Param(format!("K must lie in 3..={MAX_EXHAUSTIVE_DEGREE}")));
    }
    let ideals = enumerate_graded_ideals_vec1(k).map_err(|e| SuiteError::Param(e.to_string()))?;
    let expected = vec1_family_members(k);
    let stray: Vec<&Vec<u32>> = ideals.iter().filter(|s| !expected.contains(s)).collect();
    let mut closure_failures = Vec::new();
    for s in &ideals {
        let gens: Vec<VecElem> = s.iter().map(|&d| VecElem::mono(&[d + 1], 0, 1)).collect();
        let closed = graded_ideal_closure(&gens, 1, Truncation(k)).map_err(|e| SuiteError::Param(e.to_string()))?;
        if closed.support() != *s {
            closure_failures.push(s.clone());
        }
    }
    let checks = vec![
        check("count is K+3", ideals.len() == k as usize + 3, format!("{} ideals", ideals.len())),
        check("each is a truncated family member", stray.is_empty() && ideals == expected, format!("stray: {stray:?}")),
        check("bracket closure reproduces each ideal", closure_failures.is_empty(), format!("mismatches: {closure_failures:?}")),
    ];
    let summary = format!("{} graded ideals, matching 2 families + truncation tails", ideals.len());
    Ok(SuiteReport::new("vec1-ideals", format!("K={k}"), checks, summary))
}

pub fn sl_span(n: usize, k: u32) -> Result<SuiteReport, SuiteError> {
    if !(2..=4).contains(&n) || !(1..=4).contains(&k) {
        return Err(SuiteError::Param("sl-span needs 2 <= n <= 4 and 1 <= K <= 4".into()));
    }
    let r = sl_span_check(n, k);
    let checks = vec![
        check("degree 0 span is sl_n", r.computed_dims[0] == n * n - 1, format!("dim {} (expected {})", r.computed_dims[0], n * n - 1)),
        check("degree 0 span is trace free", r.traceless_degree_zero, ""),
        check(
            "degrees 1..K are full",
            r.computed_dims[1..] == r.expected_dims[1..],
            format!("computed {:?}, expected {:?}", &r.computed_dims[1..], &r.expected_dims[1..]),
        ),
    ];
    Ok(SuiteReport::new("sl-span", format!("n={n} K={k}"), checks, format!("graded dimensions {:?}", r.computed_dims)))
}

fn br(a: &JetField, b: &JetField) -> Result<JetField, String> {
    bracket_jet_capped(a, b, JET_CAP).map_err(|e| e.to_string())
}

fn triple_ok(a: &JetField, b: &JetField, c: &JetField) -> Result<(bool, bool), String> {
    let jac = br(a, &br(b, c)?)?.add(&br(b, &br(c, a)?)?).add(&br(c, &br(a, b)?)?);
    let ab = br(a, b)?;
    Ok((jac.is_zero(), anchor(&ab) == anchor(a).bracket(&anchor(b))))
}

pub fn jet_jacobi(n: usize, k: u32, seed: u64, triples: usize, families: usize) -> Result<SuiteReport, SuiteError> {
    if !(1..=3).contains(&n) || !(1..=3).contains(&k) || triples == 0 {
        return Err(SuiteError::Param("jet-jacobi needs 1 <= n <= 3, 1 <= k <= 3 and at least one sample".into()));
    }
    let mut r = random::rng(seed);
    let (mut jacobi, mut anchor_hom) = (0, 0);
    let mut first_bad = None;
    for i in 0..triples {
        let a = random::jet(&mut r, n, k, 3);
        let b = random::jet(&mut r, n, k, 3);
        let c = random::jet(&mut r, n, k, 3);
        match triple_ok(&a, &b, &c) {
            Ok((j, h)) => {
                jacobi += usize::from(j);
                anchor_hom += usize::from(h);
                if (!j || !h) && first_bad.is_none() {
                    first_bad = Some(format!("triple {i}: a = {a}, b = {b}, c = {c}"));
                }
            }
            Err(e) if first_bad.is_none() => first_bad = Some(format!("triple {i}: {e}")),
            Err(_) => {}
        }
    }
    let mut ext_ok = 0;
    for i in 0..families {
        let t = random::jet(&mut r, n, k, 2);
        let fam1 = random::minimal_family(&t);
        let fam2 = fam1.add(&random::perturbation(&mut r, n, k, 2));
        let u = random::field(&mut r, n, 2);
        match extension_independence_check(&t, &fam1, &fam2, &u) {
            Ok(rep) if rep.pass => ext_ok += 1,
            Ok(_) if first_bad.is_none() => first_bad = Some(format!("family {i}: sums differ")),
            Err(e) if first_bad.is_none() => first_bad = Some(format!("family {i}: {e}")),
            _ => {}
        }
    }
    let bad = first_bad.unwrap_or_default();
    let checks = vec![
        check("Jacobi identity", jacobi == triples, format!("{jacobi}/{triples} triples exact")),
        check("anchor is a homomorphism", anchor_hom == triples, format!("{anchor_hom}/{triples} triples exact")),
        check("extension independence", ext_ok == families, format!("{ext_ok}/{families} perturbed families")),
    ];
    let mut report = SuiteReport::new(
        "jet-jacobi",
        format!("n={n} k={k} seed={seed}"),
        checks,
        format!("{}/{triples} triples exact", jacobi.min(anchor_hom)),
    );
    if !report.pass {
        report.summary = format!("{}; first counterexample: {bad}", report.summary);
    }
    Ok(report)
}

pub fn cocycle(n: usize, seed: u64, samples: usize) -> Result<SuiteReport, SuiteError> {
    if !(1..=3).contains(&n) || samples == 0 {
        return Err(SuiteError::Param("cocycle needs 1 <= n <= 3 and at least one sample".into()));
    }
    let mut r = random::rng(seed);
    let pairs: Vec<_> = (0..samples).map(|_| (random::field(&mut r, n, 3), random::field(&mut r, n, 3))).collect();
    let lambdas: [Rational; 2] = [int(1), rat(-2, 3)];
    let omegas = [("0", OneForm::zero(n)), ("dx1", OneForm::exact(&Poly::var(n, 0)))];
    let mut checks = Vec::new();
    for (wname, omega) in &omegas {
        for lambda in &lambdas {
            let name = format!("cocycle identity, omega = {wname}, lambda = {lambda}");
            match cocycle_check(omega, lambda, &pairs) {
                Ok(rep) => {
                    let detail = match &rep.first_failure {
                        None => format!("{} pairs exact", rep.checked),
                        Some((i, res)) => format!("pair {i} residual {res:?}"),
                    };
                    checks.push(check(&name, rep.passed(), detail));
                }
                Err(e) => checks.push(check(&name, false, e.to_string())),
            }
        }
    }
    let cap = 6;
    let small: Vec<_> = pairs.iter().take(10).cloned().collect();
    match density_change_check(&Poly::var(n, 0), &int(1), &small, cap) {
        Ok(rep) => checks.push(check(
            "density e^x1 mu shifts by a coboundary",
            rep.passed(),
            format!(
                "{} pairs below degree {cap}; shift = d h: {}, still a cocycle: {}",
                rep.checked, rep.shift_is_dh, rep.shifted_is_cocycle
            ),
        )),
        Err(e) => checks.push(check("density e^x1 mu shifts by a coboundary", false, e.to_string())),
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    let total = checks.len();
    Ok(SuiteReport::new("cocycle", format!("n={n} seed={seed}"), checks, format!("{passed}/{total} checks exact on {samples} pairs")))
}
