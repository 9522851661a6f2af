//! Claim checking over generated module families.
//!
//! Each claim is evaluated on every instance of every selected family. An
//! instance whose hypotheses fail gets `NOT_APPLICABLE`; one that satisfies
//! them but violates the literal statement gets `DISCREPANCY`; `FAIL` is
//! reserved for internal cross-checks (oracle disagreement, `AG != AG*` when
//! `M` is not a vertex). Discrepancies listed in the shipped allowlist are
//! marked known and do not affect the exit status.

mod allowlist;
mod checks;
mod family;
mod report;

use serde::Serialize;
use serde_json::Value;

use crate::algebra::{minimal_primes, ring_summary, RingElem};
use crate::error::{Error, Result};
use crate::graph::{build_ag, m_is_vertex, AGGraph, Variant};
use crate::invariants::{coloring_report, ColoringReport, ParamReport, DEFAULT_EXACT_CAP};
use crate::module::{enumerate_submodules, structure_report, Caps, ModuleSpec, StructureReport, SubmoduleLattice};

pub use allowlist::{Allowlist, KnownDiscrepancy};
pub use family::{generate_family, Family};
pub use report::{render_json, render_markdown};

/// Claim ids in report order. The last two are cross-checks without a
/// numbered counterpart.
pub const CLAIMS: [&str; 26] = [
    "Prop 1.1",
    "Lem 1.2",
    "Lem 1.4",
    "Prop 1.5",
    "Thm 1.6",
    "Thm 1.7",
    "Cor 1.8",
    "Prop 1.9",
    "Rem 2.1",
    "Thm 2.2",
    "Cor 2.3",
    "Thm 2.4",
    "Cor 2.5",
    "Thm 2.6",
    "Cor 2.7",
    "Cor 2.8",
    "Thm 3.1",
    "Thm 3.2",
    "Thm 3.3",
    "Cor 3.4",
    "Thm 3.5",
    "Thm 3.6",
    "Thm 3.7",
    "Thm 3.8",
    "AG* connectivity",
    "Solver agreement",
];

/// Numbered results with no checker, and why.
pub const OUT_OF_SCOPE: [(&str, &str); 1] = [(
    "Lem 1.3",
    "idempotent lifting modulo a nil ideal; idempotents of a finite ring are enumerated directly",
)];

pub const DEFAULT_BUDGET: u64 = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    Discrepancy,
}

impl Verdict {
    pub const ALL: [Verdict; 4] = [Verdict::Pass, Verdict::Fail, Verdict::NotApplicable, Verdict::Discrepancy];

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "NOT_APPLICABLE",
            Verdict::Discrepancy => "DISCREPANCY",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub claim: String,
    /// Which statement of a multi-part claim (e.g. `radius`, `center`).
    pub part: String,
    pub family: Family,
    pub instance: String,
    pub hypotheses_met: bool,
    pub expected: Value,
    pub computed: Value,
    pub verdict: Verdict,
    pub evidence: Value,
    /// Boundary condition from the allowlist, for known discrepancies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub known: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub family: Family,
    pub instance: String,
    pub reason: String,
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub families: Vec<Family>,
    pub budget: u64,
    pub claims: Vec<&'static str>,
    pub exact_cap: usize,
    pub caps: Caps,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            families: Family::ALL.to_vec(),
            budget: DEFAULT_BUDGET,
            claims: CLAIMS.to_vec(),
            exact_cap: DEFAULT_EXACT_CAP,
            caps: Caps::default(),
        }
    }
}

/// Parses a comma-separated claim filter. Ids match case-insensitively
/// (`thm 2.6`), and `C-2.6` selects the claim numbered 2.6.
pub fn parse_claims(list: &str) -> Result<Vec<&'static str>> {
    let mut out: Vec<&'static str> = Vec::new();
    for raw in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let wanted = raw.split_whitespace().collect::<Vec<_>>().join(" ").to_lowercase();
        let found = CLAIMS.iter().copied().find(|c| {
            c.to_lowercase() == wanted
                || wanted
                    .strip_prefix("c-")
                    .is_some_and(|num| c.split(' ').nth(1) == Some(num))
        });
        match found {
            Some(c) if !out.contains(&c) => out.push(c),
            Some(_) => {}
            None => {
                return Err(Error::Parse {
                    position: list.find(raw).unwrap_or(0),
                    message: format!("unknown claim {raw:?}"),
                })
            }
        }
    }
    out.sort_by_key(|c| CLAIMS.iter().position(|x| x == c));
    Ok(out)
}

/// Everything the checkers read about one module.
#[derive(Debug, Clone)]
pub struct Instance {
    pub family: Family,
    pub label: String,
    pub lattice: SubmoduleLattice,
    pub structure: StructureReport,
    pub ag: AGGraph,
    pub ag_star: AGGraph,
    pub params: ParamReport,
    pub star_coloring: ColoringReport,
    pub m_is_vertex: bool,
    pub min_primes: usize,
    pub reduced: bool,
    pub idempotents: Vec<RingElem>,
}

impl Instance {
    pub fn build(family: Family, module: &ModuleSpec, caps: &Caps, exact_cap: usize) -> Result<Self> {
        let lattice = enumerate_submodules(module, caps)?;
        let ag = build_ag(&lattice, Variant::Ag);
        if ag.n() > exact_cap.min(64) {
            return Err(Error::ExactCapExceeded { n: ag.n(), cap: exact_cap });
        }
        let ag_star = build_ag(&lattice, Variant::AgStar);
        let params = ParamReport::compute(&ag.graph, exact_cap)?;
        let ring = module.ring();
        Ok(Self {
            family,
            label: module.instance_label(),
            structure: structure_report(&lattice),
            star_coloring: coloring_report(&ag_star.graph, exact_cap),
            m_is_vertex: m_is_vertex(&lattice),
            min_primes: minimal_primes(ring).len(),
            reduced: ring.is_reduced(),
            idempotents: ring_summary(ring).idempotents,
            lattice,
            ag,
            ag_star,
            params,
        })
    }

    pub fn module(&self) -> &ModuleSpec {
        self.lattice.module()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub budget: u64,
    pub families: Vec<Family>,
    pub claims: Vec<String>,
    pub results: Vec<CheckResult>,
    pub skipped: Vec<Skipped>,
}

impl SuiteReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.results.iter().filter(|r| r.verdict == verdict).count()
    }

    pub fn unknown_discrepancies(&self) -> Vec<&CheckResult> {
        self.results
            .iter()
            .filter(|r| r.verdict == Verdict::Discrepancy && r.known.is_none())
            .collect()
    }

    /// 1 when any check failed or a discrepancy is not on the allowlist.
    pub fn exit_code(&self) -> i32 {
        if self.count(Verdict::Fail) > 0 || !self.unknown_discrepancies().is_empty() {
            1
        } else {
            0
        }
    }

    pub fn results_for<'a>(&'a self, claim: &'a str) -> impl Iterator<Item = &'a CheckResult> + 'a {
        self.results.iter().filter(move |r| r.claim == claim)
    }
}

/// Builds every instance of the selected families, skipping those that hit a
/// cap. Instances come out in family order, then generation order.
pub fn build_corpus(config: &SuiteConfig) -> Result<(Vec<Instance>, Vec<Skipped>)> {
    let mut instances = Vec::new();
    let mut skipped = Vec::new();
    let mut families = config.families.clone();
    families.sort();
    families.dedup();
    for family in families {
        for module in generate_family(family, config.budget)? {
            match Instance::build(family, &module, &config.caps, config.exact_cap) {
                Ok(inst) => instances.push(inst),
                Err(
                    e @ (Error::ModuleTooLarge { .. }
                    | Error::TooManySubmodules { .. }
                    | Error::ExactCapExceeded { .. }),
                ) => skipped.push(Skipped {
                    family,
                    instance: module.instance_label(),
                    reason: e.to_string(),
                }),
                Err(e) => return Err(e),
            }
        }
    }
    Ok((instances, skipped))
}

pub fn run_checks(instances: &[Instance], claims: &[&str], allowlist: &Allowlist) -> Vec<CheckResult> {
    let mut results = Vec::new();
    for &claim in claims {
        for inst in instances {
            for outcome in checks::check(claim, inst) {
                let known = (outcome.verdict == Verdict::Discrepancy)
                    .then(|| allowlist.lookup(claim, &outcome.part, &inst.label))
                    .flatten()
                    .map(|k| k.boundary.clone());
                results.push(CheckResult {
                    claim: claim.to_string(),
                    part: outcome.part,
                    family: inst.family,
                    instance: inst.label.clone(),
                    hypotheses_met: outcome.verdict != Verdict::NotApplicable,
                    expected: outcome.expected,
                    computed: outcome.computed,
                    verdict: outcome.verdict,
                    evidence: outcome.evidence,
                    known,
                });
            }
        }
    }
    results
}

pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    let (instances, skipped) = build_corpus(config)?;
    let mut families = config.families.clone();
    families.sort();
    families.dedup();
    let results = run_checks(&instances, &config.claims, &Allowlist::shipped());
    Ok(SuiteReport {
        budget: config.budget,
        families,
        claims: config.claims.iter().map(|c| c.to_string()).collect(),
        results,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_filter() {
        assert_eq!(parse_claims("thm 2.6, C-3.4").unwrap(), vec!["Thm 2.6", "Cor 3.4"]);
        assert_eq!(parse_claims("Cor 2.7,Cor 2.7").unwrap(), vec!["Cor 2.7"]);
        assert!(parse_claims("Thm 9.9").is_err());
        assert!(parse_claims("Lem 1.3").is_err());
    }

    #[test]
    fn corpus_builds() {
        let config = SuiteConfig {
            budget: 12,
            ..SuiteConfig::default()
        };
        let (instances, skipped) = build_corpus(&config).unwrap();
        assert!(skipped.is_empty());
        assert!(instances.iter().any(|i| i.label == "R=12 M=12"));
    }

    #[test]
    fn caps_are_reported_as_skips() {
        let config = SuiteConfig {
            families: vec![Family::LocalChain],
            caps: Caps {
                max_order: 8,
                max_submodules: 100,
            },
            ..SuiteConfig::default()
        };
        let (instances, skipped) = build_corpus(&config).unwrap();
        assert!(instances.iter().all(|i| i.module().order() <= 8));
        assert!(skipped.iter().any(|s| s.instance == "R=9 M=9"));
    }
}
