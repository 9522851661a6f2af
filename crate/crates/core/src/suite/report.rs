use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use super::{CheckResult, SuiteReport, Verdict, OUT_OF_SCOPE};

/// Claims that need `gamma_t`, which is undefined on graphs with an
/// isolated vertex (in practice `K_1`).
const NEEDS_TOTAL: [&str; 3] = ["Thm 3.1", "Thm 3.2", "Thm 3.6"];

fn counts(results: &[&CheckResult]) -> BTreeMap<&'static str, usize> {
    Verdict::ALL
        .iter()
        .map(|v| (v.as_str(), results.iter().filter(|r| r.verdict == *v).count()))
        .collect()
}

/// Instances excluded from a claim only because `gamma_t` is undefined.
fn total_exclusions(report: &SuiteReport) -> BTreeMap<&str, Vec<&str>> {
    let mut out: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for r in &report.results {
        if NEEDS_TOTAL.contains(&r.claim.as_str())
            && r.verdict == Verdict::NotApplicable
            && r.evidence["reason"].as_str().is_some_and(|s| s.contains("gamma_t is undefined"))
        {
            let list = out.entry(r.claim.as_str()).or_default();
            if !list.contains(&r.instance.as_str()) {
                list.push(&r.instance);
            }
        }
    }
    out
}

/// `{claim: {family: {verdict: count}}}`.
fn coverage(report: &SuiteReport) -> BTreeMap<String, BTreeMap<String, BTreeMap<&'static str, usize>>> {
    let mut out: BTreeMap<String, BTreeMap<String, BTreeMap<&'static str, usize>>> = BTreeMap::new();
    for r in &report.results {
        *out.entry(r.claim.clone())
            .or_default()
            .entry(r.family.to_string())
            .or_default()
            .entry(r.verdict.as_str())
            .or_default() += 1;
    }
    out
}

pub fn render_json(report: &SuiteReport) -> String {
    let all: Vec<&CheckResult> = report.results.iter().collect();
    let doc = json!({
        "budget": report.budget,
        "families": report.families,
        "claims": report.claims,
        "summary": counts(&all),
        "unknown_discrepancies": report.unknown_discrepancies().len(),
        "coverage": coverage(report),
        "gamma_t_undefined_exclusions": total_exclusions(report),
        "results": report.results,
        "skipped": report.skipped,
        "out_of_scope": OUT_OF_SCOPE
            .iter()
            .map(|(c, why)| json!({ "claim": c, "reason": why }))
            .collect::<Vec<Value>>(),
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

fn cell(counts: &BTreeMap<&'static str, usize>) -> String {
    let short = [("PASS", "P"), ("FAIL", "F"), ("NOT_APPLICABLE", "NA"), ("DISCREPANCY", "D")];
    let parts: Vec<String> = short
        .iter()
        .filter_map(|(k, s)| counts.get(k).filter(|&&c| c > 0).map(|c| format!("{c}{s}")))
        .collect();
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(" ")
    }
}

pub fn render_markdown(report: &SuiteReport) -> String {
    let mut out = String::new();
    let all: Vec<&CheckResult> = report.results.iter().collect();
    let families: Vec<String> = report.families.iter().map(|f| f.to_string()).collect();

    writeln!(out, "# Claim suite report\n").unwrap();
    writeln!(out, "Budget {}, families: {}.\n", report.budget, families.join(", ")).unwrap();
    writeln!(out, "| verdict | count |\n|---|---|").unwrap();
    for (v, c) in counts(&all) {
        writeln!(out, "| {v} | {c} |").unwrap();
    }
    writeln!(out, "\nUnknown discrepancies: {}.\n", report.unknown_discrepancies().len()).unwrap();

    writeln!(out, "## Coverage\n").unwrap();
    writeln!(out, "P pass, F fail, NA not applicable, D discrepancy.\n").unwrap();
    writeln!(out, "| claim | {} |", families.join(" | ")).unwrap();
    writeln!(out, "|---|{}", "---|".repeat(families.len())).unwrap();
    let cov = coverage(report);
    let empty = BTreeMap::new();
    for claim in &report.claims {
        let row = cov.get(claim).unwrap_or(&empty);
        let cells: Vec<String> = families.iter().map(|f| cell(row.get(f).unwrap_or(&BTreeMap::new()))).collect();
        writeln!(out, "| {claim} | {} |", cells.join(" | ")).unwrap();
    }

    let excluded = total_exclusions(report);
    if !excluded.is_empty() {
        writeln!(out, "\n## Excluded: gamma_t undefined\n").unwrap();
        for (claim, list) in &excluded {
            writeln!(out, "- {claim}: {} instance(s): {}", list.len(), list.join(", ")).unwrap();
        }
    }

    let disc: Vec<&CheckResult> = report.results.iter().filter(|r| r.verdict == Verdict::Discrepancy).collect();
    let fails: Vec<&CheckResult> = report.results.iter().filter(|r| r.verdict == Verdict::Fail).collect();
    for (title, list) in [("Discrepancies", &disc), ("Failures", &fails)] {
        if list.is_empty() {
            continue;
        }
        writeln!(out, "\n## {title}\n").unwrap();
        for r in list.iter() {
            writeln!(out, "### {} [{}] on {} ({})\n", r.claim, r.part, r.instance, r.family).unwrap();
            writeln!(out, "- expected: `{}`", r.expected).unwrap();
            writeln!(out, "- computed: `{}`", r.computed).unwrap();
            match &r.known {
                Some(b) => writeln!(out, "- known: {b}").unwrap(),
                None => writeln!(out, "- known: no").unwrap(),
            }
            writeln!(out, "- evidence: `{}`\n", r.evidence).unwrap();
        }
    }

    if !report.skipped.is_empty() {
        writeln!(out, "\n## Skipped\n").unwrap();
        for s in &report.skipped {
            writeln!(out, "- {} ({}): {}", s.instance, s.family, s.reason).unwrap();
        }
    }

    writeln!(out, "\n## Out of scope\n").unwrap();
    for (claim, why) in OUT_OF_SCOPE {
        writeln!(out, "- {claim}: {why}").unwrap();
    }
    out
}
