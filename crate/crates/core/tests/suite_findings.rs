use annsub_core::suite::{
    build_corpus, render_json, render_markdown, run_checks, run_suite, Allowlist, CheckResult, Family, SuiteConfig,
    SuiteReport, Verdict, CLAIMS,
};

fn default_report() -> SuiteReport {
    run_suite(&SuiteConfig::default()).unwrap()
}

fn verdicts<'a>(r: &'a SuiteReport, claim: &'a str, instance: &str) -> Vec<(&'a str, Verdict)> {
    r.results_for(claim)
        .filter(|c| c.instance == instance)
        .map(|c| (c.part.as_str(), c.verdict))
        .fold(Vec::new(), |mut acc, pv| {
            // Squarefree composites appear in two families.
            if !acc.contains(&pv) {
                acc.push(pv);
            }
            acc
        })
}

#[test]
fn default_corpus_is_green_with_shipped_allowlist() {
    let r = default_report();
    assert_eq!(r.count(Verdict::Fail), 0);
    assert!(r.unknown_discrepancies().is_empty());
    assert_eq!(r.exit_code(), 0);
    assert!(r.skipped.is_empty());
    for claim in CLAIMS {
        assert!(r.results_for(claim).count() > 0, "{claim} produced no results");
    }
}

#[test]
fn every_allowlist_entry_is_still_observed() {
    let r = default_report();
    for entry in Allowlist::shipped().entries {
        let hit = r.results.iter().any(|c| {
            c.claim == entry.claim && c.part == entry.part && c.instance == entry.instance && c.verdict == Verdict::Discrepancy
        });
        assert!(hit, "stale allowlist entry {entry:?}");
    }
}

#[test]
fn without_allowlist_discrepancies_turn_red() {
    let config = SuiteConfig {
        families: vec![Family::LocalChain],
        ..SuiteConfig::default()
    };
    let (instances, _) = build_corpus(&config).unwrap();
    let results: Vec<CheckResult> = run_checks(&instances, &config.claims, &Allowlist::default());
    let report = SuiteReport {
        budget: config.budget,
        families: config.families.clone(),
        claims: config.claims.iter().map(|c| c.to_string()).collect(),
        results,
        skipped: Vec::new(),
    };
    assert!(!report.unknown_discrepancies().is_empty());
    assert_eq!(report.exit_code(), 1);
}

#[test]
fn direct_sum_values() {
    let r = default_report();
    assert_eq!(verdicts(&r, "Thm 2.6", "R=12 M=12"), [("gamma", Verdict::Pass)]);
    assert_eq!(verdicts(&r, "Thm 2.6", "R=6 M=6"), [("gamma", Verdict::NotApplicable)]);
    assert_eq!(verdicts(&r, "Thm 3.3", "R=30 M=30"), [("gamma", Verdict::Pass), ("gamma_t", Verdict::Pass)]);
    let z36 = verdicts(&r, "Thm 2.4", "R=36 M=36");
    assert_eq!(z36, [("radius", Verdict::Pass), ("center", Verdict::Pass)]);
}

#[test]
fn boundary_cases_are_discrepancies() {
    let r = default_report();
    assert!(verdicts(&r, "Thm 2.2", "R=8 M=8").contains(&("center", Verdict::Discrepancy)));
    assert!(verdicts(&r, "Thm 2.2", "R=16 M=16").iter().all(|(_, v)| *v == Verdict::Pass));
    assert!(verdicts(&r, "Thm 2.4", "R=12 M=12").contains(&("center", Verdict::Discrepancy)));
    assert_eq!(verdicts(&r, "Cor 3.4", "R=6 M=6"), [("equivalence", Verdict::Discrepancy)]);
    assert!(verdicts(&r, "Thm 3.8", "R=30 M=30").iter().all(|(p, v)| *p == "c" && *v == Verdict::Discrepancy));
    assert!(verdicts(&r, "Thm 1.7", "R=12 M=12").contains(&("equivalence", Verdict::Discrepancy)));
}

#[test]
fn single_vertex_graphs_are_excluded_from_total_domination_claims() {
    let r = default_report();
    for n in ["4", "9", "25"] {
        let inst = format!("R={n} M={n}");
        assert_eq!(verdicts(&r, "Thm 3.1", &inst), [("dichotomy", Verdict::NotApplicable)]);
    }
    let md = render_markdown(&r);
    assert!(md.contains("Thm 3.1: 3 instance(s): R=4 M=4, R=9 M=9, R=25 M=25"));
}

#[test]
fn reports_are_deterministic() {
    let a = render_json(&default_report());
    let b = render_json(&default_report());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["summary"]["FAIL"], 0);
    assert_eq!(v["out_of_scope"][0]["claim"], "Lem 1.3");
}

#[test]
fn empty_claim_list_gives_empty_report() {
    let config = SuiteConfig {
        claims: Vec::new(),
        ..SuiteConfig::default()
    };
    let r = run_suite(&config).unwrap();
    assert!(r.results.is_empty());
    let v: serde_json::Value = serde_json::from_str(&render_json(&r)).unwrap();
    assert_eq!(v["results"].as_array().unwrap().len(), 0);
    assert_eq!(r.exit_code(), 0);
}
