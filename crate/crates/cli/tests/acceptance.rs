//! Acceptance criteria 1-10, one line each. Numeric checks are exact (zero
//! tolerance); runtime limits are the constants below, measured on the debug
//! test build.

use std::process::Command;
use std::time::{Duration, Instant};

use annsub_core::algebra::minimal_primes;
use annsub_core::invariants::{metric_report, oracle, set_predicates};
use annsub_core::module::is_prime_submodule;
use annsub_core::suite::{build_corpus, run_checks, Allowlist, Instance, SuiteConfig, Verdict};
use annsub_core::{
    build_ag, build_checked, enumerate_submodules, AGGraph, Caps, DomVariant, ModuleSpec, ParamReport, RingSpec,
    UGraph, Variant, DEFAULT_EXACT_CAP,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GOLDEN_LIMIT: Duration = Duration::from_secs(5);
const FAMILY_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_LIMIT: Duration = Duration::from_secs(120);
const ORACLE_MAX_VERTICES: usize = 16;
const SAMPLES: usize = 500;
const SEED: u64 = 0x5eed_0009;

struct Line {
    pass: bool,
    detail: String,
}

fn line(pass: bool, detail: impl Into<String>) -> Line {
    Line {
        pass,
        detail: detail.into(),
    }
}

fn regular(moduli: &[u64]) -> ModuleSpec {
    ModuleSpec::regular(RingSpec::new(moduli.to_vec()).unwrap())
}

fn graph_of(moduli: &[u64]) -> AGGraph {
    build_checked(&enumerate_submodules(&regular(moduli), &Caps::default()).unwrap()).unwrap()
}

fn oracle_gamma(g: &UGraph, v: DomVariant) -> Option<usize> {
    oracle::min_dominating(g, v).map(|s| s.len())
}

fn named_edges(g: &AGGraph) -> Vec<(String, String)> {
    let mut e: Vec<(String, String)> = g
        .graph
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (g.labels[u].clone(), g.labels[v].clone());
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    e.sort();
    e
}

fn corpus() -> Vec<Instance> {
    let (instances, skipped) = build_corpus(&SuiteConfig::default()).unwrap();
    assert!(skipped.is_empty(), "corpus instances skipped: {skipped:?}");
    // Squarefree composites belong to two families; keep one copy.
    let mut seen = std::collections::HashSet::new();
    instances.into_iter().filter(|i| seen.insert(i.label.clone())).collect()
}

fn direct_sum_instances(corpus: &[Instance]) -> Vec<&Instance> {
    corpus
        .iter()
        .filter(|i| i.structure.local_summands >= 2 && !i.structure.is_two_simple() && !i.m_is_vertex)
        .collect()
}

fn criterion_1() -> Line {
    let start = Instant::now();
    let mut bad = Vec::new();

    let z6 = graph_of(&[6]);
    if !(z6.n() == 2 && z6.graph.edge_count() == 1) {
        bad.push("Z_6 is not K_2".to_string());
    }
    if oracle_gamma(&z6.graph, DomVariant::Plain) != Some(1) || oracle_gamma(&z6.graph, DomVariant::Total) != Some(2) {
        bad.push("Z_6 gamma/gamma_t".into());
    }

    let z9 = graph_of(&[9]);
    if !(z9.n() == 1 && metric_report(&z9.graph).radius == Some(0)) {
        bad.push("Z_9 is not K_1 with radius 0".into());
    }

    let z12 = graph_of(&[12]);
    let mut vertices = z12.labels.clone();
    vertices.sort();
    let want_edges: Vec<(String, String)> = {
        let mut e = vec![
            ("(2)".to_string(), "(6)".to_string()),
            ("(3)".to_string(), "(4)".to_string()),
            ("(4)".to_string(), "(6)".to_string()),
        ];
        e.sort();
        e
    };
    if vertices != ["(2)", "(3)", "(4)", "(6)"] || named_edges(&z12) != want_edges {
        bad.push("Z_12 vertices/edges".into());
    }
    if oracle_gamma(&z12.graph, DomVariant::Plain) != Some(2) || oracle_gamma(&z12.graph, DomVariant::Total) != Some(2) {
        bad.push("Z_12 gamma/gamma_t".into());
    }

    let z30 = graph_of(&[30]);
    let min = minimal_primes(&RingSpec::cyclic(30).unwrap()).len();
    let g = oracle_gamma(&z30.graph, DomVariant::Plain);
    let gt = oracle_gamma(&z30.graph, DomVariant::Total);
    if !(z30.n() == 6 && z30.graph.edge_count() == 6 && g == Some(3) && gt == Some(3) && min == 3) {
        bad.push(format!("Z_30: n={} m={} gamma={g:?} gamma_t={gt:?} |Min|={min}", z30.n(), z30.graph.edge_count()));
    }
    // The production solvers must report the same values.
    for (moduli, gamma, gamma_t) in [(&[6u64][..], 1, Some(2)), (&[12], 2, Some(2)), (&[30], 3, Some(3))] {
        let p = ParamReport::compute(&graph_of(moduli).graph, DEFAULT_EXACT_CAP).unwrap();
        if p.gamma.value != Some(gamma) || p.gamma_t.value != gamma_t {
            bad.push(format!("solver disagrees on Z_{}", moduli[0]));
        }
    }

    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < GOLDEN_LIMIT;
    line(ok, format!("golden instances Z_6, Z_9, Z_12, Z_30 in {elapsed:.2?} (limit {GOLDEN_LIMIT:?}) {bad:?}"))
}

fn criterion_2(corpus: &[Instance], corpus_time: Duration) -> Line {
    let start = Instant::now();
    let inst = direct_sum_instances(corpus);
    let bad: Vec<String> = inst
        .iter()
        .filter(|i| i.params.gamma.value != Some(i.structure.local_summands))
        .map(|i| format!("{}: gamma {:?} n {}", i.label, i.params.gamma.value, i.structure.local_summands))
        .collect();
    let elapsed = corpus_time + start.elapsed();
    line(
        bad.is_empty() && elapsed < FAMILY_LIMIT,
        format!("gamma = n on {} instances, {} mismatches, {elapsed:.2?} (limit {FAMILY_LIMIT:?}) {bad:?}", inst.len(), bad.len()),
    )
}

fn criterion_3(corpus: &[Instance]) -> Line {
    let inst = direct_sum_instances(corpus);
    let mut bad = Vec::new();
    for i in &inst {
        let n = i.structure.local_summands;
        let p = &i.params;
        let pr = if n % 2 == 0 { n } else { n + 1 };
        let got = [p.ir.value, p.gamma_c.value, p.gamma_t.value, p.gamma_cl.value, p.gamma_pr.value];
        let want = [Some(n), Some(n), Some(n), Some(n), Some(pr)];
        if got != want {
            bad.push(format!("{}: ir,gc,gt,gcl,gpr = {got:?}, want {want:?}", i.label));
        }
    }
    line(bad.is_empty(), format!("ir = gamma_c = gamma_t = gamma_cl = n, gamma_pr by parity, on {} instances, {} mismatches {bad:?}", inst.len(), bad.len()))
}

fn criterion_4(corpus: &[Instance]) -> Line {
    let mut checked = 0;
    let mut excluded = Vec::new();
    let mut bad = Vec::new();
    for i in corpus {
        match (i.params.gamma.value, i.params.gamma_t.value) {
            (Some(g), Some(t)) => {
                checked += 1;
                if t != g && t != g + 1 {
                    bad.push(format!("{}: gamma {g} gamma_t {t}", i.label));
                }
            }
            _ => excluded.push(i.label.clone()),
        }
    }
    line(
        bad.is_empty(),
        format!(
            "gamma_t - gamma in {{0,1}} on {checked}/{} graphs; {} excluded, gamma_t undefined (isolated vertex): {excluded:?} {bad:?}",
            corpus.len(),
            excluded.len()
        ),
    )
}

fn criterion_5(corpus: &[Instance]) -> Line {
    let inst = direct_sum_instances(corpus);
    let radius_bad: Vec<String> = inst
        .iter()
        .filter(|i| i.params.metric.radius != Some(2))
        .map(|i| format!("{}: radius {:?}", i.label, i.params.metric.radius))
        .collect();
    let owned: Vec<Instance> = inst.iter().map(|i| (*i).clone()).collect();
    let results = run_checks(&owned, &["Thm 2.4"], &Allowlist::shipped());
    let center: Vec<_> = results.iter().filter(|r| r.part == "center").collect();
    let pass = center.iter().filter(|r| r.verdict == Verdict::Pass).count();
    let known = center.iter().filter(|r| r.verdict == Verdict::Discrepancy && r.known.is_some()).count();
    let other: Vec<String> = center
        .iter()
        .filter(|r| !(r.verdict == Verdict::Pass || (r.verdict == Verdict::Discrepancy && r.known.is_some())))
        .map(|r| format!("{}: {:?}", r.instance, r.verdict))
        .collect();
    line(
        radius_bad.is_empty() && other.is_empty(),
        format!(
            "radius 2 on {}/{} instances; center formula: {pass} match, {known} allowlisted (simple summand), {} unexplained {radius_bad:?} {other:?}",
            inst.len() - radius_bad.len(),
            inst.len(),
            other.len()
        ),
    )
}

fn criterion_6(corpus: &[Instance]) -> Line {
    let bad: Vec<String> = corpus
        .iter()
        .filter(|i| i.params.gamma.value.unwrap() > i.structure.associated_primes.len())
        .map(|i| format!("{}: gamma {:?} |Ass| {}", i.label, i.params.gamma.value, i.structure.associated_primes.len()))
        .collect();
    line(bad.is_empty(), format!("gamma <= |Ass(M)| on {}/{} instances {bad:?}", corpus.len() - bad.len(), corpus.len()))
}

struct Factor {
    prime: bool,
    gamma: usize,
}

fn factor(moduli: u64) -> Factor {
    let m = regular(&[moduli]);
    let lattice = enumerate_submodules(&m, &Caps::default()).unwrap();
    let g = build_ag(&lattice, Variant::Ag);
    Factor {
        prime: is_prime_submodule(&m, lattice.get(0)).unwrap(),
        gamma: oracle_gamma(&g.graph, DomVariant::Plain).unwrap(),
    }
}

fn criterion_7(corpus: &[Instance]) -> Line {
    let mut c_cases = 0;
    let mut d_cases = 0;
    let mut bad = Vec::new();
    for i in corpus.iter().filter(|i| i.module().ring().arity() == 2) {
        let moduli = i.module().ring().moduli();
        let (a, b) = (factor(moduli[0]), factor(moduli[1]));
        let gamma = oracle_gamma(&i.ag.graph, DomVariant::Plain).unwrap();
        let want = match (a.prime, b.prime) {
            (false, false) => {
                d_cases += 1;
                a.gamma + b.gamma
            }
            (false, true) => {
                c_cases += 1;
                a.gamma + 1
            }
            (true, false) => {
                c_cases += 1;
                b.gamma + 1
            }
            (true, true) => continue,
        };
        if gamma != want {
            bad.push(format!("{}: gamma {gamma}, formula {want}", i.label));
        }
    }
    // Splittings of cyclic rings are outside the product family; report
    // them alongside so the Z_30 failure of case (c) stays visible.
    let cyclic: Vec<Instance> = corpus.iter().filter(|i| i.module().ring().arity() == 1).cloned().collect();
    let mut split_disc: Vec<String> = run_checks(&cyclic, &["Thm 3.8"], &Allowlist::shipped())
        .into_iter()
        .filter(|r| r.verdict == Verdict::Discrepancy)
        .map(|r| format!("{} ({})", r.instance, r.part))
        .collect();
    split_disc.dedup();
    line(
        bad.is_empty() && c_cases + d_cases > 0,
        format!(
            "two-factor products Z_a x Z_b: {c_cases} case (c), {d_cases} case (d), {} mismatches {bad:?}; cyclic splittings off formula (allowlisted): {split_disc:?}",
            bad.len()
        ),
    )
}

fn criterion_8(corpus: &[Instance]) -> Line {
    let start = Instant::now();
    let mut graphs = 0;
    let mut bad = Vec::new();
    for i in corpus {
        for g in [&i.ag, &i.ag_star] {
            if g.n() > ORACLE_MAX_VERTICES {
                continue;
            }
            graphs += 1;
            let p = ParamReport::compute(&g.graph, DEFAULT_EXACT_CAP).unwrap();
            let gr = &g.graph;
            let pairs = [
                ("gamma", p.gamma.value, oracle_gamma(gr, DomVariant::Plain)),
                ("gamma_t", p.gamma_t.value, oracle_gamma(gr, DomVariant::Total)),
                ("gamma_c", p.gamma_c.value, oracle_gamma(gr, DomVariant::Connected)),
                ("gamma_cl", p.gamma_cl.value, oracle_gamma(gr, DomVariant::Clique)),
                ("gamma_pr", p.gamma_pr.value, oracle_gamma(gr, DomVariant::Paired)),
                ("ir", p.ir.value, Some(oracle::min_maximal_irredundant(gr).len())),
                ("chi", p.coloring.chi.value, Some(oracle::chromatic_number(gr))),
                ("cl", p.coloring.clique.value, Some(oracle::clique_number(gr))),
            ];
            for (name, solver, reference) in pairs {
                if solver != reference {
                    bad.push(format!("{} {}: {name} {solver:?} vs {reference:?}", i.label, g.variant.as_str()));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    line(
        bad.is_empty() && elapsed < ORACLE_LIMIT,
        format!("{graphs} graphs (AG and AG*, <= {ORACLE_MAX_VERTICES} vertices) x 8 parameters, {} mismatches, {elapsed:.2?} (limit {ORACLE_LIMIT:?}) {bad:?}", bad.len()),
    )
}

fn criterion_9(corpus: &[Instance]) -> Line {
    let pool: Vec<&Instance> = corpus.iter().filter(|i| i.ag.n() > 0).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut bad = Vec::new();
    for _ in 0..SAMPLES {
        let inst = pool[rng.gen_range(0..pool.len())];
        let g = &inst.ag.graph;
        let s = oracle::random_minimal_dominating_set(g, &mut rng);
        let minimal = set_predicates(g, &s).is_dominating
            && s.iter().all(|&u| {
                let rest: Vec<usize> = s.iter().copied().filter(|&v| v != u).collect();
                !set_predicates(g, &rest).is_dominating
            });
        if !minimal || !set_predicates(g, &s).is_maximal_irredundant {
            bad.push(format!("{}: {s:?} minimal={minimal}", inst.label));
        }
    }
    line(
        bad.is_empty(),
        format!("{SAMPLES} sampled minimal dominating sets over {} graphs (seed {SEED:#x}), {} violations {bad:?}", pool.len(), bad.len()),
    )
}

fn criterion_10() -> Line {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_annsub"))
            .args(["suite", "run", "--format", "json"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && !a.stdout.is_empty();
    line(
        same && a.status.code() == Some(0) && b.status.code() == Some(0),
        format!(
            "two `suite run --format json` invocations: {} bytes, identical = {same}, exit {:?}/{:?}",
            a.stdout.len(),
            a.status.code(),
            b.status.code()
        ),
    )
}

#[test]
fn acceptance() {
    let mut lines = vec![criterion_1()];
    let t = Instant::now();
    let corpus = corpus();
    let corpus_time = t.elapsed();
    lines.push(criterion_2(&corpus, corpus_time));
    lines.push(criterion_3(&corpus));
    lines.push(criterion_4(&corpus));
    lines.push(criterion_5(&corpus));
    lines.push(criterion_6(&corpus));
    lines.push(criterion_7(&corpus));
    lines.push(criterion_8(&corpus));
    lines.push(criterion_9(&corpus));
    lines.push(criterion_10());
    for (k, l) in lines.iter().enumerate() {
        println!("criterion {:>2}: {} - {}", k + 1, if l.pass { "PASS" } else { "FAIL" }, l.detail);
    }
    let failed: Vec<usize> = lines.iter().enumerate().filter(|(_, l)| !l.pass).map(|(k, _)| k + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
