//! One checker per claim. Expected values are recomputed on each instance
//! from the statement's own formula; nothing is taken from a table.

use serde_json::{json, Value};

use super::{Instance, Verdict};
use crate::algebra::{divisors_of, CombineMode, Ideal, RingElem, RingSpec};
use crate::graph::{build_ag, Variant};
use crate::invariants::{domination, oracle, set_predicates, DomVariant, UGraph, DEFAULT_EXACT_CAP};
use crate::module::{
    ann_of_submodule, enumerate_submodules, idempotent_decompose, is_prime_in, is_prime_submodule,
    is_sorted_subset, sorted_intersection, submodule_product, Caps, ModuleSpec,
};

/// Largest graph handed to the exhaustive oracle.
pub(crate) const ORACLE_LIMIT: usize = 16;

pub(crate) struct Outcome {
    pub part: String,
    pub verdict: Verdict,
    pub expected: Value,
    pub computed: Value,
    pub evidence: Value,
}

fn na(part: &str, reason: &str) -> Outcome {
    Outcome {
        part: part.to_string(),
        verdict: Verdict::NotApplicable,
        expected: Value::Null,
        computed: Value::Null,
        evidence: json!({ "reason": reason }),
    }
}

fn na_all(parts: &[&str], reason: &str) -> Vec<Outcome> {
    parts.iter().map(|p| na(p, reason)).collect()
}

/// A statement of the claim itself: failure is a discrepancy.
fn literal(part: &str, expected: Value, computed: Value, holds: bool, evidence: Value) -> Outcome {
    Outcome {
        part: part.to_string(),
        verdict: if holds { Verdict::Pass } else { Verdict::Discrepancy },
        expected,
        computed,
        evidence,
    }
}

/// An internal cross-check: failure is a bug.
fn internal(part: &str, expected: Value, computed: Value, ok: bool, evidence: Value) -> Outcome {
    Outcome {
        part: part.to_string(),
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        expected,
        computed,
        evidence,
    }
}

/// The first unmet hypothesis, if any.
fn unmet(conditions: &[(bool, &'static str)]) -> Option<&'static str> {
    conditions.iter().find(|(ok, _)| !ok).map(|(_, why)| *why)
}

const NOT_VERTEX: &str = "M is a vertex of AG(M)";
const NONEMPTY: &str = "AG(M) has no vertices";
const TOTAL_DEFINED: &str = "AG(M) has an isolated vertex, so gamma_t is undefined";

fn standing(inst: &Instance) -> (bool, &'static str) {
    (!inst.m_is_vertex, NOT_VERTEX)
}

fn nonempty(inst: &Instance) -> (bool, &'static str) {
    (inst.ag.n() > 0, NONEMPTY)
}

fn total_defined(inst: &Instance) -> (bool, &'static str) {
    (inst.params.gamma_t.value.is_some(), TOTAL_DEFINED)
}

fn gamma(inst: &Instance) -> usize {
    inst.params.gamma.value.expect("plain domination is always feasible")
}

fn vertex_labels(inst: &Instance, positions: &[usize]) -> Vec<String> {
    positions.iter().map(|&p| inst.ag.labels[p].clone()).collect()
}

fn lattice_labels(inst: &Instance, indices: &[usize]) -> Vec<String> {
    indices.iter().map(|&i| inst.lattice.label(i)).collect()
}

fn scale_set(module: &ModuleSpec, r: &RingElem, elems: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = elems.iter().map(|&m| module.scale(r, m)).collect();
    v.sort_unstable();
    v.dedup();
    v
}

fn all_elements(module: &ModuleSpec) -> Vec<u32> {
    (0..module.order() as u32).collect()
}

fn nontrivial_idempotents(inst: &Instance) -> Vec<RingElem> {
    let ring = inst.module().ring();
    inst.idempotents
        .iter()
        .filter(|e| !e.is_zero() && **e != ring.one())
        .cloned()
        .collect()
}

/// Nonzero idempotents `e` with `ef ∈ {0, e}` for every idempotent `f`.
fn primitive_idempotents(ring: &RingSpec, idempotents: &[RingElem]) -> Vec<RingElem> {
    idempotents
        .iter()
        .filter(|e| !e.is_zero())
        .filter(|e| {
            idempotents.iter().all(|f| {
                let ef = ring.mul(e, f);
                ef.is_zero() || ef == **e
            })
        })
        .cloned()
        .collect()
}

fn all_ideals(ring: &RingSpec) -> Vec<Ideal> {
    let mut tuples: Vec<Vec<u64>> = vec![Vec::new()];
    for &n in ring.moduli() {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                divisors_of(n).into_iter().map(move |d| {
                    let mut t = t.clone();
                    t.push(d);
                    t
                })
            })
            .collect();
    }
    tuples.into_iter().map(|d| ring.ideal(d).expect("divisor tuple")).collect()
}

/// Lattice indices of the nonzero submodules contained in `elems`.
fn nonzero_within(inst: &Instance, elems: &[u32]) -> Vec<usize> {
    let subs = inst.lattice.submodules();
    (0..subs.len())
        .filter(|&k| !subs[k].is_zero() && is_sorted_subset(subs[k].elements(), elems))
        .collect()
}

/// Whether the submodule with elements `elems` is simple as a module.
fn is_simple_within(inst: &Instance, elems: &[u32]) -> bool {
    elems.len() > 1 && nonzero_within(inst, elems).len() == 1
}

/// Whether `(0)` is a prime submodule of the submodule `elems`.
fn is_prime_within(module: &ModuleSpec, elems: &[u32]) -> bool {
    elems.len() > 1 && is_prime_in(module, &[0], elems)
}

/// Idempotents `e` with `eM` simple and `(1-e)M` a prime module.
fn simple_prime_splittings(inst: &Instance) -> Vec<String> {
    let module = inst.module();
    let ring = module.ring();
    let all = all_elements(module);
    inst.idempotents
        .iter()
        .filter(|e| {
            let f = ring.sub(&ring.one(), e);
            is_simple_within(inst, &scale_set(module, e, &all)) && is_prime_within(module, &scale_set(module, &f, &all))
        })
        .map(|e| e.to_string())
        .collect()
}

fn ann_is_nil(inst: &Instance) -> bool {
    let ring = inst.module().ring();
    ring.ideal_le(&inst.structure.annihilator, &ring.nilradical())
}

fn universal_vertices(g: &UGraph) -> Vec<usize> {
    (0..g.n())
        .filter(|&v| (0..g.n()).all(|u| u == v || g.has_edge(u, v)))
        .collect()
}

fn distance_table(inst: &Instance) -> Value {
    json!({
        "labels": inst.ag.labels,
        "distances": inst.params.metric.distances,
        "eccentricity": inst.params.metric.eccentricity,
    })
}

/// Graph positions of the given lattice indices, plus the labels of any that
/// are not vertices.
fn positions_of(inst: &Instance, indices: &[usize]) -> (Vec<usize>, Vec<String>) {
    let mut pos = Vec::new();
    let mut missing = Vec::new();
    for &k in indices {
        match inst.ag.position(k) {
            Some(p) => pos.push(p),
            None => missing.push(inst.lattice.label(k)),
        }
    }
    (pos, missing)
}

/// Radius and center against a formula for the center given as lattice
/// indices.
fn radius_and_center(
    inst: &Instance,
    radius_ok: impl Fn(usize) -> bool,
    radius_expected: Value,
    center_formula: &[usize],
    formula_text: &str,
) -> Vec<Outcome> {
    let metric = &inst.params.metric;
    let (formula, missing) = positions_of(inst, center_formula);
    let radius = metric.radius;
    let center_holds = missing.is_empty() && formula == metric.center;
    vec![
        literal(
            "radius",
            radius_expected,
            json!(radius),
            radius.is_some_and(radius_ok),
            json!({ "eccentricity": metric.eccentricity, "labels": inst.ag.labels }),
        ),
        literal(
            "center",
            json!({ "formula": formula_text, "set": lattice_labels(inst, center_formula) }),
            json!(vertex_labels(inst, &metric.center)),
            center_holds,
            json!({
                "table": distance_table(inst),
                "formula_members_not_vertices": missing,
                "center_within_formula": metric.center.iter().all(|c| formula.contains(c)),
            }),
        ),
    ]
}

pub(crate) fn check(claim: &str, inst: &Instance) -> Vec<Outcome> {
    match claim {
        "Prop 1.1" => prop_1_1(inst),
        "Lem 1.2" => lem_1_2(inst),
        "Lem 1.4" => lem_1_4(inst),
        "Prop 1.5" => prop_1_5(inst),
        "Thm 1.6" => thm_1_6(inst),
        "Thm 1.7" => thm_1_7(inst),
        "Cor 1.8" => cor_1_8(inst),
        "Prop 1.9" => prop_1_9(inst),
        "Rem 2.1" => rem_2_1(inst),
        "Thm 2.2" => thm_2_2(inst),
        "Cor 2.3" => cor_2_3(inst),
        "Thm 2.4" => thm_2_4(inst),
        "Cor 2.5" => cor_2_5(inst),
        "Thm 2.6" => thm_2_6(inst),
        "Cor 2.7" => cor_2_7(inst),
        "Cor 2.8" => cor_2_8(inst),
        "Thm 3.1" => thm_3_1(inst),
        "Thm 3.2" => thm_3_2(inst),
        "Thm 3.3" => thm_3_3(inst),
        "Cor 3.4" => cor_3_4(inst),
        "Thm 3.5" => thm_3_5(inst),
        "Thm 3.6" => thm_3_6(inst),
        "Thm 3.7" => thm_3_7(inst),
        "Thm 3.8" => thm_3_8(inst),
        "AG* connectivity" => ag_star(inst),
        "Solver agreement" => solver_agreement(inst),
        _ => Vec::new(),
    }
}

fn prop_1_1(inst: &Instance) -> Vec<Outcome> {
    const PARTS: [&str; 5] = ["a", "b", "c", "d", "e"];
    let es = nontrivial_idempotents(inst);
    if es.is_empty() {
        return na_all(&PARTS, "R has no idempotent other than 0 and 1");
    }
    let module = inst.module();
    let ring = module.ring();
    let subs = inst.lattice.submodules();
    let mut bad: [Vec<Value>; 5] = Default::default();
    for e in &es {
        let f = ring.sub(&ring.one(), e);
        let (r1, r2) = (ring.principal(e), ring.principal(&f));
        let direct_ring = ring.is_zero_ideal(&ring.combine_unchecked(&r1, &r2, CombineMode::Intersection))
            && ring.combine_unchecked(&r1, &r2, CombineMode::Sum) == ring.unit_ideal()
            && ring.ideal_order(&r1) * ring.ideal_order(&r2) == ring.order();
        if !direct_ring {
            bad[0].push(json!({ "e": e.to_string() }));
        }

        let (m1, m2) = idempotent_decompose(module, e).expect("e is idempotent");
        let (m1, m2) = (m1.elements().to_vec(), m2.elements().to_vec());
        if (m1.len() * m2.len()) as u64 != module.order() || sorted_intersection(&m1, &m2) != [0] {
            bad[1].push(json!({ "e": e.to_string() }));
        }

        let split: Vec<(Vec<u32>, Vec<u32>, Ideal, Ideal)> = subs
            .iter()
            .map(|n| {
                let n1 = scale_set(module, e, n.elements());
                let n2 = scale_set(module, &f, n.elements());
                let c1 = module.colon(&n1, &m1);
                let c2 = module.colon(&n2, &m2);
                (n1, n2, c1, c2)
            })
            .collect();
        for (k, (n1, n2, c1, c2)) in split.iter().enumerate() {
            let n = subs[k].elements();
            let direct = n1.len() * n2.len() == n.len()
                && is_sorted_subset(n1, n)
                && is_sorted_subset(n2, n)
                && is_sorted_subset(n1, &m1)
                && is_sorted_subset(n2, &m2);
            let colon = ring.combine_unchecked(c1, c2, CombineMode::Intersection);
            if !direct || colon != *subs[k].colon() {
                bad[2].push(json!({
                    "e": e.to_string(),
                    "N": inst.lattice.label(k),
                    "colon": subs[k].colon().to_string(),
                    "componentwise": colon.to_string(),
                }));
            }
        }

        for i in 0..subs.len() {
            for k in i..subs.len() {
                let nk = submodule_product(module, &subs[i], &subs[k]);
                let p1 = module.ideal_times(&ring.combine_unchecked(&split[i].2, &split[k].2, CombineMode::Product), &m1);
                let p2 = module.ideal_times(&ring.combine_unchecked(&split[i].3, &split[k].3, CombineMode::Product), &m2);
                let ok = p1.len() * p2.len() == nk.len()
                    && is_sorted_subset(&p1, nk.elements())
                    && is_sorted_subset(&p2, nk.elements());
                if !ok {
                    bad[3].push(json!({
                        "e": e.to_string(),
                        "N": inst.lattice.label(i),
                        "K": inst.lattice.label(k),
                    }));
                }
            }
        }

        let proper: Vec<usize> = (0..subs.len()).filter(|&k| subs[k].is_proper()).collect();
        let actual: Vec<usize> = proper
            .iter()
            .copied()
            .filter(|&k| is_prime_submodule(module, &subs[k]).expect("proper"))
            .collect();
        let predicted: Vec<usize> = proper
            .iter()
            .copied()
            .filter(|&k| {
                let (n1, n2) = (&split[k].0, &split[k].1);
                (*n2 == m2 && is_prime_in(module, n1, &m1)) || (*n1 == m1 && is_prime_in(module, n2, &m2))
            })
            .collect();
        if actual != predicted {
            bad[4].push(json!({
                "e": e.to_string(),
                "prime_submodules": lattice_labels(inst, &actual),
                "from_factors": lattice_labels(inst, &predicted),
            }));
        }
    }
    let expected = [
        "R = eR x (1-e)R",
        "M = eM + (1-e)M, direct",
        "N = eN + (1-e)N with (N:M) the componentwise colon",
        "NK = N1K1 + N2K2 with products taken in eM and (1-e)M",
        "prime submodules are P + (1-e)M and eM + Q",
    ];
    let idem: Vec<String> = es.iter().map(|e| e.to_string()).collect();
    PARTS
        .iter()
        .enumerate()
        .map(|(i, part)| {
            literal(
                part,
                json!(expected[i]),
                json!({ "violations": bad[i].len() }),
                bad[i].is_empty(),
                json!({ "idempotents": idem, "violations": bad[i] }),
            )
        })
        .collect()
}

fn lem_1_2(inst: &Instance) -> Vec<Outcome> {
    let ring = inst.module().ring();
    let one = ring.one();

    let prims = primitive_idempotents(ring, &inst.idempotents);
    let sum = prims.iter().fold(ring.zero(), |acc, e| ring.add(&acc, e));
    let orthogonal = prims
        .iter()
        .enumerate()
        .all(|(i, e)| prims[i + 1..].iter().all(|f| ring.mul(e, f).is_zero()));
    let order_product: u64 = prims.iter().map(|e| ring.ideal_order(&ring.principal(e))).product();
    let splits_ok = sum == one && orthogonal && order_product == ring.order();

    let ideals: Vec<Ideal> = all_ideals(ring).into_iter().filter(|i| !ring.is_zero_ideal(i)).collect();
    let mut unmatched = Vec::new();
    let mut direct_sums = 0;
    for i in &ideals {
        for j in &ideals {
            let direct = ring.is_zero_ideal(&ring.combine_unchecked(i, j, CombineMode::Intersection))
                && ring.ideal_order(i) * ring.ideal_order(j) == ring.order();
            if !direct {
                continue;
            }
            direct_sums += 1;
            let from_idempotent = inst.idempotents.iter().any(|e| {
                ring.principal(e) == *i && ring.principal(&ring.sub(&one, e)) == *j
            });
            if !from_idempotent {
                unmatched.push(json!([i.to_string(), j.to_string()]));
            }
        }
    }
    vec![
        literal(
            "idempotent_splittings",
            json!("primitive idempotents are orthogonal, sum to 1, and R is the direct product of the Re_i"),
            json!({ "sum_is_one": sum == one, "orthogonal": orthogonal, "order_product": order_product }),
            splits_ok,
            json!({ "primitive_idempotents": prims.iter().map(|e| e.to_string()).collect::<Vec<_>>() }),
        ),
        literal(
            "direct_sums",
            json!("every additive decomposition R = I + J, I and J nonzero, comes from an idempotent"),
            json!({ "decompositions": direct_sums, "unmatched": unmatched.len() }),
            unmatched.is_empty(),
            json!({ "unmatched": unmatched }),
        ),
    ]
}

fn lem_1_4(inst: &Instance) -> Vec<Outcome> {
    if !ann_is_nil(inst) {
        return vec![na("minimal", "Ann(M) is not nil")];
    }
    let module = inst.module();
    let all = all_elements(module);
    let images: Vec<Vec<u32>> = inst.idempotents.iter().map(|e| scale_set(module, e, &all)).collect();
    let mut rows = Vec::new();
    let mut holds = true;
    for &k in &inst.structure.minimal_submodules {
        let square_zero = inst.lattice.product_is_zero(k, k);
        let summand = images.iter().any(|img| img == inst.lattice.get(k).elements());
        holds &= square_zero || summand;
        rows.push(json!({
            "N": inst.lattice.label(k),
            "square_zero": square_zero,
            "is_eM": summand,
        }));
    }
    vec![literal(
        "minimal",
        json!("N^2 = (0) or N = eM for every minimal N"),
        json!(rows),
        holds,
        json!({}),
    )]
}

fn prop_1_5(inst: &Instance) -> Vec<Outcome> {
    let subs = inst.lattice.submodules();
    let missing: Vec<usize> = (0..subs.len())
        .filter(|&k| !subs[k].is_zero() && subs[k].is_proper() && inst.ag.position(k).is_none())
        .collect();
    let candidates = (0..subs.len()).filter(|&k| !subs[k].is_zero() && subs[k].is_proper()).count();
    vec![literal(
        "vertices",
        json!("every nonzero proper submodule is a vertex"),
        json!({ "nonzero_proper": candidates, "vertices": inst.ag.n() }),
        missing.is_empty(),
        json!({ "not_vertices": lattice_labels(inst, &missing) }),
    )]
}

fn thm_1_6(inst: &Instance) -> Vec<Outcome> {
    if !ann_is_nil(inst) {
        return vec![na("equivalence", "Ann(M) is not nil")];
    }
    let module = inst.module();
    let ring = module.ring();
    let universal = universal_vertices(&inst.ag.graph);
    let splittings = simple_prime_splittings(inst);

    let mut zd: Vec<u64> = inst.structure.zero_divisors.iter().map(|r| ring.code_of(r)).collect();
    zd.sort_unstable();
    let gens = module.component_generators();
    let subs = inst.lattice.submodules();
    let zero_divisor_witnesses: Vec<usize> = (0..subs.len())
        .filter(|&k| !subs[k].is_zero() && subs[k].is_proper())
        .filter(|&k| {
            let l = module.ideal_times(subs[k].colon(), &gens);
            let ann = module.colon(&[0], &l);
            let mut codes: Vec<u64> = ring.ideal_elements(&ann).iter().map(|r| ring.code_of(r)).collect();
            codes.sort_unstable();
            codes == zd
        })
        .collect();

    let lhs = !universal.is_empty();
    let rhs = !splittings.is_empty() || !zero_divisor_witnesses.is_empty() || inst.m_is_vertex;
    vec![literal(
        "equivalence",
        json!({ "universal_vertex_exists": rhs }),
        json!({ "universal_vertex_exists": lhs }),
        lhs == rhs,
        json!({
            "universal_vertices": vertex_labels(inst, &universal),
            "simple_prime_splittings": splittings,
            "N_with_Z(M)=Ann((N:M)M)": lattice_labels(inst, &zero_divisor_witnesses),
            "m_is_vertex": inst.m_is_vertex,
            "interpretation": "prime module: (0) is a prime submodule",
        }),
    )]
}

/// The four conditions of the bipartite characterisations, on the graph
/// `g` with colouring data `c`.
fn bipartite_conditions(n: usize, c: &crate::invariants::ColoringReport) -> (bool, bool, bool) {
    (
        c.chi.value == Some(2),
        c.is_bipartite && n >= 2,
        c.is_complete_bipartite,
    )
}

fn four_way(part: &str, a: bool, b: bool, c: bool, d: bool, d_text: &str, evidence: Value) -> Outcome {
    literal(
        part,
        json!("(a), (b), (c) and (d) all equivalent"),
        json!({ "a_chi_2": a, "b_bipartite": b, "c_complete_bipartite": c, d_text: d }),
        a == b && b == c && c == d,
        evidence,
    )
}

fn thm_1_7(inst: &Instance) -> Vec<Outcome> {
    if !inst.structure.is_faithful {
        return vec![na("equivalence", "M is not faithful")];
    }
    let c = &inst.star_coloring;
    let (a, b, cc) = bipartite_conditions(inst.ag_star.n(), c);
    let d = (inst.reduced && inst.min_primes == 2) || c.is_star;
    vec![four_way(
        "equivalence",
        a,
        b,
        cc,
        d,
        "d_reduced_two_min_primes_or_star",
        json!({
            "graph": "AG*",
            "n": inst.ag_star.n(),
            "edges": inst.ag_star.graph.edge_count(),
            "parts": c.parts,
            "is_star": c.is_star,
            "reduced": inst.reduced,
            "min_primes": inst.min_primes,
        }),
    )]
}

fn cor_1_8(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = unmet(&[
        (inst.reduced, "R is not reduced"),
        (inst.structure.is_faithful, "M is not faithful"),
    ]) {
        return vec![na("equivalence", why)];
    }
    let c = &inst.star_coloring;
    let (a, b, cc) = bipartite_conditions(inst.ag_star.n(), c);
    vec![four_way(
        "equivalence",
        a,
        b,
        cc,
        inst.min_primes == 2,
        "d_two_min_primes",
        json!({ "graph": "AG*", "n": inst.ag_star.n(), "min_primes": inst.min_primes }),
    )]
}

fn prop_1_9(inst: &Instance) -> Vec<Outcome> {
    let g = &inst.ag.graph;
    if g.n() > ORACLE_LIMIT {
        return vec![na("minimal_dominating", "graph too large for exhaustive enumeration")];
    }
    let sets = oracle::all_minimal_dominating_sets(g);
    let bad: Vec<Vec<String>> = sets
        .iter()
        .filter(|s| !set_predicates(g, s).is_maximal_irredundant)
        .map(|s| vertex_labels(inst, s))
        .collect();
    vec![literal(
        "minimal_dominating",
        json!("every minimal dominating set is maximal irredundant"),
        json!({ "minimal_dominating_sets": sets.len(), "violations": bad.len() }),
        bad.is_empty(),
        json!({ "violations": bad }),
    )]
}

fn rem_2_1(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = unmet(&[
        (ann_is_nil(inst), "Ann(M) is not nil"),
        (inst.structure.is_domain_module, "M is not a domain module"),
    ]) {
        return vec![na("gamma_one", why)];
    }
    let splittings = simple_prime_splittings(inst);
    let lhs = gamma(inst) == 1;
    let rhs = !splittings.is_empty();
    vec![literal(
        "gamma_one",
        json!({ "gamma_is_one": rhs }),
        json!({ "gamma_is_one": lhs }),
        lhs == rhs,
        json!({
            "gamma": gamma(inst),
            "simple_prime_splittings": splittings,
            "interpretation": "domain module: Z(M) = {0}",
        }),
    )]
}

fn unique_maximal_ann(inst: &Instance) -> Vec<u32> {
    let n = inst.structure.max_submodules[0];
    ann_of_submodule(inst.module(), inst.lattice.get(n)).elements().to_vec()
}

fn thm_2_2(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = unmet(&[
        (inst.structure.is_local, "M is not local"),
        standing(inst),
        nonempty(inst),
    ]) {
        return na_all(&["radius", "center"], why);
    }
    let formula = nonzero_within(inst, &unique_maximal_ann(inst));
    radius_and_center(inst, |r| r <= 1, json!([0, 1]), &formula, "nonzero K within ann(N)")
}

fn cor_2_3(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = unmet(&[
        (inst.structure.is_local, "M is not local"),
        standing(inst),
        nonempty(inst),
    ]) {
        return na_all(&["a", "b"], why);
    }
    let g = &inst.ag.graph;
    let gm = gamma(inst);
    let ann_n = unique_maximal_ann(inst);
    let (within, _) = positions_of(inst, &nonzero_within(inst, &ann_n));
    let gamma_sets = oracle::dominating_sets_of_size(g, gm);
    // gamma is 1 here, so the gamma-sets are singletons {K} with K within ann(N).
    let singletons: Vec<Vec<usize>> = within.iter().map(|&v| vec![v]).collect();
    let mut sorted_gamma_sets = gamma_sets.clone();
    sorted_gamma_sets.sort();
    let show = |sets: &[Vec<usize>]| sets.iter().map(|s| vertex_labels(inst, s)).collect::<Vec<_>>();
    vec![
        literal("a", json!(1), json!(gm), gm == 1, json!({ "witness": vertex_labels(inst, &inst.params.gamma.witness) })),
        literal(
            "b",
            json!({ "gamma_sets": show(&singletons) }),
            json!({ "gamma_sets": show(&sorted_gamma_sets) }),
            sorted_gamma_sets == singletons,
            json!({ "ann_N_members": vertex_labels(inst, &within), "table": distance_table(inst) }),
        ),
    ]
}

fn direct_sum_hypotheses(inst: &Instance) -> Option<&'static str> {
    unmet(&[
        (inst.structure.local_summands >= 2, "fewer than two local summands"),
        (!inst.structure.is_two_simple(), "M is a sum of two simple modules"),
        standing(inst),
        nonempty(inst),
    ])
}

fn thm_2_4(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = direct_sum_hypotheses(inst) {
        return na_all(&["radius", "center"], why);
    }
    let j = inst.lattice.get(inst.structure.jacobson).elements().to_vec();
    let formula = nonzero_within(inst, &j);
    radius_and_center(inst, |r| r == 2, json!(2), &formula, "nonzero K within J(M)")
}

fn cor_2_5(inst: &Instance) -> Vec<Outcome> {
    let s = &inst.structure;
    if let Some(why) = unmet(&[
        (s.local_summands >= 2, "fewer than two summands"),
        (s.simple_summands == s.local_summands, "some summand is not simple"),
        standing(inst),
        nonempty(inst),
    ]) {
        return na_all(&["radius", "center"], why);
    }
    let module = inst.module();
    let ring = module.ring();
    let all = all_elements(module);
    let mut formula: Vec<usize> = primitive_idempotents(ring, &inst.idempotents)
        .iter()
        .filter_map(|e| inst.lattice.index_of(&scale_set(module, e, &all)))
        .filter(|&k| !inst.lattice.get(k).is_zero())
        .collect();
    formula.sort_unstable();
    formula.dedup();
    radius_and_center(inst, |r| r == 1 || r == 2, json!([1, 2]), &formula, "union of the simple summands e_i M")
}

fn thm_2_6(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = direct_sum_hypotheses(inst) {
        return vec![na("gamma", why)];
    }
    let n = inst.structure.local_summands;
    vec![literal(
        "gamma",
        json!(n),
        json!(gamma(inst)),
        gamma(inst) == n,
        json!({ "witness": vertex_labels(inst, &inst.params.gamma.witness) }),
    )]
}

fn cor_2_7(inst: &Instance) -> Vec<Outcome> {
    const PARTS: [&str; 5] = ["ir", "gamma_c", "gamma_t", "gamma_cl", "gamma_pr"];
    if let Some(why) = direct_sum_hypotheses(inst) {
        return na_all(&PARTS, why);
    }
    let n = inst.structure.local_summands;
    let p = &inst.params;
    let pr_expected = if n % 2 == 0 { n } else { n + 1 };
    [
        ("ir", &p.ir, n),
        ("gamma_c", &p.gamma_c, n),
        ("gamma_t", &p.gamma_t, n),
        ("gamma_cl", &p.gamma_cl, n),
        ("gamma_pr", &p.gamma_pr, pr_expected),
    ]
    .into_iter()
    .map(|(part, param, want)| {
        literal(
            part,
            json!(want),
            json!(param.value),
            param.value == Some(want),
            json!({ "n": n, "witness": vertex_labels(inst, &param.witness) }),
        )
    })
    .collect()
}

fn cor_2_8(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = unmet(&[standing(inst), nonempty(inst)]) {
        return vec![na("maximal_count", why)];
    }
    let gm = gamma(inst);
    let maximal = inst.structure.max_submodules.len();
    let two_simple = inst.structure.is_two_simple();
    vec![literal(
        "maximal_count",
        json!({ "two_simple_or_maximal_submodules": gm }),
        json!({ "two_simple": two_simple, "maximal_submodules": maximal }),
        two_simple || maximal == gm,
        json!({ "maximal": lattice_labels(inst, &inst.structure.max_submodules) }),
    )]
}

fn thm_3_1(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = unmet(&[standing(inst), nonempty(inst), total_defined(inst)]) {
        return vec![na("dichotomy", why)];
    }
    let (gm, gt) = (gamma(inst), inst.params.gamma_t.value.unwrap());
    vec![literal(
        "dichotomy",
        json!([gm, gm + 1]),
        json!(gt),
        gt == gm || gt == gm + 1,
        json!({ "gamma": gm, "gamma_t_witness": vertex_labels(inst, &inst.params.gamma_t.witness) }),
    )]
}

fn thm_3_2(inst: &Instance) -> Vec<Outcome> {
    let module = inst.module();
    let subs = inst.lattice.submodules();
    let vertices = &inst.ag.vertices;
    let maximal: Vec<usize> = vertices
        .iter()
        .copied()
        .filter(|&k| {
            !vertices
                .iter()
                .any(|&j| subs[j].len() > subs[k].len() && subs[k].is_subset_of(&subs[j]))
        })
        .collect();
    let constructible = maximal.iter().all(|&k| {
        (0..module.order() as u32).any(|m| {
            let rm = module.submodule(module.generated(&[m]));
            ann_of_submodule(module, &rm).elements() == subs[k].elements()
        })
    });
    if let Some(why) = unmet(&[
        standing(inst),
        (maximal.len() > 1, "fewer than two maximal vertices"),
        total_defined(inst),
        (constructible, "some maximal vertex is not ann(Rm) for any m"),
    ]) {
        return vec![na("gamma_t", why)];
    }
    let gt = inst.params.gamma_t.value.unwrap();
    vec![literal(
        "gamma_t",
        json!(maximal.len()),
        json!(gt),
        gt == maximal.len(),
        json!({ "maximal_vertices": lattice_labels(inst, &maximal) }),
    )]
}

fn thm_3_3(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = unmet(&[
        (inst.reduced, "R is not reduced"),
        (inst.structure.is_faithful, "M is not faithful"),
        standing(inst),
        nonempty(inst),
        (inst.ag.n() == 0 || gamma(inst) > 1, "gamma is 1"),
    ]) {
        return na_all(&["gamma", "gamma_t"], why);
    }
    let min = inst.min_primes;
    let p = &inst.params;
    vec![
        literal("gamma", json!(min), json!(p.gamma.value), p.gamma.value == Some(min), json!({ "min_primes": min })),
        literal("gamma_t", json!(min), json!(p.gamma_t.value), p.gamma_t.value == Some(min), json!({ "min_primes": min })),
    ]
}

fn cor_3_4(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = unmet(&[
        (inst.reduced, "R is not reduced"),
        (inst.structure.is_faithful, "M is not faithful"),
        standing(inst),
    ]) {
        return vec![na("equivalence", why)];
    }
    let c = &inst.params.coloring;
    let n = inst.ag.n();
    literal_four(
        n > 0 && gamma(inst) == 2,
        c.is_bipartite && n >= 2,
        c.is_complete_bipartite,
        inst.min_primes == 2,
        json!({ "gamma": gamma(inst), "n": n, "edges": inst.params.m, "min_primes": inst.min_primes }),
    )
}

fn literal_four(a: bool, b: bool, c: bool, d: bool, evidence: Value) -> Vec<Outcome> {
    vec![literal(
        "equivalence",
        json!("(a), (b), (c) and (d) all equivalent"),
        json!({ "a_gamma_2": a, "b_bipartite": b, "c_complete_bipartite": c, "d_two_min_primes": d }),
        a == b && b == c && c == d,
        evidence,
    )]
}

fn thm_3_5(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = unmet(&[
        (inst.structure.is_faithful, "M is not faithful"),
        standing(inst),
        nonempty(inst),
        (inst.params.coloring.is_bipartite, "AG(M) is not bipartite"),
    ]) {
        return vec![na("gamma", why)];
    }
    vec![literal("gamma", json!("<= 2"), json!(gamma(inst)), gamma(inst) <= 2, json!({}))]
}

fn thm_3_6(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = direct_sum_hypotheses(inst).or_else(|| unmet(&[total_defined(inst)])) {
        return na_all(&["gamma", "gamma_t"], why);
    }
    let min = inst.min_primes;
    let p = &inst.params;
    vec![
        literal("gamma", json!(min), json!(p.gamma.value), p.gamma.value == Some(min), json!({ "min_primes": min })),
        literal("gamma_t", json!(min), json!(p.gamma_t.value), p.gamma_t.value == Some(min), json!({ "min_primes": min })),
    ]
}

fn thm_3_7(inst: &Instance) -> Vec<Outcome> {
    if let Some(why) = unmet(&[standing(inst)]) {
        return vec![na("bound", why)];
    }
    let ass = &inst.structure.associated_primes;
    vec![literal(
        "bound",
        json!(format!("<= {}", ass.len())),
        json!(gamma(inst)),
        gamma(inst) <= ass.len(),
        json!({ "associated_primes": ass.iter().map(|p| p.to_string()).collect::<Vec<_>>() }),
    )]
}

struct Factor {
    label: String,
    prime: bool,
    simple: bool,
    gamma: usize,
}

fn factor(module: &ModuleSpec, e: &RingElem) -> Option<Factor> {
    let m = module.idempotent_factor(e).ok()?;
    if m.order() < 2 {
        return None;
    }
    let lattice = enumerate_submodules(&m, &Caps::default()).ok()?;
    let g = build_ag(&lattice, Variant::Ag);
    let gamma = domination(&g.graph, DomVariant::Plain, DEFAULT_EXACT_CAP).ok()?.exact_value()?;
    Some(Factor {
        label: m.to_string(),
        prime: is_prime_submodule(&m, lattice.get(0)).unwrap_or(false),
        simple: lattice.len() == 2,
        gamma,
    })
}

/// Checked once per splitting `M = eM x (1-e)M`; the part names the case
/// of the statement the splitting falls under.
fn thm_3_8(inst: &Instance) -> Vec<Outcome> {
    let module = inst.module();
    let ring = module.ring();
    let splits: Vec<(RingElem, RingElem)> = nontrivial_idempotents(inst)
        .into_iter()
        .map(|e| {
            let f = ring.sub(&ring.one(), &e);
            (e, f)
        })
        .filter(|(e, f)| ring.code_of(e) < ring.code_of(f))
        .collect();
    if let Some(why) = unmet(&[standing(inst), (!splits.is_empty(), "M has no splitting into two nonzero factors")]) {
        return vec![na("split", why)];
    }
    let mut out = Vec::new();
    for (e, f) in splits {
        let (Some(a), Some(b)) = (factor(module, &e), factor(module, &f)) else {
            out.push(na("split", "a factor is zero or exceeds the caps"));
            continue;
        };
        let (case, want) = if (a.simple && b.prime) || (b.simple && a.prime) {
            ("a", 1)
        } else if a.prime && b.prime {
            ("b", 2)
        } else if a.prime != b.prime {
            let non_prime = if a.prime { &b } else { &a };
            ("c", non_prime.gamma + 1)
        } else {
            ("d", a.gamma + b.gamma)
        };
        let side = |x: &Factor| json!({ "module": x.label, "prime": x.prime, "simple": x.simple, "gamma": x.gamma });
        out.push(literal(
            case,
            json!(want),
            json!(gamma(inst)),
            gamma(inst) == want,
            json!({ "e": e.to_string(), "eM": side(&a), "(1-e)M": side(&b) }),
        ));
    }
    out
}

fn ag_star(inst: &Instance) -> Vec<Outcome> {
    let connected = inst.star_coloring_connected();
    let mut out = vec![literal(
        "connected",
        json!(true),
        json!(connected),
        connected,
        json!({ "n": inst.ag_star.n(), "labels": inst.ag_star.labels }),
    )];
    if inst.m_is_vertex {
        out.push(na("equals_AG", NOT_VERTEX));
    } else {
        let same = inst.ag.vertices == inst.ag_star.vertices && inst.ag.graph == inst.ag_star.graph;
        out.push(internal(
            "equals_AG",
            json!(true),
            json!(same),
            same,
            json!({ "AG": inst.ag.labels, "AG*": inst.ag_star.labels }),
        ));
    }
    out
}

impl Instance {
    fn star_coloring_connected(&self) -> bool {
        crate::invariants::metric_report(&self.ag_star.graph).is_connected
    }
}

fn solver_agreement(inst: &Instance) -> Vec<Outcome> {
    let g = &inst.ag.graph;
    if g.n() > ORACLE_LIMIT {
        return vec![na("oracle", "graph too large for the exhaustive oracle")];
    }
    let p = &inst.params;
    let dom = |v| oracle::min_dominating(g, v).map(|s| s.len());
    let pairs = [
        ("gamma", p.gamma.value, dom(DomVariant::Plain)),
        ("gamma_t", p.gamma_t.value, dom(DomVariant::Total)),
        ("gamma_c", p.gamma_c.value, dom(DomVariant::Connected)),
        ("gamma_cl", p.gamma_cl.value, dom(DomVariant::Clique)),
        ("gamma_pr", p.gamma_pr.value, dom(DomVariant::Paired)),
        ("ir", p.ir.value, Some(oracle::min_maximal_irredundant(g).len())),
        ("chi", p.coloring.chi.value, Some(oracle::chromatic_number(g))),
        ("clique", p.coloring.clique.value, Some(oracle::clique_number(g))),
    ];
    let solver: serde_json::Map<String, Value> = pairs.iter().map(|(k, s, _)| (k.to_string(), json!(s))).collect();
    let reference: serde_json::Map<String, Value> = pairs.iter().map(|(k, _, o)| (k.to_string(), json!(o))).collect();
    let mismatches: Vec<&str> = pairs.iter().filter(|(_, s, o)| s != o).map(|(k, _, _)| *k).collect();
    vec![internal(
        "oracle",
        Value::Object(reference),
        Value::Object(solver),
        mismatches.is_empty(),
        json!({ "mismatches": mismatches }),
    )]
}
