//! Unpruned reference implementations. Every subset is visited in order of
//! increasing size and tested with the plain definitions, so these are only
//! usable on small graphs (roughly 20 vertices or fewer).

use rand::seq::SliceRandom;
use rand::Rng;

use super::{has_perfect_matching, induced_is_clique, induced_is_connected, set_predicates, DomVariant, UGraph};

/// All subsets of `0..n` of size `k`, in lexicographic order.
fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

fn first_of_min_size(n: usize, ok: impl Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
    (0..=n).find_map(|k| subsets_of_size(n, k).into_iter().find(|s| ok(s)))
}

fn dominates(g: &UGraph, set: &[usize], variant: DomVariant) -> bool {
    let p = set_predicates(g, set);
    match variant {
        DomVariant::Plain => p.is_dominating,
        DomVariant::Total => p.is_total_dominating,
        DomVariant::Connected => p.is_dominating && !set.is_empty() && induced_is_connected(g, set),
        DomVariant::Clique => p.is_dominating && !set.is_empty() && induced_is_clique(g, set),
        DomVariant::Paired => p.is_dominating && has_perfect_matching(g, set),
    }
}

/// Lexicographically least minimum dominating set of the variant, or `None`
/// when no set qualifies. The empty graph is dominated by the empty set.
pub fn min_dominating(g: &UGraph, variant: DomVariant) -> Option<Vec<usize>> {
    if g.n() == 0 {
        return Some(Vec::new());
    }
    first_of_min_size(g.n(), |s| dominates(g, s, variant))
}

pub fn min_maximal_irredundant(g: &UGraph) -> Vec<usize> {
    first_of_min_size(g.n(), |s| set_predicates(g, s).is_maximal_irredundant)
        .expect("a maximal irredundant set always exists")
}

pub fn clique_number(g: &UGraph) -> usize {
    (0..=g.n())
        .rev()
        .find(|&k| subsets_of_size(g.n(), k).iter().any(|s| induced_is_clique(g, s)))
        .unwrap_or(0)
}

/// Chromatic number by dynamic programming over vertex subsets: the fewest
/// independent sets covering each subset.
pub fn chromatic_number(g: &UGraph) -> usize {
    let n = g.n();
    assert!(n <= 20, "oracle limited to 20 vertices");
    let full = (1usize << n) - 1;
    let independent: Vec<bool> = (0..=full)
        .map(|m| {
            let vs: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
        })
        .collect();
    let mut best = vec![usize::MAX; full + 1];
    best[0] = 0;
    for m in 1..=full {
        let mut sub = m;
        while sub > 0 {
            if independent[sub] && best[m & !sub] != usize::MAX {
                best[m] = best[m].min(best[m & !sub] + 1);
            }
            sub = (sub - 1) & m;
        }
    }
    best[full]
}

/// Every inclusion-minimal dominating set, in order of size then
/// lexicographically.
pub fn all_minimal_dominating_sets(g: &UGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    (0..=n)
        .flat_map(|k| subsets_of_size(n, k))
        .filter(|s| {
            set_predicates(g, s).is_dominating
                && s.iter().all(|&u| {
                    let smaller: Vec<usize> = s.iter().copied().filter(|&v| v != u).collect();
                    !set_predicates(g, &smaller).is_dominating
                })
        })
        .collect()
}

/// Every dominating set of exactly `k` vertices, lexicographically.
pub fn dominating_sets_of_size(g: &UGraph, k: usize) -> Vec<Vec<usize>> {
    subsets_of_size(g.n(), k)
        .into_iter()
        .filter(|s| set_predicates(g, s).is_dominating)
        .collect()
}

/// A minimal dominating set obtained by dropping vertices from `V` in a
/// random order whenever the rest still dominates. Every minimal dominating
/// set is reachable this way.
pub fn random_minimal_dominating_set<R: Rng + ?Sized>(g: &UGraph, rng: &mut R) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut set: Vec<usize> = (0..g.n()).collect();
    for v in order {
        let without: Vec<usize> = set.iter().copied().filter(|&u| u != v).collect();
        if set_predicates(g, &without).is_dominating {
            set = without;
        }
    }
    set
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::*;

    #[test]
    fn small_values() {
        let g = ag_z30();
        assert_eq!(min_dominating(&g, DomVariant::Plain).unwrap().len(), 3);
        assert_eq!(clique_number(&g), 3);
        assert_eq!(chromatic_number(&g), 3);
        assert_eq!(chromatic_number(&path(4)), 2);
        assert_eq!(min_maximal_irredundant(&star(3)), vec![0]);
        assert_eq!(min_dominating(&path(5), DomVariant::Clique), None);
    }

    #[test]
    fn minimal_dominating_sets_of_p3() {
        assert_eq!(all_minimal_dominating_sets(&path(3)), vec![vec![1], vec![0, 2]]);
    }

    #[test]
    fn random_sets_are_minimal() {
        use rand::SeedableRng;
        let g = ag_z30();
        let all = all_minimal_dominating_sets(&g);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let s = random_minimal_dominating_set(&g, &mut rng);
            assert!(all.contains(&s));
        }
        assert_eq!(dominating_sets_of_size(&path(3), 1), vec![vec![1]]);
    }
}
