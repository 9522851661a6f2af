use serde::Serialize;

use super::UGraph;

/// Definitional evaluation of domination and irredundance predicates for a
/// vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetPredicates {
    pub is_dominating: bool,
    pub is_total_dominating: bool,
    pub is_irredundant: bool,
    pub is_maximal_irredundant: bool,
    /// `(u, P_N(u, S))` for every `u` in `S`.
    pub private_neighborhoods: Vec<(usize, Vec<usize>)>,
}

fn closed_contains(g: &UGraph, u: usize, x: usize) -> bool {
    u == x || g.has_edge(u, x)
}

fn private_neighborhood(g: &UGraph, set: &[usize], u: usize) -> Vec<usize> {
    (0..g.n())
        .filter(|&x| closed_contains(g, u, x))
        .filter(|&x| !set.iter().any(|&v| v != u && closed_contains(g, v, x)))
        .collect()
}

fn irredundant(g: &UGraph, set: &[usize]) -> bool {
    set.iter().all(|&u| !private_neighborhood(g, set, u).is_empty())
}

pub fn set_predicates(g: &UGraph, set: &[usize]) -> SetPredicates {
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let n = g.n();
    let is_dominating = (0..n).all(|x| set.iter().any(|&u| closed_contains(g, u, x)));
    let is_total_dominating = (0..n).all(|x| set.iter().any(|&u| g.has_edge(u, x)));
    let private_neighborhoods: Vec<(usize, Vec<usize>)> =
        set.iter().map(|&u| (u, private_neighborhood(g, &set, u))).collect();
    let is_irredundant = private_neighborhoods.iter().all(|(_, p)| !p.is_empty());
    let is_maximal_irredundant = is_irredundant
        && (0..n).filter(|x| !set.contains(x)).all(|x| {
            let mut bigger = set.clone();
            bigger.push(x);
            !irredundant(g, &bigger)
        });
    SetPredicates {
        is_dominating,
        is_total_dominating,
        is_irredundant,
        is_maximal_irredundant,
        private_neighborhoods,
    }
}

pub fn induced_is_connected(g: &UGraph, set: &[usize]) -> bool {
    let Some(&start) = set.first() else {
        return true;
    };
    let mut seen = vec![start];
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &v in set {
            if g.has_edge(u, v) && !seen.contains(&v) {
                seen.push(v);
                stack.push(v);
            }
        }
    }
    seen.len() == set.len()
}

pub fn induced_is_clique(g: &UGraph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Whether the subgraph induced by `set` has a perfect matching. Backtracks
/// on the first unmatched vertex.
pub fn has_perfect_matching(g: &UGraph, set: &[usize]) -> bool {
    fn go(g: &UGraph, rest: &mut Vec<usize>) -> bool {
        let Some(u) = rest.pop() else {
            return true;
        };
        for i in 0..rest.len() {
            let v = rest[i];
            if g.has_edge(u, v) {
                rest.remove(i);
                let ok = go(g, rest);
                rest.insert(i, v);
                if ok {
                    rest.push(u);
                    return true;
                }
            }
        }
        rest.push(u);
        false
    }
    if set.len() % 2 == 1 {
        return false;
    }
    go(g, &mut set.to_vec())
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::*;

    #[test]
    fn k2_singleton() {
        let p = set_predicates(&k2(), &[0]);
        assert!(p.is_dominating);
        assert!(!p.is_total_dominating);
        assert!(p.is_maximal_irredundant);
    }

    #[test]
    fn z30_triangle_dominates_totally() {
        let p = set_predicates(&ag_z30(), &[0, 1, 2]);
        assert!(p.is_dominating && p.is_total_dominating);
    }

    #[test]
    fn empty_set() {
        let p = set_predicates(&k2(), &[]);
        assert!(!p.is_dominating);
        assert!(p.is_irredundant && !p.is_maximal_irredundant);
        let p = set_predicates(&UGraph::empty(0), &[]);
        assert!(p.is_dominating && p.is_maximal_irredundant);
    }

    #[test]
    fn private_neighbourhoods_on_path() {
        // 0-1-2-3, S = {1, 2}: P_N(1) = {0}, P_N(2) = {3}.
        let p = set_predicates(&path(4), &[1, 2]);
        assert_eq!(p.private_neighborhoods, vec![(1, vec![0]), (2, vec![3])]);
    }

    #[test]
    fn matchings() {
        assert!(has_perfect_matching(&path(4), &[0, 1, 2, 3]));
        assert!(!has_perfect_matching(&star(3), &[0, 1, 2, 3]));
        assert!(!has_perfect_matching(&path(3), &[0, 1, 2]));
        assert!(has_perfect_matching(&path(3), &[]));
    }
}
