use serde::Serialize;

use super::predicates::{has_perfect_matching, induced_is_connected};
use super::{full_mask, mask_to_vec, metric_report, Param, UGraph};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DomVariant {
    Plain,
    Total,
    Connected,
    Clique,
    Paired,
}

struct Search<'a> {
    g: &'a UGraph,
    n: usize,
    all: u64,
    /// Mask of vertices each vertex covers (closed or open neighbourhood).
    cover: Vec<u64>,
    open: Vec<u64>,
    /// `suffix[i]` = vertices with index `>= i`.
    suffix: Vec<u64>,
    max_cover: u32,
    variant: DomVariant,
}

impl Search<'_> {
    fn accept(&self, chosen: u64) -> bool {
        match self.variant {
            DomVariant::Connected => induced_is_connected(self.g, &mask_to_vec(chosen)),
            DomVariant::Paired => has_perfect_matching(self.g, &mask_to_vec(chosen)),
            _ => true,
        }
    }

    /// Lexicographically first set of exactly `picks` more vertices drawn from
    /// `start..n` that completes a valid set.
    fn dfs(&self, start: usize, picks: usize, chosen: u64, covered: u64) -> Option<u64> {
        let uncovered = self.all & !covered;
        if picks == 0 {
            return (uncovered == 0 && self.accept(chosen)).then_some(chosen);
        }
        if uncovered.count_ones() > picks as u32 * self.max_cover {
            return None;
        }
        let candidates = self.suffix[start];
        let mut rest = uncovered;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            // cover is symmetric: the vertices covering v are exactly cover[v].
            if self.cover[v] & candidates == 0 {
                return None;
            }
            rest &= rest - 1;
        }
        for i in start..=self.n - picks {
            if self.variant == DomVariant::Clique && self.open[i] & chosen != chosen {
                continue;
            }
            if let Some(found) = self.dfs(i + 1, picks - 1, chosen | 1 << i, covered | self.cover[i]) {
                return Some(found);
            }
        }
        None
    }
}

/// Minimum size of a dominating set of the given variant, with the
/// lexicographically least optimal witness. Sizes are tried in increasing
/// order; inside one size the search prunes any branch that leaves an
/// uncovered vertex with no remaining candidate able to cover it.
pub fn domination(g: &UGraph, variant: DomVariant, exact_cap: usize) -> Result<Param> {
    let n = g.n();
    if n == 0 {
        return Ok(Param::exact(Vec::new()));
    }
    let isolated = (0..n).any(|v| g.degree(v) == 0);
    match variant {
        DomVariant::Total if isolated => {
            return Err(Error::VariantInfeasible("total domination with an isolated vertex".into()))
        }
        DomVariant::Paired if isolated => {
            return Err(Error::VariantInfeasible("paired domination with an isolated vertex".into()))
        }
        DomVariant::Connected if !metric_report(g).is_connected => {
            return Err(Error::VariantInfeasible("connected domination on a disconnected graph".into()))
        }
        _ => {}
    }
    if n > exact_cap.min(64) {
        return greedy(g, variant).map(Param::bound);
    }

    let open = g.open_masks().expect("n <= 64");
    let cover: Vec<u64> = match variant {
        DomVariant::Total => open.clone(),
        _ => open.iter().enumerate().map(|(v, &m)| m | 1 << v).collect(),
    };
    let suffix = (0..=n).map(|i| full_mask(n) & !full_mask(i)).collect();
    let search = Search {
        g,
        n,
        all: full_mask(n),
        max_cover: cover.iter().map(|m| m.count_ones()).max().unwrap_or(0),
        cover,
        open,
        suffix,
        variant,
    };
    let step = if variant == DomVariant::Paired { 2 } else { 1 };
    let first = if variant == DomVariant::Paired { 2 } else { 1 };
    for k in (first..=n).step_by(step) {
        if let Some(found) = search.dfs(0, k, 0, 0) {
            return Ok(Param::exact(mask_to_vec(found)));
        }
    }
    Err(Error::VariantInfeasible(format!("no {variant:?} dominating set exists")))
}

/// Heuristic upper bounds used above the exact cap.
fn greedy(g: &UGraph, variant: DomVariant) -> Result<Vec<usize>> {
    let n = g.n();
    let closed = |v: usize| -> Vec<usize> {
        let mut c: Vec<usize> = g.neighbors(v).collect();
        if variant != DomVariant::Total {
            c.push(v);
        }
        c
    };
    match variant {
        DomVariant::Plain | DomVariant::Total | DomVariant::Paired => {
            let mut covered = vec![false; n];
            let mut chosen: Vec<usize> = Vec::new();
            while covered.iter().any(|c| !c) {
                let best = (0..n)
                    .filter(|v| !chosen.contains(v))
                    .max_by_key(|&v| (closed(v).iter().filter(|&&u| !covered[u]).count(), n - v))
                    .expect("an uncovered vertex has a coverer");
                chosen.push(best);
                for u in closed(best) {
                    covered[u] = true;
                }
            }
            if variant == DomVariant::Paired {
                // Pair each chosen vertex with a fresh neighbour where possible.
                let mut paired: Vec<usize> = Vec::new();
                for &v in &chosen {
                    if paired.contains(&v) {
                        continue;
                    }
                    let partner = g
                        .neighbors(v)
                        .find(|u| !paired.contains(u))
                        .ok_or_else(|| Error::ExactCapExceeded { n, cap: n })?;
                    paired.push(v);
                    paired.push(partner);
                }
                chosen = paired;
            }
            chosen.sort_unstable();
            Ok(chosen)
        }
        DomVariant::Connected => {
            // Non-leaf vertices of a BFS spanning tree.
            if n <= 2 {
                return Ok(vec![0]);
            }
            let mut parent = vec![usize::MAX; n];
            let mut seen = vec![false; n];
            let mut queue = std::collections::VecDeque::from([0]);
            seen[0] = true;
            while let Some(u) = queue.pop_front() {
                for v in g.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            let mut inner: Vec<usize> = parent.iter().filter(|&&p| p != usize::MAX).copied().collect();
            inner.sort_unstable();
            inner.dedup();
            Ok(inner)
        }
        DomVariant::Clique => {
            let mut best: Option<Vec<usize>> = None;
            for start in 0..n {
                let mut clique = vec![start];
                let mut covered: Vec<bool> = (0..n).map(|u| u == start || g.has_edge(start, u)).collect();
                while covered.iter().any(|c| !c) {
                    let next = (0..n)
                        .filter(|&v| !clique.contains(&v) && clique.iter().all(|&c| g.has_edge(c, v)))
                        .max_by_key(|&v| closed(v).iter().filter(|&&u| !covered[u]).count());
                    let Some(v) = next else { break };
                    clique.push(v);
                    for u in closed(v) {
                        covered[u] = true;
                    }
                }
                if covered.iter().all(|&c| c) && best.as_ref().map_or(true, |b| clique.len() < b.len()) {
                    clique.sort_unstable();
                    best = Some(clique);
                }
            }
            best.ok_or(Error::ExactCapExceeded { n, cap: n })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::test_graphs::*;
    use super::super::DEFAULT_EXACT_CAP as CAP;
    use super::*;

    fn value(g: &UGraph, v: DomVariant) -> (usize, Vec<usize>) {
        let p = domination(g, v, CAP).unwrap();
        (p.value.unwrap(), p.witness)
    }

    #[test]
    fn z12_values() {
        let g = ag_z12();
        // lexicographically least: {(6), (4)}
        assert_eq!(value(&g, DomVariant::Plain), (2, vec![0, 1]));
        assert_eq!(value(&g, DomVariant::Total).0, 2);
    }

    #[test]
    fn z30_values() {
        let g = ag_z30();
        assert_eq!(value(&g, DomVariant::Plain).0, 3);
        assert_eq!(value(&g, DomVariant::Total), (3, vec![0, 1, 2]));
    }

    #[test]
    fn k2_values() {
        let g = k2();
        assert_eq!(value(&g, DomVariant::Plain).0, 1);
        assert_eq!(value(&g, DomVariant::Total).0, 2);
        assert_eq!(value(&g, DomVariant::Paired).0, 2);
        assert_eq!(value(&g, DomVariant::Connected).0, 1);
        assert_eq!(value(&g, DomVariant::Clique).0, 1);
    }

    #[test]
    fn infeasible_variants() {
        let k1 = UGraph::empty(1);
        assert!(matches!(domination(&k1, DomVariant::Total, CAP), Err(Error::VariantInfeasible(_))));
        assert!(matches!(domination(&k1, DomVariant::Paired, CAP), Err(Error::VariantInfeasible(_))));
        assert_eq!(value(&k1, DomVariant::Connected).0, 1);
        let two = UGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(domination(&two, DomVariant::Connected, CAP), Err(Error::VariantInfeasible(_))));
        // P5 has no dominating clique.
        assert!(matches!(domination(&path(5), DomVariant::Clique, CAP), Err(Error::VariantInfeasible(_))));
    }

    #[test]
    fn empty_graph() {
        for v in [DomVariant::Plain, DomVariant::Total, DomVariant::Paired] {
            assert_eq!(value(&UGraph::empty(0), v).0, 0);
        }
    }

    #[test]
    fn bound_only_above_cap() {
        let g = path(10);
        let p = domination(&g, DomVariant::Plain, 5).unwrap();
        assert!(!p.is_exact());
        assert!(p.value.unwrap() >= 4);
        assert!(crate::invariants::set_predicates(&g, &p.witness).is_dominating);
        let p = domination(&g, DomVariant::Connected, 5).unwrap();
        assert!(crate::invariants::induced_is_connected(&g, &p.witness));
    }
}
