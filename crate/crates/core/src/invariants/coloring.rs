use std::collections::VecDeque;

use serde::Serialize;

use super::{mask_to_vec, Param, UGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoringReport {
    pub chi: Param,
    /// A proper colouring with `chi` colours, when one was found.
    pub coloring: Option<Vec<usize>>,
    pub clique: Param,
    pub is_bipartite: bool,
    /// Connected, bipartite, both parts nonempty, all cross edges present.
    pub is_complete_bipartite: bool,
    /// Part sizes `(small, large)` of the bipartition when complete bipartite.
    pub parts: Option<(usize, usize)>,
    /// `K_{1,m}` with `m >= 1`.
    pub is_star: bool,
}

fn max_clique_size(open: &[u64], candidates: u64, size: u32, best: &mut u32) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + candidates.count_ones() <= *best {
        return;
    }
    let mut rest = candidates;
    while rest != 0 {
        if size + rest.count_ones() <= *best {
            return;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        max_clique_size(open, rest & open[v], size + 1, best);
    }
}

/// Lexicographically least clique of exactly `k` vertices.
fn first_clique(open: &[u64], n: usize, k: usize, start: usize, chosen: u64) -> Option<u64> {
    if k == 0 {
        return Some(chosen);
    }
    (start..n)
        .filter(|&v| open[v] & chosen == chosen)
        .find_map(|v| first_clique(open, n, k - 1, v + 1, chosen | 1 << v))
}

fn colorable(open: &[u64], k: usize, v: usize, colors: &mut Vec<usize>, used: usize) -> bool {
    if v == colors.len() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        let clash = mask_to_vec(open[v]).into_iter().any(|u| u < v && colors[u] == c);
        if !clash {
            colors[v] = c;
            if colorable(open, k, v + 1, colors, used.max(c + 1)) {
                return true;
            }
        }
    }
    false
}

fn greedy_coloring(g: &UGraph) -> Vec<usize> {
    let mut colors = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        let taken: Vec<usize> = g.neighbors(v).map(|u| colors[u]).collect();
        colors[v] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    colors
}

fn greedy_clique(g: &UGraph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&c| g.has_edge(c, v)) {
            clique.push(v);
        }
    }
    clique.sort_unstable();
    clique
}

fn two_coloring(g: &UGraph) -> Option<Vec<usize>> {
    let mut side = vec![usize::MAX; g.n()];
    for s in 0..g.n() {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if side[v] == usize::MAX {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(side)
}

pub fn coloring_report(g: &UGraph, exact_cap: usize) -> ColoringReport {
    let n = g.n();
    let sides = two_coloring(g);
    let is_bipartite = sides.is_some();
    let connected = super::metric_report(g).is_connected;
    let mut is_complete_bipartite = false;
    let mut parts = None;
    if let (Some(side), true) = (&sides, connected && n >= 2) {
        let a = side.iter().filter(|&&s| s == 0).count();
        let b = n - a;
        if a > 0 && b > 0 && g.edge_count() == a * b {
            is_complete_bipartite = true;
            parts = Some((a.min(b), a.max(b)));
        }
    }
    let is_star = parts.is_some_and(|(small, _)| small == 1);

    let (chi, coloring, clique) = if n <= exact_cap.min(64) {
        let open = g.open_masks().expect("n <= 64");
        let mut best = 0;
        max_clique_size(&open, super::full_mask(n), 0, &mut best);
        let w = best as usize;
        let clique_set = first_clique(&open, n, w, 0, 0).map(mask_to_vec).unwrap_or_default();
        let mut colors = vec![0; n];
        let k = (w.max(usize::from(n > 0))..=n)
            .find(|&k| colorable(&open, k, 0, &mut colors, 0))
            .unwrap_or(n);
        let chi = Param {
            value: Some(k),
            witness: Vec::new(),
            status: super::SolverStatus::Exact,
        };
        (chi, Some(colors), Param::exact(clique_set))
    } else {
        let colors = greedy_coloring(g);
        let k = colors.iter().max().map_or(0, |m| m + 1);
        let chi = Param {
            value: Some(k),
            witness: Vec::new(),
            status: super::SolverStatus::BoundOnly,
        };
        (chi, Some(colors), Param::bound(greedy_clique(g)))
    };
    ColoringReport {
        chi,
        coloring,
        clique,
        is_bipartite,
        is_complete_bipartite,
        parts,
        is_star,
    }
}
