use std::collections::VecDeque;

use serde::Serialize;

use super::UGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Eccentricity {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricReport {
    pub is_connected: bool,
    pub distances: Vec<Vec<Option<usize>>>,
    pub eccentricity: Vec<Eccentricity>,
    pub radius: Option<usize>,
    pub diameter: Option<usize>,
    pub center: Vec<usize>,
}

fn bfs(g: &UGraph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

/// All-pairs distances by repeated BFS. A vertex that cannot reach every
/// other vertex has infinite eccentricity; radius and center range over the
/// finite ones only.
pub fn metric_report(g: &UGraph) -> MetricReport {
    let distances: Vec<Vec<Option<usize>>> = (0..g.n()).map(|v| bfs(g, v)).collect();
    let eccentricity: Vec<Eccentricity> = distances
        .iter()
        .map(|row| {
            row.iter().try_fold(0, |acc, d| d.map(|d| acc.max(d))).map_or(Eccentricity::Infinite, Eccentricity::Finite)
        })
        .collect();
    let finite: Vec<usize> = eccentricity
        .iter()
        .filter_map(|e| match e {
            Eccentricity::Finite(v) => Some(*v),
            Eccentricity::Infinite => None,
        })
        .collect();
    let is_connected = finite.len() == g.n();
    let radius = finite.iter().copied().min();
    let diameter = if is_connected { finite.iter().copied().max() } else { None };
    let center = match radius {
        Some(r) => (0..g.n()).filter(|&v| eccentricity[v] == Eccentricity::Finite(r)).collect(),
        None => Vec::new(),
    };
    MetricReport {
        is_connected,
        distances,
        eccentricity,
        radius,
        diameter,
        center,
    }
}
