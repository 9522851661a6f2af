//! Exact graph parameters: metric data, five domination variants,
//! irredundance, clique and chromatic numbers, bipartite structure.
//!
//! The exact solvers work on `u64` neighbourhood masks and are limited to
//! `exact_cap` vertices (at most 64). Above the cap, parameters that have a
//! cheap heuristic bound are reported with [`SolverStatus::BoundOnly`].

mod coloring;
mod domination;
mod irredundance;
mod metric;
pub mod oracle;
mod predicates;

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub use coloring::{coloring_report, ColoringReport};
pub use domination::{domination, DomVariant};
pub use irredundance::irredundance_number;
pub use metric::{metric_report, Eccentricity, MetricReport};
pub use predicates::{
    has_perfect_matching, induced_is_clique, induced_is_connected, set_predicates, SetPredicates,
};

/// Default vertex limit for exact solving.
pub const DEFAULT_EXACT_CAP: usize = 26;

/// Simple undirected graph on `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    adj: Vec<Vec<bool>>,
}

impl UGraph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![vec![false; n]; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        if u != v {
            self.adj[u][v] = true;
            self.adj[v][u] = true;
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u][v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().enumerate().filter(|(_, &b)| b).map(|(u, _)| u)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|u| (u + 1..n).filter(move |&v| self.adj[u][v]).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn adjacency(&self) -> &[Vec<bool>] {
        &self.adj
    }

    /// Open-neighbourhood masks, for graphs with at most 64 vertices.
    pub(crate) fn open_masks(&self) -> Option<Vec<u64>> {
        (self.n() <= 64).then(|| {
            (0..self.n())
                .map(|v| self.neighbors(v).fold(0u64, |m, u| m | (1 << u)))
                .collect()
        })
    }

    pub fn induced(&self, vertices: &[usize]) -> UGraph {
        let adj = vertices
            .iter()
            .map(|&u| vertices.iter().map(|&v| self.adj[u][v]).collect())
            .collect();
        UGraph { adj }
    }
}

pub(crate) fn mask_to_vec(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverStatus {
    Exact,
    BoundOnly,
    /// No set satisfies the variant's predicate.
    Infeasible,
}

/// One computed parameter with the set that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Param {
    pub value: Option<usize>,
    pub witness: Vec<usize>,
    pub status: SolverStatus,
}

impl Param {
    pub(crate) fn exact(witness: Vec<usize>) -> Self {
        Self {
            value: Some(witness.len()),
            witness,
            status: SolverStatus::Exact,
        }
    }

    pub(crate) fn bound(witness: Vec<usize>) -> Self {
        Self {
            value: Some(witness.len()),
            witness,
            status: SolverStatus::BoundOnly,
        }
    }

    pub(crate) fn infeasible() -> Self {
        Self {
            value: None,
            witness: Vec::new(),
            status: SolverStatus::Infeasible,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.status == SolverStatus::Exact
    }

    /// The value when it is exact.
    pub fn exact_value(&self) -> Option<usize> {
        self.is_exact().then_some(self.value).flatten()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamReport {
    pub n: usize,
    pub m: usize,
    pub metric: MetricReport,
    pub gamma: Param,
    pub gamma_t: Param,
    pub gamma_c: Param,
    pub gamma_cl: Param,
    pub gamma_pr: Param,
    pub ir: Param,
    pub coloring: ColoringReport,
}

fn param_or_infeasible(r: Result<Param>) -> Result<Param> {
    match r {
        Err(Error::VariantInfeasible(_)) => Ok(Param::infeasible()),
        other => other,
    }
}

impl ParamReport {
    pub fn compute(g: &UGraph, exact_cap: usize) -> Result<Self> {
        let dom = |v| param_or_infeasible(domination(g, v, exact_cap));
        let ir = match irredundance_number(g, exact_cap) {
            Ok(p) => p,
            Err(Error::ExactCapExceeded { .. }) => Param {
                value: None,
                witness: Vec::new(),
                status: SolverStatus::BoundOnly,
            },
            Err(e) => return Err(e),
        };
        let report = Self {
            n: g.n(),
            m: g.edge_count(),
            metric: metric_report(g),
            gamma: dom(DomVariant::Plain)?,
            gamma_t: dom(DomVariant::Total)?,
            gamma_c: dom(DomVariant::Connected)?,
            gamma_cl: dom(DomVariant::Clique)?,
            gamma_pr: dom(DomVariant::Paired)?,
            ir,
            coloring: coloring_report(g, exact_cap),
        };
        report.validate(g)?;
        Ok(report)
    }

    /// Re-checks every witness against its defining predicate and the
    /// ordering chain between parameters.
    pub fn validate(&self, g: &UGraph) -> Result<()> {
        let fail = |what: &str| Err(Error::Internal(format!("witness check failed: {what}")));
        let check = |p: &Param, ok: &dyn Fn(&[usize]) -> bool, what: &str| -> Result<()> {
            if p.value.is_some() && !ok(&p.witness) {
                return fail(what);
            }
            Ok(())
        };
        check(&self.gamma, &|s| set_predicates(g, s).is_dominating, "gamma")?;
        check(&self.gamma_t, &|s| set_predicates(g, s).is_total_dominating, "gamma_t")?;
        check(
            &self.gamma_c,
            &|s| set_predicates(g, s).is_dominating && induced_is_connected(g, s),
            "gamma_c",
        )?;
        check(
            &self.gamma_cl,
            &|s| set_predicates(g, s).is_dominating && induced_is_clique(g, s),
            "gamma_cl",
        )?;
        check(
            &self.gamma_pr,
            &|s| set_predicates(g, s).is_dominating && has_perfect_matching(g, s),
            "gamma_pr",
        )?;
        check(&self.ir, &|s| set_predicates(g, s).is_maximal_irredundant, "ir")?;
        if self.coloring.clique.value.is_some() && !induced_is_clique(g, &self.coloring.clique.witness)
        {
            return fail("clique");
        }
        if let Some(colors) = &self.coloring.coloring {
            if g.edges().iter().any(|&(u, v)| colors[u] == colors[v]) {
                return fail("coloring");
            }
        }

        let exact = |p: &Param| p.exact_value();
        if let Some(gm) = exact(&self.gamma) {
            for (name, p) in [
                ("gamma_t", &self.gamma_t),
                ("gamma_c", &self.gamma_c),
                ("gamma_cl", &self.gamma_cl),
                ("gamma_pr", &self.gamma_pr),
            ] {
                if exact(p).is_some_and(|v| v < gm) {
                    return fail(&format!("gamma <= {name}"));
                }
            }
            if exact(&self.ir).is_some_and(|v| v > gm) {
                return fail("ir <= gamma");
            }
        }
        if let (Some(w), Some(c)) = (exact(&self.coloring.clique), exact(&self.coloring.chi)) {
            if w > c {
                return fail("clique <= chi");
            }
        }
        Ok(())
    }

    pub fn to_json(&self, labels: &[String]) -> Value {
        let param = |p: &Param| {
            json!({
                "value": p.value,
                "status": p.status,
                "witness": p.witness,
                "witness_labels": p.witness.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>(),
            })
        };
        let c = &self.coloring;
        json!({
            "n": self.n,
            "m": self.m,
            "is_connected": self.metric.is_connected,
            "diameter": self.metric.diameter,
            "radius": self.metric.radius,
            "eccentricity": self.metric.eccentricity,
            "center": self.metric.center,
            "center_labels": self.metric.center.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>(),
            "gamma": param(&self.gamma),
            "gamma_t": param(&self.gamma_t),
            "gamma_c": param(&self.gamma_c),
            "gamma_cl": param(&self.gamma_cl),
            "gamma_pr": param(&self.gamma_pr),
            "ir": param(&self.ir),
            "chi": param(&c.chi),
            "coloring": c.coloring,
            "clique": param(&c.clique),
            "is_bipartite": c.is_bipartite,
            "is_complete_bipartite": c.is_complete_bipartite,
            "parts": c.parts,
            "is_star": c.is_star,
        })
    }

    /// Aligned two-column text table.
    pub fn to_table(&self, labels: &[String]) -> String {
        let set = |w: &[usize]| {
            let names: Vec<&str> = w.iter().map(|&i| labels[i].as_str()).collect();
            format!("{{{}}}", names.join(", "))
        };
        let param = |p: &Param| match p.value {
            Some(v) if p.witness.is_empty() && v > 0 => format!("{v} [{}]", status_text(p.status)),
            Some(v) => format!("{v} {} [{}]", set(&p.witness), status_text(p.status)),
            None => format!("- [{}]", status_text(p.status)),
        };
        let opt = |v: Option<usize>| v.map_or("inf".to_string(), |x| x.to_string());
        let c = &self.coloring;
        let rows: Vec<(&str, String)> = vec![
            ("vertices", self.n.to_string()),
            ("edges", self.m.to_string()),
            ("connected", self.metric.is_connected.to_string()),
            ("diameter", opt(self.metric.diameter)),
            ("radius", opt(self.metric.radius)),
            ("center", set(&self.metric.center)),
            ("gamma", param(&self.gamma)),
            ("gamma_t", param(&self.gamma_t)),
            ("gamma_c", param(&self.gamma_c)),
            ("gamma_cl", param(&self.gamma_cl)),
            ("gamma_pr", param(&self.gamma_pr)),
            ("ir", param(&self.ir)),
            ("chi", param(&c.chi)),
            ("clique", param(&c.clique)),
            ("bipartite", c.is_bipartite.to_string()),
            ("complete_bipartite", c.is_complete_bipartite.to_string()),
            ("star", c.is_star.to_string()),
        ];
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter()
            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
            .collect()
    }
}

fn status_text(s: SolverStatus) -> &'static str {
    match s {
        SolverStatus::Exact => "exact",
        SolverStatus::BoundOnly => "bound_only",
        SolverStatus::Infeasible => "infeasible",
    }
}

impl Serialize for Eccentricity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Eccentricity::Finite(v) => s.serialize_u64(*v as u64),
            Eccentricity::Infinite => s.serialize_str("inf"),
        }
    }
}

#[cfg(test)]
pub(crate) mod test_graphs {
    use super::UGraph;

    pub fn k2() -> UGraph {
        UGraph::from_edges(2, &[(0, 1)]).unwrap()
    }

    pub fn star(leaves: usize) -> UGraph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        UGraph::from_edges(leaves + 1, &edges).unwrap()
    }

    pub fn path(n: usize) -> UGraph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        UGraph::from_edges(n, &edges).unwrap()
    }

    /// AG(Z_12) in canonical order (6),(4),(3),(2).
    pub fn ag_z12() -> UGraph {
        UGraph::from_edges(4, &[(0, 3), (1, 2), (0, 1)]).unwrap()
    }

    /// AG(Z_30) in canonical order (15),(10),(6),(5),(3),(2).
    pub fn ag_z30() -> UGraph {
        UGraph::from_edges(6, &[(0, 5), (1, 4), (2, 3), (1, 2), (0, 2), (0, 1)]).unwrap()
    }
}
