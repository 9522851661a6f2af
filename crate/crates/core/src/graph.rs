//! The annihilating-submodule graph `AG(M)` and its variant `AG(M)*`, built
//! on the canonical submodule order, with DOT / JSON / CSV export.
//!
//! JSON schema:
//! `{"variant": "AG"|"AG_star", "ring": "30", "module": "30", "n": 6,
//!   "labels": ["(15)", ...], "edges": [[0, 5], ...]}`.
//! Edges are `[u, v]` with `u < v` in lexicographic order.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::invariants::UGraph;
use crate::module::{ModuleSpec, SubmoduleLattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Variant {
    #[serde(rename = "AG")]
    Ag,
    #[serde(rename = "AG_star")]
    AgStar,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Ag => "AG",
            Variant::AgStar => "AG_star",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Self::Dot),
            "json" => Ok(Self::Json),
            "csv" | "csv_edges" => Ok(Self::Csv),
            other => Err(Error::Parse {
                position: 0,
                message: format!("unknown format {other:?}"),
            }),
        }
    }
}

#[derive(Debug, Clone)]
pub struct AGGraph {
    pub variant: Variant,
    /// Lattice indices of the vertices, ascending.
    pub vertices: Vec<usize>,
    pub labels: Vec<String>,
    pub graph: UGraph,
    pub module: ModuleSpec,
}

impl AGGraph {
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Graph position of a lattice index, if it is a vertex.
    pub fn position(&self, lattice_index: usize) -> Option<usize> {
        self.vertices.binary_search(&lattice_index).ok()
    }
}

/// Whether `M` itself is a vertex of `AG(M)`.
pub fn m_is_vertex(lattice: &SubmoduleLattice) -> bool {
    let top = lattice.top_index();
    let subs = lattice.submodules();
    (0..subs.len()).any(|k| !subs[k].is_zero() && subs[k].is_proper() && lattice.product_is_zero(top, k))
}

pub fn build_ag(lattice: &SubmoduleLattice, variant: Variant) -> AGGraph {
    let subs = lattice.submodules();
    let ann = lattice.annihilator();
    let witness: Vec<usize> = match variant {
        Variant::Ag => (0..subs.len()).filter(|&k| !subs[k].is_zero() && subs[k].is_proper()).collect(),
        Variant::AgStar => (0..subs.len())
            .filter(|&k| subs[k].is_proper() && subs[k].colon() != ann)
            .collect(),
    };
    let vertices: Vec<usize> = (0..subs.len())
        .filter(|&i| match variant {
            Variant::Ag => !subs[i].is_zero(),
            Variant::AgStar => subs[i].is_proper() && subs[i].colon() != ann,
        })
        .filter(|&i| witness.iter().any(|&k| lattice.product_is_zero(i, k)))
        .collect();
    let mut graph = UGraph::empty(vertices.len());
    for (a, &u) in vertices.iter().enumerate() {
        for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
            if lattice.product_is_zero(u, v) {
                graph.add_edge(a, b).expect("in range");
            }
        }
    }
    AGGraph {
        variant,
        labels: vertices.iter().map(|&i| lattice.label(i)).collect(),
        vertices,
        graph,
        module: lattice.module().clone(),
    }
}

/// Builds `AG(M)`, and when `M` is not a vertex also `AG(M)*`, checking that
/// the two coincide.
pub fn build_checked(lattice: &SubmoduleLattice) -> Result<AGGraph> {
    let ag = build_ag(lattice, Variant::Ag);
    if !m_is_vertex(lattice) {
        let star = build_ag(lattice, Variant::AgStar);
        if star.vertices != ag.vertices || star.graph != ag.graph {
            return Err(Error::Internal(format!(
                "AG and AG* differ on {} although M is not a vertex",
                lattice.module().instance_label()
            )));
        }
    }
    Ok(ag)
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn export_graph(g: &AGGraph, format: ExportFormat) -> String {
    let edges = g.graph.edges();
    match format {
        ExportFormat::Dot => {
            let mut out = String::from("graph AG {\n");
            for (i, label) in g.labels.iter().enumerate() {
                writeln!(out, "  {i} [label=\"{}\"];", dot_escape(label)).unwrap();
            }
            for (u, v) in &edges {
                writeln!(out, "  {u} -- {v};").unwrap();
            }
            out.push_str("}\n");
            out
        }
        ExportFormat::Json => {
            let doc = json!({
                "variant": g.variant,
                "ring": g.module.ring().to_string(),
                "module": g.module.to_string(),
                "n": g.n(),
                "labels": g.labels,
                "edges": edges.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
        ExportFormat::Csv => edges.iter().map(|(u, v)| format!("{u},{v}\n")).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingSpec;
    use crate::module::{enumerate_submodules, Caps};

    fn ag(n: u64) -> AGGraph {
        let m = ModuleSpec::regular(RingSpec::cyclic(n).unwrap());
        build_checked(&enumerate_submodules(&m, &Caps::default()).unwrap()).unwrap()
    }

    fn named_edges(g: &AGGraph) -> Vec<(String, String)> {
        let mut e: Vec<(String, String)> = g
            .graph
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (g.labels[u].clone(), g.labels[v].clone());
                if a < b { (a, b) } else { (b, a) }
            })
            .collect();
        e.sort();
        e
    }

    fn pairs(list: &[(&str, &str)]) -> Vec<(String, String)> {
        let mut e: Vec<(String, String)> = list.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        e.sort();
        e
    }

    #[test]
    fn z6_is_k2() {
        let g = ag(6);
        assert_eq!(g.labels, vec!["(3)", "(2)"]);
        assert_eq!(g.graph.edges(), vec![(0, 1)]);
    }

    #[test]
    fn z12_edges() {
        let g = ag(12);
        assert_eq!(g.labels, vec!["(6)", "(4)", "(3)", "(2)"]);
        assert_eq!(named_edges(&g), pairs(&[("(2)", "(6)"), ("(3)", "(4)"), ("(4)", "(6)")]));
        let json = export_graph(&g, ExportFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["edges"], json!([[0, 1], [0, 3], [1, 2]]));
    }

    #[test]
    fn z30_edges() {
        let g = ag(30);
        assert_eq!(g.n(), 6);
        assert_eq!(
            named_edges(&g),
            pairs(&[
                ("(15)", "(2)"),
                ("(10)", "(3)"),
                ("(5)", "(6)"),
                ("(10)", "(6)"),
                ("(15)", "(6)"),
                ("(10)", "(15)"),
            ])
        );
    }

    #[test]
    fn simple_module_has_empty_graph() {
        let g = ag(7);
        assert_eq!(g.n(), 0);
        assert_eq!(export_graph(&g, ExportFormat::Dot), "graph AG {\n}\n");
        assert_eq!(export_graph(&g, ExportFormat::Csv), "");
        let v: serde_json::Value = serde_json::from_str(&export_graph(&g, ExportFormat::Json)).unwrap();
        assert_eq!(v["n"], 0);
    }

    #[test]
    fn dot_for_k2() {
        let dot = export_graph(&ag(6), ExportFormat::Dot);
        assert_eq!(dot, "graph AG {\n  0 [label=\"(3)\"];\n  1 [label=\"(2)\"];\n  0 -- 1;\n}\n");
    }

    #[test]
    fn m_as_vertex() {
        // Simple: no nonzero proper K exists.
        let ring = RingSpec::cyclic(4).unwrap();
        let m = ModuleSpec::parse(&ring, "2").unwrap();
        let lat = enumerate_submodules(&m, &Caps::default()).unwrap();
        assert!(!m_is_vertex(&lat));
        let ring = RingSpec::cyclic(2).unwrap();
        let m = ModuleSpec::parse(&ring, "2;2").unwrap();
        let lat = enumerate_submodules(&m, &Caps::default()).unwrap();
        // Over a field (K:M) = 0 for every proper K, so MK = 0.
        assert!(m_is_vertex(&lat));
        let g = build_ag(&lat, Variant::Ag);
        assert_eq!(g.n(), 4);
        let star = build_ag(&lat, Variant::AgStar);
        assert_eq!(star.n(), 0);
    }
}
