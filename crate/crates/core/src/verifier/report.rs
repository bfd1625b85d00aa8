use std::collections::HashMap;
use std::time::Instant;

use serde::Serialize;

use super::bounds::{bound_value, BoundSpec};
use crate::cycles::{find_cycle_of_length, CycleWitness};
use crate::graph::{EdgeId, Graph};
use crate::strong::{strong_clique_number, StrongCliqueWitness};

/// Quantities shared by every bound checked against one graph, computed
/// at most once each.
pub struct GraphFacts<'g> {
    g: &'g Graph,
    max_degree: usize,
    sc: StrongCliqueWitness,
    odd_cycle: Option<Option<CycleWitness>>,
    cycles: HashMap<usize, Option<CycleWitness>>,
    clique_triangle: Option<Option<CycleWitness>>,
}

impl<'g> GraphFacts<'g> {
    pub fn new(g: &'g Graph) -> GraphFacts<'g> {
        GraphFacts {
            g,
            max_degree: g.max_degree(),
            sc: strong_clique_number(g),
            odd_cycle: None,
            cycles: HashMap::new(),
            clique_triangle: None,
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn strong_clique(&self) -> &StrongCliqueWitness {
        &self.sc
    }

    /// An odd cycle if the graph is not bipartite.
    pub fn odd_cycle(&mut self) -> Option<&CycleWitness> {
        let g = self.g;
        self.odd_cycle
            .get_or_insert_with(|| g.odd_cycle().map(CycleWitness::from_cyclic))
            .as_ref()
    }

    pub fn cycle(&mut self, len: usize) -> Option<&CycleWitness> {
        let g = self.g;
        self.cycles
            .entry(len)
            .or_insert_with(|| find_cycle_of_length(g, len).expect("lengths are at least 3"))
            .as_ref()
    }

    /// A triangle of the subgraph spanned by the maximum strong clique found,
    /// in host vertex ids.
    pub fn clique_triangle(&mut self) -> Option<&CycleWitness> {
        let g = self.g;
        let edges = &self.sc.edges;
        self.clique_triangle
            .get_or_insert_with(|| {
                let h = g
                    .edge_induced_subgraph(edges)
                    .expect("witness edges are valid");
                find_cycle_of_length(&h.graph, 3)
                    .expect("3 is a valid length")
                    .map(|c| {
                        CycleWitness::from_cyclic(
                            c.vertices.iter().map(|&v| h.parent_vertex(v)).collect(),
                        )
                    })
            })
            .as_ref()
    }
}

/// One hypothesis of a bound and whether the graph satisfies it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PreconditionResult {
    pub condition: String,
    pub passed: bool,
    /// A cycle that breaks a freeness or bipartiteness condition, or the
    /// triangle that satisfies a containment condition.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CycleWitness>,
}

/// Evaluates every hypothesis of `spec`, in a fixed order: degree,
/// bipartiteness, forbidden cycles by length, clique triangle.
pub fn preconditions(facts: &mut GraphFacts<'_>, spec: &BoundSpec) -> Vec<PreconditionResult> {
    let mut out = Vec::new();
    let need = spec.min_degree();
    out.push(PreconditionResult {
        condition: format!("max degree >= {need}"),
        passed: facts.max_degree() >= need,
        witness: None,
    });
    if spec.requires_bipartite() {
        let odd = facts.odd_cycle().cloned();
        out.push(PreconditionResult {
            condition: "bipartite".into(),
            passed: odd.is_none(),
            witness: odd,
        });
    }
    for len in spec.forbidden_cycles() {
        let found = facts.cycle(len).cloned();
        out.push(PreconditionResult {
            condition: format!("C{len}-free"),
            passed: found.is_none(),
            witness: found,
        });
    }
    if spec.requires_triangle_in_clique() {
        let tri = facts.clique_triangle().cloned();
        out.push(PreconditionResult {
            condition: "maximum strong clique spans a C3".into(),
            passed: tri.is_some(),
            witness: tri,
        });
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    Counterexample,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub spec: BoundSpec,
    pub max_degree: usize,
    pub sc: usize,
    pub witness: Vec<EdgeId>,
    pub preconditions: Vec<PreconditionResult>,
    /// Absent when the maximum degree is 0.
    pub bound: Option<i64>,
    pub status: Status,
    /// `SC` equals the bound.
    pub tight: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl VerificationReport {
    pub fn applicable(&self) -> bool {
        self.status != Status::NotApplicable
    }
}

/// Checks one bound against facts already gathered for a graph.
pub fn verify_with(facts: &mut GraphFacts<'_>, spec: &BoundSpec) -> VerificationReport {
    let preconditions = preconditions(facts, spec);
    let sc = facts.strong_clique().size;
    let bound = bound_value(spec, facts.max_degree()).ok();
    let status = match bound {
        Some(b) if preconditions.iter().all(|p| p.passed) => {
            if sc as i64 <= b {
                Status::Holds
            } else {
                Status::Counterexample
            }
        }
        _ => Status::NotApplicable,
    };
    VerificationReport {
        spec: *spec,
        max_degree: facts.max_degree(),
        sc,
        witness: facts.strong_clique().edges.clone(),
        preconditions,
        bound,
        status,
        tight: bound == Some(sc as i64),
        elapsed_ms: None,
    }
}

pub fn verify(g: &Graph, spec: &BoundSpec) -> VerificationReport {
    verify_with(&mut GraphFacts::new(g), spec)
}

/// Checks several bounds against one graph, sharing the strong clique and
/// cycle searches. With `timing`, each report records the time spent on
/// the graph so far.
pub fn verify_all(g: &Graph, specs: &[BoundSpec], timing: bool) -> Vec<VerificationReport> {
    let start = Instant::now();
    let mut facts = GraphFacts::new(g);
    specs
        .iter()
        .map(|spec| {
            let mut r = verify_with(&mut facts, spec);
            if timing {
                r.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            r
        })
        .collect()
}
