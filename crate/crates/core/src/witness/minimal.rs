//! `S`-minimal reduction and the structural properties of `S`-minimal graphs.
//!
//! A graph is `S`-minimal when no proper subgraph keeps `S` as a strong
//! clique. The reduction deletes greedily in a fixed order, so the result is
//! one `S`-minimal subgraph among possibly several.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{Distance, EdgeId, Graph, Subgraph};
use crate::strong::{edge_distance, is_strong_clique, require_strong_clique};

/// An `S`-minimal subgraph with `S` expressed in its own edge ids.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub subgraph: Subgraph,
    /// Sorted local ids of the surviving `S` edges.
    pub s: Vec<EdgeId>,
}

impl Reduction {
    pub fn graph(&self) -> &Graph {
        &self.subgraph.graph
    }
}

fn survives(
    g: &Graph,
    s: &[EdgeId],
    vertices: &[usize],
    edges: &[EdgeId],
) -> Result<Option<Subgraph>> {
    let sub = g.delete(vertices, edges)?;
    let local: Vec<EdgeId> = s
        .iter()
        .map(|&e| sub.local_edge(e).expect("S edges are never deleted"))
        .collect();
    Ok(is_strong_clique(&sub.graph, &local)?
        .is_valid()
        .then_some(sub))
}

/// Deletes vertices (ascending), then edges outside `S` (ascending), while
/// `S` stays a strong clique, and repeats until nothing more can go.
pub fn s_minimal_reduce(g: &Graph, s: &[EdgeId]) -> Result<Reduction> {
    require_strong_clique(g, s)?;
    let mut s_sorted = s.to_vec();
    s_sorted.sort_unstable();
    s_sorted.dedup();
    let mut in_s = vec![false; g.edge_count()];
    let mut touches_s = vec![false; g.vertex_count()];
    for &e in &s_sorted {
        in_s[e.0] = true;
        let (u, v) = g.endpoints(e);
        touches_s[u] = true;
        touches_s[v] = true;
    }

    let mut gone_vertices: Vec<usize> = Vec::new();
    let mut gone_edges: Vec<EdgeId> = Vec::new();
    let mut vertex_alive = vec![true; g.vertex_count()];
    let mut edge_alive = vec![true; g.edge_count()];
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..g.vertex_count() {
            if !vertex_alive[v] || touches_s[v] {
                continue;
            }
            gone_vertices.push(v);
            if survives(g, &s_sorted, &gone_vertices, &gone_edges)?.is_some() {
                vertex_alive[v] = false;
                changed = true;
            } else {
                gone_vertices.pop();
            }
        }
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e);
            if in_s[e.0] || !edge_alive[e.0] || !vertex_alive[u] || !vertex_alive[v] {
                continue;
            }
            gone_edges.push(e);
            if survives(g, &s_sorted, &gone_vertices, &gone_edges)?.is_some() {
                edge_alive[e.0] = false;
                changed = true;
            } else {
                gone_edges.pop();
            }
        }
    }

    let subgraph = g.delete(&gone_vertices, &gone_edges)?;
    let s_local = s_sorted
        .iter()
        .map(|&e| subgraph.local_edge(e).expect("S edges are never deleted"))
        .collect();
    Ok(Reduction {
        subgraph,
        s: s_local,
    })
}

/// Evidence that a property fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Counterexample {
    /// A vertex with no incident `S` edge.
    Vertex(usize),
    /// Two vertices further apart than allowed.
    Pair {
        u: usize,
        v: usize,
        distance: Distance,
    },
    /// An edge outside `S` for which the property has no certificate.
    Edge(EdgeId),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PropertyOutcome {
    Pass,
    Fail(Counterexample),
    /// Only checked when `S` is a maximum strong clique.
    Skipped,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, PropertyOutcome::Pass)
    }

    fn from_first(found: Option<Counterexample>) -> PropertyOutcome {
        found.map_or(PropertyOutcome::Pass, PropertyOutcome::Fail)
    }
}

/// The four structural properties of an `S`-minimal graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    /// Every vertex is incident with an edge of `S`.
    pub every_vertex_touches_s: PropertyOutcome,
    /// The diameter is at most 3.
    pub diameter_at_most_three: PropertyOutcome,
    /// Every edge `uv` outside `S` is the only edge joining some
    /// `uu', vv'` in `S`.
    pub unique_joining_edge: PropertyOutcome,
    /// With `S` maximum, every edge outside `S` is at distance at least 3
    /// from some edge of `S`.
    pub far_edge_in_s: PropertyOutcome,
}

impl MinimalityReport {
    /// All checked properties pass (skipped ones are ignored).
    pub fn all_pass(&self) -> bool {
        [
            &self.every_vertex_touches_s,
            &self.diameter_at_most_three,
            &self.unique_joining_edge,
            &self.far_edge_in_s,
        ]
        .iter()
        .all(|p| !matches!(p, PropertyOutcome::Fail(_)))
    }
}

/// Checks the properties on `g` as given; nothing is reduced first.
pub fn check_minimal_properties(
    g: &Graph,
    s: &[EdgeId],
    s_is_maximum: bool,
) -> Result<MinimalityReport> {
    for &e in s {
        g.check_edge(e)?;
    }
    let n = g.vertex_count();
    let mut in_s = vec![false; g.edge_count()];
    // s_partners[u] = the other endpoints of S edges at u
    let mut s_partners: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &e in s {
        if !in_s[e.0] {
            in_s[e.0] = true;
            let (u, v) = g.endpoints(e);
            s_partners[u].push(v);
            s_partners[v].push(u);
        }
    }

    let touches = PropertyOutcome::from_first(
        (0..n)
            .find(|&v| s_partners[v].is_empty())
            .map(Counterexample::Vertex),
    );

    let mut far_pair = None;
    'outer: for u in 0..n {
        let dist = g.distances_from(u);
        for (v, &d) in dist.iter().enumerate().skip(u + 1) {
            if !d.is_within(3) {
                far_pair = Some(Counterexample::Pair { u, v, distance: d });
                break 'outer;
            }
        }
    }
    let diameter = PropertyOutcome::from_first(far_pair);

    let outside: Vec<EdgeId> = g.edge_ids().filter(|e| !in_s[e.0]).collect();
    let joins = |a: [usize; 2], b: [usize; 2]| {
        a.iter()
            .flat_map(|&p| b.iter().map(move |&q| (p, q)))
            .filter(|&(p, q)| p != q && g.has_edge(p, q))
            .count()
    };
    let unique = PropertyOutcome::from_first(
        outside
            .iter()
            .copied()
            .find(|&e| {
                let (u, v) = g.endpoints(e);
                !s_partners[u]
                    .iter()
                    .any(|&u2| s_partners[v].iter().any(|&v2| joins([u, u2], [v, v2]) == 1))
            })
            .map(Counterexample::Edge),
    );

    let far = if s_is_maximum {
        let mut missing = None;
        for &e in &outside {
            let mut has_far = false;
            for &f in s {
                if !edge_distance(g, e, f)?.is_within(2) {
                    has_far = true;
                    break;
                }
            }
            if !has_far {
                missing = Some(Counterexample::Edge(e));
                break;
            }
        }
        PropertyOutcome::from_first(missing)
    } else {
        PropertyOutcome::Skipped
    };

    Ok(MinimalityReport {
        every_vertex_touches_s: touches,
        diameter_at_most_three: diameter,
        unique_joining_edge: unique,
        far_edge_in_s: far,
    })
}
