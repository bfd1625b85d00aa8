//! Long paths and cycles through a strong-clique matching of a bipartite
//! graph.
//!
//! Write the matching as `x_i y_i` with `x_i` on side `X`. Any two matching
//! edges are within distance 2 and the graph is bipartite, so for `i != j` at
//! least one of `x_i y_j`, `x_j y_i` is an edge. The digraph with an arc
//! `i -> j` for every edge `x_i y_j` is therefore semicomplete, and each
//! directed path `w_1 ... w_m` in it lifts to the path
//! `y_1 x_1 y_2 x_2 ... y_m x_m` in the graph.

use serde::Serialize;

use super::digraph::{semicomplete_hamiltonian_path, SemiCompleteDigraph};
use crate::cycles::CycleWitness;
use crate::error::{Error, Result};
use crate::graph::{Bipartition, EdgeId, Graph, Side};
use crate::matching::Matching;
use crate::strong::require_strong_clique;

/// The auxiliary digraph together with the oriented matching edges it was
/// built from: vertex `i` stands for `pairs[i] = (x_i, y_i)`.
#[derive(Debug, Clone)]
pub struct AuxiliaryDigraph {
    pub digraph: SemiCompleteDigraph,
    pub pairs: Vec<(usize, usize)>,
}

/// A path in the host graph, as vertices and the edges between them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeId>,
}

impl PathWitness {
    fn from_vertices(g: &Graph, vertices: Vec<usize>) -> PathWitness {
        let edges = vertices
            .windows(2)
            .map(|w| {
                g.edge_between(w[0], w[1])
                    .expect("consecutive path vertices are adjacent")
            })
            .collect();
        PathWitness { vertices, edges }
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.vertex_count()];
        self.vertices
            .iter()
            .all(|&v| v < g.vertex_count() && !std::mem::replace(&mut seen[v], true))
            && self.edges.len() + 1 == self.vertices.len()
            && self
                .vertices
                .windows(2)
                .zip(&self.edges)
                .all(|(w, &e)| g.edge_between(w[0], w[1]) == Some(e))
    }
}

/// A cycle through the matching and the number of matching edges on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingCycle {
    pub cycle: CycleWitness,
    pub matching_edges_used: usize,
}

fn check_bipartition(g: &Graph, sides: &Bipartition) -> Result<()> {
    if g.edges()
        .iter()
        .all(|&(u, v)| sides.side(u) != sides.side(v))
    {
        Ok(())
    } else {
        Err(Error::NotBipartite)
    }
}

pub fn auxiliary_digraph(g: &Graph, m: &Matching, sides: &Bipartition) -> Result<AuxiliaryDigraph> {
    check_bipartition(g, sides)?;
    if !m.is_valid_in(g) {
        return Err(Error::Precondition(
            "matching does not belong to this graph".into(),
        ));
    }
    require_strong_clique(g, m.edges())?;
    let pairs: Vec<(usize, usize)> = m
        .edges()
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            if sides.side(u) == Side::X {
                (u, v)
            } else {
                (v, u)
            }
        })
        .collect();
    let mut arcs = Vec::new();
    for (i, &(xi, _)) in pairs.iter().enumerate() {
        for (j, &(_, yj)) in pairs.iter().enumerate() {
            if i != j && g.has_edge(xi, yj) {
                arcs.push((i, j));
            }
        }
    }
    let digraph = SemiCompleteDigraph::new(pairs.len(), arcs)?;
    Ok(AuxiliaryDigraph { digraph, pairs })
}

fn prepare(g: &Graph, m: &Matching) -> Result<AuxiliaryDigraph> {
    let sides = g.bipartition().ok_or(Error::NotBipartite)?;
    auxiliary_digraph(g, m, &sides)
}

fn lift(aux: &AuxiliaryDigraph, order: &[usize]) -> Vec<usize> {
    order
        .iter()
        .flat_map(|&i| {
            let (x, y) = aux.pairs[i];
            [y, x]
        })
        .collect()
}

/// A path on `2m` vertices inside `G[V(M)]` that contains every edge of a
/// strong-clique matching `M` of a bipartite graph.
pub fn matching_path(g: &Graph, m: &Matching) -> Result<PathWitness> {
    if m.is_empty() {
        return Err(Error::Precondition("matching must be non-empty".into()));
    }
    let aux = prepare(g, m)?;
    let order = semicomplete_hamiltonian_path(&aux.digraph);
    Ok(PathWitness::from_vertices(g, lift(&aux, &order)))
}

/// A cycle of length `2m - 2` inside `G[V(M)]` using at least `m - 2` edges
/// of a strong-clique matching `M` (`m >= 4`) of a bipartite graph.
///
/// If the auxiliary digraph is strong it has a directed cycle on `m - 1`
/// vertices, which lifts to a cycle using `m - 1` matching edges. Otherwise a
/// Hamiltonian path runs from the first strong component to the last one;
/// its end points are joined by an arc `u -> v`, i.e. the edge `x_u y_v`,
/// which closes `x_u y_2 x_2 ... y_{m-1} x_{m-1} y_v` into a cycle using
/// `m - 2` matching edges.
pub fn matching_cycle(g: &Graph, m: &Matching) -> Result<MatchingCycle> {
    let size = m.len();
    if size < 4 {
        return Err(Error::Precondition(format!(
            "m must be at least 4, got {size}"
        )));
    }
    let aux = prepare(g, m)?;
    let d = &aux.digraph;
    let vertices = if d.is_strongly_connected() {
        let order = d.find_cycle(size - 1)?.ok_or_else(|| {
            Error::Precondition("strong semicomplete digraph without the expected cycle".into())
        })?;
        lift(&aux, &order)
    } else {
        let comps = d.strong_components();
        let u = comps[0][0];
        let v = comps[comps.len() - 1][0];
        let order = d.find_path(u, v, size)?.ok_or_else(|| {
            Error::Precondition("no Hamiltonian path between the extreme components".into())
        })?;
        let lifted = lift(&aux, &order);
        // drop y_u at the front and x_v at the back
        lifted[1..lifted.len() - 1].to_vec()
    };
    let cycle = CycleWitness::from_cyclic(vertices);
    debug_assert!(cycle.is_valid_in(g));
    let k = cycle.vertices.len();
    let used = (0..k)
        .filter(|&i| m.partner(cycle.vertices[i]) == Some(cycle.vertices[(i + 1) % k]))
        .count();
    Ok(MatchingCycle {
        cycle,
        matching_edges_used: used,
    })
}
