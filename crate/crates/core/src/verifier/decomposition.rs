//! Edge counting through a maximum matching of a maximum strong clique.
//!
//! Let `H` be spanned by a maximum strong clique, `M` a maximum matching of
//! `H` with `m = |M|`, `Z` the vertices outside `V(M)`, `X` the matched
//! vertices with an `H`-neighbour in `Z`, `Y` those with at least two, and
//! `D` the largest `H`-degree on `V(M) \ Y`. Then
//!
//! ```text
//! |E(H)| <= |Y| (Δ(H) - D/2 - 1) + m (D + 1) <= m Δ(H) + m D / 2
//! ```
//!
//! Both sides are doubled here so everything stays integral.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::matching::maximum_matching;
use crate::strong::strong_clique_number;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingDecomposition {
    /// Edges of `H`, host ids.
    pub clique: Vec<EdgeId>,
    /// `M`, host edge ids.
    pub matching: Vec<EdgeId>,
    pub m: usize,
    /// Host vertices outside `V(M)`.
    pub z: Vec<usize>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub d: usize,
    pub max_degree_h: usize,
    pub edges_h: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionAudit {
    pub decomposition: MatchingDecomposition,
    /// `2|E(H)|`.
    pub twice_edges: i64,
    /// `2|Y|(Δ(H) - D/2 - 1) + 2m(D + 1)`.
    pub twice_first_bound: i64,
    /// `2mΔ(H) + mD`.
    pub twice_second_bound: i64,
    pub first_bound_holds: bool,
    pub second_bound_holds: bool,
    /// `Y ⊆ X ⊆ V(M)`, `|Y| <= m` and `D <= min(2m, Δ(H))`.
    pub set_invariants_hold: bool,
}

impl DecompositionAudit {
    pub fn passed(&self) -> bool {
        self.first_bound_holds && self.second_bound_holds && self.set_invariants_hold
    }
}

/// Builds the decomposition for the maximum strong clique returned by the
/// solver and checks both inequalities.
pub fn audit_matching_decomposition(g: &Graph) -> Result<DecompositionAudit> {
    if g.max_degree() == 0 {
        return Err(Error::Precondition(
            "decomposition audit needs maximum degree at least 1".into(),
        ));
    }
    let sc = strong_clique_number(g);
    let sub = g.edge_induced_subgraph(&sc.edges)?;
    let h = &sub.graph;
    let matching = maximum_matching(h);
    let m = matching.len();
    let hn = h.vertex_count();
    let in_z: Vec<bool> = (0..hn).map(|v| !matching.is_matched(v)).collect();
    let z_neighbours: Vec<usize> = (0..hn)
        .map(|v| h.neighbors(v).iter().filter(|&&w| in_z[w]).count())
        .collect();
    let matched = matching.vertices();
    let x_local: Vec<usize> = matched
        .iter()
        .copied()
        .filter(|&v| z_neighbours[v] >= 1)
        .collect();
    let y_local: Vec<usize> = matched
        .iter()
        .copied()
        .filter(|&v| z_neighbours[v] >= 2)
        .collect();
    let d = matched
        .iter()
        .filter(|&&v| z_neighbours[v] < 2)
        .map(|&v| h.degree(v))
        .max()
        .unwrap_or(0);
    let max_degree_h = h.max_degree();
    let edges_h = h.edge_count();

    let to_host = |vs: &[usize]| vs.iter().map(|&v| sub.parent_vertex(v)).collect::<Vec<_>>();
    let matched_host: Vec<bool> = {
        let mut mark = vec![false; g.vertex_count()];
        for &v in &matched {
            mark[sub.parent_vertex(v)] = true;
        }
        mark
    };
    let z: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| !matched_host[v])
        .collect();

    let (yy, mm, dd, delta) = (
        y_local.len() as i64,
        m as i64,
        d as i64,
        max_degree_h as i64,
    );
    let twice_edges = 2 * edges_h as i64;
    let twice_first_bound = yy * (2 * delta - dd - 2) + 2 * mm * (dd + 1);
    let twice_second_bound = 2 * mm * delta + mm * dd;
    let y_in_x = y_local.iter().all(|v| x_local.contains(v));
    let set_invariants_hold = y_in_x && y_local.len() <= m && d <= (2 * m).min(max_degree_h);

    let decomposition = MatchingDecomposition {
        clique: sc.edges.clone(),
        matching: matching
            .edges()
            .iter()
            .map(|&e| sub.parent_edge(e))
            .collect(),
        m,
        z,
        x: to_host(&x_local),
        y: to_host(&y_local),
        d,
        max_degree_h,
        edges_h,
    };
    Ok(DecompositionAudit {
        decomposition,
        twice_edges,
        twice_first_bound,
        twice_second_bound,
        first_bound_holds: twice_edges <= twice_first_bound,
        second_bound_holds: twice_edges <= twice_second_bound,
        set_invariants_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_plus_pendants, cycle, star};

    #[test]
    fn pentagon() {
        let a = audit_matching_decomposition(&cycle(5).unwrap()).unwrap();
        assert_eq!(a.decomposition.m, 2);
        assert_eq!(a.decomposition.edges_h, 5);
        assert!(a.passed());
    }

    #[test]
    fn star_has_one_heavy_vertex() {
        let a = audit_matching_decomposition(&star(6).unwrap()).unwrap();
        let d = &a.decomposition;
        assert_eq!(d.m, 1);
        assert_eq!(d.z.len(), 5);
        assert_eq!(d.y, vec![0]);
        assert!(a.passed());
    }

    #[test]
    fn pendant_clique() {
        let a = audit_matching_decomposition(&complete_plus_pendants(5, 1).unwrap()).unwrap();
        assert_eq!(a.decomposition.edges_h, 15);
        assert!(a.passed());
    }

    #[test]
    fn needs_an_edge() {
        assert!(audit_matching_decomposition(&Graph::empty(3)).is_err());
    }
}
