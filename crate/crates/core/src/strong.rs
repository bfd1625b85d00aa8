//! Line-graph distance between edges, strong cliques, and the exact strong
//! clique number.
//!
//! Two edges are within distance 2 exactly when they share an endpoint or a
//! third edge joins an endpoint of one to an endpoint of the other, so the
//! recognition path never runs a search. `SC(G)` is the clique number of the
//! conflict graph (the square of the line graph).

use serde::Serialize;

use crate::clique::maximum_clique;
use crate::error::{Error, Result};
use crate::graph::{Distance, EdgeId, Graph};

/// A set of edges that pairwise lie within distance 2, with its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrongCliqueWitness {
    /// Sorted edge ids.
    pub edges: Vec<EdgeId>,
    pub size: usize,
}

/// The graph on `E(G)` joining edges at distance 1 or 2.
#[derive(Debug, Clone)]
pub struct ConflictGraph(pub Graph);

impl ConflictGraph {
    pub fn graph(&self) -> &Graph {
        &self.0
    }
}

/// Outcome of [`is_strong_clique`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CliqueCheck {
    Valid,
    /// The lexicographically first pair `(first < second)` at distance > 2.
    Violation {
        first: EdgeId,
        second: EdgeId,
        distance: Distance,
    },
}

impl CliqueCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, CliqueCheck::Valid)
    }
}

/// Distance between two edges in the line graph.
pub fn edge_distance(g: &Graph, e: EdgeId, f: EdgeId) -> Result<Distance> {
    g.check_edge(e)?;
    g.check_edge(f)?;
    if e == f {
        return Ok(Distance::Finite(0));
    }
    let (a, b) = g.endpoints(e);
    let (c, d) = g.endpoints(f);
    if a == c || a == d || b == c || b == d {
        return Ok(Distance::Finite(1));
    }
    let dist = g.distances_from_set(&[a, b]);
    Ok(match dist[c].min(dist[d]) {
        Distance::Finite(k) => Distance::Finite(k + 1),
        Distance::Infinite => Distance::Infinite,
    })
}

/// `edge_distance(e, f) <= 2`, without a search. Ids must be valid.
#[inline]
pub(crate) fn within_two(g: &Graph, e: EdgeId, f: EdgeId) -> bool {
    let (a, b) = g.endpoints(e);
    let (c, d) = g.endpoints(f);
    a == c
        || a == d
        || b == c
        || b == d
        || g.has_edge(a, c)
        || g.has_edge(a, d)
        || g.has_edge(b, c)
        || g.has_edge(b, d)
}

/// Checks that every pair of edges in `s` is within distance 2.
pub fn is_strong_clique(g: &Graph, s: &[EdgeId]) -> Result<CliqueCheck> {
    for &e in s {
        g.check_edge(e)?;
    }
    let mut set = s.to_vec();
    set.sort_unstable();
    set.dedup();
    for (i, &e) in set.iter().enumerate() {
        for &f in &set[i + 1..] {
            if !within_two(g, e, f) {
                return Ok(CliqueCheck::Violation {
                    first: e,
                    second: f,
                    distance: edge_distance(g, e, f)?,
                });
            }
        }
    }
    Ok(CliqueCheck::Valid)
}

/// Like [`is_strong_clique`] but as a precondition: errors on a violation.
pub(crate) fn require_strong_clique(g: &Graph, s: &[EdgeId]) -> Result<()> {
    match is_strong_clique(g, s)? {
        CliqueCheck::Valid => Ok(()),
        CliqueCheck::Violation { first, second, .. } => {
            Err(Error::NotStrongClique { first, second })
        }
    }
}

/// Builds the conflict graph; vertex `i` is edge `EdgeId(i)` of `g`.
pub fn conflict_graph(g: &Graph) -> ConflictGraph {
    let m = g.edge_count();
    let mut mark = vec![usize::MAX; m];
    let mut pairs = Vec::new();
    for e in g.edge_ids() {
        let (a, b) = g.endpoints(e);
        let mut near = Vec::new();
        for &x in [a, b].iter().chain(g.neighbors(a)).chain(g.neighbors(b)) {
            for &f in g.incident_edges(x) {
                if f > e && mark[f.0] != e.0 {
                    mark[f.0] = e.0;
                    near.push(f);
                }
            }
        }
        near.sort_unstable();
        pairs.extend(near.into_iter().map(|f| (e.0, f.0)));
    }
    ConflictGraph(Graph::new(m, pairs).expect("conflict pairs are distinct"))
}

/// Exact `SC(G)` with a certifying witness.
pub fn strong_clique_number(g: &Graph) -> StrongCliqueWitness {
    if g.edge_count() == 0 {
        return StrongCliqueWitness {
            edges: Vec::new(),
            size: 0,
        };
    }
    let conflict = conflict_graph(g);
    let edges: Vec<EdgeId> = maximum_clique(conflict.graph())
        .into_iter()
        .map(EdgeId)
        .collect();
    assert!(
        is_strong_clique(g, &edges).is_ok_and(|c| c.is_valid()),
        "solver returned an invalid strong clique"
    );
    StrongCliqueWitness {
        size: edges.len(),
        edges,
    }
}

/// Edge-count cap for [`brute_force_sc`].
pub const BRUTE_FORCE_MAX_EDGES: usize = 20;

/// `SC(G)` by checking every edge subset, with pairwise distances taken from
/// breadth-first search. Exponential; a test oracle only.
pub fn brute_force_sc(g: &Graph) -> Result<usize> {
    let m = g.edge_count();
    if m > BRUTE_FORCE_MAX_EDGES {
        return Err(Error::TooLarge {
            what: "too large for brute-force strong clique search",
            detail: format!("{m} edges exceed the cap of {BRUTE_FORCE_MAX_EDGES}"),
        });
    }
    let mut ok = vec![0u32; m];
    for i in 0..m {
        for j in 0..m {
            if edge_distance(g, EdgeId(i), EdgeId(j))?.is_within(2) {
                ok[i] |= 1 << j;
            }
        }
    }
    let mut best = 0;
    for mask in 0u32..(1u32 << m) {
        let size = mask.count_ones();
        if size <= best {
            continue;
        }
        let mut bits = mask;
        let mut valid = true;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if mask & !ok[i] != 0 {
                valid = false;
                break;
            }
        }
        if valid {
            best = size;
        }
    }
    Ok(best as usize)
}
