//! Detection of (not necessarily induced) cycles of a given length.
//!
//! The search anchors each cycle at its smallest vertex `a` and extends simple
//! paths through vertices larger than `a`. A partial path is abandoned as
//! soon as its end cannot get back to `a` within the remaining edge budget,
//! measured by breadth-first search in the graph with the path interior
//! removed.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A cycle as a cyclically ordered vertex list; the first vertex is the
/// smallest on the cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
}

impl CycleWitness {
    /// Rotates a cyclic vertex order so that its smallest vertex comes first.
    pub fn from_cyclic(mut vertices: Vec<usize>) -> CycleWitness {
        if let Some(i) = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
        {
            vertices.rotate_left(i);
        }
        CycleWitness { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Distinct vertices, at least three, consecutive ones adjacent in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        if k < 3 || self.vertices.iter().any(|&v| v >= g.vertex_count()) {
            return false;
        }
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        distinct.len() == k
            && (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]))
    }
}

/// Result of a freeness query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Freeness {
    Free,
    Contains(CycleWitness),
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }

    pub fn witness(&self) -> Option<&CycleWitness> {
        match self {
            Freeness::Free => None,
            Freeness::Contains(w) => Some(w),
        }
    }
}

struct CycleSearch<'g> {
    g: &'g Graph,
    len: usize,
    anchor: usize,
    path: Vec<usize>,
    on_path: Vec<bool>,
}

impl CycleSearch<'_> {
    /// Whether `end` can reach the anchor in at most `budget` edges through
    /// vertices above the anchor that are not on the path.
    fn can_close(&self, end: usize, budget: usize) -> bool {
        let n = self.g.vertex_count();
        let mut dist = vec![usize::MAX; n];
        dist[end] = 0;
        let mut queue = VecDeque::from([end]);
        while let Some(u) = queue.pop_front() {
            if dist[u] >= budget {
                continue;
            }
            for &w in self.g.neighbors(u) {
                if w == self.anchor {
                    return true;
                }
                if w > self.anchor && !self.on_path[w] && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        false
    }

    fn extend(&mut self) -> bool {
        let end = *self.path.last().unwrap();
        if self.path.len() == self.len {
            return self.g.has_edge(end, self.anchor);
        }
        // vertices still to add, plus the closing edge
        let budget = self.len - self.path.len() + 1;
        if self.path.len() > 1 && !self.can_close(end, budget) {
            return false;
        }
        for &w in self.g.neighbors(end) {
            if w <= self.anchor || self.on_path[w] {
                continue;
            }
            self.path.push(w);
            self.on_path[w] = true;
            if self.extend() {
                return true;
            }
            self.on_path[w] = false;
            self.path.pop();
        }
        false
    }
}

/// Finds a cycle on exactly `len` vertices, preferring the smallest anchor.
pub fn find_cycle_of_length(g: &Graph, len: usize) -> Result<Option<CycleWitness>> {
    if len < 3 {
        return Err(Error::Domain(format!(
            "cycle length must be at least 3, got {len}"
        )));
    }
    let n = g.vertex_count();
    if len > n {
        return Ok(None);
    }
    for anchor in 0..=(n - len) {
        if g.neighbors(anchor).iter().filter(|&&w| w > anchor).count() < 2 {
            continue;
        }
        let mut on_path = vec![false; n];
        on_path[anchor] = true;
        let mut search = CycleSearch {
            g,
            len,
            anchor,
            path: vec![anchor],
            on_path,
        };
        if search.extend() {
            return Ok(Some(CycleWitness {
                vertices: search.path,
            }));
        }
    }
    Ok(None)
}

/// Checks `C_l`-freeness for every listed length, in the given order,
/// reporting the first cycle found.
pub fn is_free(g: &Graph, lengths: &[usize]) -> Result<Freeness> {
    if let Some(&bad) = lengths.iter().find(|&&l| l < 3) {
        return Err(Error::Domain(format!(
            "cycle length must be at least 3, got {bad}"
        )));
    }
    for &len in lengths {
        if let Some(w) = find_cycle_of_length(g, len)? {
            return Ok(Freeness::Contains(w));
        }
    }
    Ok(Freeness::Free)
}

/// Length of a shortest cycle, or `None` for a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let c = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(c, |b| b.min(c)));
                }
            }
        }
    }
    best
}
