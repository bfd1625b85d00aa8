//! Special matchings and `(x, M)`-paths.
//!
//! For a matching `M` and `x ∈ V(M)`, an `(x, M)`-path is a path in
//! `G[V(M)]` that starts at `x`, does not end with an edge of `M`, and uses
//! every edge of `M` whose two ends it visits. `M` is `x`-special when, with
//! `x_1 = x`, the only edges among `V(M)` are the matching edges, `x_1 x_i`
//! for `i >= 2`, and `x_i' x_j'` for `2 <= i < j`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::matching::Matching;

/// An `(x, M)`-path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XmPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeId>,
}

impl XmPath {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks every defining condition against `g`, `m` and the start `x`.
    pub fn is_valid(&self, g: &Graph, m: &Matching, x: usize) -> bool {
        let vs = &self.vertices;
        if vs.first() != Some(&x) || vs.len() != self.edges.len() + 1 || self.edges.is_empty() {
            return false;
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in vs {
            if v >= g.vertex_count() || !m.is_matched(v) || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        let steps_ok = vs
            .windows(2)
            .zip(&self.edges)
            .all(|(w, &e)| g.edge_between(w[0], w[1]) == Some(e));
        let last = vs.len() - 1;
        let last_outside_m = m.partner(vs[last]) != Some(vs[last - 1]);
        // a matching edge inside V(P) is a path edge iff the partners are consecutive
        let m_edges_on_path = (0..vs.len()).all(|i| {
            let p = m.partner(vs[i]).expect("path vertices are matched");
            !seen[p] || (i > 0 && vs[i - 1] == p) || (i < last && vs[i + 1] == p)
        });
        steps_ok && last_outside_m && m_edges_on_path
    }
}

fn check_start(g: &Graph, m: &Matching, x: usize) -> Result<()> {
    g.check_vertex(x)?;
    if !m.is_valid_in(g) {
        return Err(Error::Precondition(
            "matching does not belong to this graph".into(),
        ));
    }
    if !m.is_matched(x) {
        return Err(Error::Unmatched(x));
    }
    Ok(())
}

/// Whether `m` is `x`-special in `g`.
pub fn is_x_special(g: &Graph, m: &Matching, x: usize) -> Result<bool> {
    check_start(g, m, x)?;
    let x1p = m.partner(x).unwrap();
    // orient every other matching edge as (x_i, x_i') with x_i adjacent to x
    let mut role: Vec<Option<(bool, usize)>> = vec![None; g.vertex_count()];
    role[x] = Some((true, 1));
    role[x1p] = Some((false, 1));
    for (idx, &e) in m.edges().iter().enumerate() {
        let (a, b) = g.endpoints(e);
        if a == x || b == x {
            continue;
        }
        let (xi, xip) = match (g.has_edge(x, a), g.has_edge(x, b)) {
            (true, false) => (a, b),
            (false, true) => (b, a),
            _ => return Ok(false),
        };
        role[xi] = Some((true, idx + 2));
        role[xip] = Some((false, idx + 2));
    }
    let vm = m.vertices();
    for (i, &u) in vm.iter().enumerate() {
        for &v in &vm[i + 1..] {
            let (ru, rv) = (role[u].unwrap(), role[v].unwrap());
            let expected = if ru.1 == rv.1 {
                true
            } else {
                match (ru.0, rv.0) {
                    (true, true) => u == x || v == x,
                    (false, false) => u != x1p && v != x1p,
                    _ => false,
                }
            };
            if g.has_edge(u, v) != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `m` is `x`-special for some `x ∈ V(M)`.
pub fn is_special(g: &Graph, m: &Matching) -> Result<bool> {
    for x in m.vertices() {
        if is_x_special(g, m, x)? {
            return Ok(true);
        }
    }
    Ok(false)
}

struct XmSearch<'a> {
    g: &'a Graph,
    m: &'a Matching,
    len: usize,
    path: Vec<usize>,
    on_path: Vec<bool>,
}

impl XmSearch<'_> {
    fn extend(&mut self) -> bool {
        let end = *self.path.last().unwrap();
        if self.path.len() == self.len + 1 {
            let prev = self.path[self.path.len() - 2];
            return self.m.partner(end) != Some(prev);
        }
        for &w in self.g.neighbors(end) {
            let Some(pw) = self.m.partner(w) else {
                continue;
            };
            if self.on_path[w] || (self.on_path[pw] && pw != end) {
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

/// An `(x, M)`-path with exactly `len` edges, by backtracking with
/// neighbours in ascending order. Longer than `2|M| - 1` edges is
/// impossible and returns `None` at once.
pub fn find_xm_path(g: &Graph, m: &Matching, x: usize, len: usize) -> Result<Option<XmPath>> {
    check_start(g, m, x)?;
    if len == 0 {
        return Err(Error::Domain("path length must be at least 1".into()));
    }
    if len + 1 > 2 * m.len() {
        return Ok(None);
    }
    let mut on_path = vec![false; g.vertex_count()];
    on_path[x] = true;
    let mut search = XmSearch {
        g,
        m,
        len,
        path: vec![x],
        on_path,
    };
    if !search.extend() {
        return Ok(None);
    }
    let vertices = search.path;
    let edges = vertices
        .windows(2)
        .map(|w| g.edge_between(w[0], w[1]).unwrap())
        .collect();
    Ok(Some(XmPath { vertices, edges }))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `x_1 = 0`, `x_1' = 1`, and `x_i = 2i - 2`, `x_i' = 2i - 1` for `i >= 2`.
    fn special(m: usize) -> Graph {
        let mut pairs: Vec<(usize, usize)> = (0..m).map(|i| (2 * i, 2 * i + 1)).collect();
        for i in 1..m {
            pairs.push((0, 2 * i));
        }
        for i in 1..m {
            for j in i + 1..m {
                pairs.push((2 * i + 1, 2 * j + 1));
            }
        }
        Graph::new(2 * m, pairs).unwrap()
    }

    fn matching(g: &Graph, m: usize) -> Matching {
        let ids: Vec<EdgeId> = (0..m)
            .map(|i| g.edge_between(2 * i, 2 * i + 1).unwrap())
            .collect();
        Matching::from_edges(g, &ids).unwrap()
    }

    #[test]
    fn special_pattern() {
        let g = special(4);
        let m = matching(&g, 4);
        assert!(is_x_special(&g, &m, 0).unwrap());
        assert!(!is_x_special(&g, &m, 1).unwrap());
        assert!(is_special(&g, &m).unwrap());

        let (a, b) = (3, 5);
        let pruned = g
            .delete(&[], &[g.edge_between(a, b).unwrap()])
            .unwrap()
            .graph;
        let m2 = matching(&pruned, 4);
        assert!(!is_x_special(&pruned, &m2, 0).unwrap());
    }

    #[test]
    fn hexagon_is_not_special() {
        let c6 = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let m = matching(&c6, 3);
        for x in 0..6 {
            assert!(!is_x_special(&c6, &m, x).unwrap());
        }
    }

    #[test]
    fn paths_in_special_matchings() {
        let g = special(4);
        let m = matching(&g, 4);
        assert_eq!(find_xm_path(&g, &m, 0, 2).unwrap(), None);
        for len in [1, 3, 4] {
            let p = find_xm_path(&g, &m, 0, len).unwrap().unwrap();
            assert_eq!(p.len(), len);
            assert!(p.is_valid(&g, &m, 0), "{p:?}");
        }
        assert_eq!(find_xm_path(&g, &m, 0, 8).unwrap(), None);
        assert!(find_xm_path(&g, &m, 0, 0).is_err());
    }

    #[test]
    fn unmatched_start() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let m = Matching::from_edges(&g, &[EdgeId(0)]).unwrap();
        assert_eq!(find_xm_path(&g, &m, 2, 1), Err(Error::Unmatched(2)));
        assert_eq!(is_x_special(&g, &m, 2), Err(Error::Unmatched(2)));
    }

    #[test]
    fn single_step() {
        // two matching edges 01, 23 joined by 02
        let g = Graph::new(4, [(0, 1), (2, 3), (0, 2)]).unwrap();
        let m = Matching::from_edges(&g, &[EdgeId(0), EdgeId(1)]).unwrap();
        let p = find_xm_path(&g, &m, 0, 1).unwrap().unwrap();
        assert_eq!(p.vertices, vec![0, 2]);
        assert!(p.is_valid(&g, &m, 0));
        // x -> x' is not allowed as the last edge
        assert_eq!(find_xm_path(&g, &m, 1, 1).unwrap(), None);
    }
}
