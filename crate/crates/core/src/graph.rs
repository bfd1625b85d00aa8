//! Immutable simple undirected graphs on dense vertex ids `0..n`.
//!
//! Every structural operation that removes something (`G[S]`, `G - S`,
//! `G - W`) returns a fresh [`Graph`] wrapped in a [`Subgraph`], which records
//! how the new vertex and edge ids map back onto the parent.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Index of an edge in a graph's edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for EdgeId {
    fn from(i: usize) -> Self {
        EdgeId(i)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A path length that may be unbounded (vertices or edges in different
/// components). `Finite(_) < Infinite` under the derived order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_within(self, bound: usize) -> bool {
        matches!(self, Distance::Finite(d) if d <= bound)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    X,
    Y,
}

/// A proper 2-colouring. In every component the side holding the
/// lowest-numbered vertex is `X`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn x(&self) -> Vec<usize> {
        self.members(Side::X)
    }

    pub fn y(&self) -> Vec<usize> {
        self.members(Side::Y)
    }

    fn members(&self, which: Side) -> Vec<usize> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == which)
            .collect()
    }
}

/// Simple undirected graph. Edge `i` is stored as `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    // adj[v] sorted ascending; inc[v][i] is the id of the edge {v, adj[v][i]}
    adj: Vec<Vec<usize>>,
    inc: Vec<Vec<EdgeId>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from unordered vertex pairs; edge ids follow input order.
    pub fn new<I>(n: usize, pairs: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut edges = Vec::new();
        for (a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            let id = EdgeId(edges.len());
            match adj[u].binary_search_by_key(&v, |&(w, _)| w) {
                Ok(_) => return Err(Error::DuplicateEdge(u, v)),
                Err(pos) => adj[u].insert(pos, (v, id)),
            }
            let pos = adj[v].binary_search_by_key(&u, |&(w, _)| w).unwrap_err();
            adj[v].insert(pos, (u, id));
            edges.push((u, v));
        }
        let (adj, inc) = adj.into_iter().map(|list| list.into_iter().unzip()).unzip();
        Ok(Graph { n, edges, adj, inc })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            inc: vec![Vec::new(); n],
        }
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    /// Endpoints `(u, v)` with `u < v`. Panics on an invalid id.
    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e.0]
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e.0 < self.edges.len() {
            Ok(())
        } else {
            Err(Error::InvalidEdgeId {
                id: e,
                m: self.edges.len(),
            })
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Ids of the edges at `v`, parallel to [`Graph::neighbors`].
    #[inline]
    pub fn incident_edges(&self, v: usize) -> &[EdgeId] {
        &self.inc[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.adj[u]
            .binary_search(&v)
            .ok()
            .map(|pos| self.inc[u][pos])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Edge set as sorted `(u, v)` pairs, independent of edge-id order.
    pub fn sorted_edges(&self) -> Vec<(usize, usize)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v].is_empty()
    }

    /// Breadth-first distances from `source` to every vertex.
    pub fn distances_from(&self, source: usize) -> Vec<Distance> {
        self.distances_from_set(&[source])
    }

    /// Multi-source breadth-first distances.
    pub fn distances_from_set(&self, sources: &[usize]) -> Vec<Distance> {
        let mut dist = vec![Distance::Infinite; self.n];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s] == Distance::Infinite {
                dist[s] = Distance::Finite(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let Distance::Finite(du) = dist[u] else {
                unreachable!()
            };
            for &w in &self.adj[u] {
                if dist[w] == Distance::Infinite {
                    dist[w] = Distance::Finite(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn vertex_distance(&self, u: usize, v: usize) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Ok(Distance::Finite(0));
        }
        Ok(self.distances_from(u)[v])
    }

    /// Two-colouring with every edge crossing, or `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        self.two_colour().ok()
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colour().is_ok()
    }

    /// A shortest-in-its-BFS-tree odd cycle, as a cyclic vertex list, if the
    /// graph is not bipartite.
    pub fn odd_cycle(&self) -> Option<Vec<usize>> {
        self.two_colour().err()
    }

    fn two_colour(&self) -> std::result::Result<Bipartition, Vec<usize>> {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for root in 0..self.n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::X);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                let other = if su == Side::X { Side::Y } else { Side::X };
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(other);
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => {
                            return Err(close_odd_cycle(u, w, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(Bipartition {
            side: side.into_iter().map(Option::unwrap).collect(),
        })
    }

    /// `G[S]`: the subgraph formed by the edges of `S` and their endpoints.
    /// New vertex ids follow ascending parent ids; new edge ids follow
    /// ascending parent edge ids.
    pub fn edge_induced_subgraph(&self, s: &[EdgeId]) -> Result<Subgraph> {
        for &e in s {
            self.check_edge(e)?;
        }
        let mut keep_edges = s.to_vec();
        keep_edges.sort_unstable();
        keep_edges.dedup();
        let mut keep_vertex = vec![false; self.n];
        for &e in &keep_edges {
            let (u, v) = self.endpoints(e);
            keep_vertex[u] = true;
            keep_vertex[v] = true;
        }
        Ok(self.restrict(&keep_vertex, &keep_edges))
    }

    /// `G[W]`: the subgraph induced by a vertex set.
    pub fn induced_subgraph(&self, w: &[usize]) -> Result<Subgraph> {
        let mut keep_vertex = vec![false; self.n];
        for &v in w {
            self.check_vertex(v)?;
            keep_vertex[v] = true;
        }
        let keep_edges: Vec<EdgeId> = self
            .edge_ids()
            .filter(|&e| {
                let (u, v) = self.endpoints(e);
                keep_vertex[u] && keep_vertex[v]
            })
            .collect();
        Ok(self.restrict(&keep_vertex, &keep_edges))
    }

    /// `G - S - W`: drops the listed edges, then the listed vertices together
    /// with everything incident to them.
    pub fn delete(&self, vertices: &[usize], edges: &[EdgeId]) -> Result<Subgraph> {
        let mut keep_vertex = vec![true; self.n];
        for &v in vertices {
            self.check_vertex(v)?;
            keep_vertex[v] = false;
        }
        let mut drop_edge = vec![false; self.edges.len()];
        for &e in edges {
            self.check_edge(e)?;
            drop_edge[e.0] = true;
        }
        let keep_edges: Vec<EdgeId> = self
            .edge_ids()
            .filter(|&e| {
                let (u, v) = self.endpoints(e);
                !drop_edge[e.0] && keep_vertex[u] && keep_vertex[v]
            })
            .collect();
        Ok(self.restrict(&keep_vertex, &keep_edges))
    }

    fn restrict(&self, keep_vertex: &[bool], keep_edges: &[EdgeId]) -> Subgraph {
        let mut to_local = vec![None; self.n];
        let mut vertex_map = Vec::new();
        for v in 0..self.n {
            if keep_vertex[v] {
                to_local[v] = Some(vertex_map.len());
                vertex_map.push(v);
            }
        }
        let mut edge_to_local = vec![None; self.edges.len()];
        let pairs: Vec<(usize, usize)> = keep_edges
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                edge_to_local[e.0] = Some(EdgeId(i));
                let (u, v) = self.endpoints(e);
                (to_local[u].unwrap(), to_local[v].unwrap())
            })
            .collect();
        let graph = Graph::new(vertex_map.len(), pairs).expect("restriction of a simple graph");
        Subgraph {
            graph,
            vertex_map,
            edge_map: keep_edges.to_vec(),
            vertex_to_local: to_local,
            edge_to_local,
        }
    }
}

fn close_odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    // u and w have the same colour and are adjacent; join their tree paths.
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// A graph derived from a parent, with id translation in both directions.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertex_map[new] = old`
    pub vertex_map: Vec<usize>,
    /// `edge_map[new] = old`
    pub edge_map: Vec<EdgeId>,
    vertex_to_local: Vec<Option<usize>>,
    edge_to_local: Vec<Option<EdgeId>>,
}

impl Subgraph {
    pub fn parent_vertex(&self, v: usize) -> usize {
        self.vertex_map[v]
    }

    pub fn parent_edge(&self, e: EdgeId) -> EdgeId {
        self.edge_map[e.0]
    }

    pub fn local_vertex(&self, parent: usize) -> Option<usize> {
        self.vertex_to_local.get(parent).copied().flatten()
    }

    pub fn local_edge(&self, parent: EdgeId) -> Option<EdgeId> {
        self.edge_to_local.get(parent.0).copied().flatten()
    }
}
