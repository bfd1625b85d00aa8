//! Maximum matchings, minimum vertex covers and the König cover.
//!
//! Bipartite graphs are matched with augmenting paths (left vertices in
//! ascending order, neighbours ascending). Other graphs are matched by
//! exhaustive branching on the lowest live vertex with a memo keyed on the
//! live vertex set; this is exact and fast for the small strong-clique
//! subgraphs it is used on.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Side};

/// A set of pairwise vertex-disjoint edges, with the partner map `x -> x'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    edges: Vec<EdgeId>,
    #[serde(skip)]
    partner: Vec<Option<usize>>,
}

impl Matching {
    /// Validates that `edges` are edges of `g` and pairwise disjoint.
    pub fn from_edges(g: &Graph, edges: &[EdgeId]) -> Result<Matching> {
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut partner = vec![None; g.vertex_count()];
        let mut owner: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
        for &e in &sorted {
            g.check_edge(e)?;
            let (u, v) = g.endpoints(e);
            for w in [u, v] {
                if let Some(first) = owner[w] {
                    return Err(Error::NotAMatching { first, second: e });
                }
                owner[w] = Some(e);
            }
            partner[u] = Some(v);
            partner[v] = Some(u);
        }
        Ok(Matching {
            edges: sorted,
            partner,
        })
    }

    fn from_partner(g: &Graph, partner: Vec<Option<usize>>) -> Matching {
        let mut edges: Vec<EdgeId> = (0..g.vertex_count())
            .filter_map(|u| match partner[u] {
                Some(v) if u < v => g.edge_between(u, v),
                _ => None,
            })
            .collect();
        edges.sort_unstable();
        Matching { edges, partner }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Sorted edge ids.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn partner(&self, x: usize) -> Option<usize> {
        self.partner.get(x).copied().flatten()
    }

    pub fn is_matched(&self, x: usize) -> bool {
        self.partner(x).is_some()
    }

    /// `V(M)`, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        (0..self.partner.len())
            .filter(|&v| self.partner[v].is_some())
            .collect()
    }

    /// Checks the type invariants against a host graph.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.partner.len() != g.vertex_count() {
            return false;
        }
        let mut seen = vec![false; g.vertex_count()];
        for &e in &self.edges {
            if g.check_edge(e).is_err() {
                return false;
            }
            let (u, v) = g.endpoints(e);
            if seen[u] || seen[v] || self.partner[u] != Some(v) || self.partner[v] != Some(u) {
                return false;
            }
            seen[u] = true;
            seen[v] = true;
        }
        (0..g.vertex_count()).all(|v| {
            seen[v] == self.partner[v].is_some()
                && self.partner[v].is_none_or(|p| self.partner[p] == Some(v))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCover {
    pub vertices: Vec<usize>,
}

impl VertexCover {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn covers(&self, g: &Graph) -> bool {
        let mut inside = vec![false; g.vertex_count()];
        for &v in &self.vertices {
            if v >= g.vertex_count() {
                return false;
            }
            inside[v] = true;
        }
        g.edges().iter().all(|&(u, v)| inside[u] || inside[v])
    }
}

/// A maximum-cardinality matching; the result depends on `g` alone.
pub fn maximum_matching(g: &Graph) -> Matching {
    match g.bipartition() {
        Some(bip) => {
            let left: Vec<usize> = (0..g.vertex_count())
                .filter(|&v| bip.side(v) == Side::X)
                .collect();
            bipartite_matching(g, &left)
        }
        None => general_matching(g),
    }
}

fn bipartite_matching(g: &Graph, left: &[usize]) -> Matching {
    let n = g.vertex_count();
    let mut partner = vec![None; n];
    let mut visited = vec![0usize; n];
    for (round, &x) in left.iter().enumerate() {
        augment(g, x, round + 1, &mut visited, &mut partner);
    }
    Matching::from_partner(g, partner)
}

fn augment(
    g: &Graph,
    x: usize,
    stamp: usize,
    visited: &mut [usize],
    partner: &mut [Option<usize>],
) -> bool {
    for &y in g.neighbors(x) {
        if visited[y] == stamp {
            continue;
        }
        visited[y] = stamp;
        let free = match partner[y] {
            None => true,
            Some(x2) => augment(g, x2, stamp, visited, partner),
        };
        if free {
            partner[x] = Some(y);
            partner[y] = Some(x);
            return true;
        }
    }
    false
}

type LiveSet = Vec<u64>;

struct Brancher<'g> {
    g: &'g Graph,
    memo: HashMap<LiveSet, usize>,
}

impl Brancher<'_> {
    fn has(set: &LiveSet, v: usize) -> bool {
        set[v / 64] >> (v % 64) & 1 == 1
    }

    fn without(set: &LiveSet, vs: &[usize]) -> LiveSet {
        let mut s = set.clone();
        for &v in vs {
            s[v / 64] &= !(1u64 << (v % 64));
        }
        s
    }

    /// Drops live vertices without live neighbours so equal subproblems share a key.
    fn normalise(&self, set: &LiveSet) -> LiveSet {
        let isolated: Vec<usize> = (0..self.g.vertex_count())
            .filter(|&v| {
                Self::has(set, v) && !self.g.neighbors(v).iter().any(|&w| Self::has(set, w))
            })
            .collect();
        Self::without(set, &isolated)
    }

    fn lowest(set: &LiveSet) -> Option<usize> {
        set.iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn solve(&mut self, set: &LiveSet) -> usize {
        let set = self.normalise(set);
        let Some(v) = Self::lowest(&set) else {
            return 0;
        };
        if let Some(&val) = self.memo.get(&set) {
            return val;
        }
        let ceiling = set.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2;
        let mut best = 0;
        for &u in self.g.neighbors(v) {
            if !Self::has(&set, u) {
                continue;
            }
            best = best.max(1 + self.solve(&Self::without(&set, &[v, u])));
            if best == ceiling {
                break;
            }
        }
        if best < ceiling {
            best = best.max(self.solve(&Self::without(&set, &[v])));
        }
        self.memo.insert(set, best);
        best
    }

    fn reconstruct(&mut self, mut set: LiveSet) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        loop {
            set = self.normalise(&set);
            let Some(v) = Self::lowest(&set) else {
                return pairs;
            };
            let target = self.solve(&set);
            let mut next = None;
            for &u in self.g.neighbors(v) {
                if Self::has(&set, u) {
                    let rest = Self::without(&set, &[v, u]);
                    if 1 + self.solve(&rest) == target {
                        next = Some((Some(u), rest));
                        break;
                    }
                }
            }
            let (u, rest) = next.unwrap_or_else(|| (None, Self::without(&set, &[v])));
            if let Some(u) = u {
                pairs.push((v, u));
            }
            set = rest;
        }
    }
}

fn general_matching(g: &Graph) -> Matching {
    let n = g.vertex_count();
    let mut all = vec![0u64; n.div_ceil(64).max(1)];
    for v in 0..n {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut b = Brancher {
        g,
        memo: HashMap::new(),
    };
    let pairs = b.reconstruct(all);
    let mut partner = vec![None; n];
    for (u, v) in pairs {
        partner[u] = Some(v);
        partner[v] = Some(u);
    }
    Matching::from_partner(g, partner)
}

/// König cover of a bipartite graph from a maximum matching: alternating
/// reachability `R` from the unmatched `X` vertices, cover
/// `(X \ R) ∪ (Y ∩ R)`. Always a subset of `V(M)` of size `|M|`.
pub fn konig_cover(g: &Graph, m: &Matching) -> Result<VertexCover> {
    let bip = g.bipartition().ok_or(Error::NotBipartite)?;
    if !m.is_valid_in(g) {
        return Err(Error::Precondition(
            "matching does not belong to this graph".into(),
        ));
    }
    let n = g.vertex_count();
    let mut reached = vec![false; n];
    let mut queue = VecDeque::new();
    for v in 0..n {
        if bip.side(v) == Side::X && !m.is_matched(v) {
            reached[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        match bip.side(u) {
            Side::X => {
                for &y in g.neighbors(u) {
                    if m.partner(u) == Some(y) || reached[y] {
                        continue;
                    }
                    match m.partner(y) {
                        None => return Err(Error::NotMaximum),
                        Some(_) => {
                            reached[y] = true;
                            queue.push_back(y);
                        }
                    }
                }
            }
            Side::Y => {
                let x = m.partner(u).expect("reached Y vertices are matched");
                if !reached[x] {
                    reached[x] = true;
                    queue.push_back(x);
                }
            }
        }
    }
    let vertices: Vec<usize> = (0..n)
        .filter(|&v| match bip.side(v) {
            Side::X => !reached[v] && m.is_matched(v),
            Side::Y => reached[v],
        })
        .collect();
    debug_assert_eq!(vertices.len(), m.len());
    Ok(VertexCover { vertices })
}

/// Largest graph on which the branching cover search is attempted.
pub const EXACT_COVER_MAX_VERTICES: usize = 48;

/// `τ(G)`. Bipartite graphs use König's equality; other graphs use
/// [`exact_vertex_cover`].
pub fn vertex_cover_number(g: &Graph) -> Result<usize> {
    if g.is_bipartite() {
        return Ok(maximum_matching(g).len());
    }
    exact_vertex_cover(g).map(|c| c.len())
}

/// Minimum vertex cover by branching on a maximum-degree vertex `v`
/// (take `v`, or take all of `N(v)`), pruned with a greedy matching lower
/// bound. Works on any graph up to [`EXACT_COVER_MAX_VERTICES`] vertices.
pub fn exact_vertex_cover(g: &Graph) -> Result<VertexCover> {
    let n = g.vertex_count();
    if n > EXACT_COVER_MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "too large for exact τ",
            detail: format!("{n} vertices exceed the cap of {EXACT_COVER_MAX_VERTICES}"),
        });
    }
    let mut best: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    let mut state = vec![State::Free; n];
    let mut chosen = Vec::new();
    cover_branch(g, &mut state, &mut chosen, &mut best);
    best.sort_unstable();
    Ok(VertexCover { vertices: best })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Free,
    Taken,
    Excluded,
}

fn live_degree(g: &Graph, state: &[State], v: usize) -> usize {
    g.neighbors(v)
        .iter()
        .filter(|&&w| state[w] == State::Free)
        .count()
}

fn greedy_matching_bound(g: &Graph, state: &[State]) -> usize {
    let mut used = vec![false; g.vertex_count()];
    let mut count = 0;
    for &(u, v) in g.edges() {
        if state[u] == State::Free && state[v] == State::Free && !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            count += 1;
        }
    }
    count
}

fn cover_branch(g: &Graph, state: &mut [State], chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
    if chosen.len() + greedy_matching_bound(g, state) >= best.len() {
        return;
    }
    let pick = (0..g.vertex_count())
        .filter(|&v| state[v] == State::Free)
        .map(|v| (live_degree(g, state, v), v))
        .filter(|&(d, _)| d > 0)
        .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let Some((_, v)) = pick else {
        *best = chosen.clone();
        return;
    };

    state[v] = State::Taken;
    chosen.push(v);
    cover_branch(g, state, chosen, best);
    chosen.pop();

    let nbrs: Vec<usize> = g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| state[w] == State::Free)
        .collect();
    state[v] = State::Excluded;
    for &w in &nbrs {
        state[w] = State::Taken;
        chosen.push(w);
    }
    cover_branch(g, state, chosen, best);
    for &w in &nbrs {
        state[w] = State::Free;
        chosen.pop();
    }
    state[v] = State::Free;
}
