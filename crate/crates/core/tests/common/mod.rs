//! Slow, obviously-correct reference implementations. Nothing here calls
//! into the algorithms under test beyond building graphs.

#![allow(dead_code)]

pub mod corpus;
pub mod suites;
pub mod sweeps;

use std::collections::{HashSet, VecDeque};

use strongclique::Graph;

pub fn lex_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Every labelled graph on `n` vertices, bit `i` of the mask selecting the
/// `i`-th lexicographic pair.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = lex_pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let chosen = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p);
        Graph::new(n, chosen).unwrap()
    })
}

fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Edge-to-edge distances in the explicit line graph, by BFS.
pub fn line_graph_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let es = g.edges();
    let m = es.len();
    let touches = |i: usize, j: usize| {
        let (a, b) = es[i];
        let (c, d) = es[j];
        a == c || a == d || b == c || b == d
    };
    (0..m)
        .map(|s| {
            let mut dist = vec![None; m];
            dist[s] = Some(0);
            let mut q = VecDeque::from([s]);
            while let Some(i) = q.pop_front() {
                for j in 0..m {
                    if j != i && dist[j].is_none() && touches(i, j) {
                        dist[j] = Some(dist[i].unwrap() + 1);
                        q.push_back(j);
                    }
                }
            }
            dist
        })
        .collect()
}

/// `SC(G)` as a maximum clique of the explicit conflict relation, by plain
/// include/exclude recursion.
pub fn oracle_sc(g: &Graph) -> usize {
    let m = g.edge_count();
    assert!(m <= 64);
    let d = line_graph_distances(g);
    let adj: Vec<u64> = (0..m)
        .map(|i| {
            (0..m)
                .filter(|&j| j != i && d[i][j].is_some_and(|x| x <= 2))
                .fold(0u64, |acc, j| acc | 1 << j)
        })
        .collect();
    fn rec(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        rec(adj, cand & adj[v], size + 1, best);
        rec(adj, cand & !(1 << v), size, best);
    }
    let mut best = 0;
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    rec(&adj, all, 0, &mut best);
    best
}

/// Pairwise distance at most 2 in the line graph.
pub fn oracle_is_strong_clique(g: &Graph, edges: &[usize]) -> bool {
    let d = line_graph_distances(g);
    edges
        .iter()
        .all(|&i| edges.iter().all(|&j| d[i][j].is_some_and(|x| x <= 2)))
}

/// A cycle of exactly `len` vertices, by extending every simple path.
pub fn oracle_has_cycle(g: &Graph, len: usize) -> bool {
    let a = adjacency(g);
    let n = g.vertex_count();
    fn extend(a: &[Vec<bool>], path: &mut Vec<usize>, used: &mut [bool], len: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == len {
            return a[last][path[0]];
        }
        for w in 0..a.len() {
            if a[last][w] && !used[w] {
                used[w] = true;
                path.push(w);
                if extend(a, path, used, len) {
                    return true;
                }
                path.pop();
                used[w] = false;
            }
        }
        false
    }
    (0..n).any(|s| {
        let mut used = vec![false; n];
        used[s] = true;
        extend(&a, &mut vec![s], &mut used, len)
    })
}

pub fn oracle_matching_number(g: &Graph) -> usize {
    fn rec(es: &[(usize, usize)], i: usize, used: &mut [bool]) -> usize {
        if i == es.len() {
            return 0;
        }
        let skip = rec(es, i + 1, used);
        let (u, v) = es[i];
        if used[u] || used[v] {
            return skip;
        }
        used[u] = true;
        used[v] = true;
        let take = 1 + rec(es, i + 1, used);
        used[u] = false;
        used[v] = false;
        skip.max(take)
    }
    rec(g.edges(), 0, &mut vec![false; g.vertex_count()])
}

pub fn oracle_cover_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|s| {
            g.edges()
                .iter()
                .all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1)
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn oracle_bipartite(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 20);
    (0u32..1 << n).any(|c| g.edges().iter().all(|&(u, v)| (c >> u & 1) != (c >> v & 1)))
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of isomorphism classes on `n` vertices: the set of sorted edge
/// lists under every relabelling, minimised.
pub fn oracle_class_count(n: usize) -> usize {
    let perms = permutations(n);
    let mut seen = HashSet::new();
    for g in all_graphs(n) {
        let form = perms
            .iter()
            .map(|p| {
                let mut es: Vec<(usize, usize)> = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                    .collect();
                es.sort();
                es
            })
            .min()
            .unwrap();
        seen.insert(form);
    }
    seen.len()
}

/// Vertices visited in order form a simple path of `g`.
pub fn is_simple_path(g: &Graph, vs: &[usize]) -> bool {
    let distinct: HashSet<_> = vs.iter().collect();
    distinct.len() == vs.len() && vs.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Vertices in cyclic order form a cycle of `g`.
pub fn is_cycle(g: &Graph, vs: &[usize]) -> bool {
    let k = vs.len();
    k >= 3 && is_simple_path(g, vs) && g.has_edge(vs[k - 1], vs[0])
}
