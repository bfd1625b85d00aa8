//! Seeded instance families for the witness suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strongclique::generators::{random_bipartite, special_matching_graph};
use strongclique::{
    edge_distance, is_strong_clique, maximum_clique, maximum_matching, strong_clique_number,
    EdgeId, Graph, Matching,
};

/// A graph with the perfect matching `{2i, 2i+1}` and its matching.
pub struct Planted {
    pub graph: Graph,
    pub matching: Matching,
}

impl Planted {
    fn new(n: usize, pairs: Vec<(usize, usize)>, m: usize) -> Option<Planted> {
        let graph = Graph::new(n, pairs).unwrap();
        let ids: Vec<EdgeId> = (0..m)
            .map(|i| graph.edge_between(2 * i, 2 * i + 1).unwrap())
            .collect();
        if !is_strong_clique(&graph, &ids).unwrap().is_valid() {
            return None;
        }
        let matching = Matching::from_edges(&graph, &ids).unwrap();
        Some(Planted { graph, matching })
    }
}

fn matching_pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m).map(|i| (2 * i, 2 * i + 1)).collect()
}

/// Matching plus each other pair of `V(M)` with probability `p`; `None`
/// when the matching is not a strong clique.
pub fn dense_planted(m: usize, p: f64, seed: u64) -> Option<Planted> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = matching_pairs(m);
    for u in 0..2 * m {
        for v in u + 1..2 * m {
            if !(u % 2 == 0 && v == u + 1) && rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Planted::new(2 * m, pairs, m)
}

/// Matching plus exactly one random edge between every two matching edges:
/// the sparsest way to make the matching a strong clique.
pub fn sparse_planted(m: usize, seed: u64) -> Planted {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = matching_pairs(m);
    for i in 0..m {
        for j in i + 1..m {
            let u = 2 * i + rng.gen_range(0..2);
            let v = 2 * j + rng.gen_range(0..2);
            pairs.push((u, v));
        }
    }
    Planted::new(2 * m, pairs, m).expect("one edge per pair makes a strong clique")
}

/// The special matching graphs of sizes 3 to 6.
pub fn special_instances() -> Vec<Planted> {
    (3..=6)
        .map(|m| {
            let graph = special_matching_graph(m).unwrap();
            let ids: Vec<EdgeId> = (0..m).map(EdgeId).collect();
            let matching = Matching::from_edges(&graph, &ids).unwrap();
            Planted { graph, matching }
        })
        .collect()
}

/// `count` special graphs with one or two non-matching pairs of `V(M)`
/// toggled, keeping only those in which the matching is still a strong
/// clique.
pub fn perturbed_specials(count: usize) -> Vec<Planted> {
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        seed += 1;
        let m = rng.gen_range(3..=6);
        let base = special_matching_graph(m).unwrap();
        let mut edges: Vec<(usize, usize)> = base.sorted_edges();
        let mut candidates: Vec<(usize, usize)> = (0..2 * m)
            .flat_map(|u| (u + 1..2 * m).map(move |v| (u, v)))
            .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1))
            .collect();
        candidates.shuffle(&mut rng);
        let toggles = rng.gen_range(1..=2);
        for &(u, v) in candidates.iter().take(toggles) {
            if let Some(i) = edges.iter().position(|&e| e == (u, v)) {
                edges.remove(i);
            } else {
                edges.push((u, v));
            }
        }
        if let Some(p) = Planted::new(2 * m, edges, m) {
            out.push(p);
        }
    }
    out
}

/// Seeded bipartite instances with sides of 1 to 6 vertices, each paired
/// with a maximum matching of the subgraph spanned by a maximum strong
/// clique (host edge ids). The matching is itself a strong clique.
pub fn bipartite_instances(count: u64) -> Vec<(Graph, Matching)> {
    (0..count)
        .map(|seed| {
            let a = 1 + (seed % 6) as usize;
            let b = 1 + (seed / 6 % 6) as usize;
            let g = random_bipartite(a, b, 0.5, seed).unwrap();
            let m = clique_matching(&g);
            (g, m)
        })
        .collect()
}

pub fn clique_matching(g: &Graph) -> Matching {
    let s = strong_clique_number(g);
    let sub = g.edge_induced_subgraph(&s.edges).unwrap();
    let local = maximum_matching(&sub.graph);
    let host: Vec<EdgeId> = local.edges().iter().map(|&e| sub.parent_edge(e)).collect();
    Matching::from_edges(g, &host).unwrap()
}

/// A largest matching of `g` that is also a strong clique: a maximum clique
/// of the graph on `E(G)` joining disjoint edges within distance 2.
pub fn largest_strong_matching(g: &Graph) -> Vec<EdgeId> {
    let m = g.edge_count();
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = g.endpoints(EdgeId(i));
            let (c, d) = g.endpoints(EdgeId(j));
            let disjoint = a != c && a != d && b != c && b != d;
            if disjoint && edge_distance(g, EdgeId(i), EdgeId(j)).unwrap().is_within(2) {
                pairs.push((i, j));
            }
        }
    }
    let h = Graph::new(m, pairs).unwrap();
    maximum_clique(&h).into_iter().map(EdgeId).collect()
}
