//! Exact maximum clique by branch and bound with a greedy colouring bound.
//!
//! Vertices are renumbered once into the initial order (descending degree,
//! ties by ascending id) and all candidate sets are bitsets over that order.
//! At every node the candidates are greedily coloured in order; a vertex with
//! colour `c` can extend the current clique by at most `c`, which prunes the
//! search. Expansion runs from the highest colour down.

use crate::graph::Graph;

#[derive(Clone)]
struct Bitset(Vec<u64>);

impl Bitset {
    fn new(bits: usize) -> Bitset {
        Bitset(vec![0; bits.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bitset) -> Bitset {
        Bitset(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_assign(&mut self, other: &Bitset) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
}

struct Search {
    adj: Vec<Bitset>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search {
    /// Greedy sequential colouring of `p` in vertex order. Returns the vertices
    /// and their colours, with colours non-decreasing.
    fn colour(&self, p: &Bitset) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = p.clone();
        let mut order = Vec::new();
        let mut colours = Vec::new();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.and_not_assign(&self.adj[v]);
                uncoloured.remove(v);
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, mut p: Bitset) {
        let (order, colours) = self.colour(&p);
        for i in (0..order.len()).rev() {
            if self.current.len() + colours[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let next = p.and(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            p.remove(v);
        }
    }
}

/// A maximum clique of `g`, as ascending vertex ids. Deterministic.
pub fn maximum_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    if n == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let adj: Vec<Bitset> = order
        .iter()
        .map(|&v| {
            let mut b = Bitset::new(n);
            for &w in g.neighbors(v) {
                b.insert(position[w]);
            }
            b
        })
        .collect();
    let mut all = Bitset::new(n);
    for i in 0..n {
        all.insert(i);
    }
    let mut search = Search {
        adj,
        best: vec![0],
        current: Vec::new(),
    };
    search.expand(all);
    let mut clique: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    clique.sort_unstable();
    clique
}
