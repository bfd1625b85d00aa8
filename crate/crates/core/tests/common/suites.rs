//! Property suites shared by the per-area tests and the acceptance run.
//! Each returns how many instances were checked and a description of every
//! failure.

use strongclique::generators::random_graph;
use strongclique::witness::{find_xm_path, is_x_special, matching_cycle, matching_path};
use strongclique::{find_cycle_of_length, konig_cover, maximum_matching, Graph, Matching};

use super::corpus::{
    bipartite_instances, dense_planted, largest_strong_matching, perturbed_specials,
    sparse_planted, special_instances, Planted,
};
use super::{all_graphs, is_cycle, is_simple_path, oracle_cover_number};

#[derive(Debug, Default)]
pub struct Outcome {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, cond: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !cond {
            self.failures.push(what());
        }
    }
}

fn matched_only(m: &Matching, vs: &[usize]) -> bool {
    vs.iter().all(|&v| m.is_matched(v))
}

/// Long path through every matching edge and, for `m >= 4`, the cycle on
/// `2m - 2` vertices.
pub fn long_paths_and_cycles(count: u64) -> (Outcome, Outcome) {
    let mut path = Outcome::default();
    let mut cycle = Outcome::default();
    for (seed, (g, m)) in bipartite_instances(count).into_iter().enumerate() {
        let size = m.len();
        if size < 2 {
            continue;
        }
        match matching_path(&g, &m) {
            Ok(p) => path.check(
                p.vertices.len() == 2 * size
                    && is_simple_path(&g, &p.vertices)
                    && m.edges().iter().all(|e| p.edges.contains(e))
                    && matched_only(&m, &p.vertices),
                || format!("seed {seed}: bad path {:?}", p.vertices),
            ),
            Err(e) => path.check(false, || format!("seed {seed}: {e}")),
        }
        if size < 4 {
            continue;
        }
        match matching_cycle(&g, &m) {
            Ok(c) => {
                let vs = &c.cycle.vertices;
                let k = vs.len();
                let used = (0..k)
                    .filter(|&i| m.partner(vs[i]) == Some(vs[(i + 1) % k]))
                    .count();
                cycle.check(
                    k == 2 * size - 2
                        && is_cycle(&g, vs)
                        && used >= size - 2
                        && used == c.matching_edges_used
                        && matched_only(&m, vs),
                    || format!("seed {seed}: bad cycle {vs:?}"),
                )
            }
            Err(e) => cycle.check(false, || format!("seed {seed}: {e}")),
        }
    }
    (path, cycle)
}

fn matched_vertices(p: &Planted) -> Vec<usize> {
    p.matching.vertices()
}

/// No `(x, M)`-path of length 2 exactly when `M` is `x`-special, for every
/// `x` in `V(M)`.
pub fn two_path_biconditional(instances: &[Planted]) -> Outcome {
    let mut out = Outcome::default();
    for (i, p) in instances.iter().enumerate() {
        for x in matched_vertices(p) {
            let special = is_x_special(&p.graph, &p.matching, x).unwrap();
            let none = find_xm_path(&p.graph, &p.matching, x, 2).unwrap().is_none();
            out.check(special == none, || {
                format!("instance {i}, x = {x}: special = {special}, no 2-path = {none}")
            });
        }
    }
    out
}

/// For `x`-special `M`, paths of every length in `{1..m} \ {2}`.
pub fn special_lengths() -> Outcome {
    let mut out = Outcome::default();
    for p in special_instances() {
        let m = p.matching.len();
        for len in (1..=m).filter(|&l| l != 2) {
            let found = find_xm_path(&p.graph, &p.matching, 0, len).unwrap();
            out.check(
                found.is_some_and(|path| path.is_valid(&p.graph, &p.matching, 0)),
                || format!("m = {m}: no (x, M)-path of length {len}"),
            );
        }
    }
    out
}

/// Everything the `(x, M)`-path suites run on: special graphs, their
/// perturbations and planted matchings of sizes 2 to 6.
pub fn xm_instances() -> Vec<Planted> {
    let mut all = special_instances();
    all.extend(perturbed_specials(200));
    for m in 2..=6 {
        for seed in 0..40 {
            all.push(sparse_planted(m, 1000 * m as u64 + seed));
            for p in [0.3, 0.6] {
                all.extend(dense_planted(m, p, 2000 * m as u64 + seed));
            }
        }
    }
    all
}

/// When `M` is not `x`-special and `x` has a neighbour in
/// `V(M) \ {x, x'}`, paths of every length `1..m-1`.
pub fn all_short_lengths(instances: &[Planted]) -> Outcome {
    let mut out = Outcome::default();
    for (i, p) in instances.iter().enumerate() {
        let (g, m) = (&p.graph, &p.matching);
        let size = m.len();
        for x in matched_vertices(p) {
            let xp = m.partner(x).unwrap();
            let has_neighbour = g.neighbors(x).iter().any(|&w| w != xp && m.is_matched(w));
            if is_x_special(g, m, x).unwrap() || !has_neighbour {
                continue;
            }
            for len in 1..size {
                let found = find_xm_path(g, m, x, len).unwrap();
                out.check(found.is_some_and(|path| path.is_valid(g, m, x)), || {
                    format!("instance {i}, x = {x}: no (x, M)-path of length {len}")
                });
            }
        }
    }
    out
}

/// Every strong-clique matching of even size `2m >= 6` comes with a
/// `C_{2m}`.
pub fn even_cycles() -> Outcome {
    let mut out = Outcome::default();
    let mut check = |g: &Graph, size: usize, what: String| {
        let c = find_cycle_of_length(g, size).unwrap();
        out.check(c.is_some_and(|c| is_cycle(g, &c.vertices)), || {
            format!("{what}: matching of size {size} but no C{size}")
        });
    };
    for seed in 0..100 {
        let p = sparse_planted(6, seed);
        check(&p.graph, 6, format!("sparse 6, seed {seed}"));
    }
    for seed in 0..30 {
        let p = sparse_planted(8, 500 + seed);
        check(&p.graph, 8, format!("sparse 8, seed {seed}"));
        if let Some(p) = dense_planted(6, 0.35, 700 + seed) {
            check(&p.graph, 6, format!("dense 6, seed {seed}"));
        }
    }
    // matchings found, not planted: any subset of a strong-clique matching
    // is one too, so every even size from 6 up is covered
    for seed in 0..20 {
        let g = random_graph(12, 0.5, 900 + seed).unwrap();
        let largest = largest_strong_matching(&g).len();
        for size in (6..=largest).filter(|s| s % 2 == 0) {
            check(&g, size, format!("random, seed {seed}"));
        }
    }
    out
}

/// König on one bipartite graph: cover of size `α'`, inside `V(M)`, of
/// minimum size.
fn konig_one(g: &Graph, out: &mut Outcome, label: impl Fn() -> String) {
    let m: Matching = maximum_matching(g);
    let ok = match konig_cover(g, &m) {
        Ok(c) => {
            c.covers(g)
                && c.len() == m.len()
                && c.vertices.iter().all(|&v| m.is_matched(v))
                && c.len() == oracle_cover_number(g)
        }
        Err(_) => false,
    };
    out.check(ok, label);
}

pub fn konig_sampled(seeds: u64) -> Outcome {
    let mut out = Outcome::default();
    for seed in 0..seeds {
        let a = 1 + (seed % 4) as usize;
        let b = 1 + (seed / 4 % (8 - a as u64)) as usize;
        let p = [0.3, 0.5, 0.7][(seed % 3) as usize];
        let g = strongclique::generators::random_bipartite(a, b, p, seed).unwrap();
        konig_one(&g, &mut out, || format!("seed {seed}"));
    }
    out
}

pub fn konig_exhaustive(max_n: usize) -> Outcome {
    let mut out = Outcome::default();
    for n in 1..=max_n {
        for g in all_graphs(n).filter(|g| g.is_bipartite()) {
            konig_one(&g, &mut out, || format!("{:?}", g.edges()));
        }
    }
    out
}
