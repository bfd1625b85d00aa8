//! The exhaustive small-graph corpus and bound sweeps over it.

use strongclique::generators::enumerate_graphs;
use strongclique::verifier::{
    batch_verify, BatchOptions, BatchSummary, BoundId, BoundSpec, Status,
};
use strongclique::Graph;

/// Every labelled graph on 1 to `max_n` vertices.
pub fn corpus(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(|n| enumerate_graphs(n, false).unwrap())
}

/// Every theorem identifier paired with each `k` in its domain.
pub fn theorem_specs(ks: &[usize]) -> Vec<BoundSpec> {
    let mut out = Vec::new();
    for id in BoundId::ALL.into_iter().filter(|id| !id.is_conjecture()) {
        if id.takes_k() {
            out.extend(ks.iter().filter_map(|&k| BoundSpec::new(id, Some(k)).ok()));
        } else {
            out.push(BoundSpec::new(id, None).unwrap());
        }
    }
    out
}

pub fn sweep(max_n: usize, specs: &[BoundSpec]) -> BatchSummary {
    batch_verify(corpus(max_n), specs, BatchOptions::default()).unwrap()
}

/// `(spec, max degree, sc, bound)` for every counterexample.
pub fn violations(s: &BatchSummary) -> Vec<(BoundSpec, usize, usize, i64)> {
    s.counterexamples
        .iter()
        .flat_map(|g| &g.reports)
        .filter(|r| r.status == Status::Counterexample)
        .map(|r| (r.spec, r.max_degree, r.sc, r.bound.unwrap()))
        .collect()
}
