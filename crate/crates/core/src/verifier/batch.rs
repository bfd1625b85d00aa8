use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use super::bounds::BoundSpec;
use super::report::{verify_all, Status, VerificationReport};
use crate::codec::to_graph6;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Version tag carried by every report document.
pub const REPORT_SCHEMA: &str = "strongclique/report/v1";

/// Graphs handed to the worker pool at a time.
const CHUNK: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BatchOptions {
    pub workers: usize,
    /// Keep every per-graph report, not only counterexamples.
    pub include_reports: bool,
    /// Record per-graph wall time. Output is then no longer reproducible.
    pub timing: bool,
}

impl Default for BatchOptions {
    fn default() -> Self {
        BatchOptions {
            workers: 1,
            include_reports: false,
            timing: false,
        }
    }
}

/// Counts for one bound over the whole batch.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpecAggregate {
    pub spec: BoundSpec,
    pub applicable: usize,
    pub holds: usize,
    pub tight: usize,
    pub counterexamples: usize,
    pub not_applicable: usize,
    /// Largest `SC / bound` over applicable graphs with a positive bound.
    pub max_ratio: Option<f64>,
}

impl SpecAggregate {
    fn new(spec: BoundSpec) -> SpecAggregate {
        SpecAggregate {
            spec,
            applicable: 0,
            holds: 0,
            tight: 0,
            counterexamples: 0,
            not_applicable: 0,
            max_ratio: None,
        }
    }

    fn add(&mut self, r: &VerificationReport) {
        match r.status {
            Status::NotApplicable => {
                self.not_applicable += 1;
                return;
            }
            Status::Holds => self.holds += 1,
            Status::Counterexample => self.counterexamples += 1,
        }
        self.applicable += 1;
        if r.tight {
            self.tight += 1;
        }
        if let Some(b) = r.bound.filter(|&b| b > 0) {
            let ratio = r.sc as f64 / b as f64;
            self.max_ratio = Some(self.max_ratio.map_or(ratio, |m| m.max(ratio)));
        }
    }
}

/// All reports for one input graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphReport {
    /// Position in the input, from 0.
    pub index: usize,
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub reports: Vec<VerificationReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatchSummary {
    pub schema: &'static str,
    pub graphs: usize,
    pub aggregates: Vec<SpecAggregate>,
    /// Graphs with at least one counterexample, in input order.
    pub counterexamples: Vec<GraphReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reports: Option<Vec<GraphReport>>,
}

impl BatchSummary {
    pub fn counterexample_count(&self) -> usize {
        self.aggregates.iter().map(|a| a.counterexamples).sum()
    }

    /// 0 when every applicable check holds, 2 when a counterexample was found.
    pub fn exit_code(&self) -> i32 {
        if self.counterexamples.is_empty() {
            0
        } else {
            2
        }
    }
}

fn check_graph(index: usize, g: &Graph, specs: &[BoundSpec], timing: bool) -> GraphReport {
    GraphReport {
        index,
        graph6: to_graph6(g),
        n: g.vertex_count(),
        edges: g.edge_count(),
        reports: verify_all(g, specs, timing),
    }
}

/// Verifies every graph against every spec. Graphs are processed in chunks
/// by a pool of `workers` threads and merged in input order, so the summary
/// does not depend on the worker count.
pub fn batch_verify<I>(
    source: I,
    specs: &[BoundSpec],
    options: BatchOptions,
) -> Result<BatchSummary>
where
    I: IntoIterator<Item = Graph>,
{
    if options.workers == 0 {
        return Err(Error::Domain("workers must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers)
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;

    let mut summary = BatchSummary {
        schema: REPORT_SCHEMA,
        graphs: 0,
        aggregates: specs.iter().map(|&s| SpecAggregate::new(s)).collect(),
        counterexamples: Vec::new(),
        reports: options.include_reports.then(Vec::new),
    };
    let mut iter = source.into_iter();
    loop {
        let chunk: Vec<Graph> = iter.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let base = summary.graphs;
        let results: Vec<GraphReport> = pool.install(|| {
            chunk
                .par_iter()
                .enumerate()
                .map(|(i, g)| check_graph(base + i, g, specs, options.timing))
                .collect()
        });
        summary.graphs += chunk.len();
        for gr in results {
            for (agg, r) in summary.aggregates.iter_mut().zip(&gr.reports) {
                agg.add(r);
            }
            if gr
                .reports
                .iter()
                .any(|r| r.status == Status::Counterexample)
            {
                summary.counterexamples.push(gr.clone());
            }
            if let Some(all) = summary.reports.as_mut() {
                all.push(gr);
            }
        }
    }
    Ok(summary)
}

/// Writes `counterexamples.g6` (one graph6 line per graph) and
/// `counterexamples.json` (their full reports) into `dir`.
pub fn write_evidence(dir: &Path, summary: &BatchSummary) -> Result<()> {
    fs::create_dir_all(dir)?;
    let mut g6 = String::new();
    for c in &summary.counterexamples {
        g6.push_str(&c.graph6);
        g6.push('\n');
    }
    fs::write(dir.join("counterexamples.g6"), g6)?;
    let json = serde_json::to_string_pretty(&summary.counterexamples)
        .map_err(|e| Error::Io(e.to_string()))?;
    fs::write(dir.join("counterexamples.json"), json + "\n")?;
    Ok(())
}
