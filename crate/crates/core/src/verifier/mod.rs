//! Bounds on the strong clique number as checkable statements: each bound
//! has hypotheses (maximum degree, bipartiteness, forbidden cycle lengths)
//! and a formula in `Δ`. A graph that fails a hypothesis is *not
//! applicable*, which is different from the bound holding.

mod batch;
mod bounds;
mod decomposition;
mod report;

pub use batch::{
    batch_verify, write_evidence, BatchOptions, BatchSummary, GraphReport, SpecAggregate,
    REPORT_SCHEMA,
};
pub use bounds::{bound_value, BoundId, BoundSpec};
pub use decomposition::{audit_matching_decomposition, DecompositionAudit, MatchingDecomposition};
pub use report::{
    preconditions, verify, verify_all, verify_with, GraphFacts, PreconditionResult, Status,
    VerificationReport,
};
