//! The guide chapters, compiled so every snippet runs as a doc-test.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}

#[doc = include_str!("../../../book/src/strong-cliques.md")]
pub mod strong_cliques {}

#[doc = include_str!("../../../book/src/cycles.md")]
pub mod cycles {}

#[doc = include_str!("../../../book/src/matchings.md")]
pub mod matchings {}

#[doc = include_str!("../../../book/src/witnesses.md")]
pub mod witnesses {}

#[doc = include_str!("../../../book/src/generators.md")]
pub mod generators {}

#[doc = include_str!("../../../book/src/verifier.md")]
pub mod verifier {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
