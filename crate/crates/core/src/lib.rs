//! Linear sampling of lambda-metric graphs.
//!
//! A lambda-metric is a complete weighted graph whose weights satisfy
//! `w(a,b) + w(b,c) >= lambda * w(c,a)`. This crate builds sparse subgraphs
//! in which every edge survives with probability proportional to its weight
//! while querying, once `n` is large, fewer than all `n choose 2` weights.
//! Average-distance, densest-subgraph, max-cut and hypermatching solvers
//! then run on the sample.

pub mod algorithms;
pub mod decompose;
pub mod error;
pub mod exact;
pub mod experiments;
pub mod graph;
pub mod oracle;
mod pairs;
pub mod rng;
pub mod sampler;

pub use error::{Error, Result};
