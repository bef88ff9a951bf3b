//! Spans of connected graphs.
//!
//! Two walkers traverse a graph, each visiting every vertex (or every edge),
//! while moving under one of three rule sets. The span is the largest
//! distance they can keep between them at all times. This crate computes all
//! six spans, finds shortest optimal walk pairs, and provides the structural
//! toolkit (interval recognition, cut sets, augmentations) and a brute-force
//! verification harness for graphs of strong vertex span 1.

pub mod error;
pub mod graph;
pub mod product;
pub mod span;
pub mod structure;
pub mod verify;
pub mod walks;

pub use error::{Error, Result};
pub use graph::{Format, Graph, Metrics};
pub use product::{build_product, safety_subgraph, ProductGraph, RuleSet};
pub use span::{span_report, SpanKind, SpanReport};
pub use verify::{verify_graph, TheoremReport};
pub use walks::{min_steps, validate_walk_pair, WalkPair};
