//! Exact combinatorics for the integral closure of graph edge algebras.
//!
//! A finite graph `G` (loops allowed, no multi-edges) defines the monoid of
//! vertex weightings generated by its edges (`u + v`, or `2v` for a loop).
//! This crate works with the saturation of that monoid: the integral vertex
//! weightings that are nonnegative rational combinations of edges.
//!
//! * [`graph`]: graphs, walks, induced odd circuits, even closed walk splitting.
//! * [`semigroup`]: weight vectors, exact cone membership with Farkas
//!   certificates, and constructive decomposition into generators.
//! * [`generators`]: exceptional pairs, the minimal generating set and the
//!   circuit-pair rewriting identities.
//! * [`words`]: words in edges and cycles, moves, standard form and the
//!   word-equality algorithm with replayable move logs.
//! * [`toric`]: pair words, binomial relation classes and the fiber
//!   congruence oracle.
//! * [`spectra`]: admissible subgraphs, prime ideal descriptors and Laurent
//!   free generating sets.
//! * [`cli`]: the `tga` command line front end.

pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod linalg;
mod lp;
pub mod oracle;
pub mod report;
mod search;
pub mod semigroup;
pub mod spectra;
pub mod toric;
pub mod words;

pub use error::{Error, Result};
pub use generators::{ExceptionalPair, Generator};
pub use graph::{Circuit, Edge, Graph, SplitTree, VertexId, Walk};
pub use semigroup::{Decomposition, EdgeWeighting, FarkasCertificate, WeightVector};
pub use words::{Move, MoveKind, MoveLog, Word};
