//! Recognition of digraphs with a min ordering and constructive conversion
//! between the equivalent representations: min orderings, signed-interval
//! models, bi-arc models, co-TT and interval models, and two-directional
//! orthogonal ray models. Also: obstruction witnesses for reflexive graphs,
//! the 0/1-matrix view, and list homomorphism by arc consistency.

pub mod biarc;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hom;
pub mod interval;
pub mod io;
pub mod matrix;
pub mod obstruction;
pub mod ordering;
pub mod rational;
pub mod rays;
pub mod sweep;

pub use error::{Error, Result};
pub use graph::{BipartiteDigraph, Digraph};
pub use ordering::{find_min_ordering, verify_min_ordering, VertexOrdering};
