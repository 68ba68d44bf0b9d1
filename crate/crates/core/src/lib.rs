//! Reducible vertex partitions, exact clique-minor search and
//! partition-guided colorings for small graphs, with a claim harness that
//! checks each construction's promised guarantees instance by instance.

pub mod certificate;
pub mod coloring;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod limits;
pub mod minor;
pub mod par;
pub mod partition;
pub mod verify;

pub use certificate::{Evidence, FailureCertificate, Verdict};
pub use error::{BudgetExhausted, Error, Result};
pub use graph::{Contraction, Edge, Graph, Subgraph, VertexSet, MAX_ORDER};
pub use limits::Limits;
