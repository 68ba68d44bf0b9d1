//! Machine-checkable evidence attached to verdicts and failures.

use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Graph, VertexSet};
use crate::io::to_graph6;
use crate::minor::MinorWitness;

/// One independently checkable fact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    /// A clique-minor model; re-check with `verify_witness`.
    Witness {
        t: usize,
        branch_sets: Vec<VertexSet>,
        support_edges: Vec<Edge>,
    },
    /// Edges removed from the instance; later evidence in the same list
    /// refers to the graph without them.
    Deleted { edges: Vec<Edge> },
    /// A cycle inside a set that was claimed to induce a forest.
    Cycle { vertices: Vec<usize> },
    /// Two vertices of a set claimed independent are adjacent.
    Adjacent { u: usize, v: usize },
    /// A vertex outside `dominator` with no neighbor in it.
    Undominated { vertex: usize, dominator: VertexSet },
    /// A vertex with fewer neighbors in `set` than required.
    FewNeighbors {
        vertex: usize,
        set: VertexSet,
        neighbors: VertexSet,
    },
    /// A vertex listed in two parts, or in none.
    Overlap { vertex: usize },
    Uncovered { vertex: usize },
    /// Every candidate vertex of a minor has a neighbor outside it.
    NoIsolatedVertex {
        minor: VertexSet,
        outside: Vec<Edge>,
    },
    /// `set` does not lie inside one component of `G[within]`.
    Split {
        set: VertexSet,
        within: VertexSet,
        components: Vec<VertexSet>,
    },
    /// `G[set]` is connected.
    Connected { set: VertexSet },
    /// A vertex whose neighborhood already uses every allowed color.
    Rainbow {
        vertex: usize,
        neighbors: VertexSet,
        colors: Vec<usize>,
        allowed: usize,
    },
    /// Common neighborhood of an adjacent pair that is not 2-colorable,
    /// with the short connecting paths leaving the neighborhood.
    CommonNeighborhood {
        pair: Edge,
        neighborhood: VertexSet,
        odd_cycle: Vec<usize>,
        paths: Vec<Vec<usize>>,
    },
    /// An ordered partition deeper than a bound.
    Depth {
        depth: usize,
        bound: usize,
        parts: Vec<VertexSet>,
    },
    /// Exhaustive search over `searched` candidates found none.
    Exhausted { searched: u64 },
    /// A coloring.
    Coloring { colors: Vec<usize>, k: usize },
    /// A vertex set.
    Set { vertices: VertexSet },
    /// Free-form context for a failed stage.
    Note { text: String },
}

impl Evidence {
    pub fn witness(g: &Graph, w: &MinorWitness) -> Self {
        Evidence::Witness {
            t: w.t,
            branch_sets: w.branch_sets.clone(),
            support_edges: w.support_edges(g),
        }
    }

    pub fn note(text: impl Into<String>) -> Self {
        Evidence::Note { text: text.into() }
    }
}

/// A construction step whose promised guarantee did not materialize.
///
/// `context` is the graph6 encoding of the graph the failing step ran on;
/// vertex ids in `evidence` refer to that graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureCertificate {
    pub stage: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub round: Option<usize>,
    pub context: String,
    pub evidence: Vec<Evidence>,
}

impl FailureCertificate {
    pub fn new(stage: impl Into<String>, context: &Graph, evidence: Vec<Evidence>) -> Self {
        FailureCertificate {
            stage: stage.into(),
            round: None,
            context: to_graph6(context),
            evidence,
        }
    }

    pub fn in_round(mut self, round: usize) -> Self {
        self.round = Some(round);
        self
    }
}

/// Outcome of testing one claimed property on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Verified,
    Refuted { evidence: Vec<Evidence> },
    Inapplicable { reason: String },
}

impl Verdict {
    pub fn refuted(e: Evidence) -> Self {
        Verdict::Refuted { evidence: vec![e] }
    }

    pub fn inapplicable(reason: impl Into<String>) -> Self {
        Verdict::Inapplicable {
            reason: reason.into(),
        }
    }

    pub fn is_verified(&self) -> bool {
        matches!(self, Verdict::Verified)
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self, Verdict::Refuted { .. })
    }
}
