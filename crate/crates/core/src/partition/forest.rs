//! Induced forests, domination and dominating trees.

use crate::certificate::{Evidence, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    undominated(g, s).is_none()
}

/// First vertex outside `s` without a neighbor in `s`.
pub fn undominated(g: &Graph, s: VertexSet) -> Option<usize> {
    (g.vertex_set() - s)
        .iter()
        .find(|&v| !g.neighbors(v).intersects(s))
}

/// Grows `f` by scanning vertices in ascending id and keeping each one
/// whose addition leaves the induced subgraph acyclic.
pub fn extend_to_maximal_forest(g: &Graph, f: VertexSet) -> Result<VertexSet> {
    g.check_set(f)?;
    if !g.is_forest(f) {
        return Err(Error::domain("the starting set does not induce a forest"));
    }
    let mut s = f;
    for v in g.vertices() {
        if s.contains(v) {
            continue;
        }
        // v closes a cycle iff two of its neighbors in s share a component.
        let nb = g.neighbors(v) & s;
        let closes = g
            .components_within(s)
            .iter()
            .any(|c| (nb & *c).len() >= 2);
        if !closes {
            s.insert(v);
        }
    }
    Ok(s)
}

pub fn maximal_induced_forest(g: &Graph) -> VertexSet {
    extend_to_maximal_forest(g, VertexSet::EMPTY).expect("the empty set is a forest")
}

/// A maximal induced forest dominates every vertex it leaves out, so the
/// greedy forest is also a maximal dominating forest.
pub fn maximal_dominating_forest(g: &Graph) -> VertexSet {
    maximal_induced_forest(g)
}

/// True when no single vertex outside `s` can join while keeping `G[s]`
/// acyclic.
pub fn is_maximal_forest(g: &Graph, s: VertexSet) -> bool {
    g.is_forest(s) && (g.vertex_set() - s).iter().all(|v| !g.is_forest(s.with(v)))
}

/// `G[s]` is a tree, `s` dominates, and no outside vertex can join while
/// keeping a tree.
pub fn is_maximal_dominating_tree(g: &Graph, s: VertexSet) -> bool {
    g.is_tree(s)
        && is_dominating(g, s)
        && (g.vertex_set() - s).iter().all(|v| !g.is_tree(s.with(v)))
}

/// Every maximal dominating tree, by exhaustive subset scan.
pub fn maximal_dominating_trees(g: &Graph, subset_cap: usize) -> Result<Vec<VertexSet>> {
    if g.order() > subset_cap {
        return Err(Error::OrderCap {
            order: g.order(),
            cap: subset_cap,
        });
    }
    Ok((1u64..1u64 << g.order())
        .map(VertexSet::from_bits)
        .filter(|&s| is_maximal_dominating_tree(g, s))
        .collect())
}

/// Every vertex outside a maximal dominating tree has at least two
/// neighbors inside it.
pub fn two_neighbor_check(g: &Graph, s: VertexSet) -> Verdict {
    if g.check_set(s).is_err() {
        return Verdict::inapplicable("set is not within the graph");
    }
    if !is_maximal_dominating_tree(g, s) {
        return Verdict::inapplicable("set is not a maximal dominating tree");
    }
    let outside = g.vertex_set() - s;
    if outside.is_empty() {
        return Verdict::inapplicable("no vertex outside the tree");
    }
    for v in outside {
        let nb = g.neighbors_in(v, s);
        if nb.len() < 2 {
            return Verdict::refuted(Evidence::FewNeighbors {
                vertex: v,
                set: s,
                neighbors: nb,
            });
        }
    }
    Verdict::Verified
}
