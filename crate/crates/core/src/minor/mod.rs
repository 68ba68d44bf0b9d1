//! Exact clique-minor search, Hadwiger numbers and planarity.

mod minimal;
pub(crate) mod search;

pub use minimal::{
    break_minors_by_intersection, enumerate_minimal_minors, pairwise_intersections,
    BreakOutcome, MinimalMinor, MinimalMinors, Truncation,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::BudgetExhausted;
use crate::graph::{Edge, Graph, VertexSet};
use crate::limits::{Limits, Meter};
use search::Pattern;

/// `t` disjoint connected branch sets, pairwise joined by an edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinorWitness {
    pub t: usize,
    pub branch_sets: Vec<VertexSet>,
}

impl MinorWitness {
    pub fn new(branch_sets: Vec<VertexSet>) -> Self {
        MinorWitness {
            t: branch_sets.len(),
            branch_sets,
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.branch_sets
            .iter()
            .fold(VertexSet::EMPTY, |acc, &b| acc | b)
    }

    /// Branch sets sorted by minimum vertex.
    pub fn normalized(&self) -> Self {
        let mut sets = self.branch_sets.clone();
        sets.sort_by_key(|s| s.first());
        MinorWitness::new(sets)
    }

    /// A canonical set of edges realizing the witness: a BFS spanning tree
    /// of each branch set plus the first edge joining each pair of sets.
    pub fn support_edges(&self, g: &Graph) -> Vec<Edge> {
        let mut out = Vec::new();
        for &b in &self.branch_sets {
            let Some(root) = b.first() else { continue };
            let mut seen = VertexSet::singleton(root);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for y in g.neighbors(x) & b {
                    if !seen.contains(y) {
                        seen.insert(y);
                        out.push(Edge::new(x, y));
                        queue.push_back(y);
                    }
                }
            }
        }
        for (i, &a) in self.branch_sets.iter().enumerate() {
            for &b in &self.branch_sets[i + 1..] {
                if let Some(e) = first_edge_between(g, a, b) {
                    out.push(e);
                }
            }
        }
        out.sort();
        out
    }

    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        serde_json::json!({
            "t": self.t,
            "branch_sets": self.branch_sets,
            "support_edges": self.support_edges(g),
        })
    }
}

pub(crate) fn first_edge_between(g: &Graph, a: VertexSet, b: VertexSet) -> Option<Edge> {
    g.edges().find(|e| {
        (a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))
    })
}

/// Checks disjointness, nonemptiness, connectivity and pairwise adjacency.
pub fn verify_witness(g: &Graph, w: &MinorWitness) -> bool {
    if w.t != w.branch_sets.len() {
        return false;
    }
    let mut used = VertexSet::EMPTY;
    for &b in &w.branch_sets {
        if b.is_empty() || !b.is_subset(g.vertex_set()) || b.intersects(used) {
            return false;
        }
        if !g.is_connected_set(b) {
            return false;
        }
        used = used | b;
    }
    w.branch_sets.iter().enumerate().all(|(i, &a)| {
        let nb = g.boundary(a);
        w.branch_sets[i + 1..].iter().all(|&b| nb.intersects(b))
    })
}

/// Searches for a `K_t` minor. `Ok(None)` means none exists.
pub fn find_clique_minor(
    g: &Graph,
    t: usize,
    limits: &Limits,
) -> Result<Option<MinorWitness>, BudgetExhausted> {
    let mut meter = Meter::new(limits.node_budget);
    find_clique_minor_metered(g, t, &mut meter)
}

pub(crate) fn find_clique_minor_metered(
    g: &Graph,
    t: usize,
    meter: &mut Meter,
) -> Result<Option<MinorWitness>, BudgetExhausted> {
    if t == 0 {
        return Ok(Some(MinorWitness::new(Vec::new())));
    }
    if t > g.order() || g.size() < t * (t - 1) / 2 {
        return Ok(None);
    }
    if t == 1 {
        return Ok(Some(MinorWitness::new(vec![VertexSet::singleton(0)])));
    }
    if t == 2 {
        return Ok(g
            .edges()
            .next()
            .map(|e| MinorWitness::new(vec![VertexSet::singleton(e.u), VertexSet::singleton(e.v)])));
    }
    let model = search::find_model(g, &Pattern::clique(t), meter)?;
    Ok(model.map(MinorWitness::new))
}

pub fn has_clique_minor(g: &Graph, t: usize, limits: &Limits) -> Result<bool, BudgetExhausted> {
    Ok(find_clique_minor(g, t, limits)?.is_some())
}

/// Largest `t` with a `K_t` minor, with its witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hadwiger {
    pub number: usize,
    pub witness: MinorWitness,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum HadwigerError {
    #[error("the Hadwiger number of the empty graph is undefined")]
    EmptyGraph,
    #[error("budget of {limit} nodes exhausted; Hadwiger number is at least {lower_bound}")]
    Budget {
        limit: u64,
        lower_bound: usize,
        witness: MinorWitness,
    },
}

pub fn hadwiger_number(g: &Graph, limits: &Limits) -> Result<Hadwiger, HadwigerError> {
    if g.order() == 0 {
        return Err(HadwigerError::EmptyGraph);
    }
    let mut best = MinorWitness::new(vec![VertexSet::singleton(0)]);
    for t in 2..=g.order() {
        match find_clique_minor(g, t, limits) {
            Ok(Some(w)) => best = w,
            Ok(None) => break,
            Err(BudgetExhausted { limit }) => {
                return Err(HadwigerError::Budget {
                    limit,
                    lower_bound: best.t,
                    witness: best,
                })
            }
        }
    }
    Ok(Hadwiger {
        number: best.t,
        witness: best,
    })
}

/// Searches for a `K_{a,b}` minor.
pub fn find_biclique_minor(
    g: &Graph,
    a: usize,
    b: usize,
    limits: &Limits,
) -> Result<Option<Vec<VertexSet>>, BudgetExhausted> {
    let mut meter = Meter::new(limits.node_budget);
    search::find_model(g, &Pattern::complete_bipartite(a, b), &mut meter)
}

/// Wagner's criterion: no `K_5` and no `K_{3,3}` minor, after the Euler
/// bound `m <= 3n - 6` as a fast reject.
pub fn is_planar(g: &Graph, limits: &Limits) -> Result<bool, BudgetExhausted> {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return Ok(false);
    }
    if n <= 4 {
        return Ok(true);
    }
    if find_clique_minor(g, 5, limits)?.is_some() {
        return Ok(false);
    }
    Ok(find_biclique_minor(g, 3, 3, limits)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn complete_graph_is_its_own_witness() {
        let w = find_clique_minor(&complete(5), 5, &lim()).unwrap().unwrap();
        assert!(verify_witness(&complete(5), &w));
        assert!(w.branch_sets.iter().all(|b| b.len() == 1));
    }

    #[test]
    fn trees_have_no_triangle_minor() {
        assert!(find_clique_minor(&star(5), 3, &lim()).unwrap().is_none());
        assert!(find_clique_minor(&path(7), 3, &lim()).unwrap().is_none());
    }

    #[test]
    fn petersen_minors() {
        let p = petersen();
        let w = find_clique_minor(&p, 5, &lim()).unwrap().unwrap();
        assert!(verify_witness(&p, &w));
        // K_6 needs 15 edges between branch sets plus 4 tree edges in 10 vertices.
        assert!(find_clique_minor(&p, 6, &lim()).unwrap().is_none());
        assert_eq!(hadwiger_number(&p, &lim()).unwrap().number, 5);
    }

    #[test]
    fn witness_checks() {
        let k4 = complete(4);
        let w = MinorWitness::new(vec![set(&[0]), set(&[1]), set(&[2]), set(&[3])]);
        assert!(verify_witness(&k4, &w));
        let overlap = MinorWitness::new(vec![set(&[0, 1]), set(&[1]), set(&[2]), set(&[3])]);
        assert!(!verify_witness(&k4, &overlap));
        let c6 = cycle(6);
        let split = MinorWitness::new(vec![set(&[0, 3]), set(&[1, 2]), set(&[4, 5])]);
        assert!(!verify_witness(&c6, &split));
        let ok = MinorWitness::new(vec![set(&[0, 1]), set(&[2, 3]), set(&[4, 5])]);
        assert!(verify_witness(&c6, &ok));
        assert_eq!(ok.support_edges(&c6).len(), 6);
    }

    #[test]
    fn hadwiger_examples() {
        for t in 1..=7 {
            assert_eq!(hadwiger_number(&complete(t), &lim()).unwrap().number, t);
        }
        assert_eq!(hadwiger_number(&path(6), &lim()).unwrap().number, 2);
        assert_eq!(hadwiger_number(&Graph::new(3), &lim()).unwrap().number, 1);
        assert_eq!(hadwiger_number(&wheel(5), &lim()).unwrap().number, 4);
        assert_eq!(hadwiger_number(&octahedron(), &lim()).unwrap().number, 4);
        assert_eq!(hadwiger_number(&Graph::new(0), &lim()), Err(HadwigerError::EmptyGraph));
    }

    #[test]
    fn budget_is_a_distinct_outcome() {
        let tiny = Limits::with_budget(3);
        assert_eq!(
            find_clique_minor(&petersen(), 6, &tiny),
            Err(BudgetExhausted { limit: 3 })
        );
        match hadwiger_number(&petersen(), &tiny) {
            Err(HadwigerError::Budget { lower_bound, .. }) => assert!(lower_bound >= 2),
            other => panic!("expected budget outcome, got {other:?}"),
        }
    }

    #[test]
    fn planarity() {
        assert!(is_planar(&complete(4), &lim()).unwrap());
        assert!(!is_planar(&complete(5), &lim()).unwrap());
        assert!(!is_planar(&complete_bipartite(3, 3), &lim()).unwrap());
        assert!(!is_planar(&petersen(), &lim()).unwrap());
        assert!(is_planar(&octahedron(), &lim()).unwrap());
        assert!(is_planar(&random_planar(12, 3), &lim()).unwrap());
    }
}
