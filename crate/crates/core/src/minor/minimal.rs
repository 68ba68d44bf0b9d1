//! Edge-minimal clique minors and the intersection-based edge deletions.
//!
//! A minimal `K_t` minor is identified by its support: the edges of a
//! spanning tree inside every branch set plus one edge for every pair of
//! branch sets, such that deleting any one of those edges leaves a graph
//! without a `K_t` minor. Every edge-minimal subgraph with a `K_t` minor has
//! this shape for some model, so supports are generated model by model and
//! deduplicated by edge set.

use std::collections::HashSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use super::search::{for_each_model, Pattern};
use super::{find_clique_minor, find_clique_minor_metered, MinorWitness};
use crate::certificate::{Evidence, Verdict};
use crate::error::{BudgetExhausted, Error};
use crate::graph::{Edge, Graph, VertexSet, MAX_ORDER};
use crate::limits::{Limits, Meter};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalMinor {
    pub witness: MinorWitness,
    pub support_edges: Vec<Edge>,
    /// Deleting any single support vertex also kills every `K_t` minor of
    /// the support. Recorded, not assumed.
    pub vertex_minimal: bool,
}

impl MinimalMinor {
    pub fn vertices(&self) -> VertexSet {
        self.witness.vertices()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "t": self.witness.t,
            "branch_sets": self.witness.branch_sets,
            "support_edges": self.support_edges,
            "vertex_minimal": self.vertex_minimal,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Truncation {
    /// More distinct minimal minors exist than the requested limit.
    Limit,
    /// The node budget ran out; the list may be incomplete.
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalMinors {
    pub t: usize,
    /// Sorted by vertex set (as an ascending list), then support edges.
    pub minors: Vec<MinimalMinor>,
    pub truncated: Option<Truncation>,
}

impl MinimalMinors {
    pub fn is_exhaustive(&self) -> bool {
        self.truncated.is_none()
    }
}

fn spanning_graph(order: usize, edges: &[Edge]) -> Graph {
    let mut g = Graph::new(order);
    for e in edges {
        g.add_edge(e.u, e.v);
    }
    g
}

/// All spanning trees of `G[b]`, each as an edge list.
fn spanning_trees(g: &Graph, b: VertexSet, meter: &mut Meter) -> Result<Vec<Vec<Edge>>, BudgetExhausted> {
    let edges: Vec<Edge> = g.edges_within(b).collect();
    let need = b.len().saturating_sub(1);
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(need);
    let mut parent = [0usize; MAX_ORDER];

    fn find(parent: &[usize; MAX_ORDER], mut x: usize) -> usize {
        while parent[x] != x {
            x = parent[x];
        }
        x
    }

    fn rec(
        edges: &[Edge],
        i: usize,
        need: usize,
        chosen: &mut Vec<Edge>,
        parent: &mut [usize; MAX_ORDER],
        out: &mut Vec<Vec<Edge>>,
        meter: &mut Meter,
    ) -> Result<(), BudgetExhausted> {
        meter.tick()?;
        if chosen.len() == need {
            out.push(chosen.clone());
            return Ok(());
        }
        if edges.len() - i < need - chosen.len() {
            return Ok(());
        }
        let e = edges[i];
        let (ru, rv) = (find(parent, e.u), find(parent, e.v));
        if ru != rv {
            parent[ru] = rv;
            chosen.push(e);
            rec(edges, i + 1, need, chosen, parent, out, meter)?;
            chosen.pop();
            parent[ru] = ru;
        }
        rec(edges, i + 1, need, chosen, parent, out, meter)
    }

    for v in b {
        parent[v] = v;
    }
    rec(&edges, 0, need, &mut chosen, &mut parent, &mut out, meter)?;
    Ok(out)
}

struct Collector<'a> {
    g: &'a Graph,
    t: usize,
    limit: usize,
    seen: HashSet<Vec<Edge>>,
    found: Vec<MinimalMinor>,
    meter: Meter,
}

enum Stop {
    Limit,
    Budget,
}

impl Collector<'_> {
    fn is_minimal(&mut self, support: &[Edge]) -> Result<bool, BudgetExhausted> {
        let mut rest = support.to_vec();
        for i in 0..support.len() {
            let e = rest.remove(i);
            let h = spanning_graph(self.g.order(), &rest);
            let alive = find_clique_minor_metered(&h, self.t, &mut self.meter)?.is_some();
            rest.insert(i, e);
            if alive {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn is_vertex_minimal(&mut self, support: &[Edge], vertices: VertexSet) -> Result<bool, BudgetExhausted> {
        for x in vertices {
            let rest: Vec<Edge> = support
                .iter()
                .copied()
                .filter(|e| e.u != x && e.v != x)
                .collect();
            let h = spanning_graph(self.g.order(), &rest);
            if find_clique_minor_metered(&h, self.t, &mut self.meter)?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn offer(&mut self, sets: &[VertexSet], support: Vec<Edge>) -> Result<(), Stop> {
        // A branch-set leaf that carries no edge to another set could be
        // dropped, so such supports are never minimal.
        let mut deg = [0u8; MAX_ORDER];
        for e in &support {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        if self.t >= 3 && sets.iter().flat_map(|b| b.iter()).any(|v| deg[v] < 2) {
            return Ok(());
        }
        let mut key = support;
        key.sort();
        if !self.seen.insert(key.clone()) {
            return Ok(());
        }
        let witness = MinorWitness::new(sets.to_vec());
        let minimal = self.is_minimal(&key).map_err(|_| Stop::Budget)?;
        if !minimal {
            return Ok(());
        }
        let vertex_minimal = self
            .is_vertex_minimal(&key, witness.vertices())
            .map_err(|_| Stop::Budget)?;
        if self.found.len() == self.limit {
            return Err(Stop::Limit);
        }
        self.found.push(MinimalMinor {
            witness,
            support_edges: key,
            vertex_minimal,
        });
        Ok(())
    }

    fn model(&mut self, sets: &[VertexSet]) -> Result<(), Stop> {
        let mut trees = Vec::with_capacity(sets.len());
        for &b in sets {
            trees.push(spanning_trees(self.g, b, &mut self.meter).map_err(|_| Stop::Budget)?);
        }
        let mut links = Vec::new();
        for (i, &a) in sets.iter().enumerate() {
            for &b in &sets[i + 1..] {
                let between: Vec<Edge> = self
                    .g
                    .edges()
                    .filter(|e| {
                        (a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))
                    })
                    .collect();
                links.push(between);
            }
        }
        let mut pick = Vec::new();
        self.product(sets, &trees, &links, 0, &mut pick)
    }

    fn product(
        &mut self,
        sets: &[VertexSet],
        trees: &[Vec<Vec<Edge>>],
        links: &[Vec<Edge>],
        depth: usize,
        pick: &mut Vec<Edge>,
    ) -> Result<(), Stop> {
        self.meter.tick().map_err(|_| Stop::Budget)?;
        if depth < trees.len() {
            for tree in &trees[depth] {
                let mark = pick.len();
                pick.extend_from_slice(tree);
                self.product(sets, trees, links, depth + 1, pick)?;
                pick.truncate(mark);
            }
            return Ok(());
        }
        let k = depth - trees.len();
        if k == links.len() {
            return self.offer(sets, pick.clone());
        }
        for &e in &links[k] {
            pick.push(e);
            self.product(sets, trees, links, depth + 1, pick)?;
            pick.pop();
        }
        Ok(())
    }
}

/// Enumerates minimal `K_t` minors of `g`, up to `limit` distinct supports.
pub fn enumerate_minimal_minors(
    g: &Graph,
    t: usize,
    limit: usize,
    limits: &Limits,
) -> Result<MinimalMinors, Error> {
    if t < 2 {
        return Err(Error::domain("minimal minors need t >= 2"));
    }
    let mut col = Collector {
        g,
        t,
        limit,
        seen: HashSet::new(),
        found: Vec::new(),
        meter: Meter::new(limits.node_budget),
    };
    let mut stop = None;
    let mut model_meter = Meter::new(limits.node_budget);
    let walk = for_each_model(g, &Pattern::clique(t), &mut model_meter, |sets| {
        match col.model(sets) {
            Ok(()) => ControlFlow::Continue(()),
            Err(s) => {
                stop = Some(s);
                ControlFlow::Break(())
            }
        }
    });
    let truncated = match (walk, stop) {
        (Err(_), _) | (_, Some(Stop::Budget)) => Some(Truncation::Budget),
        (_, Some(Stop::Limit)) => Some(Truncation::Limit),
        _ => None,
    };
    let mut minors = col.found;
    minors.sort_by(|a, b| {
        (a.vertices().to_vec(), &a.support_edges).cmp(&(b.vertices().to_vec(), &b.support_edges))
    });
    Ok(MinimalMinors {
        t,
        minors,
        truncated,
    })
}

/// `A[i][j] = V_i ∩ V_j`, or `V_i` when that intersection is empty.
pub fn pairwise_intersections(minors: &[MinimalMinor]) -> Result<Vec<Vec<VertexSet>>, Error> {
    if minors.len() < 2 {
        return Err(Error::domain("pairwise intersections need at least two minors"));
    }
    let vs: Vec<VertexSet> = minors.iter().map(MinimalMinor::vertices).collect();
    Ok(vs
        .iter()
        .map(|&a| {
            vs.iter()
                .map(|&b| if (a & b).is_empty() { a } else { a & b })
                .collect()
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreakOutcome {
    pub minors: usize,
    /// Distinct intersection sets, in the order edges were drawn from them.
    pub intersections: Vec<VertexSet>,
    pub deleted: Vec<Edge>,
    pub graph: Graph,
    pub verdict: Verdict,
}

/// Deletes one edge from each intersection-induced subgraph and reports
/// whether the result is really `K_t`-minor-free.
pub fn break_minors_by_intersection(
    g: &Graph,
    t: usize,
    limits: &Limits,
) -> Result<BreakOutcome, BudgetExhausted> {
    let inapplicable = |reason: String, minors: usize| BreakOutcome {
        minors,
        intersections: Vec::new(),
        deleted: Vec::new(),
        graph: g.clone(),
        verdict: Verdict::inapplicable(reason),
    };
    if t < 2 {
        return Ok(inapplicable("t must be at least 2".into(), 0));
    }
    let found = enumerate_minimal_minors(g, t, limits.claim_minor_cap, limits)
        .expect("t >= 2 checked above");
    match found.truncated {
        Some(Truncation::Budget) => {
            return Err(BudgetExhausted {
                limit: limits.node_budget,
            })
        }
        Some(Truncation::Limit) => {
            return Ok(inapplicable(
                format!("more than {} minimal minors", limits.claim_minor_cap),
                found.minors.len(),
            ))
        }
        None => {}
    }
    let m = found.minors.len();
    if m == 0 {
        return Ok(inapplicable(format!("no K_{t} minor"), 0));
    }
    let mut intersections = Vec::new();
    if m == 1 {
        intersections.push(found.minors[0].vertices());
    } else {
        let a = pairwise_intersections(&found.minors).expect("m >= 2");
        for (i, row) in a.iter().enumerate() {
            for (j, &s) in row.iter().enumerate() {
                if i != j && !intersections.contains(&s) {
                    intersections.push(s);
                }
            }
        }
    }

    let mut deleted: Vec<Edge> = Vec::new();
    for &s in &intersections {
        let mut inside = g.edges_within(s).peekable();
        if inside.peek().is_none() {
            return Ok(BreakOutcome {
                verdict: Verdict::inapplicable(format!("G[{:?}] has no edge", s)),
                intersections,
                ..inapplicable(String::new(), m)
            });
        }
        if let Some(e) = inside.find(|e| !deleted.contains(e)) {
            deleted.push(e);
        }
    }
    let graph = g.without_edges(&deleted).expect("edges drawn from g");
    let verdict = match find_clique_minor(&graph, t, limits)? {
        Some(w) => Verdict::Refuted {
            evidence: vec![
                Evidence::Deleted {
                    edges: deleted.clone(),
                },
                Evidence::witness(&graph, &w),
            ],
        },
        None => Verdict::Verified,
    };
    Ok(BreakOutcome {
        minors: m,
        intersections,
        deleted,
        graph,
        verdict,
    })
}
