//! Independent sets whose deletion destroys every `K_t` minor.
//!
//! Minimal `K_t` minors are processed round by round in lexicographic
//! order of their vertex sets. For minor `H` with vertex set `V_H`, the
//! vertices the other live minors have outside `V_H` must lie in one
//! component of the current graph minus `V_H`. When they do, the
//! minimum-id vertex of `V_H` with no neighbor outside `V_H` (and none in
//! the set built so far) is selected and deleted, which kills every minor
//! through it.

use serde::Serialize;

use crate::certificate::{Evidence, FailureCertificate};
use crate::graph::{Edge, Graph, VertexSet};
use crate::limits::Limits;
use crate::minor::{enumerate_minimal_minors, find_clique_minor, Truncation};

use super::{minor_within, BuildError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriticalSet {
    pub set: VertexSet,
    pub t: usize,
    /// Rounds of the minor-by-minor procedure; 0 in heuristic mode.
    pub rounds: usize,
    /// Distinct minimal-minor vertex sets at the start.
    pub minors: usize,
    /// The starting minors were pairwise vertex-disjoint.
    pub disjoint: bool,
    /// Minor enumeration hit its cap and greedy removal was used instead.
    pub heuristic: bool,
}

pub fn critical_set(g: &Graph, t: usize, limits: &Limits) -> Result<CriticalSet, BuildError> {
    if find_clique_minor(g, t, limits)?.is_none() {
        return Err(BuildError::Inapplicable(format!("graph has no K_{t} minor")));
    }
    if t <= 2 {
        return small_order(g, t);
    }
    let mm = enumerate_minimal_minors(g, t, limits.procedure_minor_cap, limits)
        .map_err(|e| BuildError::Inapplicable(e.to_string()))?;
    match mm.truncated {
        Some(Truncation::Budget) => {
            return Err(BuildError::Budget(crate::BudgetExhausted {
                limit: limits.node_budget,
            }))
        }
        Some(Truncation::Limit) => return heuristic(g, t, limits),
        None => {}
    }
    let mut minors: Vec<VertexSet> = mm.minors.iter().map(|m| m.vertices()).collect();
    minors.sort_by_key(|s| s.to_vec());
    minors.dedup();
    let disjoint = minors
        .iter()
        .enumerate()
        .all(|(i, a)| minors[i + 1..].iter().all(|b| !a.intersects(*b)));

    let n = g.order();
    let mut cur = g.vertex_set();
    let mut f = VertexSet::EMPTY;
    let mut round = 0;
    loop {
        let live: Vec<VertexSet> = minors.iter().copied().filter(|m| m.is_subset(cur)).collect();
        if live.is_empty() {
            break;
        }
        round += 1;
        if round > n {
            return Err(fail(
                FailureCertificate::new("halting", g, vec![Evidence::Set { vertices: cur }])
                    .in_round(round),
            ));
        }
        let mut progress = false;
        let mut splits = Vec::new();
        for &h in &live {
            if !h.is_subset(cur) {
                continue;
            }
            let spread = live
                .iter()
                .filter(|&&o| o != h && o.is_subset(cur))
                .fold(VertexSet::EMPTY, |acc, &o| acc | (o - h));
            let rest = cur - h;
            let comps = g.components_within(rest);
            if !spread.is_empty() && !comps.iter().any(|c| spread.is_subset(*c)) {
                splits.push(Evidence::Split {
                    set: spread,
                    within: rest,
                    components: comps,
                });
                continue;
            }
            let pick = h
                .iter()
                .find(|&v| (g.neighbors(v) & cur).is_subset(h) && !g.neighbors(v).intersects(f));
            let Some(v) = pick else {
                let outside = h
                    .iter()
                    .filter_map(|v| {
                        let nb = g.neighbors(v);
                        ((nb & cur) - h).first().or((nb & f).first()).map(|w| Edge::new(v, w))
                    })
                    .collect();
                return Err(fail(
                    FailureCertificate::new(
                        "select-vertex",
                        g,
                        vec![
                            Evidence::NoIsolatedVertex { minor: h, outside },
                            Evidence::Set { vertices: cur },
                        ],
                    )
                    .in_round(round),
                ));
            };
            f.insert(v);
            cur.remove(v);
            progress = true;
        }
        if !progress {
            return Err(fail(
                FailureCertificate::new("no-deletable-minor", g, splits).in_round(round),
            ));
        }
    }
    if let Some(w) = minor_within(g, cur, t, limits)? {
        return Err(fail(
            FailureCertificate::new("residual-minor", g, vec![Evidence::witness(g, &w)])
                .in_round(round),
        ));
    }
    finish(
        g,
        CriticalSet {
            set: f,
            t,
            rounds: round,
            minors: minors.len(),
            disjoint,
            heuristic: false,
        },
    )
}

/// `K_1`-free means empty and `K_2`-free means edgeless.
fn small_order(g: &Graph, t: usize) -> Result<CriticalSet, BuildError> {
    let set = if t == 1 {
        if let Some(e) = g.edges().next() {
            return Err(fail(FailureCertificate::new(
                "independence",
                g,
                vec![Evidence::Adjacent { u: e.u, v: e.v }],
            )));
        }
        g.vertex_set()
    } else {
        match g.bipartition(g.vertex_set()) {
            Some((_, side)) => side,
            None => {
                let cycle = g.find_odd_cycle(g.vertex_set()).unwrap_or_default();
                return Err(fail(FailureCertificate::new(
                    "bipartition",
                    g,
                    vec![Evidence::Cycle { vertices: cycle }],
                )));
            }
        }
    };
    finish(
        g,
        CriticalSet {
            set,
            t,
            rounds: 0,
            minors: 0,
            disjoint: false,
            heuristic: false,
        },
    )
}

/// Greedy removal: repeatedly take a witness and delete its minimum-id
/// vertex not adjacent to the set built so far.
fn heuristic(g: &Graph, t: usize, limits: &Limits) -> Result<CriticalSet, BuildError> {
    let mut cur = g.vertex_set();
    let mut f = VertexSet::EMPTY;
    for _ in 0..=g.order() {
        let Some(w) = minor_within(g, cur, t, limits)? else {
            return finish(
                g,
                CriticalSet {
                    set: f,
                    t,
                    rounds: 0,
                    minors: 0,
                    disjoint: false,
                    heuristic: true,
                },
            );
        };
        let wv = w.vertices();
        let Some(v) = wv.iter().find(|&v| !g.neighbors(v).intersects(f)) else {
            return Err(fail(FailureCertificate::new(
                "heuristic-select",
                g,
                vec![Evidence::witness(g, &w), Evidence::Set { vertices: f }],
            )));
        };
        f.insert(v);
        cur.remove(v);
    }
    unreachable!("each step deletes a vertex")
}

fn finish(g: &Graph, c: CriticalSet) -> Result<CriticalSet, BuildError> {
    assert!(g.is_independent(c.set), "critical set must be independent");
    Ok(c)
}

fn fail(c: FailureCertificate) -> BuildError {
    BuildError::Failure(Box::new(c))
}
