//! Dominating forests, critical sets and reducible partitions.

mod critical;
mod forest;

pub use critical::{critical_set, CriticalSet};
pub use forest::{
    extend_to_maximal_forest, is_dominating, is_maximal_dominating_tree, is_maximal_forest,
    maximal_dominating_forest, maximal_dominating_trees, maximal_induced_forest,
    two_neighbor_check, undominated,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::certificate::{Evidence, FailureCertificate};
use crate::error::BudgetExhausted;
use crate::graph::{Graph, VertexSet};
use crate::limits::Limits;
use crate::minor::{find_clique_minor, hadwiger_number, HadwigerError, MinorWitness};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    #[error("construction failed at stage {}", .0.stage)]
    Failure(Box<FailureCertificate>),
    #[error(transparent)]
    Budget(#[from] BudgetExhausted),
}

impl From<HadwigerError> for BuildError {
    fn from(e: HadwigerError) -> Self {
        match e {
            HadwigerError::EmptyGraph => BuildError::Inapplicable(e.to_string()),
            HadwigerError::Budget { limit, .. } => BuildError::Budget(BudgetExhausted { limit }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PartitionKind {
    #[serde(rename = "RP")]
    Rp,
    #[serde(rename = "SRP")]
    Srp,
    #[serde(rename = "ERP")]
    Erp,
}

impl std::str::FromStr for PartitionKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "rp" => Ok(PartitionKind::Rp),
            "srp" => Ok(PartitionKind::Srp),
            "erp" => Ok(PartitionKind::Erp),
            _ => Err(format!("unknown partition kind {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionCheck {
    pub condition: String,
    pub pass: bool,
    pub evidence: Option<Evidence>,
}

impl ConditionCheck {
    fn new(condition: &str, failure: Option<Evidence>) -> Self {
        ConditionCheck {
            condition: condition.to_string(),
            pass: failure.is_none(),
            evidence: failure,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionResult {
    pub kind: PartitionKind,
    pub n: usize,
    pub parts: Vec<VertexSet>,
    pub depth: usize,
    pub report: Vec<ConditionCheck>,
    #[serde(default)]
    pub heuristic: bool,
}

impl PartitionResult {
    pub fn new(kind: PartitionKind, n: usize, parts: Vec<VertexSet>) -> Self {
        PartitionResult {
            kind,
            n,
            depth: parts.len(),
            parts,
            report: Vec::new(),
            heuristic: false,
        }
    }

    pub fn passes(&self) -> bool {
        self.report.iter().all(|c| c.pass)
    }
}

/// Clique-minor search in `G[s]`, with the witness in `g`'s ids.
pub(crate) fn minor_within(
    g: &Graph,
    s: VertexSet,
    t: usize,
    limits: &Limits,
) -> Result<Option<MinorWitness>, BudgetExhausted> {
    let sub = g.induced_subgraph(s).expect("set within graph");
    Ok(find_clique_minor(&sub.graph, t, limits)?
        .map(|w| MinorWitness::new(w.branch_sets.iter().map(|&b| sub.lift(b)).collect())))
}

fn cover_checks(g: &Graph, parts: &[VertexSet]) -> Vec<ConditionCheck> {
    let mut seen = VertexSet::EMPTY;
    let mut overlap = None;
    for &p in parts {
        if overlap.is_none() {
            overlap = (p & seen).first();
        }
        seen = seen | p;
    }
    let uncovered = (g.vertex_set() - seen).first();
    vec![
        ConditionCheck::new("cover", uncovered.map(|vertex| Evidence::Uncovered { vertex })),
        ConditionCheck::new("disjoint", overlap.map(|vertex| Evidence::Overlap { vertex })),
    ]
}

fn forest_check(g: &Graph, s: VertexSet) -> Option<Evidence> {
    g.find_cycle(s).map(|vertices| Evidence::Cycle { vertices })
}

fn domination_check(g: &Graph, dominated: VertexSet, by: VertexSet) -> Option<Evidence> {
    dominated
        .iter()
        .find(|&v| !g.neighbors(v).intersects(by))
        .map(|vertex| Evidence::Undominated {
            vertex,
            dominator: by,
        })
}

fn minor_free_check(
    g: &Graph,
    s: VertexSet,
    t: usize,
    limits: &Limits,
) -> Result<Option<Evidence>, BudgetExhausted> {
    Ok(minor_within(g, s, t, limits)?.map(|w| Evidence::witness(g, &w)))
}

fn independence_check(g: &Graph, s: VertexSet) -> Option<Evidence> {
    g.edges_within(s).next().map(|e| Evidence::Adjacent { u: e.u, v: e.v })
}

/// Checks each defining condition of the declared kind. RP and SRP use
/// `p.n` as the clique order; ERP checks the tail condition for every
/// suffix of its parts.
pub fn validate_partition(
    g: &Graph,
    p: &PartitionResult,
    limits: &Limits,
) -> Result<Vec<ConditionCheck>, BudgetExhausted> {
    let mut report = cover_checks(g, &p.parts);
    let two = |report: &mut Vec<ConditionCheck>| {
        let ok = p.parts.len() == 2;
        report.push(ConditionCheck::new(
            "two_parts",
            (!ok).then(|| Evidence::note(format!("{} parts", p.parts.len()))),
        ));
        ok
    };
    match p.kind {
        PartitionKind::Rp => {
            if two(&mut report) {
                let (s1, s2) = (p.parts[0], p.parts[1]);
                report.push(ConditionCheck::new("dominated", domination_check(g, s2, s1)));
                report.push(ConditionCheck::new("forest", forest_check(g, s1)));
                report.push(ConditionCheck::new(
                    "minor_free",
                    minor_free_check(g, s2, p.n, limits)?,
                ));
            }
        }
        PartitionKind::Srp => {
            if two(&mut report) {
                let (s1, s2) = (p.parts[0], p.parts[1]);
                report.push(ConditionCheck::new("independent", independence_check(g, s1)));
                report.push(ConditionCheck::new(
                    "minor_free",
                    minor_free_check(g, s2, p.n, limits)?,
                ));
            }
        }
        PartitionKind::Erp => {
            let m = p.parts.len();
            let mut dom = None;
            'outer: for i in 0..m {
                for j in i + 1..m {
                    if let Some(e) = domination_check(g, p.parts[j], p.parts[i]) {
                        dom = Some(e);
                        break 'outer;
                    }
                }
            }
            report.push(ConditionCheck::new("dominated", dom));
            let cyc = p.parts.iter().find_map(|&s| forest_check(g, s));
            report.push(ConditionCheck::new("forest", cyc));
            let mut tail = None;
            for k in 1..=m {
                let rest = p.parts[k - 1..]
                    .iter()
                    .fold(VertexSet::EMPTY, |acc, &s| acc | s);
                // K_{n-k+2}; an order below zero is never avoidable.
                let order = (p.n + 2).checked_sub(k).unwrap_or(0);
                if let Some(e) = minor_free_check(g, rest, order, limits)? {
                    tail = Some(e);
                    break;
                }
            }
            report.push(ConditionCheck::new("tail_minor_free", tail));
            report.push(ConditionCheck::new(
                "depth",
                (p.depth != m).then(|| Evidence::note(format!("depth {} with {m} parts", p.depth))),
            ));
        }
    }
    Ok(report)
}

/// Requires `t` to equal the Hadwiger number; returns it.
fn hadwiger_precondition(g: &Graph, t: Option<usize>, limits: &Limits) -> Result<usize, BuildError> {
    let h = hadwiger_number(g, limits)?.number;
    match t {
        Some(t) if t != h => Err(BuildError::Inapplicable(format!(
            "needs a K_{t} minor and no K_{} minor; the Hadwiger number is {h}",
            t + 1
        ))),
        _ => Ok(h),
    }
}

fn validated(
    g: &Graph,
    mut p: PartitionResult,
    stage: &str,
    limits: &Limits,
) -> Result<PartitionResult, BuildError> {
    p.report = validate_partition(g, &p, limits)?;
    if p.passes() {
        Ok(p)
    } else {
        let evidence = p.report.iter().filter_map(|c| c.evidence.clone()).collect();
        Err(BuildError::Failure(Box::new(FailureCertificate::new(
            stage, g, evidence,
        ))))
    }
}

/// `S_1` is the critical set grown to a maximal induced forest; `S_2` is
/// the rest. `t` defaults to the Hadwiger number and must equal it.
pub fn build_rp(g: &Graph, t: Option<usize>, limits: &Limits) -> Result<PartitionResult, BuildError> {
    let t = hadwiger_precondition(g, t, limits)?;
    let (s1, heuristic) = if t <= 2 {
        (maximal_dominating_forest(g), false)
    } else {
        let c = critical_set(g, t, limits)?;
        let s1 = extend_to_maximal_forest(g, c.set)
            .expect("an independent set induces a forest");
        (s1, c.heuristic)
    };
    let mut p = PartitionResult::new(PartitionKind::Rp, t, vec![s1, g.vertex_set() - s1]);
    p.heuristic = heuristic;
    validated(g, p, "validate-rp", limits)
}

/// `S_1` is the critical set itself.
pub fn build_srp(g: &Graph, t: Option<usize>, limits: &Limits) -> Result<PartitionResult, BuildError> {
    let t = hadwiger_precondition(g, t, limits)?;
    let c = critical_set(g, t, limits)?;
    let mut p = PartitionResult::new(PartitionKind::Srp, t, vec![c.set, g.vertex_set() - c.set]);
    p.heuristic = c.heuristic;
    validated(g, p, "validate-srp", limits)
}

/// Peels reducible partitions until the remainder is a forest. Each layer
/// uses the Hadwiger number of the subgraph it is built on.
pub fn build_erp(g: &Graph, limits: &Limits) -> Result<PartitionResult, BuildError> {
    let n = hadwiger_precondition(g, None, limits)?;
    let bound = n.saturating_sub(1).max(1);
    let mut parts = Vec::new();
    let mut cur = g.vertex_set();
    let mut heuristic = false;
    while !cur.is_empty() {
        if g.is_forest(cur) {
            parts.push(cur);
            break;
        }
        let sub = g.induced_subgraph(cur).expect("set within graph");
        let layer = build_rp(&sub.graph, None, limits)?;
        heuristic |= layer.heuristic;
        let s1 = sub.lift(layer.parts[0]);
        parts.push(s1);
        cur = cur - s1;
    }
    let mut p = PartitionResult::new(PartitionKind::Erp, n, parts);
    p.heuristic = heuristic;
    let p = validated(g, p, "validate-erp", limits)?;
    if p.depth > bound {
        return Err(BuildError::Failure(Box::new(FailureCertificate::new(
            "depth-bound",
            g,
            vec![Evidence::Depth {
                depth: p.depth,
                bound,
                parts: p.parts.clone(),
            }],
        ))));
    }
    Ok(p)
}

pub fn build(
    g: &Graph,
    kind: PartitionKind,
    t: Option<usize>,
    limits: &Limits,
) -> Result<PartitionResult, BuildError> {
    match kind {
        PartitionKind::Rp => build_rp(g, t, limits),
        PartitionKind::Srp => build_srp(g, t, limits),
        PartitionKind::Erp => match t {
            Some(_) => Err(BuildError::Inapplicable(
                "the ERP order is the Hadwiger number and cannot be set".into(),
            )),
            None => build_erp(g, limits),
        },
    }
}
