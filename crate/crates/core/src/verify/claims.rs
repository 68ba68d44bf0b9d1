//! One executable predicate per claim, evaluated on a single instance.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::certificate::{Evidence, FailureCertificate, Verdict};
use crate::coloring::{
    chromatic_number, Coloring, planar_fc4_coloring, srp_inductive_coloring, validate_coloring,
    ChromaticError,
};
use crate::error::{BudgetExhausted, Error};
use crate::graph::{Edge, Graph, VertexSet};
use crate::io::to_graph6;
use crate::limits::{Limits, Meter};
use crate::minor::{
    break_minors_by_intersection, enumerate_minimal_minors, find_clique_minor, hadwiger_number,
    is_planar, HadwigerError, MinimalMinors, Truncation,
};
use crate::partition::{
    build_erp, build_rp, build_srp, critical_set, is_dominating, is_maximal_forest,
    maximal_dominating_forest, maximal_dominating_trees, minor_within, two_neighbor_check,
    undominated, BuildError, PartitionResult,
};

macro_rules! claims {
    ($($id:ident => $name:literal),* $(,)?) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
        pub enum ClaimId {
            $(#[serde(rename = $name)] $id,)*
        }

        impl ClaimId {
            pub const ALL: &'static [ClaimId] = &[$(ClaimId::$id),*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(ClaimId::$id => $name,)*
                }
            }
        }

        impl FromStr for ClaimId {
            type Err = String;
            fn from_str(s: &str) -> Result<Self, String> {
                match s.to_ascii_uppercase().as_str() {
                    $($name => Ok(ClaimId::$id),)*
                    _ => Err(format!("unknown claim id {s:?}")),
                }
            }
        }
    };
}

claims! {
    T1 => "T1", L1 => "L1", T2 => "T2", T3 => "T3", T4 => "T4", T5 => "T5",
    L2 => "L2", C2 => "C2", L3 => "L3", L4 => "L4", C3 => "C3", T6 => "T6",
    T7 => "T7", T8 => "T8", T9 => "T9", FC4 => "FC4", T413 => "T413",
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Verified,
    Refuted,
    Inapplicable,
    Budget,
}

/// What the claim's own construction did, kept apart from the verdict on
/// the statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Construction {
    Success {
        heuristic: bool,
        /// Depth, color count or set size, depending on the claim.
        #[serde(skip_serializing_if = "Option::is_none", default)]
        value: Option<usize>,
    },
    Failure {
        certificate: FailureCertificate,
    },
    Inapplicable {
        reason: String,
    },
    Budget,
}

impl Construction {
    fn from_error(e: &BuildError) -> Self {
        match e {
            BuildError::Inapplicable(reason) => Construction::Inapplicable {
                reason: reason.clone(),
            },
            BuildError::Failure(c) => Construction::Failure {
                certificate: (**c).clone(),
            },
            BuildError::Budget(_) => Construction::Budget,
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self, Construction::Success { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim: ClaimId,
    /// graph6 encoding of the instance.
    pub instance: String,
    /// Clique order the claim was evaluated at.
    pub t: Option<usize>,
    pub verdict: Outcome,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub evidence: Vec<Evidence>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub construction: Option<Construction>,
}

/// Early exits of a claim check.
enum Halt {
    Budget(String),
    Inapplicable(String),
}

impl From<BudgetExhausted> for Halt {
    fn from(e: BudgetExhausted) -> Self {
        Halt::Budget(e.to_string())
    }
}

impl From<HadwigerError> for Halt {
    fn from(e: HadwigerError) -> Self {
        match e {
            HadwigerError::EmptyGraph => Halt::Inapplicable(e.to_string()),
            HadwigerError::Budget { .. } => Halt::Budget(e.to_string()),
        }
    }
}

impl From<ChromaticError> for Halt {
    fn from(e: ChromaticError) -> Self {
        Halt::Budget(e.to_string())
    }
}

impl From<Error> for Halt {
    fn from(e: Error) -> Self {
        Halt::Budget(e.to_string())
    }
}

struct Finding {
    verdict: Verdict,
    construction: Option<Construction>,
}

impl From<Verdict> for Finding {
    fn from(verdict: Verdict) -> Self {
        Finding {
            verdict,
            construction: None,
        }
    }
}

type Step<T> = Result<T, Halt>;

/// Per-instance cache of the Hadwiger number and minimal minors.
pub struct Instance<'a> {
    g: &'a Graph,
    limits: Limits,
    h: OnceCell<Result<usize, HadwigerError>>,
    minors: OnceCell<Result<MinimalMinors, String>>,
}

impl<'a> Instance<'a> {
    pub fn new(g: &'a Graph, limits: Limits) -> Self {
        Instance {
            g,
            limits,
            h: OnceCell::new(),
            minors: OnceCell::new(),
        }
    }

    fn h(&self) -> Step<usize> {
        self.h
            .get_or_init(|| hadwiger_number(self.g, &self.limits).map(|h| h.number))
            .clone()
            .map_err(Halt::from)
    }

    fn t(&self) -> Option<usize> {
        self.h().ok()
    }

    /// Minimal `K_h` minors, exhaustively.
    fn minors(&self) -> Step<&MinimalMinors> {
        let h = self.h()?;
        if h < 2 {
            return Err(Halt::Inapplicable("minimal minors need order at least 2".into()));
        }
        let r = self.minors.get_or_init(|| {
            let mm = enumerate_minimal_minors(self.g, h, self.limits.claim_minor_cap, &self.limits)
                .map_err(|e| e.to_string())?;
            match mm.truncated {
                None => Ok(mm),
                Some(Truncation::Limit) => Err(format!(
                    "more than {} minimal minors",
                    self.limits.claim_minor_cap
                )),
                Some(Truncation::Budget) => Err(format!(
                    "minimal-minor enumeration exhausted {} nodes",
                    self.limits.node_budget
                )),
            }
        });
        r.as_ref().map_err(|e| Halt::Budget(e.clone()))
    }

    /// Distinct minimal-minor vertex sets, ascending.
    fn minor_sets(&self) -> Step<Vec<VertexSet>> {
        let mut sets: Vec<VertexSet> = self.minors()?.minors.iter().map(|m| m.vertices()).collect();
        sets.sort_by_key(|s| s.to_vec());
        sets.dedup();
        Ok(sets)
    }
}

pub fn check_claim(claim: ClaimId, g: &Graph, limits: &Limits) -> ClaimReport {
    check_claim_in(claim, &Instance::new(g, limits.clone()))
}

pub fn check_claim_in(claim: ClaimId, inst: &Instance<'_>) -> ClaimReport {
    let g = inst.g;
    let result = match claim {
        ClaimId::T1 => t1(g),
        ClaimId::L1 => l1(inst),
        ClaimId::T2 => t2(inst),
        ClaimId::T3 => t3(inst),
        ClaimId::T4 => t4(inst),
        ClaimId::T5 => t5(inst),
        ClaimId::L2 => selection(inst, 3),
        ClaimId::C2 => selection(inst, 4),
        ClaimId::C3 => selection(inst, 5),
        ClaimId::L3 => l3(inst),
        ClaimId::L4 => l4(inst),
        ClaimId::T6 => t6(inst),
        ClaimId::T7 => t7(inst),
        ClaimId::T8 => t8(inst),
        ClaimId::T9 => t9(inst),
        ClaimId::FC4 => fc4(inst),
        ClaimId::T413 => t413(inst),
    };
    let t = if claim == ClaimId::T1 || claim == ClaimId::L1 || claim == ClaimId::FC4 {
        None
    } else {
        inst.t()
    };
    let (verdict, reason, evidence, construction) = match result {
        Ok(Finding {
            verdict,
            construction,
        }) => match verdict {
            Verdict::Verified => (Outcome::Verified, None, Vec::new(), construction),
            Verdict::Refuted { evidence } => (Outcome::Refuted, None, evidence, construction),
            Verdict::Inapplicable { reason } => {
                (Outcome::Inapplicable, Some(reason), Vec::new(), construction)
            }
        },
        Err(Halt::Inapplicable(r)) => (Outcome::Inapplicable, Some(r), Vec::new(), None),
        Err(Halt::Budget(r)) => (Outcome::Budget, Some(r), Vec::new(), None),
    };
    ClaimReport {
        claim,
        instance: to_graph6(g),
        t,
        verdict,
        reason,
        evidence,
        construction,
    }
}

fn t1(g: &Graph) -> Step<Finding> {
    let f = maximal_dominating_forest(g);
    if let Some(cycle) = g.find_cycle(f) {
        return Ok(Verdict::refuted(Evidence::Cycle { vertices: cycle }).into());
    }
    if let Some(v) = undominated(g, f) {
        return Ok(Verdict::refuted(Evidence::Undominated {
            vertex: v,
            dominator: f,
        })
        .into());
    }
    if let Some(v) = (g.vertex_set() - f).iter().find(|&v| g.is_forest(f.with(v))) {
        return Ok(Verdict::refuted(Evidence::Set {
            vertices: f.with(v),
        })
        .into());
    }
    debug_assert!(is_dominating(g, f) && is_maximal_forest(g, f));
    Ok(Verdict::Verified.into())
}

fn dominating_trees(inst: &Instance<'_>) -> Step<Vec<VertexSet>> {
    let trees = maximal_dominating_trees(inst.g, inst.limits.subset_cap)?;
    if trees.is_empty() {
        return Err(Halt::Inapplicable("no maximal dominating tree".into()));
    }
    Ok(trees)
}

fn l1(inst: &Instance<'_>) -> Step<Finding> {
    let mut any = false;
    for s in dominating_trees(inst)? {
        match two_neighbor_check(inst.g, s) {
            Verdict::Refuted { evidence } => return Ok(Verdict::Refuted { evidence }.into()),
            Verdict::Verified => any = true,
            Verdict::Inapplicable { .. } => {}
        }
    }
    Ok(if any {
        Verdict::Verified
    } else {
        Verdict::inapplicable("no maximal dominating tree leaves a vertex outside")
    }
    .into())
}

fn t2(inst: &Instance<'_>) -> Step<Finding> {
    let h = inst.h()?;
    let g = inst.g;
    for s in dominating_trees(inst)? {
        if let Some(w) = minor_within(g, g.vertex_set() - s, h, &inst.limits)? {
            return Ok(Verdict::Refuted {
                evidence: vec![Evidence::Set { vertices: s }, Evidence::witness(g, &w)],
            }
            .into());
        }
    }
    Ok(Verdict::Verified.into())
}

/// Deleting `e` must leave no `K_h` minor.
fn edge_kills(inst: &Instance<'_>, h: usize, e: Edge) -> Step<Option<Vec<Evidence>>> {
    let cut = inst.g.without_edge(e).expect("edge of g");
    Ok(find_clique_minor(&cut, h, &inst.limits)?.map(|w| {
        vec![
            Evidence::Deleted { edges: vec![e] },
            Evidence::witness(&cut, &w),
        ]
    }))
}

fn t3(inst: &Instance<'_>) -> Step<Finding> {
    let h = inst.h()?;
    let mm = inst.minors()?;
    if mm.minors.len() != 1 {
        return Ok(Verdict::inapplicable(format!(
            "{} minimal K_{h} minors, the claim needs exactly one",
            mm.minors.len()
        ))
        .into());
    }
    for &e in &mm.minors[0].support_edges {
        if let Some(evidence) = edge_kills(inst, h, e)? {
            return Ok(Verdict::Refuted { evidence }.into());
        }
    }
    Ok(Verdict::Verified.into())
}

fn t4(inst: &Instance<'_>) -> Step<Finding> {
    let h = inst.h()?;
    let sets = inst.minor_sets()?;
    let common = sets.iter().fold(inst.g.vertex_set(), |acc, &s| acc & s);
    let edges: Vec<Edge> = inst.g.edges_within(common).collect();
    if edges.is_empty() {
        return Ok(Verdict::inapplicable("the common vertex set of all minimal minors spans no edge").into());
    }
    for e in edges {
        if let Some(evidence) = edge_kills(inst, h, e)? {
            return Ok(Verdict::Refuted { evidence }.into());
        }
    }
    Ok(Verdict::Verified.into())
}

fn t5(inst: &Instance<'_>) -> Step<Finding> {
    let h = inst.h()?;
    inst.minors()?;
    Ok(break_minors_by_intersection(inst.g, h, &inst.limits)?.verdict.into())
}

/// Some choice of one vertex per set induces a forest.
fn forest_selection(
    g: &Graph,
    sets: &[VertexSet],
    chosen: VertexSet,
    meter: &mut Meter,
) -> Result<bool, BudgetExhausted> {
    meter.tick()?;
    let Some((&first, rest)) = sets.split_first() else {
        return Ok(true);
    };
    if first.intersects(chosen) {
        return forest_selection(g, rest, chosen, meter);
    }
    for v in first {
        let next = chosen.with(v);
        if g.is_forest(next) && forest_selection(g, rest, next, meter)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> Step<bool>) -> Step<()> {
    fn go(
        start: usize,
        n: usize,
        k: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> Step<bool>,
    ) -> Step<bool> {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            let go_on = go(i + 1, n, k, cur, f)?;
            cur.pop();
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }
    go(0, n, k.min(n), &mut Vec::new(), f).map(|_| ())
}

/// Among any `k` minimal minors one vertex can be picked from each so that
/// the picks induce a forest.
fn selection(inst: &Instance<'_>, k: usize) -> Step<Finding> {
    let h = inst.h()?;
    let count = inst.minors()?.minors.len();
    if count < k {
        return Ok(Verdict::inapplicable(format!(
            "{count} minimal K_{h} minors, the claim needs {k}"
        ))
        .into());
    }
    let sets = inst.minor_sets()?;
    let mut meter = Meter::new(inst.limits.node_budget);
    let mut refuted = None;
    for_each_subset(sets.len(), k, &mut |idx| {
        let group: Vec<VertexSet> = idx.iter().map(|&i| sets[i]).collect();
        if forest_selection(inst.g, &group, VertexSet::EMPTY, &mut meter)? {
            return Ok(true);
        }
        let mut evidence: Vec<Evidence> = group.iter().map(|&s| Evidence::Set { vertices: s }).collect();
        evidence.push(Evidence::Exhausted {
            searched: group.iter().map(|s| s.len() as u64).product(),
        });
        refuted = Some(evidence);
        Ok(false)
    })?;
    Ok(match refuted {
        Some(evidence) => Verdict::Refuted { evidence },
        None => Verdict::Verified,
    }
    .into())
}

fn l3(inst: &Instance<'_>) -> Step<Finding> {
    let g = inst.g;
    let mut applied = false;
    for v_h in inst.minor_sets()? {
        let rest = g.vertex_set() - v_h;
        if rest.is_empty() || !v_h.iter().all(|v| g.neighbors(v).intersects(rest)) {
            continue;
        }
        applied = true;
        if g.is_connected_set(rest) {
            return Ok(Verdict::Refuted {
                evidence: vec![Evidence::Set { vertices: v_h }, Evidence::Connected { set: rest }],
            }
            .into());
        }
    }
    Ok(if applied {
        Verdict::Verified
    } else {
        Verdict::inapplicable("every minimal minor has a vertex with no outside neighbor")
    }
    .into())
}

fn l4(inst: &Instance<'_>) -> Step<Finding> {
    let g = inst.g;
    if !g.is_connected() {
        return Ok(Verdict::inapplicable("graph is disconnected").into());
    }
    let mut applied = false;
    for v_h in inst.minor_sets()? {
        let rest = g.vertex_set() - v_h;
        if rest.is_empty() || !g.is_connected_set(rest) {
            continue;
        }
        applied = true;
        if v_h.iter().all(|v| g.neighbors(v).intersects(rest)) {
            let outside = v_h
                .iter()
                .map(|v| Edge::new(v, (g.neighbors(v) & rest).first().expect("checked")))
                .collect();
            return Ok(Verdict::Refuted {
                evidence: vec![
                    Evidence::NoIsolatedVertex {
                        minor: v_h,
                        outside,
                    },
                    Evidence::Connected { set: rest },
                ],
            }
            .into());
        }
    }
    Ok(if applied {
        Verdict::Verified
    } else {
        Verdict::inapplicable("no minimal minor has a nonempty connected complement")
    }
    .into())
}

fn t6(inst: &Instance<'_>) -> Step<Finding> {
    let h = inst.h()?;
    if h < 3 {
        return Ok(Verdict::inapplicable("the procedure runs on minors of order at least 3").into());
    }
    let g = inst.g;
    let c = match critical_set(g, h, &inst.limits) {
        Ok(c) => c,
        Err(BuildError::Budget(e)) => return Err(e.into()),
        Err(e) => {
            let construction = Some(Construction::from_error(&e));
            let verdict = match e {
                BuildError::Failure(cert) => Verdict::Refuted {
                    evidence: cert.evidence.clone(),
                },
                BuildError::Inapplicable(r) => Verdict::inapplicable(r),
                BuildError::Budget(_) => unreachable!(),
            };
            return Ok(Finding {
                verdict,
                construction,
            });
        }
    };
    let construction = Some(Construction::Success {
        heuristic: c.heuristic,
        value: Some(c.set.len()),
    });
    if c.heuristic {
        return Ok(Finding {
            verdict: Verdict::inapplicable("minor enumeration capped; heuristic mode"),
            construction,
        });
    }
    let verdict = if let Some(e) = g.edges_within(c.set).next() {
        Verdict::refuted(Evidence::Adjacent { u: e.u, v: e.v })
    } else if let Some(w) = minor_within(g, g.vertex_set() - c.set, h, &inst.limits)? {
        Verdict::Refuted {
            evidence: vec![Evidence::Set { vertices: c.set }, Evidence::witness(g, &w)],
        }
    } else if c.disjoint && c.set.len() != c.minors {
        Verdict::Refuted {
            evidence: vec![
                Evidence::Set { vertices: c.set },
                Evidence::note(format!("{} disjoint minors but {} picks", c.minors, c.set.len())),
            ],
        }
    } else {
        Verdict::Verified
    };
    Ok(Finding {
        verdict,
        construction,
    })
}

/// Exhaustive search over `S_1 ⊆ V` for a partition passing `accept`:
/// the first accepted set, or the number of sets searched.
fn exists_subset(
    inst: &Instance<'_>,
    accept: &mut dyn FnMut(VertexSet) -> Step<bool>,
) -> Step<Result<VertexSet, u64>> {
    let n = inst.g.order();
    if n > inst.limits.subset_cap {
        return Err(Halt::Budget(format!(
            "order {n} exceeds the subset search cap {}",
            inst.limits.subset_cap
        )));
    }
    for bits in 0u64..1 << n {
        let s = VertexSet::from_bits(bits);
        if accept(s)? {
            return Ok(Ok(s));
        }
    }
    Ok(Err(1 << n))
}

/// Verified when the builder succeeds or, failing that, when exhaustive
/// search finds a partition.
fn existence(
    inst: &Instance<'_>,
    built: Result<PartitionResult, BuildError>,
    accept: &mut dyn FnMut(VertexSet) -> Step<bool>,
) -> Step<Finding> {
    let construction = match &built {
        Ok(p) => Construction::Success {
            heuristic: p.heuristic,
            value: Some(p.depth),
        },
        Err(BuildError::Budget(e)) => return Err(e.clone().into()),
        Err(e) => Construction::from_error(e),
    };
    let verdict = match built {
        Ok(_) => Verdict::Verified,
        Err(_) => match exists_subset(inst, accept)? {
            Ok(_) => Verdict::Verified,
            Err(searched) => Verdict::refuted(Evidence::Exhausted { searched }),
        },
    };
    Ok(Finding {
        verdict,
        construction: Some(construction),
    })
}

fn t7(inst: &Instance<'_>) -> Step<Finding> {
    let g = inst.g;
    if !g.is_connected() {
        return Ok(Verdict::inapplicable("graph is disconnected").into());
    }
    let h = inst.h()?;
    let built = build_rp(g, Some(h), &inst.limits);
    let limits = inst.limits.clone();
    existence(inst, built, &mut |s1| {
        let s2 = g.vertex_set() - s1;
        Ok(g.is_forest(s1)
            && is_dominating(g, s1)
            && minor_within(g, s2, h, &limits)?.is_none())
    })
}

fn t9(inst: &Instance<'_>) -> Step<Finding> {
    let g = inst.g;
    let h = inst.h()?;
    let built = build_srp(g, Some(h), &inst.limits);
    let limits = inst.limits.clone();
    existence(inst, built, &mut |s1| {
        Ok(g.is_independent(s1) && minor_within(g, g.vertex_set() - s1, h, &limits)?.is_none())
    })
}

fn t8(inst: &Instance<'_>) -> Step<Finding> {
    let h = inst.h()?;
    if h < 2 {
        return Ok(Verdict::inapplicable("depth bound n - 1 needs n >= 2").into());
    }
    match build_erp(inst.g, &inst.limits) {
        Ok(p) => {
            let construction = Some(Construction::Success {
                heuristic: p.heuristic,
                value: Some(p.depth),
            });
            let verdict = if p.depth <= h - 1 {
                Verdict::Verified
            } else {
                Verdict::refuted(Evidence::Depth {
                    depth: p.depth,
                    bound: h - 1,
                    parts: p.parts.clone(),
                })
            };
            Ok(Finding {
                verdict,
                construction,
            })
        }
        Err(BuildError::Budget(e)) => Err(e.into()),
        Err(e) => {
            let construction = Some(Construction::from_error(&e));
            let verdict = match &e {
                BuildError::Failure(c) if c.stage == "depth-bound" => Verdict::Refuted {
                    evidence: c.evidence.clone(),
                },
                _ => Verdict::inapplicable("no ERP was constructed"),
            };
            Ok(Finding {
                verdict,
                construction,
            })
        }
    }
}

fn coloring_construction(
    g: &Graph,
    r: Result<Coloring, BuildError>,
) -> Step<Construction> {
    Ok(match r {
        Ok(c) => {
            assert!(validate_coloring(g, &c), "scheme returned an improper coloring");
            Construction::Success {
                heuristic: false,
                value: Some(c.k),
            }
        }
        Err(BuildError::Budget(e)) => return Err(e.into()),
        Err(e) => Construction::from_error(&e),
    })
}

fn chromatic_bound(g: &Graph, bound: usize, limits: &Limits) -> Step<Verdict> {
    let (chi, c) = chromatic_number(g, limits)?;
    Ok(if chi <= bound {
        Verdict::Verified
    } else {
        Verdict::Refuted {
            evidence: vec![
                Evidence::Coloring {
                    colors: c.colors,
                    k: chi,
                },
                Evidence::note(format!("no proper coloring with {bound} colors")),
            ],
        }
    })
}

fn fc4(inst: &Instance<'_>) -> Step<Finding> {
    let g = inst.g;
    if !is_planar(g, &inst.limits)? {
        return Ok(Verdict::inapplicable("graph is not planar").into());
    }
    let construction = coloring_construction(g, planar_fc4_coloring(g, &inst.limits))?;
    Ok(Finding {
        verdict: chromatic_bound(g, 4, &inst.limits)?,
        construction: Some(construction),
    })
}

fn t413(inst: &Instance<'_>) -> Step<Finding> {
    let g = inst.g;
    let h = inst.h()?;
    let construction = coloring_construction(g, srp_inductive_coloring(g, &inst.limits))?;
    Ok(Finding {
        verdict: chromatic_bound(g, h, &inst.limits)?,
        construction: Some(construction),
    })
}
