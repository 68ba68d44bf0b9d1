//! Independent re-checks of archived evidence.

use crate::certificate::Evidence;
use crate::graph::Graph;
use crate::io::parse_graph6;
use crate::limits::Limits;
use crate::minor::{verify_witness, MinorWitness};

use super::claims::{check_claim, ClaimReport, Outcome};

fn is_cycle(g: &Graph, vs: &[usize]) -> bool {
    let set: crate::VertexSet = vs.iter().collect();
    vs.len() >= 3
        && set.len() == vs.len()
        && (0..vs.len()).all(|i| g.has_edge(vs[i], vs[(i + 1) % vs.len()]))
}

/// Checks each piece of evidence against `g` with the plain graph
/// predicates. `Deleted` switches later items to `g` minus those edges.
pub fn recheck_evidence(g: &Graph, evidence: &[Evidence]) -> Result<(), String> {
    let mut cur = g.clone();
    for (i, e) in evidence.iter().enumerate() {
        let fail = |what: &str| Err(format!("evidence {i}: {what}"));
        match e {
            Evidence::Deleted { edges } => {
                if !edges.iter().all(|e| g.has_edge(e.u, e.v)) {
                    return fail("deleted edge not in graph");
                }
                cur = g.without_edges(edges).map_err(|e| e.to_string())?;
            }
            Evidence::Witness {
                t,
                branch_sets,
                support_edges,
            } => {
                let w = MinorWitness {
                    t: *t,
                    branch_sets: branch_sets.clone(),
                };
                if !verify_witness(&cur, &w) {
                    return fail("witness does not verify");
                }
                if !support_edges.iter().all(|e| cur.has_edge(e.u, e.v)) {
                    return fail("support edge missing");
                }
            }
            Evidence::Cycle { vertices } => {
                if !is_cycle(&cur, vertices) {
                    return fail("not a cycle");
                }
            }
            Evidence::Adjacent { u, v } => {
                if !cur.has_edge(*u, *v) {
                    return fail("vertices not adjacent");
                }
            }
            Evidence::Undominated { vertex, dominator } => {
                if dominator.contains(*vertex) || cur.neighbors(*vertex).intersects(*dominator) {
                    return fail("vertex is dominated");
                }
            }
            Evidence::FewNeighbors {
                vertex,
                set,
                neighbors,
            } => {
                if set.contains(*vertex)
                    || cur.neighbors_in(*vertex, *set) != *neighbors
                    || neighbors.len() >= 2
                {
                    return fail("neighbor count does not match");
                }
            }
            Evidence::NoIsolatedVertex { minor, outside } => {
                let covered: crate::VertexSet = outside
                    .iter()
                    .filter(|e| cur.has_edge(e.u, e.v))
                    .filter_map(|e| {
                        if minor.contains(e.u) && !minor.contains(e.v) {
                            Some(e.u)
                        } else if minor.contains(e.v) && !minor.contains(e.u) {
                            Some(e.v)
                        } else {
                            None
                        }
                    })
                    .collect();
                if covered != *minor {
                    return fail("some minor vertex has no listed outside edge");
                }
            }
            Evidence::Split {
                set,
                within,
                components,
            } => {
                if cur.components_within(*within) != *components
                    || components.iter().any(|c| set.is_subset(*c))
                {
                    return fail("set lies in one component");
                }
            }
            Evidence::Connected { set } => {
                if !cur.is_connected_set(*set) {
                    return fail("set is not connected");
                }
            }
            Evidence::Rainbow {
                vertex,
                neighbors,
                colors,
                allowed,
            } => {
                let all: Vec<usize> = (0..*allowed).collect();
                if cur.neighbors(*vertex) != *neighbors || !all.iter().all(|c| colors.contains(c)) {
                    return fail("neighborhood does not use every allowed color");
                }
            }
            Evidence::CommonNeighborhood {
                pair,
                neighborhood,
                odd_cycle,
                ..
            } => {
                let common = cur.neighbors(pair.u) & cur.neighbors(pair.v);
                if !cur.has_edge(pair.u, pair.v)
                    || !neighborhood.is_subset(common)
                    || odd_cycle.len() % 2 == 0
                    || !odd_cycle.iter().all(|&v| neighborhood.contains(v))
                    || !is_cycle(&cur, odd_cycle)
                {
                    return fail("common neighborhood is 2-colorable");
                }
            }
            Evidence::Depth {
                depth,
                bound,
                parts,
            } => {
                if *depth != parts.len() || depth <= bound {
                    return fail("depth within bound");
                }
            }
            Evidence::Coloring { colors, k } => {
                let c = crate::coloring::Coloring {
                    colors: colors.clone(),
                    k: *k,
                };
                if !crate::coloring::validate_coloring(&cur, &c) {
                    return fail("coloring is not proper");
                }
            }
            Evidence::Overlap { .. }
            | Evidence::Uncovered { .. }
            | Evidence::Exhausted { .. }
            | Evidence::Set { .. }
            | Evidence::Note { .. } => {}
        }
    }
    Ok(())
}

/// Re-runs a report's claim on its instance and demands the same report;
/// refutation evidence is additionally re-checked on its own.
pub fn replay(report: &ClaimReport, limits: &Limits) -> Result<(), String> {
    let g = parse_graph6(&report.instance).map_err(|e| e.to_string())?;
    let again = check_claim(report.claim, &g, limits);
    if again != *report {
        return Err(format!(
            "{} on {}: replay gave {:?}, archived {:?}",
            report.claim, report.instance, again.verdict, report.verdict
        ));
    }
    if report.verdict == Outcome::Refuted {
        recheck_evidence(&g, &report.evidence)?;
    }
    if let Some(super::claims::Construction::Failure { certificate }) = &report.construction {
        let ctx = parse_graph6(&certificate.context).map_err(|e| e.to_string())?;
        recheck_evidence(&ctx, &certificate.evidence)?;
    }
    Ok(())
}
