//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Oracles come from `common`; nothing here calls a routine to
//! check itself.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rpgraph_core::certificate::{Evidence, FailureCertificate};
use rpgraph_core::coloring::{
    chromatic_number, planar_fc4_coloring, srp_inductive_coloring, validate_coloring,
};
use rpgraph_core::generators::random_planar;
use rpgraph_core::io::parse_graph6;
use rpgraph_core::minor::{find_clique_minor, hadwiger_number};
use rpgraph_core::partition::{
    build_erp, build_rp, build_srp, maximal_dominating_forest, validate_partition, BuildError,
    PartitionKind, PartitionResult,
};
use rpgraph_core::verify::{
    check_claim, enumerate_graphs, enumerate_up_to, recheck_evidence, run_campaign,
    CampaignConfig, ClaimId, Family, Outcome,
};
use rpgraph_core::{par, Graph, Limits, VertexSet};

/// Allowed disagreements with an oracle. Every criterion is exact.
const EXACT: usize = 0;
/// Wall-clock limit for the n <= 6 campaign.
const CAMPAIGN_DESK_BUDGET: Duration = Duration::from_secs(600);
const PLANAR_ORDERS: std::ops::RangeInclusive<usize> = 8..=12;
const PLANAR_PER_ORDER: u64 = 20;

struct Line {
    pass: bool,
    detail: String,
}

fn line(pass: bool, detail: impl Into<String>) -> Line {
    Line {
        pass,
        detail: detail.into(),
    }
}

fn lim() -> Limits {
    Limits::default()
}

fn small() -> Vec<Graph> {
    enumerate_up_to(7).expect("order 7 is enumerable")
}

/// The fixed planar family: 20 graphs for each order 8..=12.
fn planar_family() -> Vec<Graph> {
    PLANAR_ORDERS
        .flat_map(|n| (0..PLANAR_PER_ORDER).map(move |i| random_planar(n, 1000 * n as u64 + i)))
        .collect()
}

fn complement(g: &Graph, s: VertexSet) -> Vec<usize> {
    g.vertices().filter(|&v| !s.contains(v)).collect()
}

/// A failure certificate replays when its evidence re-checks on its context.
fn replays(c: &FailureCertificate) -> bool {
    parse_graph6(&c.context).is_ok_and(|ctx| recheck_evidence(&ctx, &c.evidence).is_ok())
}

fn minor_equivalence() -> Line {
    let graphs = enumerate_graphs(7).expect("order 7 is enumerable");
    let disagreements: usize = par::map(&graphs, par::default_jobs(), |g| {
        (3..=7)
            .filter(|&t| {
                let fast = find_clique_minor(g, t, &lim()).expect("default budget suffices");
                fast.is_some() != brute_has_clique_minor(g, t)
            })
            .count()
    })
    .into_iter()
    .sum();
    line(
        graphs.len() == 1044 && disagreements == EXACT,
        format!(
            "{} graphs on 7 vertices, t in 3..=7, {disagreements} disagreements",
            graphs.len()
        ),
    )
}

fn dominating_forests() -> Line {
    let graphs = small();
    let bad: Vec<String> = par::map(&graphs, par::default_jobs(), |g| {
        let t1 = check_claim(ClaimId::T1, g, &lim()).verdict == Outcome::Verified;
        let f = maximal_dominating_forest(g).to_vec();
        let maximal = g.vertices().filter(|v| !f.contains(v)).all(|v| {
            let mut more = f.clone();
            more.push(v);
            !uf_is_forest(g, &more)
        });
        (!(t1 && uf_is_forest(g, &f) && dominates(g, &f) && maximal))
            .then(|| rpgraph_core::io::to_graph6(g))
    })
    .into_iter()
    .flatten()
    .collect();
    line(
        bad.len() == EXACT,
        format!("{} graphs, {} failures {:?}", graphs.len(), bad.len(), bad),
    )
}

#[derive(Default)]
struct Tally {
    success: usize,
    failure: usize,
    inapplicable: usize,
    unsound: usize,
    silent: usize,
}

fn srp_soundness() -> Line {
    let graphs = small();
    let rows = par::map(&graphs, par::default_jobs(), |g| {
        let mut t = Tally::default();
        match build_srp(g, None, &lim()) {
            Ok(p) => {
                t.success += 1;
                let h = brute_hadwiger(g);
                let s1 = p.parts[0].to_vec();
                let s2 = complement(g, p.parts[0]);
                if p.parts.len() != 2
                    || p.parts[1].to_vec() != s2
                    || !independent(g, &s1)
                    || brute_has_clique_minor(&induced(g, &s2), h)
                {
                    t.unsound += 1;
                }
            }
            Err(BuildError::Failure(c)) => {
                t.failure += 1;
                if !replays(&c) {
                    t.silent += 1;
                }
            }
            Err(BuildError::Inapplicable(_)) => t.inapplicable += 1,
            Err(BuildError::Budget(_)) => t.silent += 1,
        }
        t
    });
    let t = rows.into_iter().fold(Tally::default(), |a, b| Tally {
        success: a.success + b.success,
        failure: a.failure + b.failure,
        inapplicable: a.inapplicable + b.inapplicable,
        unsound: a.unsound + b.unsound,
        silent: a.silent + b.silent,
    });
    line(
        t.unsound == EXACT && t.silent == EXACT,
        format!(
            "{} graphs: {} built, {} certified failures, {} inapplicable, {} unsound, {} without a replayable certificate",
            graphs.len(),
            t.success,
            t.failure,
            t.inapplicable,
            t.unsound,
            t.silent
        ),
    )
}

struct ErpRow {
    built: bool,
    invalid: bool,
    violation: bool,
    degenerate: bool,
    archived: bool,
    certified_failure: bool,
    silent: bool,
}

fn erp_row(g: &Graph) -> ErpRow {
    let mut row = ErpRow {
        built: false,
        invalid: false,
        violation: false,
        degenerate: false,
        archived: true,
        certified_failure: false,
        silent: false,
    };
    match build_erp(g, &lim()) {
        Ok(p) => {
            row.built = true;
            let h = hadwiger_number(g, &lim()).expect("default budget suffices").number;
            let cover: usize = p.parts.iter().map(|s| s.len()).sum();
            row.invalid = !p.passes()
                || cover != g.order()
                || !uf_is_forest(g, &p.parts.last().expect("nonempty").to_vec());
            if p.depth + 1 > h {
                row.violation = true;
                row.degenerate = h == 1;
                let cert = FailureCertificate::new(
                    "literal-depth-bound",
                    g,
                    vec![Evidence::Depth {
                        depth: p.depth,
                        bound: h - 1,
                        parts: p.parts.clone(),
                    }],
                );
                row.archived = replays(&cert);
            }
        }
        Err(BuildError::Failure(c)) => {
            row.certified_failure = true;
            row.silent = !replays(&c);
        }
        Err(BuildError::Inapplicable(_)) => {}
        Err(BuildError::Budget(_)) => row.silent = true,
    }
    row
}

fn erp_depth() -> Line {
    let mut graphs = small();
    let exhaustive = graphs.len();
    graphs.extend(planar_family());
    let rows = par::map(&graphs, par::default_jobs(), erp_row);
    let count = |f: &dyn Fn(&ErpRow) -> bool| rows.iter().filter(|r| f(r)).count();
    let built = count(&|r| r.built);
    let invalid = count(&|r| r.invalid);
    let violations = count(&|r| r.violation);
    let degenerate = count(&|r| r.degenerate);
    let unarchived = count(&|r| !r.archived);
    let failures = count(&|r| r.certified_failure);
    let silent = count(&|r| r.silent);
    let planar_built = rows[exhaustive..].iter().filter(|r| r.built).count();
    line(
        invalid == EXACT && unarchived == EXACT && silent == EXACT,
        format!(
            "{} instances ({} exhaustive, {} planar): {} built ({} planar), depth <= h-1 violated on {} ({} with h = 1, {} with h >= 2), all archived; {} certified failures",
            graphs.len(),
            exhaustive,
            graphs.len() - exhaustive,
            built,
            planar_built,
            violations,
            degenerate,
            violations - degenerate,
            failures
        ),
    )
}

fn colorings() -> Line {
    let upto6 = enumerate_up_to(6).expect("enumerable");
    let chi_mismatch = par::map(&upto6, par::default_jobs(), |g| {
        let (k, c) = chromatic_number(g, &lim()).expect("within cap");
        k != brute_chromatic(g) || !proper(g, &c.colors)
    })
    .into_iter()
    .filter(|&b| b)
    .count();

    // (invalid output, fc4 over four colors, uncertified failure, srp ok, fc4 ok, fc4 applicable)
    let scheme = |g: &Graph| {
        let mut invalid = false;
        let mut over = false;
        let mut silent = false;
        let srp = match srp_inductive_coloring(g, &lim()) {
            Ok(c) => {
                invalid |= !validate_coloring(g, &c) || !proper(g, &c.colors);
                true
            }
            Err(BuildError::Failure(c)) => {
                silent |= !replays(&c);
                false
            }
            Err(BuildError::Inapplicable(_)) => false,
            Err(BuildError::Budget(_)) => {
                silent = true;
                false
            }
        };
        let (fc4, planar) = match planar_fc4_coloring(g, &lim()) {
            Ok(c) => {
                invalid |= !validate_coloring(g, &c) || !proper(g, &c.colors);
                over |= c.num_colors() > 4;
                (true, true)
            }
            Err(BuildError::Failure(c)) => {
                silent |= !replays(&c);
                (false, true)
            }
            Err(BuildError::Inapplicable(_)) => (false, false),
            Err(BuildError::Budget(_)) => {
                silent = true;
                (false, true)
            }
        };
        (invalid, over, silent, srp, fc4, planar)
    };

    let graphs = small();
    let small_rows = par::map(&graphs, par::default_jobs(), scheme);
    let planar = planar_family();
    let planar_rows = par::map(&planar, par::default_jobs(), scheme);
    let all = || small_rows.iter().chain(&planar_rows);
    let invalid = all().filter(|r| r.0).count();
    let over = all().filter(|r| r.1).count();
    let silent = all().filter(|r| r.2).count();
    let fc4_planar_ok = planar_rows.iter().filter(|r| r.4).count();
    let fc4_small_ok = small_rows.iter().filter(|r| r.4).count();
    let fc4_small_applicable = small_rows.iter().filter(|r| r.5).count();

    let t413 = par::map(&graphs, par::default_jobs(), |g| {
        let r = check_claim(ClaimId::T413, g, &lim());
        let scheme_ok = matches!(
            r.construction,
            Some(rpgraph_core::verify::Construction::Success { .. })
        );
        let oracle_violation = chromatic_number(g, &lim()).expect("within cap").0
            > brute_hadwiger(g);
        (r.verdict == Outcome::Verified, scheme_ok, oracle_violation)
    });
    let verdict_ok = t413.iter().filter(|r| r.0).count();
    let scheme_ok = t413.iter().filter(|r| r.1).count();
    let oracle_violations = t413.iter().filter(|r| r.2).count();

    line(
        chi_mismatch == EXACT
            && invalid == EXACT
            && over == EXACT
            && silent == EXACT
            && oracle_violations == EXACT
            && verdict_ok == graphs.len(),
        format!(
            "chi mismatches on {} graphs <= 6: {chi_mismatch}; invalid colorings: {invalid}; fc4 above 4 colors: {over}; uncertified failures: {silent}; \
             fc4 success {fc4_planar_ok}/{} on the planar family and {fc4_small_ok}/{fc4_small_applicable} on planar graphs <= 7; \
             chi <= h verdicts VERIFIED {verdict_ok}/{n}, oracle violations {oracle_violations}, srp scheme success {scheme_ok}/{n}",
            upto6.len(),
            planar.len(),
            n = graphs.len()
        ),
    )
}

fn two_tree_rejected() -> Line {
    let (g, s1, s2) = two_tree_configuration();
    let set = |v: &[usize]| -> VertexSet { v.iter().copied().collect() };
    let h = brute_hadwiger(&g);
    let p = PartitionResult::new(PartitionKind::Rp, h, vec![set(&s1), set(&s2)]);
    let report = validate_partition(&g, &p, &lim()).expect("small instance");
    let failed: Vec<&str> = report
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.condition.as_str())
        .collect();
    let configuration = h == 4
        && uf_is_forest(&g, &s1)
        && dominates(&g, &s1)
        && g.components_within(set(&s1)).len() == 2
        && brute_has_clique_minor(&induced(&g, &s2), 4);
    line(
        configuration && failed == ["minor_free"],
        format!("h = {h}, failed conditions {failed:?}"),
    )
}

fn outcome_json<T: serde::Serialize>(r: &Result<T, BuildError>) -> String {
    match r {
        Ok(v) => serde_json::to_string(v).expect("serializes"),
        Err(BuildError::Failure(c)) => serde_json::to_string(c).expect("serializes"),
        Err(e) => e.to_string(),
    }
}

fn run_once(graphs: &[Graph]) -> Vec<String> {
    let mut out = Vec::new();
    for g in graphs {
        out.push(outcome_json(&build_rp(g, None, &lim())));
        out.push(outcome_json(&build_srp(g, None, &lim())));
        out.push(outcome_json(&build_erp(g, &lim())));
        out.push(outcome_json(&srp_inductive_coloring(g, &lim())));
        out.push(outcome_json(&planar_fc4_coloring(g, &lim())));
        out.push(serde_json::to_string(&chromatic_number(g, &lim()).ok().map(|r| r.1)).unwrap());
        if let Ok(h) = hadwiger_number(g, &lim()) {
            out.push(h.witness.to_json(g).to_string());
        }
    }
    let mut cfg = CampaignConfig::new(Family::Exhaustive {
        min_order: 1,
        max_order: 5,
    });
    out.push(run_campaign(&cfg).expect("valid config").to_json());
    cfg.family = Family::RandomPlanar {
        min_order: 6,
        max_order: 9,
        count: 8,
    };
    cfg.seed = 17;
    cfg.jobs = Some(1);
    out.push(run_campaign(&cfg).expect("valid config").to_json());
    out
}

fn determinism() -> Line {
    let mut graphs = enumerate_up_to(5).expect("enumerable");
    graphs.extend((8..=10).map(|n| random_planar(n, n as u64)));
    let a = run_once(&graphs);
    let b = run_once(&graphs);
    let differing = a.iter().zip(&b).filter(|(x, y)| x != y).count();
    line(
        a.len() == b.len() && differing == EXACT,
        format!("{} JSON documents compared, {differing} differ", a.len()),
    )
}

fn campaign_completes() -> Line {
    let cfg = CampaignConfig::new(Family::Exhaustive {
        min_order: 1,
        max_order: 6,
    });
    let start = Instant::now();
    let report = run_campaign(&cfg).expect("valid config");
    let elapsed = start.elapsed();
    let budget: usize = report.claims.values().map(|c| c.budget).sum();
    println!("{}", report.table(elapsed));
    line(
        report.claims.len() == 17 && budget == EXACT && elapsed < CAMPAIGN_DESK_BUDGET,
        format!(
            "{} instances x {} claims in {:.2}s, {budget} BUDGET verdicts, {} refutations",
            report.instances,
            report.claims.len(),
            elapsed.as_secs_f64(),
            report.refutations.len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Line); 8] = [
        ("minor search agrees with brute force", minor_equivalence),
        ("dominating forests everywhere", dominating_forests),
        ("SRP sound on success", srp_soundness),
        ("ERP depth bound", erp_depth),
        ("coloring cross-check", colorings),
        ("two-tree configuration rejected as RP", two_tree_rejected),
        ("byte-identical JSON", determinism),
        ("claim campaign n <= 6", campaign_completes),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let l = run();
        failed += usize::from(!l.pass);
        println!(
            "[{}] {}. {name}: {} ({:.1}s)",
            if l.pass { "PASS" } else { "FAIL" },
            i + 1,
            l.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
