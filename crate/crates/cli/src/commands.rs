//! One function per verb. Each writes its JSON result and returns the exit
//! code, or a [`Failure`] carrying the code and a message for stderr.

use std::io::Write;
use std::time::Instant;

use rpgraph_core::coloring::{
    chromatic_number, greedy_coloring, planar_fc4_coloring, srp_inductive_coloring,
    ChromaticError, Coloring,
};
use rpgraph_core::io::{to_edge_list, to_graph6};
use rpgraph_core::minor::{find_clique_minor, hadwiger_number, is_planar, HadwigerError};
use rpgraph_core::partition::{build, BuildError, PartitionKind};
use rpgraph_core::verify::{enumerate_graphs, run_campaign, CampaignConfig, MAX_ENUMERATION_ORDER};
use rpgraph_core::{BudgetExhausted, Graph, Limits};
use serde_json::{json, Value};

use crate::input::{load_graph, read_text, Format};
use crate::{Common, KindArg, Method};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Code {
    Ok = 0,
    Usage = 2,
    Budget = 3,
    Construction = 4,
    Inapplicable = 5,
    Refuted = 6,
}

pub struct Failure {
    pub code: Code,
    pub message: String,
}

type Outcome = Result<Code, Failure>;

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: Code::Usage,
        message: message.into(),
    }
}

fn budget(e: BudgetExhausted) -> Failure {
    Failure {
        code: Code::Budget,
        message: e.to_string(),
    }
}

impl Common {
    fn limits(&self) -> Limits {
        self.budget.map_or_else(Limits::default, Limits::with_budget)
    }

    fn graph(&self, input: &str) -> Result<Graph, Failure> {
        load_graph(input, self.format, self.seed.unwrap_or(0)).map_err(usage)
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => std::fs::write(path, format!("{text}\n"))
                .map_err(|e| usage(format!("{}: {e}", path.display()))),
            None => {
                let mut out = std::io::stdout().lock();
                match writeln!(out, "{text}").and_then(|_| out.flush()) {
                    Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                        Err(usage(format!("stdout: {e}")))
                    }
                    _ => Ok(()),
                }
            }
        }
    }

    fn emit_json(&self, v: &Value) -> Result<(), Failure> {
        self.emit(&v.to_string())
    }
}

/// Maps a builder error to its exit code, printing the certificate of a
/// failed construction as the command's JSON result.
fn build_failure(common: &Common, e: BuildError) -> Outcome {
    match e {
        BuildError::Failure(cert) => {
            common.emit_json(&serde_json::to_value(&*cert).expect("certificates serialize"))?;
            Err(Failure {
                code: Code::Construction,
                message: format!("construction failed at stage {}", cert.stage),
            })
        }
        BuildError::Inapplicable(reason) => Err(Failure {
            code: Code::Inapplicable,
            message: format!("inapplicable: {reason}"),
        }),
        BuildError::Budget(b) => Err(budget(b)),
    }
}

fn hadwiger_json(g: &Graph, limits: &Limits) -> Result<(usize, Value), Failure> {
    match hadwiger_number(g, limits) {
        Ok(h) => Ok((h.number, h.witness.to_json(g))),
        Err(HadwigerError::EmptyGraph) => Ok((0, Value::Null)),
        Err(e @ HadwigerError::Budget { .. }) => Err(Failure {
            code: Code::Budget,
            message: e.to_string(),
        }),
    }
}

pub fn info(input: &str, common: &Common) -> Outcome {
    let g = common.graph(input)?;
    let limits = common.limits();
    let (h, witness) = hadwiger_json(&g, &limits)?;
    let planar = is_planar(&g, &limits).map_err(budget)?;
    let all = g.vertex_set();
    common.emit_json(&json!({
        "n": g.order(),
        "m": g.size(),
        "graph6": to_graph6(&g),
        "components": g.components().len(),
        "connected": g.is_connected(),
        "forest": g.is_forest(all),
        "independent": g.is_independent(all),
        "planar": planar,
        "hadwiger": h,
        "witness": witness,
    }))?;
    Ok(Code::Ok)
}

pub fn minor(input: &str, t: Option<usize>, common: &Common) -> Outcome {
    let g = common.graph(input)?;
    let limits = common.limits();
    let Some(t) = t else {
        let (h, witness) = hadwiger_json(&g, &limits)?;
        common.emit_json(&json!({ "hadwiger": h, "witness": witness }))?;
        return Ok(Code::Ok);
    };
    let found = find_clique_minor(&g, t, &limits).map_err(budget)?;
    common.emit_json(&json!({
        "t": t,
        "found": found.is_some(),
        "witness": found.map(|w| w.to_json(&g)),
    }))?;
    Ok(Code::Ok)
}

pub fn partition(input: &str, kind: KindArg, t: Option<usize>, common: &Common) -> Outcome {
    let g = common.graph(input)?;
    let kind = match kind {
        KindArg::Rp => PartitionKind::Rp,
        KindArg::Srp => PartitionKind::Srp,
        KindArg::Erp => PartitionKind::Erp,
    };
    match build(&g, kind, t, &common.limits()) {
        Ok(p) => {
            common.emit_json(&serde_json::to_value(&p).expect("partitions serialize"))?;
            Ok(Code::Ok)
        }
        Err(e) => build_failure(common, e),
    }
}

fn coloring_json(method: &str, c: &Coloring) -> Value {
    json!({ "method": method, "k": c.num_colors(), "colors": c.colors })
}

pub fn color(input: &str, method: Method, common: &Common) -> Outcome {
    let g = common.graph(input)?;
    let limits = common.limits();
    let (name, result) = match method {
        Method::Chromatic => (
            "chromatic",
            chromatic_number(&g, &limits).map(|r| r.1).map_err(|e| match e {
                ChromaticError::Budget(b) => budget(b),
                ChromaticError::Cap(e) => Failure {
                    code: Code::Budget,
                    message: e.to_string(),
                },
            })?,
        ),
        Method::Greedy => (
            "greedy",
            greedy_coloring(&g, &g.vertices().collect::<Vec<_>>()).map_err(|e| usage(e.to_string()))?,
        ),
        Method::Srp => match srp_inductive_coloring(&g, &limits) {
            Ok(c) => ("srp", c),
            Err(e) => return build_failure(common, e),
        },
        Method::Fc4 => match planar_fc4_coloring(&g, &limits) {
            Ok(c) => ("fc4", c),
            Err(e) => return build_failure(common, e),
        },
    };
    common.emit_json(&coloring_json(name, &result))?;
    Ok(Code::Ok)
}

/// Reads and validates the config; `--seed` and `--budget` (or
/// `RPGRAPH_BUDGET`) override the file's values.
fn campaign_config(source: &str, jobs: Option<usize>, common: &Common) -> Result<CampaignConfig, Failure> {
    let text = read_text(source).map_err(usage)?;
    let mut cfg = CampaignConfig::from_json(&text).map_err(|e| usage(e.to_string()))?;
    if let Some(seed) = common.seed {
        cfg.seed = seed;
    }
    if let Some(b) = common.budget {
        cfg.budget = b;
    }
    if jobs.is_some() {
        cfg.jobs = jobs;
    }
    cfg.validate().map_err(|e| usage(e.to_string()))?;
    Ok(cfg)
}

pub fn verify(config: &str, jobs: Option<usize>, common: &Common) -> Outcome {
    let cfg = campaign_config(config, jobs, common)?;
    let start = Instant::now();
    let report = run_campaign(&cfg).map_err(|e| usage(e.to_string()))?;
    let table = report.table(start.elapsed());
    common.emit(&report.to_json())?;
    // The table goes wherever the JSON does not.
    if common.out.is_some() {
        print!("{table}");
    } else {
        eprint!("{table}");
    }
    Ok(if report.has_refutations() {
        Code::Refuted
    } else {
        Code::Ok
    })
}

pub fn enumerate(min_order: usize, max_order: usize, common: &Common) -> Outcome {
    if min_order > max_order {
        return Err(usage("--min-order exceeds --order"));
    }
    if max_order > MAX_ENUMERATION_ORDER {
        return Err(Failure {
            code: Code::Budget,
            message: format!("enumeration is capped at order {MAX_ENUMERATION_ORDER}"),
        });
    }
    let mut lines = Vec::new();
    for n in min_order..=max_order {
        for g in enumerate_graphs(n).map_err(|e| usage(e.to_string()))? {
            lines.push(match common.format {
                Format::Graph6 => to_graph6(&g),
                Format::Edgelist => to_edge_list(&g),
            });
        }
    }
    let sep = match common.format {
        Format::Graph6 => "\n",
        Format::Edgelist => "\n\n",
    };
    common.emit(lines.join(sep).trim_end())?;
    Ok(Code::Ok)
}
