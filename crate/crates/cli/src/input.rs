//! Graph sources: files, standard input and built-in generators.

use std::io::Read;

use clap::ValueEnum;
use rpgraph_core::generators as gen;
use rpgraph_core::io::{parse_edge_list, parse_graph6};
use rpgraph_core::{Graph, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

/// Reads a whole source: a path, `-` for standard input.
pub fn read_text(source: &str) -> Result<String, String> {
    if source == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(text)
    } else {
        std::fs::read_to_string(source).map_err(|e| format!("{source}: {e}"))
    }
}

/// Resolves `source` to one graph. `gen:<family>[:<args>]` names a
/// generator and `g6:<code>` an inline graph6 string; anything else is
/// read as text in `format`.
pub fn load_graph(source: &str, format: Format, seed: u64) -> Result<Graph, String> {
    if let Some(spec) = source.strip_prefix("gen:") {
        return generate(spec, seed);
    }
    if let Some(code) = source.strip_prefix("g6:") {
        return parse_graph6(code).map_err(|e| e.to_string());
    }
    let text = read_text(source)?;
    match format {
        Format::Graph6 => {
            let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
            let first = lines.next().ok_or("no graph in input")?;
            if lines.next().is_some() {
                return Err("expected exactly one graph6 line".into());
            }
            parse_graph6(first).map_err(|e| e.to_string())
        }
        Format::Edgelist => parse_edge_list(&text).map_err(|e| e.to_string()),
    }
}

fn numbers(args: &str, want: usize, family: &str) -> Result<Vec<usize>, String> {
    let parsed: Result<Vec<usize>, _> = args.split(',').map(|a| a.trim().parse::<usize>()).collect();
    match parsed {
        Ok(v) if v.len() == want => Ok(v),
        _ => Err(format!("gen:{family} expects {want} comma-separated integer(s), got {args:?}")),
    }
}

/// Order of the generated graph, where it depends on the arguments.
fn order_of(family: &str, args: &str) -> Option<usize> {
    let n: Vec<usize> = args.split(',').filter_map(|a| a.trim().parse().ok()).collect();
    match (family, n.as_slice()) {
        ("star" | "wheel", [k]) => Some(k + 1),
        ("bipartite", [a, b]) => Some(a + b),
        (_, [k, ..]) => Some(*k),
        _ => None,
    }
}

fn generate(spec: &str, seed: u64) -> Result<Graph, String> {
    let (family, args) = spec.split_once(':').unwrap_or((spec, ""));
    if let Some(n) = order_of(family, args).filter(|&n| n > MAX_ORDER) {
        return Err(format!("gen:{family}: order {n} exceeds {MAX_ORDER}"));
    }
    let one = |family: &str| numbers(args, 1, family).map(|v| v[0]);
    let g = match family {
        "complete" => gen::complete(one(family)?),
        "empty" => Graph::empty(one(family)?).map_err(|e| e.to_string())?,
        "path" => gen::path(one(family)?),
        "cycle" => {
            let n = one(family)?;
            if n < 3 {
                return Err("gen:cycle needs at least 3 vertices".into());
            }
            gen::cycle(n)
        }
        "star" => gen::star(one(family)?),
        "wheel" => {
            let n = one(family)?;
            if n < 3 {
                return Err("gen:wheel needs a rim of at least 3 vertices".into());
            }
            gen::wheel(n)
        }
        "bipartite" => {
            let v = numbers(args, 2, family)?;
            gen::complete_bipartite(v[0], v[1])
        }
        "petersen" => gen::petersen(),
        "octahedron" => gen::octahedron(),
        "planar" => {
            let n = one(family)?;
            if n < 3 {
                return Err("gen:planar needs at least 3 vertices".into());
            }
            gen::random_planar(n, seed)
        }
        "gnp" => {
            let (n, p) = args
                .split_once(',')
                .ok_or("gen:gnp expects <n>,<p>")?;
            let n: usize = n.trim().parse().map_err(|_| "gen:gnp: bad order")?;
            let p: f64 = p.trim().parse().map_err(|_| "gen:gnp: bad probability")?;
            if !(0.0..=1.0).contains(&p) {
                return Err("gen:gnp: probability must lie in [0, 1]".into());
            }
            gen::random_gnp(n, p, seed)
        }
        other => return Err(format!("unknown generator {other:?}")),
    };
    Ok(g)
}
