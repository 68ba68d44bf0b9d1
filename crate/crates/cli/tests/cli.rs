use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn rpgraph(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rpgraph"))
        .args(args)
        .env_remove("RPGRAPH_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn run(args: &[&str]) -> Output {
    rpgraph(args, "")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&o.stdout)
        )
    })
}

/// Validates `doc` against `#/$defs/<kind>` of the shipped schema.
fn conforms(kind: &str, doc: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas/rpgraph.schema.json");
    let mut schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    schema["$ref"] = Value::String(format!("#/$defs/{kind}"));
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{kind}: {errors:?}\n{doc}");
}

const K4_EDGES: &str = "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

#[test]
fn info_reports_order_size_and_hadwiger_number() {
    let o = rpgraph(&["info", "--format", "edgelist", "-"], K4_EDGES);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    conforms("info", &v);
    assert_eq!((v["n"].as_u64(), v["m"].as_u64(), v["hadwiger"].as_u64()), (Some(4), Some(6), Some(4)));

    let v = json(&run(&["info", "gen:empty:5"]));
    conforms("info", &v);
    assert_eq!((v["n"].as_u64(), v["m"].as_u64(), v["hadwiger"].as_u64()), (Some(5), Some(0), Some(1)));
    assert_eq!(v["independent"], true);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("petersen.g6");
    std::fs::write(&file, "IheA@GUAo\n").unwrap();
    let v = json(&run(&["info", file.to_str().unwrap()]));
    conforms("info", &v);
    assert_eq!(v["hadwiger"], 5);
    assert_eq!(v["planar"], false);
}

#[test]
fn minor_search() {
    let v = json(&run(&["minor", "gen:complete:4", "--t", "4"]));
    conforms("minor", &v);
    assert_eq!(v["found"], true);
    let v = json(&run(&["minor", "gen:cycle:5", "--t", "4"]));
    conforms("minor", &v);
    assert_eq!(v["found"], false);
    assert!(v["witness"].is_null());
    let v = json(&run(&["minor", "gen:bipartite:3,3"]));
    conforms("minor", &v);
    assert_eq!(v["hadwiger"], 4);
}

#[test]
fn partitions() {
    let o = run(&["partition", "gen:wheel:5", "--kind", "srp"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    conforms("partition_result", &v);
    assert_eq!(v["parts"], serde_json::json!([[0], [1, 2, 3, 4, 5]]));

    let v = json(&run(&["partition", "gen:path:5", "--kind", "erp"]));
    conforms("partition_result", &v);
    assert_eq!(v["parts"], serde_json::json!([[0, 1, 2, 3, 4]]));

    let o = run(&["partition", "gen:complete:5", "--kind", "srp", "--t", "5"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    conforms("partition_result", &v);
    assert!(v["report"].as_array().unwrap().iter().all(|c| c["pass"] == true));

    let o = run(&["partition", "gen:cycle:5", "--kind", "rp", "--t", "4"]);
    assert_eq!(code(&o), 5);
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("inapplicable"));

    let o = run(&["partition", "gen:cycle:5", "--kind", "nope"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn construction_failures_print_a_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, r#"{"family":{"kind":"exhaustive","max_order":5},"claims":["T9"]}"#).unwrap();
    let out = dir.path().join("r.json");
    assert_eq!(code(&run(&["verify", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()])), 0);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let failures = report["construction_failures"].as_array().unwrap();
    assert!(!failures.is_empty());
    for f in failures {
        let source = format!("g6:{}", f["instance"].as_str().unwrap());
        let o = run(&["partition", &source, "--kind", "srp"]);
        assert_eq!(code(&o), 4);
        let cert = json(&o);
        conforms("failure_certificate", &cert);
        assert_eq!(cert, f["construction"]["certificate"]);
    }
}

#[test]
fn colorings() {
    for method in ["chromatic", "greedy", "srp", "fc4"] {
        let o = run(&["color", "gen:octahedron", "--method", method]);
        assert_eq!(code(&o), 0, "{method}");
        let v = json(&o);
        conforms("coloring", &v);
        assert_eq!(v["colors"].as_array().unwrap().len(), 6);
    }
    assert_eq!(json(&run(&["color", "gen:petersen"]))["k"], 3);
    assert_eq!(code(&run(&["color", "gen:complete:5", "--method", "fc4"])), 5);
    assert_eq!(code(&run(&["color", "gen:complete:17"])), 3);
}

#[test]
fn campaigns() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("c.json");
    std::fs::write(&cfg, r#"{"family":{"kind":"exhaustive","max_order":5}}"#).unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let o = run(&["verify", cfg.to_str().unwrap(), "--out", a.to_str().unwrap()]);
    // Exhaustive runs up to five vertices contain refutations.
    assert_eq!(code(&o), 6);
    assert!(String::from_utf8_lossy(&o.stdout).contains("T413"));
    let o = run(&["verify", cfg.to_str().unwrap(), "--out", b.to_str().unwrap(), "--jobs", "1"]);
    assert_eq!(code(&o), 6);
    let (ta, tb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let report: Value = serde_json::from_slice(&ta).unwrap();
    conforms("campaign_report", &report);
    assert!(report["refutations"].as_array().unwrap().iter().all(|r| r["verdict"] == "REFUTED"));

    let o = rpgraph(&["verify", "-"], r#"{"family":{"kind":"exhaustive","max_order":5},"claims":[]}"#);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    conforms("campaign_report", &v);
    assert_eq!(v["claims"], serde_json::json!({}));

    assert_eq!(code(&rpgraph(&["verify", "-"], r#"{"family":{"kind":"nope"}}"#)), 2);
    assert_eq!(code(&rpgraph(&["verify", "-"], "not json")), 2);
}

#[test]
fn seeds_select_random_instances() {
    let cfg = r#"{"family":{"kind":"random_gnp","min_order":5,"max_order":7,"p":0.5,"count":4},"claims":["T1"]}"#;
    let a = json(&rpgraph(&["verify", "-", "--seed", "1"], cfg));
    let b = json(&rpgraph(&["verify", "-", "--seed", "1"], cfg));
    let c = json(&rpgraph(&["verify", "-", "--seed", "2"], cfg));
    assert_eq!(a, b);
    assert_eq!(a["config"]["seed"], 1);
    assert_eq!(c["config"]["seed"], 2);

    let g1 = json(&run(&["info", "gen:planar:9", "--seed", "5"]));
    let g2 = json(&run(&["info", "gen:planar:9", "--seed", "5"]));
    assert_eq!(g1, g2);
    assert_eq!(g1["m"], 21);
}

#[test]
fn shipped_configs_conform() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("configs");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        conforms("campaign_config", &v);
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(rpgraph_core::verify::CampaignConfig::from_json(&text).is_ok());
    }
}

#[test]
fn enumerate_lists_every_class() {
    let o = run(&["enumerate", "--order", "4"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 2 + 4 + 11);
    let o = run(&["enumerate", "--order", "5", "--min-order", "5"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().count(), 34);
    assert_eq!(code(&run(&["enumerate", "--order", "9"])), 3);
}

#[test]
fn exit_codes_for_bad_input_and_budgets() {
    assert_eq!(code(&rpgraph(&["info"], "!!!")), 2);
    assert_eq!(code(&rpgraph(&["info", "--format", "edgelist"], "n 2\n0 5\n")), 2);
    assert_eq!(code(&run(&["info", "/no/such/file"])), 2);
    assert_eq!(code(&run(&["info", "gen:unknown:3"])), 2);
    assert_eq!(code(&run(&["info", "gen:complete:5", "--budget", "3"])), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_rpgraph"))
        .args(["minor", "gen:complete:6", "--t", "6"])
        .env("RPGRAPH_BUDGET", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}
