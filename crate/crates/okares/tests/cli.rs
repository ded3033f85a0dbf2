use std::process::Command;

use okares::cli::{run, EXIT_MISMATCH, EXIT_OBSTRUCTION, EXIT_OK, EXIT_USAGE};
use okares::formats::{ascii_root, fan_from_json, fan_value, graph_from_json, graph_value, pretty};
use okares_core::catalog::{expected_graph, RtpFamily};
use okares_core::resgraph::{tree_isomorphic, ResolutionGraph};
use proptest::prelude::*;
use serde_json::Value;

const FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/remark422.json");

fn call(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("okares").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn resolve_e60_as_ascii() {
    let (code, out, _) = call(&["resolve", "z^3+y^3*z+x^2*y^2", "--format", "ascii"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 7);
    assert!(out.lines().next().unwrap().contains("u=(5,4,6)"));
}

#[test]
fn resolve_json_is_the_expected_graph() {
    let (code, out, _) = call(&["resolve", "z^3+y^3*z+x^2*y^2"]);
    assert_eq!(code, EXIT_OK);
    let g = graph_from_json(&out).unwrap();
    assert!(tree_isomorphic(&g, &expected_graph(&RtpFamily::E60).unwrap()).unwrap());
}

#[test]
fn blowdown_flags() {
    let form = RtpFamily::D { k: 3 }.nonisolated_form().unwrap().to_string();
    let (_, raw, _) = call(&["resolve", &form, "--no-blowdown"]);
    let (_, min, _) = call(&["resolve", &form, "--blowdown"]);
    let (_, default, _) = call(&["resolve", &form]);
    assert_eq!(min, default);
    let len = |s: &str| json(s)["vertices"].as_array().unwrap().len();
    assert_eq!(len(&raw), len(&min) + 1);
    let (_, last_wins, _) = call(&["resolve", &form, "--blowdown", "--no-blowdown"]);
    assert_eq!(last_wins, raw);
}

#[test]
fn parse_and_zero_errors_exit_1() {
    assert_eq!(call(&["resolve", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["resolve", "x^^2"]).0, EXIT_USAGE);
    assert_eq!(call(&["resolve"]).0, EXIT_USAGE);
    assert_eq!(call(&["resolve", "x", "--fan", FIXTURE]).0, EXIT_USAGE);
    assert_eq!(call(&["nondeg", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "Q:1"]).0, EXIT_USAGE);
    assert_eq!(call(&["verify", "A:2,3,4"]).0, EXIT_USAGE);
    assert_eq!(call(&["bogus"]).0, EXIT_USAGE);
    assert_eq!(call(&["--help"]).0, EXIT_OK);
}

#[test]
fn obstructed_fan_exits_2() {
    let (code, _, err) = call(&["resolve", "--fan", FIXTURE]);
    assert_eq!(code, EXIT_OBSTRUCTION);
    assert!(err.contains("no integral weight for generator (3,1,1)"), "{err}");

    let (code, out, err) = call(&["fan-graph", FIXTURE]);
    assert_eq!(code, EXIT_OBSTRUCTION);
    assert!(err.contains("(3,1,1)"));
    let doc = json(&out);
    let dets: Vec<&Value> = doc["cones"].as_array().unwrap().iter().map(|c| &c["det"]).collect();
    assert_eq!(dets, vec![&Value::from(1); 3]);
    assert!(doc["error"].as_str().unwrap().contains("(3,1,1)"));

    let (_, text, _) = call(&["fan-graph", FIXTURE, "--format", "ascii"]);
    assert_eq!(text.lines().filter(|l| l.ends_with("det 1")).count(), 3);
}

#[test]
fn solvable_fan_from_file() {
    let dir = std::env::temp_dir().join(format!("okares-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cone.json");
    std::fs::write(&path, r#"{"generators":[[1,1,1],[1,0,0],[0,1,0],[0,0,1]],"two_cones":[[0,1],[0,2],[0,3]]}"#).unwrap();
    let (code, out, _) = call(&["fan-graph", path.to_str().unwrap(), "--no-blowdown"]);
    assert_eq!(code, EXIT_OK);
    let doc = json(&out);
    assert_eq!(doc["graph"]["vertices"][0]["weight"], 1);
    let (_, out, _) = call(&["fan-graph", path.to_str().unwrap()]);
    assert_eq!(json(&out)["graph"]["vertices"], serde_json::json!([]));
    assert_eq!(call(&["fan-graph", dir.join("missing.json").to_str().unwrap()]).0, EXIT_USAGE);
    std::fs::write(&path, r#"{"generators":[[1,1,1]],"two_cones":[[0,5]]}"#).unwrap();
    assert_eq!(call(&["fan-graph", path.to_str().unwrap()]).0, EXIT_USAGE);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn nondeg_verdicts() {
    let (code, out, _) = call(&["nondeg", "z^3+y^3*z+x^2*y^2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(json(&out)["verdict"], "nondegenerate");
    let (code, out, _) = call(&["nondeg", "(z+x)*(z^2-y^5)"]);
    assert_eq!(code, EXIT_MISMATCH);
    let doc = json(&out);
    assert_eq!(doc["verdict"], "degenerate");
    assert_eq!(doc["evidence"]["point"], serde_json::json!(["1", "1", "-1"]));
    let (code, _, _) = call(&["nondeg", "(z+x)*(z^2-y^5)", "--jacobian-only"]);
    assert_eq!(code, EXIT_MISMATCH);
}

#[test]
fn verify_single_families() {
    let (code, out, _) = call(&["verify", "E60"]);
    assert_eq!(code, EXIT_OK);
    let doc = json(&out);
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["blowdowns"], 0);
    assert_eq!(doc["multiplicity"], 3);
    assert_eq!(doc["nondegenerate"], "nondegenerate");

    let (code, out, _) = call(&["verify", "B:3,4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(json(&out)["blowdowns"], 1);

    let (code, out, _) = call(&["verify", "F:4"]);
    assert_eq!(code, EXIT_MISMATCH);
    let doc = json(&out);
    assert_eq!((doc["blowdowns"].as_u64(), doc["expected_blowdowns"].as_u64()), (Some(2), Some(1)));
}

#[test]
fn verify_all_small_sweep() {
    let (code, out, _) = call(&["verify", "all", "--max", "3", "--h-max", "6"]);
    let doc = json(&out);
    let failed: Vec<&str> = doc["failed"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert_eq!(failed, vec!["H:1", "H:2"]);
    assert_eq!(code, EXIT_MISMATCH);
    assert_eq!(doc["total"], RtpFamily::sweep(3, 6).len());
}

#[test]
fn export_to_file_and_formats() {
    let dir = std::env::temp_dir().join(format!("okares-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.dot");
    let (code, out, _) = call(&["export", "--family", "C:3,2", "--expected", "--format", "dot", "-o", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (EXIT_OK, ""));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("graph resolution {"));
    assert_eq!(dot.matches("[label=\"w=").count(), expected_graph(&RtpFamily::C { k: 3, l: 2 }).unwrap().len());
    assert!(dot.contains("w=3,g=0"));
    std::fs::remove_dir_all(&dir).unwrap();

    assert_eq!(call(&["export", "--expected", "x"]).0, EXIT_USAGE);
    let (code, out, _) = call(&["export", "--family", "E60", "--format", "ascii"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 7);
}

#[test]
fn output_is_deterministic() {
    let a = call(&["verify", "all", "--max", "3", "--h-max", "4"]);
    let b = call(&["verify", "all", "--max", "3", "--h-max", "4"]);
    assert_eq!(a, b);
    let a = call(&["resolve", "z^3+x^2*y*z+y^4", "--format", "dot"]);
    assert_eq!(a, call(&["resolve", "z^3+x^2*y*z+y^4", "--format", "dot"]));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_okares");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["resolve", "z^3+y^3*z+x^2*y^2"]), Some(0));
    assert_eq!(status(&["resolve", "0"]), Some(1));
    assert_eq!(status(&["resolve", "--fan", FIXTURE]), Some(2));
    assert_eq!(status(&["nondeg", "(z+x)*(z^2-y^7)"]), Some(3));
}

#[test]
fn keys_are_sorted() {
    let (_, out, _) = call(&["verify", "E60"]);
    let keys: Vec<&str> = out.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim().split('"').nth(1).unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn fan_json_round_trip() {
    let fan = fan_from_json(&std::fs::read_to_string(FIXTURE).unwrap()).unwrap();
    assert_eq!(fan_from_json(&pretty(&fan_value(&fan))).unwrap(), fan);
    assert!(fan_from_json("{\"generators\": 3}").is_err());
}

#[test]
fn ascii_root_prefers_heavy_central_vertex() {
    let mut g = expected_graph(&RtpFamily::E60).unwrap();
    assert_eq!(g.weights()[ascii_root(&g).unwrap()], 3);
    g.vertices[0].label = Some("u=(1,1,1)".into());
    assert_eq!(ascii_root(&g), Some(0));
}

fn graph_strategy() -> impl Strategy<Value = ResolutionGraph> {
    (1usize..10)
        .prop_flat_map(|n| {
            (
                prop::collection::vec((1i64..6, 0u32..3, prop::option::of("[a-z=(),0-9]{0,8}")), n),
                prop::collection::vec(any::<prop::sample::Index>(), n - 1),
            )
        })
        .prop_map(|(vs, parents)| {
            let mut g = ResolutionGraph::new();
            for (w, genus, label) in vs {
                g.add_vertex(okares_core::resgraph::Vertex { weight: w, genus, label });
            }
            for (i, p) in parents.iter().enumerate() {
                g.add_edge(p.index(i + 1), i + 1).unwrap();
            }
            g
        })
}

proptest! {
    #[test]
    fn graph_json_round_trip(g in graph_strategy()) {
        let text = pretty(&graph_value(&g));
        prop_assert_eq!(graph_from_json(&text).unwrap(), g);
    }

    #[test]
    fn ascii_lists_every_vertex_once(g in graph_strategy()) {
        let text = okares::formats::graph_ascii(&g);
        prop_assert_eq!(text.lines().count(), g.len());
        for i in 0..g.len() {
            let tag = format!("#{i} ");
            prop_assert_eq!(text.lines().filter(|l| l.contains(&tag)).count(), 1);
        }
    }
}
