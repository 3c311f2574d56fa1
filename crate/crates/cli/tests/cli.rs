use std::io::Write;

use fortress_cli::{run, EXIT_ANALYSIS, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn fortress(args: &[&str]) -> (i32, String) {
    run(std::iter::once("fortress").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let (code, out) = fortress(args);
    assert_eq!(code, EXIT_OK, "{out}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn path_on_five_vertices() {
    let r = json(&["classify", "--family", "path", "--n", "5", "--json"]);
    assert_eq!(r["well_failed"], false);
    assert_eq!(r["z_number"], 1);
    assert_eq!(r["n"], 5);
    assert_eq!(r["tree_shape"]["kind"], "path");
    assert_eq!(r["method"], "both_agree");
}

#[test]
fn petersen_report() {
    let r = json(&["classify", "--family", "petersen", "--json"]);
    assert_eq!(r["z_number"], 5);
    assert_eq!(r["f_number"], 6);
    assert_eq!(r["well_failed"], true);
    assert_eq!(r["graph"], "IheA@GUAo");
    assert_eq!(r["fort_sizes"], serde_json::json!([4]));
    assert_eq!(r["minimal_forts"].as_array().unwrap().len(), 20);
    assert_eq!(r["method"], "bruteforce");
}

#[test]
fn graph6_input() {
    let r = json(&["classify", "--g6", "D??", "--json"]);
    assert_eq!(r["n"], 5);
    assert_eq!(r["m"], 0);
    assert_eq!(r["z_number"], 5);
}

#[test]
fn star222_is_well_failed_not_well_forced() {
    let r = json(&["classify", "--family", "star222", "--json"]);
    assert_eq!(r["well_failed"], true);
    assert_eq!(r["well_forced"], false);
    assert_eq!(r["tree_shape"]["kind"], "star222");
}

#[test]
fn layered_tree_star_rounds() {
    let r = json(&["classify", "--family", "layered-star-tree", "--json"]);
    assert_eq!(r["star_centers"], serde_json::json!([[2, 8, 14], [4, 12]]));
    assert_eq!(r["well_failed"], false);
}

#[test]
fn edge_list_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "4 3\n0 1\n1 2\n2 3").unwrap();
    let path = f.path().to_str().unwrap();
    let r = json(&["classify", "--edges", path, "--json"]);
    assert_eq!(r["n"], 4);
    assert_eq!(r["well_failed"], true);
    assert_eq!(r["well_forced"], false);
}

#[test]
fn missing_edge_file_is_a_usage_error() {
    let (code, out) = fortress(&["classify", "--edges", "definitely-missing.txt"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.contains("definitely-missing.txt"));
}

#[test]
fn bad_arguments_are_usage_errors() {
    assert_eq!(fortress(&["classify"]).0, EXIT_USAGE);
    assert_eq!(
        fortress(&["classify", "--g6", "D??", "--family", "petersen"]).0,
        EXIT_USAGE
    );
    assert_eq!(fortress(&["classify", "--family", "path"]).0, EXIT_USAGE);
    assert_eq!(fortress(&["classify", "--g6", "!!"]).0, EXIT_USAGE);
    assert_eq!(
        fortress(&["tree", "--family", "cycle", "--n", "4"]).0,
        EXIT_USAGE
    );
    assert_eq!(fortress(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(fortress(&["--help"]).0, EXIT_OK);
}

#[test]
fn exact_search_guard() {
    let (code, out) = fortress(&[
        "classify",
        "--family",
        "cycle",
        "--n",
        "6",
        "--max-exact",
        "5",
    ]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.contains("--max-exact"));
    let r = json(&[
        "classify",
        "--family",
        "cycle",
        "--n",
        "6",
        "--max-exact",
        "6",
        "--json",
    ]);
    assert_eq!(r["z_number"], 2);
}

#[test]
fn large_tree_uses_the_fast_path() {
    let r = json(&["classify", "--family", "path", "--n", "40", "--json"]);
    assert_eq!(r["method"], "tree_fastpath");
    assert_eq!(r["z_number"], Value::Null);
    assert_eq!(r["well_failed"], false);
    let r = json(&[
        "classify",
        "--family",
        "path",
        "--n",
        "6",
        "--max-exact",
        "3",
        "--json",
    ]);
    assert_eq!(r["method"], "tree_fastpath");
    assert_eq!(r["well_failed"], true);
}

#[test]
fn json_is_deterministic() {
    let args = ["classify", "--family", "layered-star-tree", "--json"];
    assert_eq!(fortress(&args), fortress(&args));
    let args = [
        "forts",
        "--family",
        "complete-bipartite",
        "--m",
        "3",
        "--n",
        "4",
        "--json",
    ];
    assert_eq!(fortress(&args), fortress(&args));
}

#[test]
fn text_and_json_agree() {
    for family in [
        ["--family", "petersen"],
        ["--family", "star222"],
        ["--g6", "F[`A?"],
    ] {
        let mut args = vec!["classify", family[0], family[1]];
        let (_, text) = fortress(&args);
        args.push("--json");
        let r = json(&args);
        let word = |b: &Value| if b.as_bool().unwrap() { "yes" } else { "no" };
        assert!(text.contains(&format!("well-failed  {}", word(&r["well_failed"]))));
        assert!(text.contains(&format!("well-forced  {}", word(&r["well_forced"]))));
        assert!(text.contains(&format!("Z            {}", r["z_number"])));
    }
}

#[test]
fn forts_and_zfs() {
    let r = json(&["forts", "--family", "cycle", "--n", "5", "--json"]);
    assert_eq!(r["z_number"], 2);
    assert_eq!(r["minimal_forts"].as_array().unwrap().len(), 5);
    let direct = json(&["zfs", "--family", "cycle", "--n", "5", "--json"]);
    let cover = json(&[
        "zfs", "--family", "cycle", "--n", "5", "--method", "cover", "--json",
    ]);
    assert_eq!(
        direct["minimal_zero_forcing_sets"],
        cover["minimal_zero_forcing_sets"]
    );
    assert_eq!(direct["sizes"], serde_json::json!([2]));
}

#[test]
fn irrelevant_vertices() {
    let r = json(&["irrelevant", "--family", "layered-star-tree", "--json"]);
    assert_eq!(r["fort"], serde_json::json!([2, 4, 8, 12, 14]));
    assert_eq!(r["failed_zero_forcing"], serde_json::json!([]));
    let r = json(&[
        "irrelevant",
        "--family",
        "star",
        "--n",
        "4",
        "--kind",
        "fort",
        "--json",
    ]);
    assert_eq!(r["fort"], serde_json::json!([0]));
    assert!(r.get("zero_forcing").is_none());
}

#[test]
fn tree_command() {
    let r = json(&[
        "tree",
        "--family",
        "double-generalized-star",
        "--legs",
        "1,2",
        "--legs2",
        "2,2",
        "--json",
    ]);
    assert_eq!(r["tree_shape"]["kind"], "double_generalized_star");
    assert_eq!(r["pendent_generalized_stars"].as_array().unwrap().len(), 2);
}

#[test]
fn constructions() {
    let r = json(&[
        "construct",
        "--family",
        "path",
        "--n",
        "6",
        "--kind",
        "path",
        "--json",
    ]);
    assert_eq!(r["fort"], serde_json::json!([0, 2, 4, 5]));
    assert_eq!(r["minimal"], true);
    let r = json(&[
        "construct",
        "--family",
        "star222",
        "--kind",
        "adjusted",
        "--json",
    ]);
    assert_eq!(r["fort"], serde_json::json!([0, 2, 4, 6]));
    let r = json(&[
        "construct",
        "--family",
        "generalized-star",
        "--legs",
        "2,2,3",
        "--kind",
        "two-leg",
        "--leaves",
        "2,4",
        "--json",
    ]);
    assert_eq!(r["fort"], serde_json::json!([1, 2, 3, 4]));
    let r = json(&[
        "construct",
        "--family",
        "generalized-star",
        "--legs",
        "2,2,3",
        "--kind",
        "leaf-to-leaf",
        "--leaves",
        "2,7",
        "--json",
    ]);
    assert_eq!(r["fort"], serde_json::json!([1, 2, 5, 7]));
    assert_eq!(r["minimal"], true);
    let (code, _) = fortress(&[
        "construct",
        "--family",
        "layered-star-tree",
        "--kind",
        "leaf-to-leaf",
        "--leaves",
        "0,17",
    ]);
    assert_eq!(code, EXIT_USAGE);
    let r = json(&[
        "construct",
        "--family",
        "path",
        "--n",
        "5",
        "--kind",
        "spanning-path",
        "--fort",
        "0,2,4",
        "--through",
        "2",
        "--json",
    ]);
    assert_eq!(r["path"], serde_json::json!([0, 1, 2, 3, 4]));
    let (code, _) = fortress(&[
        "construct",
        "--family",
        "star222",
        "--kind",
        "two-leg",
        "--leaves",
        "2",
    ]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _) = fortress(&[
        "construct",
        "--family",
        "path",
        "--n",
        "5",
        "--kind",
        "spanning-path",
        "--fort",
        "0,1",
        "--through",
        "0",
    ]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn verify_small_corpus() {
    let (code, out) = fortress(&[
        "verify",
        "--trees-max",
        "7",
        "--random-trees",
        "30",
        "--random-graphs",
        "30",
        "--constructions",
        "30",
        "--jobs",
        "2",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(!out.contains("FAIL"));
    let (code, out) = fortress(&["verify", "--suite", "path-law,cycle_law", "--json"]);
    assert_eq!(code, EXIT_OK);
    let r: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(r["suites"].as_array().unwrap().len(), 2);
    assert_eq!(fortress(&["verify", "--suite", "nonsense"]).0, EXIT_USAGE);
    assert_eq!(fortress(&["verify", "--jobs", "0"]).0, EXIT_USAGE);
    assert_ne!(EXIT_ANALYSIS, EXIT_OK);
}

#[test]
fn dot_highlights_the_main_set() {
    let (code, out) = fortress(&["forts", "--family", "star", "--n", "4", "--dot"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("graph G {"));
    assert_eq!(out.matches("fillcolor").count(), 2);
}

#[test]
fn verify_default_corpus() {
    let (code, out) = fortress(&["verify", "--trees-max", "9"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert_eq!(out.matches("PASS").count(), 22);
}
