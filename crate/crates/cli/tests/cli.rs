use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn nstl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nstl")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nstl-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn dim_check_prints_the_documented_line() {
    let out = nstl(&["dim-check", "--r", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"formula\":10,\"oracle\":10,\"agree\":true}\n");
}

#[test]
fn de_graph_of_three_two() {
    let out = nstl(&["de-graph", "--shape", "3,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 6);
    let labels: Vec<u64> = edges.iter().map(|e| e["label"].as_u64().unwrap()).collect();
    assert_eq!(labels.iter().filter(|&&l| l == 2).count(), 2);
}

#[test]
fn wgraph_rows_match_the_figure() {
    let v = stdout_json(&nstl(&["wgraph", "--shape", "3,2"]));
    let want = [("123/45", vec![1, 2, 4], vec![3]), ("124/35", vec![1, 3], vec![2, 4]), ("125/34", vec![1, 3, 4], vec![2])];
    for (t, lower, upper) in want {
        let vert = v["vertices"].as_array().unwrap().iter().find(|x| x["tableau"] == t).unwrap();
        let read = |k: &str| vert[k].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect::<Vec<_>>();
        assert_eq!(read("lower_descents"), lower);
        assert_eq!(read("upper_descents"), upper);
    }
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    assert_eq!(v["symmetric"], true);
}

#[test]
fn seminormal_grid_has_the_bold_entry() {
    let v = stdout_json(&nstl(&["seminormal", "--lhs", "3,2", "--rhs", "3,2", "--level", "4"]));
    let rows: Vec<&str> = v["rows"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    let cols: Vec<&str> = v["cols"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    let (i, j) = (rows.iter().position(|&t| t == "124/35").unwrap(), cols.iter().position(|&t| t == "134/25").unwrap());
    assert_eq!(v["grid"][i][j], "+3,1");
    let text = String::from_utf8(nstl(&["seminormal", "--lhs", "3,2", "--rhs", "3,2", "--text"]).stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.lines().last().unwrap().trim_end().ends_with("eps+"));
}

#[test]
fn seminormal_vectors_cover_the_module() {
    let v = stdout_json(&nstl(&["seminormal", "--lhs", "2,1", "--rhs", "2,1", "--vectors"]));
    let leaves = v["vectors"].as_array().unwrap();
    assert_eq!(leaves.len(), 4);
    assert!(leaves.iter().all(|l| l["chain"].as_array().unwrap().len() == 2));
}

#[test]
fn restrict_and_decompose_agree_with_the_rules() {
    let out = nstl(&["restrict", "--label", "-3,1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["case"], "3'");
    assert_eq!(v["agree"], true);
    let v = stdout_json(&nstl(&["decompose", "--lhs", "2,2", "--rhs", "3,1"]));
    assert_eq!(v["summands"].as_array().unwrap().len(), 1);
    assert_eq!(v["summands"][0]["label"], "3,1|2,2");
    assert_eq!(v["summands"][0]["dim"], 6);
}

#[test]
fn kl_basis_and_cells() {
    let v = stdout_json(&nstl(&["kl-basis", "--r", "3", "--w", "321"]));
    let terms = v["elements"][0]["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 6);
    let v = stdout_json(&nstl(&["cells", "--r", "4", "--basis", "upper"]));
    assert_eq!(v["cells"].as_array().unwrap().len(), 10);
    assert_eq!(v["matches_rsk"], true);
}

#[test]
fn specht_and_transition() {
    let v = stdout_json(&nstl(&["specht", "--shape", "2,2"]));
    assert_eq!(v["generators"].as_array().unwrap().len(), 3);
    assert_eq!(v["hecke_relations"], true);
    let v = stdout_json(&nstl(&["transition", "--shape", "3,2"]));
    assert_eq!(v["theorem_holds"], true);
    assert_eq!(v["matrix"].as_array().unwrap().len(), 5);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        vec!["frobnicate"],
        vec!["wgraph", "--shape", "3,a"],
        vec!["seminormal", "--lhs", "2,1,1", "--rhs", "3,1"],
        vec!["dim-check", "--r", "7"],
        vec!["dim-check", "--r", "3", "--u0", "-1"],
        vec!["restrict", "--label", "eps+"],
        vec!["restrict", "--label", "+3"],
    ] {
        assert_eq!(nstl(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = scratch("det");
    let cache = dir.join("cache");
    let first = dir.join("a.json");
    let second = dir.join("b.json");
    for path in [&first, &second] {
        let out = nstl(&["decompose", "--lhs", "3,1", "--rhs", "3,1", "--cache-dir", cache.to_str().unwrap(), "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
    let a = nstl(&["kl-basis", "--r", "4", "--cache-dir", cache.to_str().unwrap()]);
    assert!(cache.join("kl-r4.json").exists());
    let b = nstl(&["kl-basis", "--r", "4", "--cache-dir", cache.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn verify_all_small_rank_passes() {
    let out = nstl(&["verify-all", "--r", "3", "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = stdout_json(&out);
    assert_eq!(v["checks"].as_array().unwrap().len(), 12);
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 11);
}
