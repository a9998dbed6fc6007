use std::io::Write;
use std::process::{Command, Output, Stdio};

use lrforest::{parse_number, GaussianRational, Mat, Word};
use serde_json::Value;

fn lrforest(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrforest"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn orbit_json() {
    let out = lrforest(&["orbit", "--z", "1+1i", "--u", "1", "--v", "1", "--depth", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let tree: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(tree["value"], "1+1i");
    assert_eq!(tree["left"]["value"], "3/5+1/5i");
    assert_eq!(tree["right"]["value"], "2+1i");
    assert!(tree["left"]["left"].is_null());
}

#[test]
fn orbit_depth_zero_and_dot() {
    let out = lrforest(&["orbit", "--z", "1+1i", "--depth", "0"]);
    assert_eq!(stdout(&out), "{\"value\":\"1+1i\",\"left\":null,\"right\":null}\n");

    let out = lrforest(&["orbit", "--z", "1+1i", "--depth", "2", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph orbit {\n") && dot.ends_with("}\n"));
    assert_eq!(dot.matches("->").count(), 6);
    assert_eq!(dot.matches("[label=\"L\"]").count(), 3);
}

#[test]
fn orbit_rejects_points_outside_d0() {
    let out = lrforest(&["orbit", "--z", "1/2-1i"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not in D0"));

    let out = lrforest(&["orbit", "--z", "1+1i", "--depth", "21"]);
    assert_eq!(out.status.code(), Some(2));

    let out = lrforest(&["orbit", "--z", "1/0+1i"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trace_json() {
    let out = lrforest(&["trace", "--z", "1/2+1/4i", "--u", "1", "--v", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let t: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(t["root"], "3/5+4/5i");
    assert_eq!(t["word"], "L");
    assert_eq!(t["chain"], serde_json::json!(["1/2+1/4i", "3/5+4/5i"]));

    let t: Value = serde_json::from_str(&stdout(&lrforest(&["trace", "--z", "2+1i"]))).unwrap();
    assert_eq!(t["root"], "1+1i");
    assert_eq!(t["word"], "R");

    let t: Value = serde_json::from_str(&stdout(&lrforest(&["trace", "--z", "3/5+4/5i"]))).unwrap();
    assert_eq!(t["word"], "");
}

#[test]
fn trace_output_round_trips() {
    let out = lrforest(&["trace", "--z", "137/19+2/7i", "--u", "2", "--v", "3"]);
    let t: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let root = parse_number(t["root"].as_str().unwrap()).unwrap();
    let word: Word = t["word"].as_str().unwrap().parse().unwrap();
    let chain: Vec<GaussianRational> = t["chain"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| parse_number(v.as_str().unwrap()).unwrap())
        .collect();
    let p = lrforest::PairParams::new(2, 3).unwrap();
    assert_eq!(lrforest::forest::follow(&root, &word, &p).unwrap(), chain[0]);
    assert_eq!(chain[0], parse_number("137/19+2/7i").unwrap());
}

#[test]
fn trace_step_limit_exits_two() {
    let out = lrforest(&["trace", "--z", "50+1i", "--max-steps", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("5 steps"));
}

#[test]
fn same_tree() {
    let out = lrforest(&["same-tree", "--z1", "2+1i", "--z2", "1+1i"]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "true\n"));
    let out = lrforest(&["same-tree", "--z1", "1+1i", "--z2", "3/5+4/5i"]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(1), "false\n"));
}

#[test]
fn classify() {
    let out = lrforest(&["classify", "--z", "1/2+1/4i"]);
    let c: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(c["crescent"], "1");
    assert_eq!(c["orphan"], false);
    let c: Value = serde_json::from_str(&stdout(&lrforest(&["classify", "--z", "1/2+1/2i"]))).unwrap();
    assert_eq!(c["crescent"], "0");
    assert_eq!(c["orphan"], true);
}

#[test]
fn pair_check() {
    let out = lrforest(&["pair-check", "--L", "[[1,0],[1,1]]", "--R", "[[1,1],[0,1]]"]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "PAIR\n"));

    let out = lrforest(&["pair-check", "--L", "[[1,0],[1,1]]", "--R", "[[1,1],[1,2]]", "--verify-bound", "4"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NOT-PAIR\nwitness z1=2+1i z2=1+1i image=7/10+1/10i\n");

    let out = lrforest(&["pair-check", "--L", "[[1,0],[3,1]]", "--R", "[[1,2],[0,1]]", "--verify-bound", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "PAIR\nno witness up to bound 6\n");
}

#[test]
fn pair_check_malformed() {
    for args in [
        ["pair-check", "--L", "[[1,0],[1,1]", "--R", "[[1,1],[0,1]]"],
        ["pair-check", "--L", "[[1,1],[1,1]]", "--R", "[[1,1],[0,1]]"],
        ["pair-check", "--L", "[[1,0],[0,1]]", "--R", "[[1,1],[0,1]]"],
        ["pair-check", "--L", "[[1,-1],[0,1]]", "--R", "[[1,1],[0,1]]"],
    ] {
        assert_eq!(lrforest(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn decompose_and_member() {
    let out = lrforest(&["decompose", "--T", "[[3,1],[2,1]]", "--u", "1", "--v", "1"]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "LLR\n"));
    let out = lrforest(&["decompose", "--T", "[[1,2],[2,5]]", "--u", "2", "--v", "2"]);
    assert_eq!(stdout(&out), "RL\n");
    let out = lrforest(&["decompose", "--T", "[[1,1],[0,1]]", "--u", "2", "--v", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = lrforest(&["decompose", "--T", "[[1,-1],[0,1]]"]);
    assert_eq!(out.status.code(), Some(2));

    let out = lrforest(&["member", "--T", "[[1,2],[2,5]]", "--u", "2", "--v", "2"]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "true\n"));
    let out = lrforest(&["member", "--T", "[[1,1],[0,1]]", "--u", "2", "--v", "2"]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(1), "false\n"));
    let out = lrforest(&["member", "--T", "[[1,0],[0,1]]"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn decompose_output_round_trips() {
    let t: Mat = "[[41,29],[24,17]]".parse().unwrap();
    let out = lrforest(&["decompose", "--T", &t.to_string()]);
    let w: Word = stdout(&out).trim_end().parse().unwrap();
    assert_eq!(lrforest::moebius::matrix_of_word(&w, &lrforest::PairParams::calkin_wilf()), t);
}

#[test]
fn regions() {
    let out = lrforest(&["regions", "--u", "2", "--nmax", "4", "--samples", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let midpoints: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("circle,"))
        .skip(1)
        .step_by(3)
        .collect();
    // the top of each circle sits above its centre 1/(2nu)
    assert_eq!(
        midpoints,
        ["circle,1,0.25,0.25", "circle,2,0.125,0.125", "circle,3,0.0833333333333,0.0833333333333", "circle,4,0.0625,0.0625"]
    );

    let out = lrforest(&["regions", "--v", "2", "--nmax", "1", "--samples", "2"]);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines, ["region_kind,n,x,y", "circle,1,1,0", "circle,1,0,0", "line,,2,0", "line,,2,2"]);
}

#[test]
fn cusp() {
    let out = lrforest(&["cusp", "--tail", "L"]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(0), "0\n"));
    assert_eq!(stdout(&lrforest(&["cusp", "--tail", "R"])), "infinity\n");
    let out = lrforest(&["cusp", "--both"]);
    assert_eq!((out.status.code(), stdout(&out).as_str()), (Some(1), "divergent\n"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["orbit"],
        vec!["trace", "--z", "1+1i", "--u", "0"],
        vec!["same-tree", "--z1", "1+1i"],
        vec!["orbit", "--z", "1+1i", "--format", "svg"],
        vec!["cusp", "--tail", "X"],
    ] {
        assert_eq!(lrforest(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn deterministic_output() {
    let args = ["orbit", "--z", "2/3+1/7i", "--u", "2", "--v", "3", "--depth", "13"];
    assert_eq!(lrforest(&args).stdout, lrforest(&args).stdout);
}

#[test]
fn batch_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lrforest"))
        .arg("batch")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"cusp --tail L\nmember --T [[1,1],[0,1]]\nsame-tree --z1 2+1i --z2 1+1i\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(stdout(&out), "0\ntrue\ntrue\n");
    assert_eq!(out.status.code(), Some(0));
}
