use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = tga::cli::run(std::iter::once("tga").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn generators_of_the_loop_example() {
    let (code, out, _) = run(&["generators", &data("g_loops.txt")]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines.iter().filter(|l| l.starts_with("p:")).count(), 3);

    let (_, out, _) = run(&["--json", "generators", &data("g_loops.txt")]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);
    assert_eq!(v["pairs"].as_array().unwrap().len(), 3);
}

#[test]
fn membership_answers_and_certificates() {
    let (code, out, _) = run(&["member", &data("c4.txt"), "a=1,c=1"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("not a member"));

    let (code, out, _) = run(&["--format", "json", "member", &data("c4.txt"), "a=1,c=1"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["member"], false);
    assert_eq!(v["certificate"]["kind"], "cone");

    let (code, out, _) = run(&["member", &data("g_tri2.txt"), "a=1,b=1,c=1"]);
    assert_eq!(code, 1);
    assert!(out.contains("not a member"), "{out}");

    let (code, _, _) = run(&["member", &data("g_loops.txt"), "x1=1,x2=1"]);
    assert_eq!(code, 0);
}

#[test]
fn decompose_uses_pairs_when_needed() {
    let (code, out, _) = run(&["--json", "decompose", &data("g_loops.txt"), "x1=1,x2=1,x3=1,x4=1"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["edges"], 1);
    assert_eq!(v["pairs"], 1);
}

#[test]
fn equality_and_normal_forms() {
    let g = data("g_loops.txt");
    let (code, out, _) = run(&["equal", &g, "e:x1-x4 p:(x2|x3)", "e:x2-x4 p:(x1|x3)"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("equal (1 move)"), "{out}");
    assert!(out.contains("pair-shift"), "{out}");

    let (code, out, _) = run(&["equal", &g, "e:x1-x4", "e:x2-x4"]);
    assert_eq!(code, 1);
    assert_eq!(out.trim(), "not equal");

    let (code, out, _) = run(&["normalize", &data("g_bowtie.txt"), "c:a-b-c c:d-e-f"]);
    assert_eq!(code, 0);
    assert!(!out.lines().next().unwrap().contains("c:"), "{out}");
}

#[test]
fn relations_listing() {
    let (code, out, _) = run(&["relations", &data("g_loops.txt")]);
    assert_eq!(code, 0);
    assert!(out.contains("e:x1-x4 p:(x2|x3) = e:x2-x4 p:(x1|x3)"), "{out}");
    assert!(out.contains("# pair-destroy"), "{out}");

    let (_, out, _) = run(&["relations", "--binomial", &data("c4.txt")]);
    assert_eq!(out.lines().count(), 1);
    assert!(out.contains(" - "));
}

#[test]
fn spectra_commands() {
    let (code, out, _) = run(&["--json", "admissible", &data("c4.txt")]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 10);

    let (code, out, _) = run(&["--format", "dot", "admissible", &data("c4.txt")]);
    assert_eq!(code, 0);
    assert!(out.contains("graph"));

    let (code, out, _) = run(&["--json", "laurent", &data("g_loops.txt"), "x1-x1,x2-x2,x3-x3,x1-x4,x2-x4,x3-x4"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
    assert_eq!(v["verified"], true);

    let (code, _, err) = run(&["laurent", &data("c4.txt"), "a-b,c-d"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn oracle_prints_its_seed() {
    let (code, out, _) = run(&["oracle", "gens", "--max-vertices", "3", "--seed", "7"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().next().unwrap().contains("seed 7"), "{out}");

    let (code, _, _) = run(&["oracle", "congruence", "--max-vertices", "3", "--max-len", "3"]);
    assert_eq!(code, 0);

    let (code, _, _) = run(&["oracle", "gens", "--max-vertices", "7"]);
    assert_eq!(code, 2);
}

#[test]
fn usage_and_data_errors() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["generators", "/nonexistent/graph.txt"]).0, 2);
    let (code, _, err) = run(&["member", &data("c4.txt"), "z=1"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tga");
    let ok = Command::new(bin).args(["member", &data("c4.txt"), "a=1,b=1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "member");
    let no = Command::new(bin).args(["member", &data("c4.txt"), "a=2"]).output().unwrap();
    assert_eq!(no.status.code(), Some(1));
}
