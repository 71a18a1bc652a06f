use std::process::{Command, Output};

use gf4_circulant::report::from_json_line;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gf4-circulant")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_json() {
    let o = run(&["analyze", "w11010000000100000001011", "--json", "--no-timing"]);
    assert!(o.status.success());
    let line = stdout(&o);
    let r = from_json_line(line.trim()).unwrap();
    assert_eq!((r.n, r.d, r.proof_complete, r.self_dual), (24, 8, true, true));
    assert_eq!(r.elapsed_ms, 0);
    assert_eq!(gf4_circulant::report::to_json_line(&r), line.trim());
}

#[test]
fn analyze_table_and_sequential() {
    let o = run(&["analyze", "w10100100101", "--sequential"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("w10100100101"));
    assert!(out.contains("optimum"));
}

#[test]
fn construct_candidates() {
    let o = run(&["construct", "--n", "24", "--target", "8", "--mode", "minus"]);
    assert_eq!(stdout(&o), "w11010000000100000001011\n");
    let o = run(&["construct", "--n", "16", "-L", "6", "--mode", "plus"]);
    assert_eq!(stdout(&o), "w110100010001011\n");
    let o = run(&["construct", "--dense", "30"]);
    assert_eq!(stdout(&o), "w01100001101111111110110000110\n");
}

#[test]
fn bad_symbol_is_input_error() {
    let o = run(&["analyze", "w1w"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 2"), "{err}");
}

#[test]
fn odd_target_is_input_error() {
    let o = run(&["construct", "--n", "24", "--target", "7", "--mode", "plus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cost_guard_refusal() {
    let v = "w".to_string() + &"0".repeat(17) + "1" + &"0".repeat(17);
    let o = run(&["weights", &v]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn weights_reports_macwilliams() {
    let o = run(&["weights", "w11"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("W(z) = 1 + 3z^2 + 4z^3"), "{out}");
    assert!(out.contains("MacWilliams identity: ok"));
}

#[test]
fn verify_json() {
    let o = run(&["verify", "w10100100101", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["self_dual"], true);
    assert_eq!(v["rank"], 12);
}

#[test]
fn export_dot() {
    let o = run(&["export-dot", "w11100111"]);
    let out = stdout(&o);
    assert!(out.starts_with("graph"));
    assert_eq!(out.matches("--").count(), 27);
}

#[test]
fn sweep_is_byte_identical() {
    let args = ["sweep", "16", "--no-timing"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.lines().all(|l| from_json_line(l).is_ok()));
    assert!(out.contains("\"vector\":\"w101010010010101\""));
}

#[test]
fn bounds_override() {
    let dir = std::env::temp_dir().join(format!("gf4-bounds-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bounds.txt");
    std::fs::write(&path, "# test\n20 8\n").unwrap();
    let o = run(&["pipeline", "20", "--bounds", path.to_str().unwrap(), "--no-timing"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = run(&["pipeline", "20"]);
    assert_eq!(o.status.code(), Some(2));
}
