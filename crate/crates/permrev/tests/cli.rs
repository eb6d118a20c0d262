use std::io::Write;
use std::process::{Command, Output, Stdio};

use permrev::parse_dfa;
use permrev_core::{asc, build_witness, reverse_dfa};

fn permrev(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_permrev"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn verify_3_4() {
    let o = permrev(&["verify", "3", "4"], None);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for line in [
        "forward: 15 states, 3 finals, minimal",
        "reverse: 20 states, 4 finals, minimal",
        "asc pair: (3,4)",
        "  S(123)={1234,1235,1236}",
        "  S(124)={1234,1245,1246}",
        "  S(134)={1234,1345,1346}",
        "  S(234)={1234,2345,2346}",
    ] {
        assert!(out.lines().any(|l| l == line), "missing {line:?} in\n{out}");
    }
    assert_eq!(out.lines().filter(|l| l.starts_with("  S(")).count(), 4);
}

#[test]
fn verify_json_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = permrev(&["verify", "3", "4", "--json", path.to_str().unwrap()], None);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["format_version"], "1");
    assert_eq!(v["report"]["forward_states"], 15);
    assert_eq!(v["report"]["reverse_states"], 20);
    assert_eq!(v["report"]["accepting_stars"][3]["members"][2], "2346");
    assert!(v["report"]["failure"].is_null());
}

#[test]
fn example_output() {
    let o = permrev(&["example"], None);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("a-steps: S(123) -> S(126) -> S(156) -> S(456) -> S(345) -> S(234)\n"), "{out}");
    assert!(out.contains("b-step: S(234) -> S(134)\n"));
    assert!(out.contains("a^2 b a^4: S(123) -> S(124)\n"));
    assert_eq!(out.matches(" -> ").count(), 7);
    for star in
        ["S(123)={1234,1235,1236}", "S(124)={1234,1245,1246}", "S(134)={1234,1345,1346}", "S(234)={1234,2345,2346}"]
    {
        assert!(out.contains(star), "{star}");
    }
}

#[test]
fn witness_reverse_minimize_asc_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let fwd_path = dir.path().join("a.dfa");
    let dot_path = dir.path().join("a.dot");
    let rev_path = dir.path().join("r.dfa");
    let o =
        permrev(&["witness", "3", "4", "--out", fwd_path.to_str().unwrap(), "--dot", dot_path.to_str().unwrap()], None);
    assert_eq!(code(&o), 0);
    let fwd = parse_dfa(&std::fs::read_to_string(&fwd_path).unwrap()).unwrap();
    assert_eq!(fwd, build_witness(3, 4).unwrap());
    assert!(std::fs::read_to_string(&dot_path).unwrap().starts_with("digraph"));

    let o = permrev(&["reverse", fwd_path.to_str().unwrap(), "--out", rev_path.to_str().unwrap()], None);
    assert_eq!(code(&o), 0);
    let rev = parse_dfa(&std::fs::read_to_string(&rev_path).unwrap()).unwrap();
    assert_eq!(rev, reverse_dfa(&fwd, 1000).unwrap());

    let o = permrev(&["asc", rev_path.to_str().unwrap()], None);
    assert_eq!((code(&o), stdout(&o)), (0, "4\n".to_string()));

    let fwd_text = std::fs::read_to_string(&fwd_path).unwrap();
    let o = permrev(&["minimize", "-"], Some(&fwd_text));
    assert_eq!(code(&o), 0);
    let min = parse_dfa(&stdout(&o)).unwrap();
    assert_eq!((min.num_states(), min.num_finals()), (15, 3));
    assert_eq!(asc(&min), 3);
}

#[test]
fn asc_of_empty_language_is_zero() {
    let o = permrev(&["asc", "-"], Some("dfa 1 2\nstart 0\nfinals\nstate 0 : 0 0\n"));
    assert_eq!((code(&o), stdout(&o)), (0, "0\n".to_string()));
}

#[test]
fn witness_rejects_m_1() {
    let o = permrev(&["witness", "1", "4"], None);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("m >= 2"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&permrev(&[], None)), 1);
    assert_eq!(code(&permrev(&["--help"], None)), 0);
    assert_eq!(code(&permrev(&["verify", "3"], None)), 1);
    assert_eq!(code(&permrev(&["asc", "/nonexistent/file.dfa"], None)), 1);
    let bad = permrev(&["asc", "-"], Some("dfa 3 1\nstart 5\n"));
    assert_eq!(code(&bad), 1);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 2, column 7"));
    assert_eq!(
        code(&permrev(&["reverse", "-", "--max-states", "3"], Some(&permrev::emit_dfa(&build_witness(3, 4).unwrap())))),
        3
    );
    assert_eq!(code(&permrev(&["spectrum", "--m-max", "3", "--alpha-max", "3"], None)), 0);
    assert_eq!(code(&permrev(&["probe-magic-one", "--n-max", "4", "--samples", "50", "--seed", "9"], None)), 0);
    assert_eq!(code(&permrev(&["probe-magic-one", "--n-max", "0"], None)), 1);
}

#[test]
fn probe_is_deterministic_per_seed() {
    let a = stdout(&permrev(&["probe-magic-one", "--samples", "100"], None));
    let b = stdout(&permrev(&["probe-magic-one", "--samples", "100"], None));
    assert_eq!(a, b);
    assert!(a.contains("reverse asc 1 found: 0"));
}
