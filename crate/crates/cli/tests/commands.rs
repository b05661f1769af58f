use std::fs;
use std::process::Command;

use cli::{run_args, EXIT_BUDGET, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};
use plcw_core::{parse_surface, write_bordism};

const TORUS: &str = "edge a u u\nedge b u u\nface f +a +b -a -b\n";

fn run(args: &[&str]) -> (u8, String) {
    run_args(std::iter::once("rspin").chain(args.iter().copied()))
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn enumerate_counts_torus_structures() {
    let dir = tempfile::tempdir().unwrap();
    let torus = write(&dir, "torus.surf", TORUS);
    let (code, out) = run(&["--r", "2", "enumerate", &torus]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("result classes: 4\n"), "{out}");
    let (_, out) = run(&["--r", "3", "enumerate", &torus]);
    assert!(out.contains("result classes: 9\n"), "{out}");
}

#[test]
fn center_of_clifford_has_one_dimensional_components() {
    let (code, out) = run(&["--r", "2", "center", "clifford1"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("result dims: 1 1\n"), "{out}");
    assert!(out.contains("result C_0 super dimension: -1\n"));
}

#[test]
fn torus_evaluates_to_minus_one() {
    let dir = tempfile::tempdir().unwrap();
    let torus = write(&dir, "torus.surf", TORUS);
    let (code, out) = run(&["--r", "2", "evaluate", "clifford1", &torus]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("result value: -1\n"), "{out}");

    let file = write(&dir, "t.surf", &write_bordism(&state_sum::generators::torus(2, 1, 0).unwrap()));
    let (_, out) = run(&["evaluate", "clifford1", &file]);
    assert!(out.contains("result value: 1\n"), "{out}");
}

#[test]
fn words_evaluate_to_structure_maps() {
    let (code, out) = run(&["--r", "2", "evaluate", "clifford1", "--word", "open_pants"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("result shape: 4 -> 2\n"), "{out}");
    assert!(out.contains("result matrix: [1 0 0 1; 0 1 1 0]\n"), "{out}");
    let (code, _) = run(&["--r", "2", "evaluate", "clifford1", "--word", "pants(1)"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _) = run(&["--r", "2", "evaluate", "clifford1", "--word", "cup ; cup"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn validate_reports_defects() {
    let dir = tempfile::tempdir().unwrap();
    let cylinder = "r 3\nedge a u u\nedge b w w\nedge c u w\nface f -a +c +b -c\n\
                    boundary closed in 1 -a\nboundary closed out 1 +b\n";
    let good = write(&dir, "good.surf", &format!("{cylinder}index c 1\n"));
    let (code, out) = run(&["validate", &good]);
    assert_eq!(code, EXIT_PASS, "{out}");
    assert!(out.contains("defect=0 pass"));

    let bad = write(&dir, "bad.surf", &format!("{cylinder}index c 2\n"));
    let (code, out) = run(&["validate", &bad]);
    assert_eq!(code, EXIT_FAIL, "{out}");
    assert!(out.contains("check admissibility: fail"), "{out}");
    assert!(out.contains("fail\n") && !out.contains("defect=0 fail"));
}

#[test]
fn malformed_input_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.surf", "edge a u u\nface f +a +zz\n");
    let (code, msg) = run(&["--r", "2", "validate", &bad]);
    assert_eq!(code, EXIT_INPUT);
    assert!(msg.contains("line 2"), "{msg}");
    let (code, _) = run(&["--r", "2", "validate", "/nonexistent/file.surf"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _) = run(&["--r", "2", "center", "no_such_algebra"]);
    assert_eq!(code, EXIT_INPUT);
    let (code, _) = run(&["center", "clifford1"]);
    assert_eq!(code, EXIT_INPUT, "r is required");
    let (code, _) = run(&["--frobnicate"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn budget_overruns_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let torus = write(&dir, "torus.surf", TORUS);
    let (code, msg) = run(&["--r", "2", "--budget", "10", "enumerate", &torus]);
    assert_eq!(code, EXIT_BUDGET, "{msg}");
    let (code, msg) = run(&["--r", "2", "--budget", "1", "evaluate", "clifford1", &torus]);
    assert_eq!(code, EXIT_BUDGET, "{msg}");
}

#[test]
fn failed_axioms_exit_with_one() {
    let (code, out) = run(&["--r", "2", "axioms", "clifford2_twisted"]);
    assert_eq!(code, EXIT_FAIL);
    assert!(out.contains("check N^r = id: fail 0/1"), "{out}");
    let (code, out) = run(&["--r", "4", "axioms", "clifford2_twisted"]);
    assert_eq!(code, EXIT_PASS, "{out}");
}

#[test]
fn algebra_files_are_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let text = frob_algebra::format::write_algebra(&frob_algebra::presets::clifford1());
    let file = write(&dir, "cl1.alg", &text);
    let (code, out) = run(&["--r", "4", "center", &file]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("result dims: 1 1 1 1\n"), "{out}");
}

#[test]
fn reports_are_deterministic() {
    let a = run(&["--r", "4", "axioms", "clifford1"]);
    let b = run(&["--r", "4", "axioms", "clifford1"]);
    assert_eq!(a, b);
    let t = run(&["--r", "4", "--format", "table", "axioms", "clifford1"]);
    assert_ne!(a.1, t.1);
    assert!(t.1.contains(" | "));
}

#[test]
fn generator_fixtures_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("gens");
    let (code, out) = run(&["--r", "3", "generators", out_dir.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("result files: 38\n"), "{out}");
    for entry in fs::read_dir(&out_dir).unwrap() {
        let text = fs::read_to_string(entry.unwrap().path()).unwrap();
        let b = parse_surface(&text).unwrap().to_bordism().unwrap();
        assert_eq!(write_bordism(&b), text);
    }
    let (code, out) = run(&["evaluate", "clifford1", out_dir.join("cup.surf").to_str().unwrap()]);
    assert_eq!(code, EXIT_FAIL, "clifford1 is not a Λ_3 algebra: {out}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_rspin");
    let ok = Command::new(bin).args(["--r", "2", "center", "clifford1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("status: pass"));
    let bad = Command::new(bin).args(["--r", "2", "center", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("error:"));
}
