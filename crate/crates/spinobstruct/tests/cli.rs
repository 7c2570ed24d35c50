use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use spinobstruct::AnalysisReport;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinobstruct")).args(args).env_remove("SPINOBSTRUCT_MAX_COSETS").output().unwrap()
}

fn analyze(name: &str, extra: &[&str]) -> Output {
    let path = fixture(name);
    let mut args = vec!["analyze", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cp2_is_obstructed_for_every_target() {
    let o = analyze("cp2.toml", &[]);
    assert_eq!(o.status.code(), Some(3));
    let text = stdout(&o);
    assert_eq!(text.matches("obstructed: i* not injective").count(), 3, "{text}");
}

#[test]
fn torus_has_eight_spin_structures() {
    let o = analyze("torus3.toml", &["--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: AnalysisReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.spin && r.spin_c);
    assert_eq!(r.spin_count, "8");
    assert!(r.targets[0].exists);
}

#[test]
fn icosahedral_witness_table() {
    let o = analyze("icosahedral.toml", &["--witnesses"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("witness for SU(2) finite models"), "{text}");
    assert!(text.contains("into SL(2,5), image of order 120"), "{text}");
    assert!(text.contains("-> [[4,0],[0,4]]"), "{text}");
}

#[test]
fn json_reports_are_byte_identical_and_round_trip() {
    for name in ["cp2.toml", "torus3.toml", "icosahedral.toml", "lens5.json", "z4_explicit.toml"] {
        let a = analyze(name, &["--json", "--witnesses"]);
        let b = analyze(name, &["--json", "--witnesses"]);
        assert_eq!(a.stdout, b.stdout, "{name}");
        let r: AnalysisReport = serde_json::from_str(&stdout(&a)).unwrap();
        assert_eq!(r.to_json(), stdout(&a), "{name}");
    }
}

#[test]
fn json_to_file_keeps_text_on_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = analyze("lens5.json", &["--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("manifold: L(5)"));
    let r: AnalysisReport = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(r.targets.len(), 2);
    assert_eq!(r.spin_count, "1");
}

#[test]
fn explicit_z4_has_spinc_but_not_spin() {
    let o = analyze("z4_explicit.toml", &["--json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: AnalysisReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.spin_c && !r.spin);
    assert!(r.targets[0].exists);
    assert_eq!(r.targets[1].reason.as_deref(), Some("no_cyclic_character"));
}

#[test]
fn exit_codes_for_errors() {
    assert_eq!(analyze("bad_tag.toml", &[]).status.code(), Some(1));
    assert_eq!(analyze("missing.toml", &[]).status.code(), Some(1));
    assert_eq!(analyze("octahedral_cap.toml", &["--max-cosets", "10"]).status.code(), Some(2));
    assert_eq!(analyze("octahedral_cap.toml", &[]).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn env_var_sets_the_coset_cap() {
    let path = fixture("octahedral_cap.toml");
    let bin = env!("CARGO_BIN_EXE_spinobstruct");
    let capped = Command::new(bin).args(["analyze", path.to_str().unwrap()]).env("SPINOBSTRUCT_MAX_COSETS", "10").output().unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("resource cap exceeded"));
    let flag_wins = Command::new(bin)
        .args(["analyze", path.to_str().unwrap(), "--max-cosets", "1000"])
        .env("SPINOBSTRUCT_MAX_COSETS", "10")
        .output()
        .unwrap();
    assert_eq!(flag_wins.status.code(), Some(0));
    let garbage = Command::new(bin).args(["analyze", path.to_str().unwrap()]).env("SPINOBSTRUCT_MAX_COSETS", "lots").output().unwrap();
    assert_eq!(garbage.status.code(), Some(1));
}

#[test]
fn conjugacy_dedup_does_not_change_decisions() {
    let a = analyze("lens5.json", &["--json", "--conjugacy-dedup", "false"]);
    let b = analyze("lens5.json", &["--json"]);
    let ra: AnalysisReport = serde_json::from_str(&stdout(&a)).unwrap();
    let rb: AnalysisReport = serde_json::from_str(&stdout(&b)).unwrap();
    let decisions = |r: &AnalysisReport| r.targets.iter().map(|t| t.exists).collect::<Vec<_>>();
    assert_eq!(decisions(&ra), decisions(&rb));
}

#[test]
fn algebra_suites() {
    let o = run(&["algebra", "vec1-ideals", "-k", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("13 graded ideals, matching 2 families + truncation tails"));
    assert_eq!(run(&["algebra", "sl-span", "-n", "2", "-k", "3"]).status.code(), Some(0));
    let o = run(&["algebra", "jet-jacobi", "-n", "2", "-k", "2", "--seed", "42", "--samples", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("10/10 triples exact"));
    let o = run(&["algebra", "cocycle", "--samples", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(run(&["algebra", "vec1-ideals", "-k", "2"]).status.code(), Some(1));
    assert_eq!(run(&["algebra", "no-such-suite"]).status.code(), Some(1));
}

#[test]
fn catalog_listing() {
    let o = run(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for tag in ["cp2", "lens_space", "binary_icosahedral", "su2_finite_models", "pati_salam"] {
        assert!(text.contains(tag), "{tag}");
    }
    let o = run(&["catalog", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let tags: Vec<&str> = v["manifolds"].as_array().unwrap().iter().map(|e| e["tag"].as_str().unwrap()).collect();
    assert!(tags.contains(&"spherical_space_form"));
    assert_eq!(v["gauges"].as_array().unwrap().len(), 7);
}
