use std::process::{Command, Output};

use qgarnier::catalog::{reference_hamiltonian, GarnierName};
use qgarnier::weyl::json::{element_from_json, element_to_json};
use qgarnier::weyl::VarSet;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgarnier")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn derive_first_type() {
    let o = run(&["derive", "--system", "G11111"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("G11111 H1") && text.contains("G11111 H2"));
    assert!(text.contains("final nullity 0"));
}

#[test]
fn unknown_system_is_a_usage_error() {
    assert_eq!(run(&["derive", "--system", "G99"]).status.code(), Some(2));
}

#[test]
fn other_conventions_are_reported() {
    let o = run(&["derive", "--system", "G11111", "--flow", "1", "--flow-convention", "scaled", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let text = v.to_string();
    assert!(text.contains("\"flow_convention\":\"scaled\""));
}

#[test]
fn commuting_flows() {
    let o = run(&["verify", "--checks", "commute,flat"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn registered_failures_do_not_fail_the_run() {
    let o = run(&["verify", "--checks", "canonical", "--system", "G5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("expected-fail(G5-r3-y1-alpha"));
}

#[test]
fn first_type_round_trips() {
    let o = run(&["verify", "--checks", "roundtrip", "--system", "G11111", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 6);
    assert!(reports.iter().all(|r| r["verdict"] == "pass"));
}

#[test]
fn latex_export() {
    let o = run(&["export", "--format", "latex", "--system", "G14"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("\\begin{equation}").count(), 2);
    for flow in [1, 2] {
        assert!(text.contains(&format!("H_{{{flow}}} = ")));
        for m in reference_hamiltonian(GarnierName::G14, flow).corrected.terms().keys() {
            assert!(text.contains(&m.render_latex(VarSet::Old)), "{}", m.render(VarSet::Old));
        }
    }
}

#[test]
fn json_export_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g5.json");
    let o = run(&["export", "--system", "G5", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    let hs = v["hamiltonians"].as_array().unwrap();
    assert_eq!(hs.len(), 2);
    for h in hs {
        let e = element_from_json(&h["element"]).unwrap();
        assert_eq!(element_to_json(&e), h["element"]);
        let flow = h["flow"].as_u64().unwrap() as usize;
        assert_eq!(e, reference_hamiltonian(GarnierName::G5, flow).corrected);
    }
}

#[test]
fn bad_arguments() {
    assert_eq!(run(&["export", "--format", "text"]).status.code(), Some(2));
    assert_eq!(run(&["export", "--format", "pdf"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--checks", "nothing"]).status.code(), Some(2));
    assert_eq!(run(&["derive", "--flow", "3"]).status.code(), Some(2));
}

#[test]
fn output_does_not_depend_on_threads() {
    let args = |jobs: &'static str| ["export", "--format", "json", "--what", "all", "--system", "G5,G14", "--jobs", jobs];
    let one = run(&args("1"));
    let two = run(&args("3"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
    let v = ["verify", "--system", "G113", "--format", "json"];
    assert_eq!(run(&v).stdout, run(&v).stdout);
}

#[test]
fn catalog_listing() {
    let o = run(&["catalog", "--system", "G122", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let text = v["errata"].to_string();
    assert!(text.contains("G122-H1-bare-t"));
}
