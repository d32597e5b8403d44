use std::path::PathBuf;
use std::process::{Command, Output};

use rspin_core::ReportDocument;

fn rspin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rspin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sample(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "samples", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn report_plane_sextic_plus_line() {
    let o = rspin(&["report", "--surface", "P2", "--C", "6", "--D", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("Γ = Mod(E)[φ_M], r = 4"));
}

#[test]
fn milnor_e6() {
    let o = rspin(&["milnor", "x^3+y^4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("μ = 6"));
}

#[test]
fn psi_meridian() {
    let o = rspin(&["psi", "m(1,2)", "--d", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("(1,1,0,0,0,0)"));
}

#[test]
fn exit_codes() {
    assert_eq!(rspin(&["psi", "m(1,9)", "--d", "6"]).status.code(), Some(1));
    assert_eq!(rspin(&["milnor", "x^2"]).status.code(), Some(1));
    assert_eq!(rspin(&["catalog", "show", "P7"]).status.code(), Some(1));
    assert_eq!(rspin(&["mainlemma", "--k", "1,0,0,0,0,0"]).status.code(), Some(1));
    assert_eq!(rspin(&["config", "analyze", "/nonexistent"]).status.code(), Some(1));
    assert_eq!(rspin(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(rspin(&["psi", "m(1,2)"]).status.code(), Some(2));
    assert_eq!(rspin(&["report", "--surface", "P2", "--C", "x", "--D", "1"]).status.code(), Some(2));
    assert_eq!(rspin(&["--format", "json", "catalog", "list"]).status.code(), Some(2));
}

#[test]
fn machine_errors_are_structured() {
    let o = rspin(&["--format", "machine", "psi", "m(1,9)", "--d", "6"]);
    let doc = ReportDocument::parse_machine(&String::from_utf8(o.stderr).unwrap()).unwrap();
    assert_eq!(doc.get("error.kind"), Some("braidcalc"));
    assert!(doc.get("error.message").is_some());
}

const INVOCATIONS: &[&[&str]] = &[
    &["report", "--surface", "P2", "--C", "6", "--D", "1"],
    &["report", "--surface", "P1xP1", "--C", "6,6", "--D", "1,1"],
    &["milnor", "y^2+y*x^4"],
    &["mainlemma", "--k", "3,-1,2,0,1,-1"],
    &["winding", "census", "--genus", "3"],
    &["assemblage", "standard", "--gc", "4", "--gd", "1", "--d", "6"],
    &["catalog", "show", "F1"],
];

#[test]
fn machine_output_round_trips_and_is_deterministic() {
    for args in INVOCATIONS {
        let mut m = vec!["--format", "machine"];
        m.extend_from_slice(args);
        let first = stdout(&rspin(&m));
        let second = stdout(&rspin(&m));
        assert_eq!(first, second, "{args:?}");
        let doc = ReportDocument::parse_machine(&first).unwrap();
        assert_eq!(doc.render_machine(), first);

        let human = stdout(&rspin(args));
        for (k, v) in doc.entries() {
            assert!(
                human.lines().any(|l| l.trim_start().starts_with(k.as_str()) && l.ends_with(v.as_str())),
                "{args:?}: `{k}` missing from human output"
            );
        }
    }
}

#[test]
fn file_inputs() {
    let o = rspin(&["--format", "machine", "config", "analyze", &sample("core13.conf")]);
    let doc = ReportDocument::parse_machine(&stdout(&o)).unwrap();
    assert_eq!(doc.get("E_arboreal"), Some("true"));
    assert_eq!(doc.get("spanning"), Some("true"));
    assert_eq!((doc.get("euler"), doc.get("genus")), (Some("-12"), Some("6")));

    let o = rspin(&["--format", "machine", "winding", "act", &sample("torus.wind"), "--word", "a a^-1"]);
    let doc = ReportDocument::parse_machine(&stdout(&o)).unwrap();
    assert_eq!(doc.get("b.after"), doc.get("b.before"));

    let o = rspin(&["--format", "machine", "assemblage", "run", &sample("sextic_line.asm")]);
    let doc = ReportDocument::parse_machine(&stdout(&o)).unwrap();
    assert_eq!(doc.get("generates"), Some("true"));
    assert_eq!(doc.get("genus"), Some("8"));

    let o = rspin(&["--format", "machine", "lattice", &sample("f2.lat"), "--class", "7,1"]);
    let doc = ReportDocument::parse_machine(&stdout(&o)).unwrap();
    assert_eq!(doc.get("class.0.genus"), Some("0"));
    assert_eq!(doc.get("signature"), Some("(1,1)"));
}
