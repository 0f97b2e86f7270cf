//! End-to-end checks of the command-line surface: verbs, selectors, output
//! formats, and exit codes.

use std::process::{Command, Output};

fn srep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn index_verb() {
    let out = srep(&["index", "spC-spR", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "16");

    let out = srep(&["index", "soC-sostar", "--n", "3"]);
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn hpis_verb_formats() {
    let out = srep(&["hpis", "slC-slR", "--n", "5"]);
    assert_eq!(stdout(&out).trim(), "R^2 + so(2)^2");

    let out = srep(&["hpis", "slC-slR", "--n", "5", "--format", "latex"]);
    assert_eq!(stdout(&out).trim(), "\\mathbb{R}^{2}+\\mathfrak{so}(2)^{2}");

    let out = srep(&["hpis", "sl4R-so22"]);
    assert_eq!(stdout(&out).trim(), "{0}");

    let out = srep(&["hpis", "slC-slR", "--n", "5", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn cosets_verb_with_oracle() {
    let out = srep(&["cosets", "A4-A1xA2", "--oracle"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("C(5,2) = 10"));
    assert!(text.contains("w10"));
    assert!(text.contains("oracle     pass"));

    // Pair-slug form with parameters.
    let out = srep(&["cosets", "slC-slR", "--n", "6", "--oracle"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("index      2 = 2"));
}

#[test]
fn orbits_verb_markdown_and_json() {
    let out = srep(&["orbits", "sl4R-so22", "--format", "markdown"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("## Block 6"));
    assert!(text.contains("| {e1-e2, e3-e4} | so(2,0) + so(0,2) |"));

    let out = srep(&["orbits", "sl4R-so22", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["reps"], 6);
    assert_eq!(value["orbit_types"].as_array().unwrap().len(), 9);

    let out = srep(&["orbits", "slR2-slR", "--n", "4", "--elliptic"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("elliptic"));
    assert!(text.contains("R + so(2)^2"));
}

#[test]
fn orbits_latex_tables_are_balanced() {
    let out = srep(&["orbits", "spR2-spR", "--n", "2", "--format", "latex"]);
    let text = stdout(&out);
    assert_eq!(
        text.matches("\\begin{tabular}").count(),
        text.matches("\\end{tabular}").count()
    );
    assert!(text.contains("$h_\\Theta$"));
}

#[test]
fn pairs_listing_and_resolution() {
    let out = srep(&["pairs"]);
    let text = stdout(&out);
    assert!(text.contains("slC-slR"));
    assert!(text.contains("spnm-sp2"));
    assert_eq!(text.lines().count(), 52); // header + 51 rows

    let out = srep(&["pairs", "su-sp", "--n", "4", "--p", "1"]);
    let text = stdout(&out);
    assert!(text.contains("(su(2,6), sp(1,3))"));
    assert!(text.contains("hpis      sl(2,C) + sp(2)"));

    let out = srep(&["pairs", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value.as_array().unwrap().len(), 51);
}

#[test]
fn satake_verb_text_and_json() {
    let out = srep(&["satake", "su-sp", "--n", "3", "--p", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("triple (su(2,4), sp(1,2))"));
    assert!(text.contains("z_h = sl(2,C) + su(2)"));

    let out = srep(&["satake", "slC-slR", "--n", "6", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["z_h"], "R^2 + so(2)^3");
}

#[test]
fn verify_verb_small_sweep() {
    let out = srep(&["verify", "--max-rank", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("ok   index-table:slC-slR"));
    assert!(text.contains("ok   orbit-table:sl4R-so22"));
    assert!(text.contains("0 failed"));
}

#[test]
fn usage_errors_are_machine_readable() {
    let out = srep(&["index", "nonsense-pair"]);
    assert_eq!(out.status.code(), Some(2));
    let err: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stderr).trim()).unwrap();
    assert_eq!(err["error"]["kind"], "usage");

    let out = srep(&["index", "su2-su", "--n", "3", "--p", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = srep(&["satake", "spC-spR", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}
