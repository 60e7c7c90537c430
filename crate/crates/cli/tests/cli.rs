use std::io::Write;
use std::process::{Command, Output};

fn jacsyz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacsyz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn input(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn analyze(json: &str, extra: &[&str]) -> Output {
    let f = input(json);
    let mut args = vec!["analyze", "--input", f.path().to_str().unwrap()];
    args.extend_from_slice(extra);
    jacsyz(&args)
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn smooth_cubic_report() {
    let out = analyze(r#"[{"name": "fermat", "f_text": "x^3+y^3+z^3"}]"#, &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let r = &v[0];
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["classification"]["verdict"], "smooth");
    assert_eq!(r["invariants"]["tau"], 0);
    assert_eq!(r["invariants"]["exponents"], serde_json::json!([2, 2, 2]));
}

#[test]
fn free_curve_has_null_sigma() {
    let out = analyze(r#"{"name": "free", "f_text": "x(x^2+xy+z^2)"}"#, &[]);
    assert_eq!(out.status.code(), Some(0));
    let r = &stdout_json(&out)[0];
    assert_eq!(r["classification"]["verdict"], "free");
    assert!(r["invariants"]["sigma"].is_null());
    assert!(r["bourbaki"].is_null());
}

#[test]
fn non_homogeneous_input_points_at_the_term() {
    let out = analyze(r#"[{"name": "bad", "f_text": "x^2y+z^3+x"}]"#, &[]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("not homogeneous"), "{err}");
    assert!(err.contains("column 9"), "{err}");
    assert!(err.contains("        ^"), "{err}");
}

#[test]
fn syntax_errors_and_bad_files_exit_1() {
    let out = analyze(r#"[{"name": "bad", "f_text": "x^2+*y"}]"#, &[]);
    assert_eq!(out.status.code(), Some(1));
    let out = analyze("not json", &[]);
    assert_eq!(out.status.code(), Some(1));
    let out = jacsyz(&["analyze", "--input", "/nonexistent/curves.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn non_reduced_input_is_rejected() {
    let out = analyze(r#"[{"name": "double", "f_text": "x^2(x^3+y^3+z^3)"}]"#, &[]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not reduced"));
}

#[test]
fn degree_guard() {
    let json = r#"[{"name": "big", "f_text": "x^8+y^8+z^8"}]"#;
    assert_eq!(analyze(json, &["--max-degree", "7"]).status.code(), Some(1));
    assert_eq!(analyze(json, &["--max-degree", "8"]).status.code(), Some(0));
}

#[test]
fn wrong_expectation_exits_2() {
    let json = r#"[{"name": "ts", "f_text": "x^2y^2+z^4", "expected": {"tau": 7}}]"#;
    let out = analyze(json, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("tau: expected 7, got 6"));
    let json = r#"[{"name": "ts", "f_text": "x^2y^2+z^4", "expected": {"tau": 6, "classification": "nearly_free"}}]"#;
    assert_eq!(analyze(json, &[]).status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let json = r#"[{"name": "b", "f_text": "x^5-y^2z^3-xz^4"}, {"name": "a", "f_text": "xyz+x^3+y^3"}]"#;
    let first = analyze(json, &[]);
    let second = analyze(json, &["--jobs", "1"]);
    assert_eq!(first.stdout, second.stdout);
    // input order is kept
    let v = stdout_json(&first);
    assert_eq!(v[0]["curve"]["name"], "b");
    assert_eq!(v[1]["curve"]["name"], "a");
}

#[test]
fn corpus_audit_passes() {
    let out = jacsyz(&["corpus", "--audit"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(text.contains(" curves, 0 failed"));
}

#[test]
fn corpus_filter_and_json() {
    let out = jacsyz(&["corpus", "--filter", "exlowdegree", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let names: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["curve"]["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["exlowdegree-i", "exlowdegree-ii", "exlowdegree-iii", "exlowdegree-iv", "exlowdegree-v"]
    );
    assert_eq!(jacsyz(&["corpus", "--filter", "no-such-curve"]).status.code(), Some(1));
}

#[test]
fn family_members() {
    let out = jacsyz(&["family", "ex2", "--params", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &stdout_json(&out)[0];
    assert_eq!(r["curve"]["d"], 7);
    assert_eq!(r["invariants"]["exponents"], serde_json::json!([2, 5, 6]));
    assert_eq!(r["invariants"]["tau"], 26);

    let out = jacsyz(&["family", "ts", "--params", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)[0]["classification"]["verdict"], "nearly_free");

    assert_eq!(jacsyz(&["family", "ex2", "--params", "1"]).status.code(), Some(1));
    assert_eq!(jacsyz(&["family", "nope", "--params", "1"]).status.code(), Some(1));
}

#[test]
fn oracle_agrees() {
    let f = input(r#"[{"name": "folium", "f_text": "(x^2+y^2)^2-4xy^2z"}]"#);
    let out = jacsyz(&["oracle", "--input", f.path().to_str().unwrap(), "--max-degree", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("folium: degrees 0..=10 agree"));
}

#[test]
fn text_format() {
    let out = analyze(
        r#"[{"name": "bolza", "f_text": "x^5-y^2z^3-xz^4"}]"#,
        &["--format", "text"],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("exponents: (2, 4, 4)"));
    assert!(text.contains("tau = 8"));
}
