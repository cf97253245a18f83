//! End-to-end tests of the binary: output formats, golden-table checking,
//! exit codes, determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cohomog7"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn classify_markdown_contains_the_table() {
    let out = run(&["classify", "--format", "markdown"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let table_at = text.find("| n. | G | K° |").expect("table header present");
    let rest = &text[table_at..];
    for row in [
        "| 1 | T^1 x SU(3) | SU(2) |",
        "| 2 | SU(2)^3 | SU(2) |",
        "| 3 | T^1 x SU(2)^2 | T^1 |",
        "| 4 | SU(2)^2 | {1} |",
    ] {
        assert!(rest.contains(row), "missing row {row:?}");
    }
}

#[test]
fn classify_json_reports_the_survivor() {
    let out = run(&["classify", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(value["survivors"], serde_json::json!(["2a1 / trivial"]));
    assert_eq!(value["dimension"], 7);
    assert_eq!(value["table"].as_array().unwrap().len(), 4);
    // minimal schema: every case carries d, g, k and a verdict with kind
    for group in value["groups"].as_array().unwrap() {
        for case in group["cases"].as_array().unwrap() {
            for key in ["d", "g", "k_name", "k_algebra", "verdict", "trace"] {
                assert!(!case[key].is_null(), "case missing {key}");
            }
            assert!(!case["verdict"]["kind"].is_null());
        }
    }
}

#[test]
fn classify_is_byte_deterministic() {
    let a = run(&["classify", "--format", "json"]);
    let b = run(&["classify", "--format", "json"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn golden_override_mismatch_exits_3() {
    let dir = std::env::temp_dir().join("cohomog7-golden-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("wrong.json");
    std::fs::write(
        &path,
        r#"{"version":1,"rows":[{"n":1,"g":"a2","g_display":"SU(3)","k":"t2","k_display":"T^2"}]}"#,
    )
    .unwrap();
    let out = run(&[
        "classify",
        "--format",
        "json",
        "--golden",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn golden_file_in_repo_matches() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/golden_table1.json");
    let out = run(&[
        "classify",
        "--format",
        "json",
        "--golden",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
}

#[test]
fn case_reports() {
    let out = run(&["case", "--g", "g2", "--k", "a2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("DiffeoSphere"));
    assert!(text.contains("fixed point"));

    let out = run(&["case", "--g", "b2", "--k", "t1+a1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Impossible"));

    let out = run(&["case", "--g", "a2", "--k", "t2", "--variant", "h-eq-hprime"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Impossible"));
    assert!(text.contains("concav"));

    // resolution by algebra string and by catalog name
    let out = run(&["case", "--g", "t1+2a1", "--k", "t1", "--d", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Impossible"));
    let out = run(&["case", "--g", "2a1", "--k", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Survivor"));
    let out = run(&["case", "--g", "3a1", "--k", "diag2_in_3su2"]);
    assert!(out.status.success());

    // corank check and unknown names
    assert_eq!(
        run(&["case", "--g", "g2", "--k", "a2", "--d", "1"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        run(&["case", "--g", "g2", "--k", "b2"]).status.code(),
        Some(4)
    );
    assert_eq!(
        run(&["case", "--g", "a2", "--k", "t2", "--variant", "zzz"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn rep_evaluations() {
    let out = run(&["rep", "V2*V2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "V4+V2+V0");

    // the recorded vanishing claim for this space is contradicted by the
    // computed count, and the calculator says so
    let out = run(&["rep", "sym2(V0+V2)*V2:inv"]);
    let text = stdout(&out);
    assert!(text.starts_with('1'));
    assert!(text.contains("disagrees"));
    let out = run(&["rep", "sym2(V0+V2)⊗V2:inv", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 1);
    assert!(v["note"].as_str().unwrap().contains("disagrees"));
    // unrelated invariant queries carry no note
    let out = run(&["rep", "V2*V2:inv"]);
    assert_eq!(stdout(&out).trim(), "1");

    let out = run(&["rep", "V3:fs"]);
    assert_eq!(stdout(&out).trim(), "symplectic (quaternionic)");

    let out = run(&["rep", "V2*V2:dim", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dim"], 9);

    let out = run(&["rep", "V2)("]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn concavity_exit_codes() {
    let out = run(&["verify-concavity", "--profile", "cos"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("pass"));

    // negative curvature: warns, still exit 0
    let out = run(&["verify-concavity", "--profile", "exp"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("warning"));

    // over-tight tolerance fails with exit 1
    let out = run(&[
        "verify-concavity",
        "--profile",
        "cos",
        "--step",
        "1e-3",
        "--tol",
        "1e-12",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // non-positive profile
    let out = run(&["verify-concavity", "--profile", "const:-2"]);
    assert_eq!(out.status.code(), Some(6));

    // sampled two-column file
    let dir = std::env::temp_dir().join("cohomog7-profile-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cos.dat");
    let mut rows = String::new();
    for i in 0..=280 {
        let t = -1.4 + 0.01 * i as f64;
        rows.push_str(&format!("{t} {}\n", t.cos()));
    }
    std::fs::write(&path, rows).unwrap();
    let out = run(&[
        "verify-concavity",
        "--profile",
        path.to_str().unwrap(),
        "--tol",
        "1e-2",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

/// Checks a value against the `required` lists of the shipped schema,
/// following `$ref`s into `$defs` and recursing through arrays.
fn check_required(value: &serde_json::Value, schema: &serde_json::Value, defs: &serde_json::Value) {
    let schema = match schema.get("$ref").and_then(|r| r.as_str()) {
        Some(r) => &defs[r.trim_start_matches("#/$defs/")],
        None => schema,
    };
    if let Some(required) = schema.get("required").and_then(|r| r.as_array()) {
        for key in required {
            let key = key.as_str().unwrap();
            assert!(
                !value[key].is_null(),
                "missing required key {key} in {value}"
            );
        }
    }
    if let Some(props) = schema.get("properties").and_then(|p| p.as_object()) {
        for (key, sub) in props {
            let v = &value[key];
            if v.is_null() {
                continue;
            }
            if let Some(items) = sub.get("items") {
                for item in v.as_array().into_iter().flatten() {
                    check_required(item, items, defs);
                }
            } else if v.is_object() {
                check_required(v, sub, defs);
            }
        }
    }
}

#[test]
fn classify_json_validates_against_shipped_schema() {
    let schema_raw = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("data/report.schema.json"),
    )
    .unwrap();
    let schema: serde_json::Value = serde_json::from_str(&schema_raw).unwrap();
    let out = run(&["classify", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    check_required(&report, &schema, &schema["$defs"]);
}

#[test]
fn catalog_dump_is_json_stable() {
    let out = run(&["catalog", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["version"], 1);
    assert!(v["embeddings"].as_array().unwrap().len() > 20);
    assert!(v["transitive_sphere_table"].as_array().unwrap().len() >= 9);
    let again = run(&["catalog", "--format", "json"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn shipped_catalog_file_is_current() {
    let shipped =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("data/catalog.json"))
            .unwrap();
    let live = stdout(&run(&["catalog", "--format", "json"]));
    assert_eq!(
        shipped, live,
        "regenerate data/catalog.json with `cohomog7 catalog --format json`"
    );
}
