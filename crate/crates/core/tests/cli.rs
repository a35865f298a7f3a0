use std::io::Write;
use std::process::Command;

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chowcheck"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let o = bin().args(args).output().unwrap();
    (
        o.status.code().unwrap(),
        String::from_utf8(o.stdout).unwrap(),
        String::from_utf8(o.stderr).unwrap(),
    )
}

#[test]
fn single_passing_check() {
    let (code, out, _) = run(&["check", "--name", "point-class"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 1);
    assert!(out.contains("point_class: ell^2 + ell*u1 + u2*u3"));
}

#[test]
fn unknown_check_is_a_usage_error() {
    let (code, out, err) = run(&["check", "--name", "bogus"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("bogus"));
    assert_eq!(run(&["check"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn json_report_shape() {
    let (code, out, _) = run(&["check", "--all", "--format", "json"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 18);
    for r in results {
        let obj = r.as_object().unwrap();
        let keys: Vec<_> = obj.keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            ["name", "verdict", "paper_anchor", "witnesses", "elapsed_ms"]
        );
        assert!(["pass", "fail", "error"].contains(&r["verdict"].as_str().unwrap()));
        assert!(r["witnesses"]
            .as_object()
            .unwrap()
            .values()
            .all(Value::is_string));
        assert!(r["elapsed_ms"].as_f64().unwrap() >= 0.0);
    }
    assert_eq!(doc["version"], "1");
    assert!(doc["config_echo"].is_object());
    let s = &doc["summary"];
    let total: u64 = ["pass", "fail", "error"]
        .iter()
        .map(|k| s[k].as_u64().unwrap())
        .sum();
    assert_eq!(total, 18);
    let expected = if s["error"] != 0 {
        3
    } else if s["fail"] != 0 {
        1
    } else {
        0
    };
    assert_eq!(code, expected);
}

#[test]
fn text_and_json_agree() {
    let args = [
        "check",
        "--name",
        "theta-epsilon",
        "--name",
        "sl3-restriction",
    ];
    let (c1, text, _) = run(&args);
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let (c2, json, _) = run(&json_args);
    assert_eq!(c1, c2);
    let doc: Value = serde_json::from_str(&json).unwrap();
    for r in doc["results"].as_array().unwrap() {
        let tag = r["verdict"].as_str().unwrap().to_uppercase();
        assert!(text.contains(&format!("{tag} {}", r["name"].as_str().unwrap())));
        for (label, w) in r["witnesses"].as_object().unwrap() {
            assert!(
                text.contains(&format!("    {label}: {}", w.as_str().unwrap())),
                "{label}"
            );
        }
    }
}

#[test]
fn hilbert_rows() {
    let (code, out, _) = run(&["hilbert", "--spec", "builtin:Rstar", "--max-degree", "4"]);
    assert_eq!(code, 0);
    let rows: Vec<_> = out.lines().collect();
    assert_eq!(rows[0], "0: Z");
    assert_eq!(rows[3], "3: Z");
    assert_eq!(rows[4], "4: Z ⊕ Z/3");
    assert_eq!(
        run(&["hilbert", "--spec", "builtin:Nope", "--max-degree", "2"]).0,
        2
    );
    assert_eq!(
        run(&["hilbert", "--spec", "/no/such/file", "--max-degree", "2"]).0,
        2
    );
}

#[test]
fn hilbert_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        f,
        "[presentation P]\ngenerators = a:2, b:3\nrelation = 5*a*b\n"
    )
    .unwrap();
    let path = f.path().to_str().unwrap();
    let (code, out, _) = run(&["hilbert", "--spec", path, "--max-degree", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().last(), Some("5: Z/5"));
    let (code, _, _) = run(&[
        "hilbert",
        "--spec",
        &format!("{path}#Q"),
        "--max-degree",
        "5",
    ]);
    assert_eq!(code, 2);
    let (code, out, _) = run(&[
        "hilbert",
        "--spec",
        "builtin:P",
        "--config",
        path,
        "--max-degree",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["components"][2]["text"], "2: Z");
}

#[test]
fn listing() {
    let (code, out, _) = run(&["list"]);
    assert_eq!(code, 0);
    let lines: Vec<_> = out.lines().collect();
    assert!(lines.len() >= 18);
    assert!(lines
        .iter()
        .all(|l| l.split('\t').nth(1).is_some_and(|a| !a.is_empty())));
}

#[test]
fn config_file_overrides_and_rejections() {
    let mut good = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        good,
        "[checks]\nmax_degree = 3\ngamma-generation = 5\nformat = json"
    )
    .unwrap();
    let p = good.path().to_str().unwrap();
    let (code, out, _) = run(&["check", "--name", "gamma-generation", "--config", p]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["config_echo"]["max_degree"], 3);
    assert_eq!(doc["results"][0]["witnesses"]["max_degree"], "5");

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "[checks]\nmax_dgree = 3").unwrap();
    let (code, _, err) = run(&["check", "--all", "--config", bad.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"));

    assert_eq!(
        run(&["check", "--name", "rstar-structure", "--max-degree", "99"]).0,
        2
    );
}

#[test]
fn list_describes_config_objects() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        f,
        "[group C3]\nvariables = a, b\ngenerator r = 0 -1; 1 -1\n\n[representation V]\nlattice = T_GL3\nexpr = E + 1"
    )
    .unwrap();
    let (code, out, _) = run(&["list", "--config", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("group C3: order 3 on a, b"));
    assert!(out.contains("representation V: dim 4"));
}

#[test]
fn report_keys_match_published_schema() {
    let schema_path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report-schema.json");
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).unwrap()).unwrap();
    let (_, out, _) = run(&["check", "--name", "gamma-syzygy", "--format", "json"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    let keys = |v: &Value| {
        let mut k: Vec<String> = v.as_object().unwrap().keys().cloned().collect();
        k.sort();
        k
    };
    let required = |v: &Value| {
        let mut k: Vec<String> = v["required"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_str().unwrap().to_string())
            .collect();
        k.sort();
        k
    };
    let props = &schema["properties"];
    assert_eq!(keys(&doc), required(&schema));
    assert_eq!(keys(&doc["config_echo"]), required(&props["config_echo"]));
    assert_eq!(keys(&doc["summary"]), required(&props["summary"]));
    assert_eq!(
        keys(&doc["results"][0]),
        required(&props["results"]["items"])
    );
    assert_eq!(doc["version"], props["version"]["const"]);
}
