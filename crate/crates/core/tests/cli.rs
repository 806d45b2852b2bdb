use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn gapvir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gapvir")).args(args).env_remove("GAPVIR_WINDOW").output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn validate_example_four() {
    let out = gapvir(&["validate-f", &path("ex4.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["conditions"][2]["condition"], "III");
    assert_eq!(v["conditions"][2]["witness"]["r"], 2);
    assert_eq!(v["conditions"][2]["witness"]["s"], 1);
    assert_eq!(v["conditions"][2]["witness"]["i"], 0);
}

#[test]
fn validate_valid_examples() {
    for ex in ["ex1.json", "ex2.json", "ex3.json", "ex5.json"] {
        assert_eq!(gapvir(&["validate-f", &path(ex)]).status.code(), Some(0), "{ex}");
    }
}

#[test]
fn dot_output_is_exact() {
    let out = gapvir(&["linkage", "--dot", &path("ex1.json")]);
    assert_eq!(out.status.code(), Some(0));
    let expected = "digraph linkage {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  2 [label=\"2\"];\n  \
                    0 -> 1 [label=\"1\"];\n  1 -> 2 [label=\"1\"];\n  2 -> 0 [label=\"1\"];\n}\n";
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);

    let ex5 = String::from_utf8(gapvir(&["linkage", "--dot", &path("ex5.json")]).stdout).unwrap();
    assert_eq!(ex5.matches("[label=\"8\"]").count(), 4);
    assert_eq!(ex5.matches("->").count(), 3);

    let ex2 = String::from_utf8(gapvir(&["linkage", "--dot", &path("ex2.json")]).stdout).unwrap();
    assert!(ex2.contains("0 -> 2 [label=\"2\"]") && ex2.contains("2 -> 0 [label=\"2\"]"));
}

#[test]
fn output_is_deterministic() {
    let a = gapvir(&["--json", "examples"]);
    let b = gapvir(&["--json", "examples"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn iso_pair() {
    let out = gapvir(&["iso", &path("iso_a.json"), &path("iso_b.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["witness"], serde_json::json!({"k": 0, "d": ["1", "2"]}));
}

#[test]
fn module_subcommands() {
    assert_eq!(gapvir(&["axioms", "--window", "6", &path("ex1.json")]).status.code(), Some(0));
    assert_eq!(gapvir(&["reducible", &path("ex1.json")]).status.code(), Some(1));
    let omega = gapvir(&["omega", "--m", "6", "--n", "3", "--lmax", "6", "--window", "8", &path("ex1.json")]);
    assert_eq!(omega.status.code(), Some(0));
    assert_eq!(json(&omega)["min_l"], 3);
    let j = gapvir(&["jtest", &path("tensor.json")]);
    assert_eq!(j.status.code(), Some(0));
    assert_eq!(json(&j)["pi"], serde_json::json!([]));
}

#[test]
fn verma_subcommands() {
    let out = gapvir(&["verma", "--depth", "6", &path("weight.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["graded_dimensions"], serde_json::json!([1, 1, 2, 3, 5, 7, 11]));
    assert_eq!(gapvir(&["singular", "--depth", "3", &path("weight.json")]).status.code(), Some(1));
}

#[test]
fn lie_check_and_window_env() {
    assert_eq!(gapvir(&["lie-check", "--p", "2", "--window", "4"]).status.code(), Some(0));
    let out = Command::new(env!("CARGO_BIN_EXE_gapvir"))
        .args(["--json", "lie-check", "--p", "3"])
        .env("GAPVIR_WINDOW", "3")
        .output()
        .unwrap();
    assert_eq!(json(&out)["lie"]["window"], 3);
}

#[test]
fn input_errors() {
    let bad = std::env::temp_dir().join("gapvir_bad_dimension.json");
    std::fs::write(&bad, r#"{"p":3,"F":[["1","2"]]}"#).unwrap();
    let out = gapvir(&["validate-f", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(gapvir(&["linkage", bad.to_str().unwrap()]).status.code(), Some(2));

    std::fs::write(&bad, r#"{"p":1,"F":[]}"#).unwrap();
    assert_eq!(gapvir(&["validate-f", bad.to_str().unwrap()]).status.code(), Some(2));

    assert_eq!(gapvir(&["singular", "--depth", "0", &path("weight.json")]).status.code(), Some(2));
    assert_eq!(gapvir(&["reducible", &path("ex4.json")]).status.code(), Some(2));
}
