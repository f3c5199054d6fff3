use std::path::{Path, PathBuf};

use entwine::document::Document;
use entwine_cli::{run, Outcome};
use tempfile::TempDir;

fn entwine(args: &[&str]) -> Outcome {
    run(std::iter::once("entwine").chain(args.iter().copied()))
}

fn export(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.ent"));
    let out = entwine(&["catalog", "export", name, "--out", path.to_str().unwrap()]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_catalog_export_passes() {
    let dir = TempDir::new().unwrap();
    let out = entwine(&["check", s(&export(dir.path(), "qc2"))]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.ends_with("result: PASS\n"));
}

#[test]
fn dualize_emits_a_verifying_document() {
    let dir = TempDir::new().unwrap();
    let file = export(dir.path(), "hopfmod_qc2");
    let dual = dir.path().join("dual.ent");
    let out = entwine(&["dualize", s(&file), "--out", s(&dual)]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let doc = Document::parse(&std::fs::read_to_string(&dual).unwrap()).unwrap();
    assert!(doc.objects.contains_key("hopfmod_qc2_dual_entwining"));
    assert_eq!(entwine(&["check", s(&dual)]).code, 0);
}

#[test]
fn corrupted_document_fails_with_witness() {
    let dir = TempDir::new().unwrap();
    let file = export(dir.path(), "qc2");
    let text = std::fs::read_to_string(&file).unwrap();
    let doc = Document::parse(&text).unwrap();
    let mut bad = doc.clone();
    if let Some(entwine::document::Object::Structure(st)) = bad.objects.get_mut("qc2") {
        let mul = &mut st.algebra.as_mut().unwrap().mul;
        let two = mul.get(0, 0).clone() + mul.get(0, 0).clone();
        mul.set(0, 0, two);
    }
    std::fs::write(&file, bad.emit()).unwrap();
    let out = entwine(&["check", s(&file)]);
    assert_eq!(out.code, 1, "{}", out.stdout);
    assert!(out.stdout.contains("witness basis indices"), "{}", out.stdout);
    let json = entwine(&["check", s(&file), "--json"]);
    assert_eq!(json.code, 1);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["status"], "fail");
    assert!(v["reports"][0]["violation"]["witness"].is_array());
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.ent");
    assert_eq!(entwine(&["check", s(&missing)]).code, 2);
    let garbage = dir.path().join("garbage.ent");
    std::fs::write(&garbage, "{\"version\": 1, \"field\": \"Q\", \"objects\": {\"x\": {\"type\": \"pairing\", \"algebra\": \"a\", \"coalgebra\": \"c\", \"matrix\": []}}}").unwrap();
    let out = entwine(&["check", s(&garbage)]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("dangling reference"), "{}", out.stdout);
    assert_eq!(entwine(&["frobnicate"]).code, 2);
    assert_eq!(entwine(&["catalog", "show", "nonexistent"]).code, 2);
}

#[test]
fn alternative_structures_do_not_dualize() {
    let dir = TempDir::new().unwrap();
    let file = export(dir.path(), "schauenburg_qc2");
    assert_eq!(entwine(&["dk", s(&file)]).code, 0);
    let out = entwine(&["dk", s(&file), "--dual"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("not supported"));
}

#[test]
fn missing_antipode_fails() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("poly.ent");
    // Span of 1 and an idempotent grouplike x.
    let text = r#"{
  "version": 1,
  "field": "Q",
  "objects": {
    "B": {
      "type": "structure",
      "kind": "bialgebra",
      "dim": 2,
      "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 1, "1"]],
      "unit": ["1", "0"],
      "comul": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
      "counit": ["1", "1"]
    }
  }
}"#;
    std::fs::write(&file, text).unwrap();
    assert_eq!(entwine(&["check", s(&file)]).code, 0);
    let out = entwine(&["antipode", s(&file)]);
    assert_eq!(out.code, 1, "{}", out.stdout);
    assert!(out.stdout.contains("antipode exists"));
}

#[test]
fn every_command_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    let files: Vec<(&str, PathBuf)> = [
        "qc2",
        "sweedler4",
        "flip_qc2",
        "hopfmod_qc2",
        "free_hopfmod_qc2",
        "schauenburg_qc2",
        "cleft_qc2",
        "cocleft_qc2",
        "auto_qc3",
    ]
    .into_iter()
    .map(|n| (n, export(p, n)))
    .collect();
    let f = |n: &str| files.iter().find(|(m, _)| *m == n).unwrap().1.to_str().unwrap().to_string();
    let commands: Vec<Vec<String>> = vec![
        vec!["check".into(), f("qc2")],
        vec!["dualize".into(), f("hopfmod_qc2")],
        vec!["dualize".into(), f("auto_qc3")],
        vec!["dualize".into(), f("cocleft_qc2")],
        vec!["smash".into(), f("flip_qc2")],
        vec!["coring".into(), f("hopfmod_qc2")],
        vec!["antipode".into(), f("sweedler4")],
        vec!["rat".into(), f("free_hopfmod_qc2")],
        vec!["adjunction".into(), f("free_hopfmod_qc2")],
        vec!["dk".into(), f("hopfmod_qc2"), "--dual".into()],
        vec!["dk".into(), f("schauenburg_qc2")],
        vec!["cleft".into(), f("cleft_qc2")],
        vec!["cocleft".into(), f("cocleft_qc2")],
        vec!["catalog".into(), "list".into()],
        vec!["catalog".into(), "show".into(), "sweedler4".into()],
        vec!["catalog".into(), "export".into(), "hopfmod_sweedler4".into()],
    ];
    for (i, cmd) in commands.iter().enumerate() {
        for json in [false, true] {
            let mut runs = Vec::new();
            for k in 0..2 {
                let out_file = p.join(format!("out_{i}_{json}_{k}.ent"));
                let mut args: Vec<&str> = cmd.iter().map(String::as_str).collect();
                if json {
                    args.push("--json");
                }
                let inline = entwine(&args);
                args.extend(["--out", out_file.to_str().unwrap()]);
                let written = entwine(&args);
                assert_eq!(inline.code, 0, "{cmd:?}: {}", inline.stdout);
                assert_eq!(written.code, 0, "{cmd:?}: {}", written.stdout);
                runs.push((inline.stdout, written.stdout, std::fs::read_to_string(&out_file).ok()));
            }
            assert_eq!(runs[0], runs[1], "{cmd:?}");
        }
    }
}
