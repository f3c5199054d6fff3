use entwine::catalog::{catalog_get, catalog_names};
use entwine::document::Document;
use entwine::Error;

#[test]
fn every_catalog_entry_round_trips() {
    for name in catalog_names() {
        let entry = catalog_get(&name).unwrap();
        let doc = Document::from_catalog(&entry).unwrap();
        let text = doc.emit();
        let back = Document::parse(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(back, doc, "{name}");
        assert_eq!(back.emit(), text, "{name}");
        let r = back.verify(&name).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(r.passed(), "{name}: {r}");
    }
}

const QC2: &str = r#"{
  "version": 1,
  "field": "Q",
  "objects": {
    "H": {
      "type": "structure",
      "kind": "hopf",
      "dim": 2,
      "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"], [1, 1, 0, "1"]],
      "unit": ["1", "0"],
      "comul": [[0, 0, 0, "1"], [1, 1, 1, "1"]],
      "counit": ["1", "1"]
    }
  }
}"#;

#[test]
fn hand_written_document_verifies() {
    let doc = Document::parse(QC2).unwrap();
    assert!(doc.verify("H").unwrap().passed());
}

#[test]
fn non_canonical_rational_is_rejected() {
    let text = QC2.replace(r#"["1", "1"]"#, r#"["2/2", "1"]"#);
    let err = Document::parse(&text).unwrap_err().to_string();
    assert!(err.contains("objects.H.counit[0]"), "{err}");
}

#[test]
fn dangling_reference_is_rejected() {
    let text = QC2.replace(
        "\"objects\": {",
        "\"objects\": {\n    \"E\": {\"type\": \"entwining\", \"algebra\": \"H\", \"coalgebra\": \"missing\", \"psi\": []},",
    );
    match Document::parse(&text) {
        Err(Error::DanglingReference(m)) => assert!(m.contains("objects.E.coalgebra"), "{m}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn unknown_field_names_the_object() {
    let text = QC2.replace("\"dim\": 2,", "\"dim\": 2, \"extra\": 1,");
    let err = Document::parse(&text).unwrap_err().to_string();
    assert!(err.contains("objects.H") && err.contains("extra"), "{err}");
}

#[test]
fn prime_field_scalars_are_integers() {
    let text = QC2.replace("\"Q\"", "{\"p\": 5}");
    assert!(Document::parse(&text).is_err());
    let numeric = text.replace("\"1\"", "1").replace("\"0\"", "0");
    let doc = Document::parse(&numeric).unwrap();
    assert!(doc.verify("H").unwrap().passed());
    let bad = numeric.replace("\"unit\": [1, 0]", "\"unit\": [6, 0]");
    assert!(Document::parse(&bad).is_err());
}

#[test]
fn syntax_errors_report_position() {
    let err = Document::parse("{\n  \"version\": 1,\n  oops\n}").unwrap_err().to_string();
    assert!(err.contains("line 3"), "{err}");
}
