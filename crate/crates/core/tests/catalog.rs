use std::time::Instant;

use entwine::catalog::{catalog_get, catalog_names, verify_entry};

#[test]
fn every_entry_verifies() {
    for name in catalog_names() {
        let t = Instant::now();
        let entry = catalog_get(&name).unwrap();
        let report = verify_entry(&entry).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(report.passed(), "{name}");
        println!("{name} {:?}", t.elapsed());
    }
}

#[test]
fn unknown_name_is_rejected() {
    assert!(catalog_get("nope").is_err());
}
