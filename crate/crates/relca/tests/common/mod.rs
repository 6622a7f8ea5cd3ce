#![allow(dead_code)]

pub mod laws;
pub mod random;

use std::path::PathBuf;

use relca::{parse_rcf, RcfDocument};
use relca_core::RelationalContextFamily;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

pub fn fixture(name: &str) -> (RcfDocument, RelationalContextFamily) {
    let doc = parse_rcf(&fixture_text(name)).unwrap();
    let rcf = doc.to_family().unwrap();
    (doc, rcf)
}
