//! The report document.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use chorded_core::{Complex, Face};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = "chorded";

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Report {
    pub schema_version: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputInfo>,
    pub settings: Settings,
    /// `completed`, `inconclusive` or `violation`.
    pub status: &'static str,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct InputInfo {
    pub path: String,
    pub sha256: String,
    pub vertices: usize,
    pub facets: usize,
}

impl InputInfo {
    pub fn new(path: &str, bytes: &[u8], c: &Complex) -> Self {
        InputInfo {
            path: path.to_owned(),
            sha256: sha256_hex(bytes),
            vertices: c.vertex_count(),
            facets: c.facets().len(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq, Default)]
pub struct Settings {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub fields: Vec<String>,
    /// Kept as a string: JSON numbers cannot carry every u128.
    pub cap: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ideal: Option<&'static str>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub closure: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn face_json(c: &Complex, f: Face) -> Value {
    Value::from(c.face_labels(f))
}

pub fn faces_json(c: &Complex, fs: &[Face]) -> Value {
    Value::Array(fs.iter().map(|f| face_json(c, *f)).collect())
}

/// `abc` when every label is one character, `a1 b2 c3` otherwise.
pub fn face_text(c: &Complex, f: Face) -> String {
    let labels = c.face_labels(f);
    if labels.is_empty() {
        "∅".to_owned()
    } else if labels.iter().all(|l| l.chars().count() == 1) {
        labels.concat()
    } else {
        format!("{{{}}}", labels.join(" "))
    }
}

pub fn faces_text(c: &Complex, fs: &[Face]) -> String {
    fs.iter().map(|f| face_text(c, *f)).collect::<Vec<_>>().join(", ")
}
