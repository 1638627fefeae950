//! Provenance record embedded in every JSON output.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputHash {
    pub path: String,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command_line: Vec<String>,
    pub seeds: Vec<u64>,
    pub version: String,
    pub inputs: Vec<InputHash>,
    /// Wall-clock time; the only field that varies between identical runs.
    pub elapsed_ms: u64,
}

impl RunManifest {
    pub fn new(command_line: Vec<String>) -> Self {
        RunManifest {
            command_line,
            seeds: Vec::new(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            inputs: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn add_input(&mut self, path: &str, bytes: &[u8]) {
        self.inputs.push(InputHash { path: path.to_string(), sha256: sha256_hex(bytes) });
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// Drops every `elapsed_ms` member, recursively, so two outputs can be
/// compared for determinism.
pub fn strip_elapsed(value: &mut serde_json::Value) {
    match value {
        serde_json::Value::Object(map) => {
            map.remove("elapsed_ms");
            map.values_mut().for_each(strip_elapsed);
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(strip_elapsed),
        _ => {}
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_digest() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn strip_is_recursive() {
        let mut v = serde_json::json!({"elapsed_ms": 3, "a": [{"elapsed_ms": 1, "b": 2}]});
        strip_elapsed(&mut v);
        assert_eq!(v, serde_json::json!({"a": [{"b": 2}]}));
    }
}
