//! Machine-readable analysis reports: every theorem-backed value paired
//! with its brute-force oracle value and an agreement flag.

use serde::Serialize;

use crate::invariants::{cstar_envelope_blocks, propagation_number, Propagation};
use crate::opsys::generated_algebra_degree;
use crate::relation::Relation;

/// FNV-1a on the raw input bytes; cheap content fingerprint for reports.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDescriptor {
    pub path: String,
    /// FNV-1a of the file contents, hex.
    pub fnv1a64: String,
}

impl InputDescriptor {
    pub fn new(path: &std::path::Path, contents: &[u8]) -> Self {
        InputDescriptor {
            path: path.display().to_string(),
            fnv1a64: format!("{:016x}", fnv1a64(contents)),
        }
    }
}

/// Brute-force cross-check values embedded in every analysis report.
#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    /// Support-oracle degree (boolean-power stabilization).
    pub degree: u32,
    pub blocks: Vec<usize>,
    pub propagation_agrees: bool,
    pub blocks_agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub input: InputDescriptor,
    pub n: usize,
    pub connected: bool,
    pub diameter: Option<u32>,
    pub propagation: Propagation,
    pub envelope_blocks: Vec<usize>,
    pub oracle: OracleCheck,
    pub timing_ms: u64,
    pub seed: u64,
}

/// Run the invariants and their oracles on one relation.
pub fn analyze_relation(r: &Relation, input: InputDescriptor, seed: u64) -> AnalysisReport {
    let start = std::time::Instant::now();
    let propagation = propagation_number(r);
    let envelope_blocks = cstar_envelope_blocks(r);
    let (degree, blocks) = generated_algebra_degree(r);
    let oracle = OracleCheck {
        degree,
        propagation_agrees: degree == propagation.overall,
        blocks_agree: blocks == envelope_blocks,
        blocks,
    };
    AnalysisReport {
        input,
        n: r.n(),
        connected: r.is_connected(),
        diameter: r.diameter(),
        propagation,
        envelope_blocks,
        oracle,
        timing_ms: start.elapsed().as_millis() as u64,
        seed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_embeds_oracle_agreement() {
        let r = crate::invariants::band_relation(5, 2).unwrap();
        let input = InputDescriptor::new(std::path::Path::new("band.json"), b"test");
        let report = analyze_relation(&r, input, 42);
        assert_eq!(report.propagation.overall, 2);
        assert!(report.oracle.propagation_agrees);
        assert!(report.oracle.blocks_agree);
        assert_eq!(report.envelope_blocks, vec![5]);
        assert!(report.connected);
    }

    #[test]
    fn fnv_is_stable() {
        assert_eq!(fnv1a64(b""), 0xcbf29ce484222325);
        assert_eq!(fnv1a64(b"a"), 0xaf63dc4c8601ec8c);
    }
}
