//! A serializable summary of a recognition run.
//!
//! The JSON shape is stable: fields appear in declaration order, optional
//! fields are omitted (never `null`), and no timestamps or environment
//! data are included, so equal inputs produce byte-equal reports.

use serde::Serialize;

use super::{Diagnosis, Recognition};
use crate::zdgraph::Graph;

/// One degree layer of the (attempted) stratification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LayerReport {
    /// Layer index `k`; members have degree `2^k - 1`.
    pub k: usize,
    /// Number of vertices in the layer.
    pub size: usize,
    /// The distinct degrees observed in the layer, ascending.  A single
    /// entry on acceptance; kept plural so rejected graphs can still be
    /// summarized by their degree spectrum.
    pub degrees: Vec<usize>,
}

/// The machine-readable outcome of [`recognize`](super::recognize).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecognitionReport {
    /// `"Accepted"` or `"Rejected"`.
    pub verdict: &'static str,
    /// The recognized ground-set size, or the clique number established
    /// before rejection (0 when rejected before one was found).
    pub n: usize,
    /// Layer census.  On acceptance, layer `k` holds the vertices of
    /// degree `2^k - 1`; on rejection the graph's degree spectrum is
    /// binned the same way, with layer 0 collecting degrees not of that
    /// form.
    pub layers: Vec<LayerReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_check: Option<&'static str>,
    /// Witness vertices by label.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    /// On acceptance: each vertex label with its subset bitmask.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub iso: Option<Vec<(String, u64)>>,
}

/// Bins every vertex by whether its degree is `2^k - 1` (layer `k`) or
/// not (layer 0), recording the observed degrees per bin.
fn degree_census(g: &Graph) -> Vec<LayerReport> {
    let mut bins: std::collections::BTreeMap<usize, (usize, std::collections::BTreeSet<usize>)> =
        std::collections::BTreeMap::new();
    for v in 0..g.n_vertices() {
        let d = g.degree(v);
        let k = if (d + 1).is_power_of_two() && d >= 1 {
            (d + 1).trailing_zeros() as usize
        } else {
            0
        };
        let entry = bins.entry(k).or_default();
        entry.0 += 1;
        entry.1.insert(d);
    }
    bins.into_iter()
        .map(|(k, (size, degrees))| LayerReport {
            k,
            size,
            degrees: degrees.into_iter().collect(),
        })
        .collect()
}

/// Renders a recognition outcome for the graph it was computed on.
pub fn recognition_report(
    g: &Graph,
    outcome: &Result<Recognition, Diagnosis>,
) -> RecognitionReport {
    match outcome {
        Ok(rec) => {
            let layers = (1..rec.partition.n())
                .map(|k| {
                    let members = rec.partition.layer_members(k);
                    LayerReport {
                        k,
                        size: members.len(),
                        degrees: vec![(1 << k) - 1],
                    }
                })
                .collect();
            let iso = (0..g.n_vertices())
                .map(|v| (g.display_label(v), rec.iso.subset(v)))
                .collect();
            RecognitionReport {
                verdict: "Accepted",
                n: rec.partition.n(),
                layers,
                failed_check: None,
                witness: None,
                iso: Some(iso),
            }
        }
        Err(diagnosis) => RecognitionReport {
            verdict: "Rejected",
            n: diagnosis.n,
            layers: degree_census(g),
            failed_check: Some(diagnosis.failed_check),
            witness: Some(
                diagnosis
                    .witness
                    .iter()
                    .map(|&v| g.display_label(v))
                    .collect(),
            ),
            iso: None,
        },
    }
}
