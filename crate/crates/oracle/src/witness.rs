use std::collections::{BTreeMap, HashMap};

use crosskit_graph::{EdgeId, Graph};
use crosskit_map::{CrossingId, Drawing, SegEnd};
use serde::{Deserialize, Serialize};

use crate::planarize::{planarize, PlanarizationSelection};
use crate::OracleError;

/// A drawing certificate: `k` crossing pairs of edge indices and, per
/// crossed edge, its crossings `c1, …, ck` in order from the edge's first
/// endpoint. Edges are keyed by their index in decimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Witness {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    pub k: usize,
    pub pairs: Vec<[usize; 2]>,
    pub orderings: BTreeMap<String, Vec<String>>,
}

fn crossing_name(i: usize) -> String {
    format!("c{}", i + 1)
}

fn parse_crossing(name: &str, k: usize) -> Result<usize, OracleError> {
    name.strip_prefix('c')
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&i| (1..=k).contains(&i) && name == crossing_name(i - 1))
        .map(|i| i - 1)
        .ok_or_else(|| OracleError::BadWitness(format!("unknown crossing `{name}`")))
}

impl Witness {
    pub(crate) fn from_selection(g: &Graph, sel: &PlanarizationSelection) -> Witness {
        let orderings = g
            .edge_ids()
            .filter(|&e| !sel.path(e).is_empty())
            .map(|e| (e.0.to_string(), sel.path(e).iter().map(|&c| crossing_name(c)).collect()))
            .collect();
        Witness {
            graph: g.complete_multipartite_shape().map(|_| g.spec_string()),
            k: sel.len(),
            pairs: sel.pairs().iter().map(|&(e, f)| [e.0, f.0]).collect(),
            orderings,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witnesses serialize")
    }

    pub fn from_json(text: &str) -> Result<Witness, OracleError> {
        Ok(serde_json::from_str(text)?)
    }

    /// The selection this witness describes, checked against `g`.
    pub fn selection(&self, g: &Graph) -> Result<PlanarizationSelection, OracleError> {
        if self.k != self.pairs.len() {
            return Err(OracleError::BadWitness(format!("k = {} but {} pairs", self.k, self.pairs.len())));
        }
        if let Some(spec) = &self.graph {
            if *spec != g.spec_string() {
                return Err(OracleError::BadWitness(format!("witness is for {spec}, not {}", g.spec_string())));
            }
        }
        let pairs: Vec<(EdgeId, EdgeId)> = self.pairs.iter().map(|&[a, b]| (EdgeId(a), EdgeId(b))).collect();
        let mut orderings = BTreeMap::new();
        for (key, names) in &self.orderings {
            let e: usize = key
                .parse()
                .ok()
                .filter(|e: &usize| *key == e.to_string())
                .ok_or_else(|| OracleError::BadWitness(format!("edge key `{key}` is not an index")))?;
            let order = names.iter().map(|n| parse_crossing(n, self.k)).collect::<Result<Vec<_>, _>>()?;
            orderings.insert(EdgeId(e), order);
        }
        PlanarizationSelection::new(g, &pairs, &orderings)
    }
}

/// Rebuilds the drawing a selection describes from a plane embedding of
/// its planarization. Fails if the planarization is not planar.
pub fn selection_drawing(g: &Graph, sel: &PlanarizationSelection) -> Result<Drawing, OracleError> {
    let p = planarize(g, sel);
    let emb = p.embedding().ok_or_else(|| OracleError::BadWitness("the planarization is not planar".into()))?;
    let mut seg_of: HashMap<(usize, usize), SegEnd> = HashMap::new();
    for (&(a, b), &(edge, seg)) in p.edges.iter().zip(&p.segments) {
        seg_of.insert((a.min(b), a.max(b)), SegEnd { edge, seg });
    }
    let rotations = emb
        .rotations
        .iter()
        .enumerate()
        .map(|(x, rot)| rot.iter().map(|&y| seg_of[&(x.min(y), x.max(y))]).collect())
        .collect();
    let crossings = sel.pairs().iter().map(|&(e, f)| [e, f]).collect();
    let paths = g.edge_ids().map(|e| sel.path(e).iter().map(|&c| CrossingId(c)).collect()).collect();
    Ok(Drawing::from_parts(g.clone(), crossings, paths, rotations)?)
}

/// Re-checks a witness without the search: the selection must be
/// admissible, and the drawing rebuilt from it must pass the good-drawing
/// validator with exactly `k` crossings.
pub fn verify_witness(g: &Graph, w: &Witness) -> Result<Drawing, OracleError> {
    let sel = w.selection(g)?;
    let d = selection_drawing(g, &sel)?;
    let report = d.validate();
    if !report.passed() {
        return Err(OracleError::BadWitness(format!("rebuilt drawing is not good: {:?}", report.violations)));
    }
    if d.crossings_total() != w.k {
        return Err(OracleError::BadWitness(format!("rebuilt drawing has {} crossings", d.crossings_total())));
    }
    Ok(d)
}
