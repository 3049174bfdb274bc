use std::collections::{BTreeMap, BTreeSet};

use crosskit_graph::{EdgeId, Graph};

use crate::planarity::{planar_embedding, Embedding};
use crate::OracleError;

/// A choice of crossing pairs of independent edges, each pair at most once,
/// and for every edge the order in which it meets its crossings, read from
/// its first endpoint. Crossing `i` is the `i`-th pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarizationSelection {
    pairs: Vec<(EdgeId, EdgeId)>,
    paths: Vec<Vec<usize>>,
}

impl PlanarizationSelection {
    /// Checks the pairs against `g`. `orderings` gives the crossing order
    /// along edges; an edge with fewer than two crossings may be left out.
    pub fn new(
        g: &Graph,
        pairs: &[(EdgeId, EdgeId)],
        orderings: &BTreeMap<EdgeId, Vec<usize>>,
    ) -> Result<PlanarizationSelection, OracleError> {
        let m = g.edge_count();
        let mut seen = BTreeSet::new();
        let mut on_edge: Vec<Vec<usize>> = vec![Vec::new(); m];
        for (i, &(e, f)) in pairs.iter().enumerate() {
            for x in [e, f] {
                if x.0 >= m {
                    return Err(OracleError::UnknownEdge(x.0));
                }
            }
            if e == f || g.edge(e).shares_endpoint(&g.edge(f)) {
                return Err(OracleError::AdjacentPair(e.0, f.0));
            }
            if !seen.insert((e.min(f), e.max(f))) {
                return Err(OracleError::DuplicatePair(e.0, f.0));
            }
            on_edge[e.0].push(i);
            on_edge[f.0].push(i);
        }
        let mut paths = on_edge.clone();
        for (&e, order) in orderings {
            if e.0 >= m {
                return Err(OracleError::UnknownEdge(e.0));
            }
            let mut got = order.clone();
            got.sort_unstable();
            if got != on_edge[e.0] {
                return Err(OracleError::BadOrdering(format!(
                    "edge {} lists crossings {order:?} but takes part in {:?}",
                    e.0, on_edge[e.0]
                )));
            }
            paths[e.0] = order.clone();
        }
        for (e, p) in paths.iter().enumerate() {
            if p.len() >= 2 && !orderings.contains_key(&EdgeId(e)) {
                return Err(OracleError::BadOrdering(format!("edge {e} has {} crossings but no order", p.len())));
            }
        }
        Ok(PlanarizationSelection { pairs: pairs.iter().map(|&(e, f)| (e.min(f), e.max(f))).collect(), paths })
    }

    /// Trusted constructor for the search, which only builds valid selections.
    pub(crate) fn from_checked(pairs: Vec<(EdgeId, EdgeId)>, paths: Vec<Vec<usize>>) -> PlanarizationSelection {
        PlanarizationSelection { pairs, paths }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(EdgeId, EdgeId)] {
        &self.pairs
    }

    /// Crossing indices along edge `e`, from its first endpoint.
    pub fn path(&self, e: EdgeId) -> &[usize] {
        &self.paths[e.0]
    }
}

/// The graph obtained by turning every selected crossing into a vertex.
/// Vertices of the original graph keep their indices; crossing `i` is
/// vertex `n + i`. Segment `s` of edge `e` is recorded for every new edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planarization {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
    pub segments: Vec<(EdgeId, usize)>,
}

impl Planarization {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn embedding(&self) -> Option<Embedding> {
        planar_embedding(self.vertex_count, &self.edges)
    }

    pub fn is_planar(&self) -> bool {
        self.embedding().is_some()
    }
}

/// Replaces each selected crossing by a degree-4 vertex splitting both
/// edges in the chosen orders.
pub fn planarize(g: &Graph, sel: &PlanarizationSelection) -> Planarization {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(g.edge_count() + 2 * sel.len());
    let mut segments = Vec::with_capacity(edges.capacity());
    for e in g.edge_ids() {
        let ed = g.edge(e);
        let nodes: Vec<usize> =
            std::iter::once(ed.a.0).chain(sel.path(e).iter().map(|c| n + c)).chain(std::iter::once(ed.b.0)).collect();
        for (s, w) in nodes.windows(2).enumerate() {
            edges.push((w[0], w[1]));
            segments.push((e, s));
        }
    }
    Planarization { vertex_count: n + sel.len(), edges, segments }
}
