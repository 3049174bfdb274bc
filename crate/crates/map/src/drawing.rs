use std::collections::BTreeMap;
use std::fmt;

use crosskit_graph::{EdgeId, Graph, VertexId};

use crate::MapError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossingId(pub usize);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}", self.0 + 1)
    }
}

/// A node of the plane map: a real vertex or a degree-4 crossing node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Node {
    Vertex(VertexId),
    Crossing(CrossingId),
}

/// The end of segment `seg` of `edge` at some node. Segment `k` runs from
/// the `k`-th to the `k+1`-th node of the edge's path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SegEnd {
    pub edge: EdgeId,
    pub seg: usize,
}

/// A drawing of a graph as a plane map: crossing nodes, the order in which
/// each edge meets its crossings, and a counterclockwise rotation at every
/// node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    graph: Graph,
    crossings: Vec<[EdgeId; 2]>,
    paths: Vec<Vec<CrossingId>>,
    rotations: Vec<Vec<SegEnd>>,
}

impl Drawing {
    /// Assembles a drawing, checking that every rotation lists exactly the
    /// segment ends present at its node. The goodness axioms are left to
    /// [`Drawing::validate`]. Rotations are indexed by vertices first, then
    /// crossings, and are normalized to start at their smallest entry.
    pub fn from_parts(
        graph: Graph,
        crossings: Vec<[EdgeId; 2]>,
        paths: Vec<Vec<CrossingId>>,
        rotations: Vec<Vec<SegEnd>>,
    ) -> Result<Drawing, MapError> {
        let nv = graph.vertex_count();
        let nc = crossings.len();
        if paths.len() != graph.edge_count() {
            return Err(MapError::Malformed(format!("{} edge paths for {} edges", paths.len(), graph.edge_count())));
        }
        if rotations.len() != nv + nc {
            return Err(MapError::Malformed(format!("{} rotations for {} nodes", rotations.len(), nv + nc)));
        }
        for (i, pair) in crossings.iter().enumerate() {
            for e in pair {
                if e.0 >= graph.edge_count() {
                    return Err(MapError::Malformed(format!("crossing c{} names edge {}", i + 1, e.0)));
                }
            }
        }
        let mut expected: Vec<Vec<SegEnd>> = vec![Vec::new(); nv + nc];
        for (ei, path) in paths.iter().enumerate() {
            for c in path {
                if c.0 >= nc {
                    return Err(MapError::Malformed(format!("edge {ei} passes unknown crossing {}", c.0)));
                }
            }
            let e = EdgeId(ei);
            let ed = graph.edge(e);
            let seq: Vec<usize> =
                std::iter::once(ed.a.0).chain(path.iter().map(|c| nv + c.0)).chain(std::iter::once(ed.b.0)).collect();
            for (k, w) in seq.windows(2).enumerate() {
                if w[0] == w[1] {
                    return Err(MapError::Malformed(format!("edge {ei} has a segment from a node to itself")));
                }
                expected[w[0]].push(SegEnd { edge: e, seg: k });
                expected[w[1]].push(SegEnd { edge: e, seg: k });
            }
        }
        let mut rotations = rotations;
        for (n, (rot, exp)) in rotations.iter_mut().zip(expected.iter_mut()).enumerate() {
            let mut got = rot.clone();
            got.sort();
            exp.sort();
            if got != *exp {
                return Err(MapError::Malformed(format!(
                    "rotation at node {n} does not list exactly its segment ends"
                )));
            }
            normalize(rot);
        }
        Ok(Drawing { graph, crossings, paths, rotations })
    }

    /// A crossing-free drawing given by the neighbor order around each
    /// vertex (counterclockwise). Vertices left out take their edges in edge
    /// order, which is only a real choice from degree 3 on.
    pub fn from_vertex_rotations(graph: Graph, order: &[(&str, &[&str])]) -> Result<Drawing, MapError> {
        let nv = graph.vertex_count();
        let mut rotations = vec![Vec::new(); nv];
        for e in graph.edge_ids() {
            let ed = graph.edge(e);
            for v in [ed.a, ed.b] {
                if !order.iter().any(|(l, _)| graph.vertex(l) == Some(v)) {
                    rotations[v.0].push(SegEnd { edge: e, seg: 0 });
                }
            }
        }
        for (v, nbrs) in order {
            let vid = graph.require(v)?;
            for u in nbrs.iter() {
                let uid = graph.require(u)?;
                let e =
                    graph.find_edge(vid, uid).ok_or_else(|| MapError::NotANeighbor(u.to_string(), v.to_string()))?;
                rotations[vid.0].push(SegEnd { edge: e, seg: 0 });
            }
        }
        let paths = vec![Vec::new(); graph.edge_count()];
        Drawing::from_parts(graph, Vec::new(), paths, rotations)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossing_ids(&self) -> impl Iterator<Item = CrossingId> {
        (0..self.crossings.len()).map(CrossingId)
    }

    /// The two edges meeting at a crossing node.
    pub fn crossing(&self, c: CrossingId) -> [EdgeId; 2] {
        self.crossings[c.0]
    }

    pub fn crossings(&self) -> &[[EdgeId; 2]] {
        &self.crossings
    }

    /// Crossings of an edge, ordered from its first endpoint.
    pub fn path(&self, e: EdgeId) -> &[CrossingId] {
        &self.paths[e.0]
    }

    pub fn paths(&self) -> &[Vec<CrossingId>] {
        &self.paths
    }

    pub fn node_count(&self) -> usize {
        self.rotations.len()
    }

    pub fn node_index(&self, n: Node) -> usize {
        match n {
            Node::Vertex(v) => v.0,
            Node::Crossing(c) => self.graph.vertex_count() + c.0,
        }
    }

    pub fn node_at(&self, index: usize) -> Node {
        let nv = self.graph.vertex_count();
        if index < nv {
            Node::Vertex(VertexId(index))
        } else {
            Node::Crossing(CrossingId(index - nv))
        }
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        (0..self.node_count()).map(|i| self.node_at(i))
    }

    /// Counterclockwise rotation at a node.
    pub fn rotation_at(&self, n: Node) -> &[SegEnd] {
        &self.rotations[self.node_index(n)]
    }

    pub fn rotations(&self) -> &[Vec<SegEnd>] {
        &self.rotations
    }

    /// The nodes at both ends of a segment.
    pub fn segment_nodes(&self, s: SegEnd) -> (Node, Node) {
        let path = &self.paths[s.edge.0];
        let ed = self.graph.edge(s.edge);
        let at = |k: usize| {
            if k == 0 {
                Node::Vertex(ed.a)
            } else if k == path.len() + 1 {
                Node::Vertex(ed.b)
            } else {
                Node::Crossing(path[k - 1])
            }
        };
        (at(s.seg), at(s.seg + 1))
    }

    /// The node at the other end of a segment end listed at `n`.
    pub fn far_node(&self, n: Node, s: SegEnd) -> Node {
        let (a, b) = self.segment_nodes(s);
        if a == n {
            b
        } else {
            a
        }
    }

    pub fn node_name(&self, n: Node) -> String {
        match n {
            Node::Vertex(v) => self.graph.label(v).to_string(),
            Node::Crossing(c) => c.to_string(),
        }
    }

    pub fn edge_name(&self, e: EdgeId) -> String {
        let (a, b) = self.graph.edge_labels(e);
        format!("{a}{b}")
    }

    /// Same drawing with every rotation reversed.
    pub fn mirrored(&self) -> Drawing {
        let mut d = self.clone();
        for r in &mut d.rotations {
            r.reverse();
            normalize(r);
        }
        d
    }

    /// Renames vertices; the drawing itself is unchanged.
    pub fn relabeled(&self, aliases: &[(&str, &str)]) -> Result<Drawing, MapError> {
        let mut d = self.clone();
        d.graph = self.graph.relabeled(aliases)?;
        Ok(d)
    }

    /// Regroups the vertices into new parts; edge ids are unchanged.
    pub fn regrouped(&self, parts: Vec<Vec<String>>) -> Result<Drawing, MapError> {
        let graph = self.graph.regrouped(parts)?;
        let nv = graph.vertex_count();
        let mut rotations = self.rotations.clone();
        for v in self.graph.vertices() {
            let nid = graph.vertex(self.graph.label(v)).expect("same labels");
            rotations[nid.0] = self.rotations[v.0].clone();
        }
        debug_assert_eq!(rotations.len(), nv + self.crossings.len());
        Ok(Drawing { graph, crossings: self.crossings.clone(), paths: self.paths.clone(), rotations })
    }

    /// Regroups the vertices into the maximal independent classes when the
    /// graph is complete multipartite, ordering parts by size then label.
    pub fn regrouped_complete(&self) -> Result<Drawing, MapError> {
        let classes = self.graph.independent_classes().ok_or_else(|| {
            MapError::WrongFamily(format!("{} is not complete multipartite", self.graph.spec_string()))
        })?;
        let mut parts: Vec<Vec<String>> =
            classes.iter().map(|c| c.iter().map(|&v| self.graph.label(v).to_string()).collect()).collect();
        parts.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        self.regrouped(parts)
    }

    /// Crossing nodes keyed by their unordered edge pair.
    pub fn crossings_by_pair(&self) -> BTreeMap<(EdgeId, EdgeId), Vec<CrossingId>> {
        let mut m: BTreeMap<(EdgeId, EdgeId), Vec<CrossingId>> = BTreeMap::new();
        for (i, [e, f]) in self.crossings.iter().enumerate() {
            m.entry((*e.min(f), *e.max(f))).or_default().push(CrossingId(i));
        }
        m
    }
}

/// Rotates a cyclic list so that it starts at its smallest entry.
pub(crate) fn normalize(rot: &mut [SegEnd]) {
    if let Some((i, _)) = rot.iter().enumerate().min_by_key(|(_, s)| **s) {
        rot.rotate_left(i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_rotations_build_a_planar_star() {
        let g = Graph::new(
            vec![vec!["v".into()], vec!["u0".into(), "w0".into(), "u1".into(), "w1".into()]],
            &[
                ("v".into(), "u0".into()),
                ("v".into(), "u1".into()),
                ("v".into(), "w0".into()),
                ("v".into(), "w1".into()),
            ],
        )
        .unwrap();
        let d = Drawing::from_vertex_rotations(g, &[("v", &["u0", "w0", "u1", "w1"])]).unwrap();
        assert_eq!(d.crossing_count(), 0);
        let v = d.graph().vertex("v").unwrap();
        let rot: Vec<usize> = d.rotation_at(Node::Vertex(v)).iter().map(|s| s.edge.0).collect();
        assert_eq!(rot, vec![0, 2, 1, 3]);
    }

    #[test]
    fn from_parts_rejects_missing_rotation_entries() {
        let g = Graph::complete_multipartite(&[1, 2]).unwrap();
        let r = Drawing::from_parts(g, Vec::new(), vec![Vec::new(); 2], vec![Vec::new(); 3]);
        assert_eq!(r.unwrap_err().code(), "MALFORMED");
    }

    #[test]
    fn mirror_twice_is_identity() {
        let g = Graph::complete_multipartite(&[1, 3]).unwrap();
        let d = Drawing::from_vertex_rotations(g, &[("z", &["y1", "y2", "y3"])]);
        assert!(d.is_err());
        let g = Graph::complete_multipartite(&[1, 3]).unwrap();
        let d = Drawing::from_vertex_rotations(
            g,
            &[("y1", &["z1", "z2", "z3"]), ("z1", &["y1"]), ("z2", &["y1"]), ("z3", &["y1"])],
        )
        .unwrap();
        assert_eq!(d.mirrored().mirrored(), d);
    }
}
