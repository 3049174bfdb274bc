use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::{EdgeClass, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// An edge with a distinguished first endpoint `a`; drawings read edge paths
/// from `a` to `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: VertexId,
    pub b: VertexId,
}

impl Edge {
    pub fn has(&self, v: VertexId) -> bool {
        self.a == v || self.b == v
    }

    pub fn other(&self, v: VertexId) -> VertexId {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }

    pub fn shares_endpoint(&self, o: &Edge) -> bool {
        self.has(o.a) || self.has(o.b)
    }

    fn key(&self) -> (VertexId, VertexId) {
        (self.a.min(self.b), self.a.max(self.b))
    }
}

/// A simple graph whose vertices are grouped into labeled parts.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    parts: Vec<Vec<VertexId>>,
    part_of: Vec<usize>,
    edges: Vec<Edge>,
    lookup: HashMap<String, VertexId>,
    edge_lookup: HashMap<(VertexId, VertexId), EdgeId>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.parts == other.parts && self.edges == other.edges
    }
}

impl Eq for Graph {}

fn part_prefixes(k: usize) -> Vec<String> {
    const NAMED: [&str; 4] = ["o", "x", "y", "z"];
    if k <= NAMED.len() {
        NAMED[NAMED.len() - k..].iter().map(|s| s.to_string()).collect()
    } else {
        (0..k)
            .map(|i| {
                let mut s = String::new();
                let mut n = i;
                loop {
                    s.insert(0, (b'a' + (n % 26) as u8) as char);
                    if n < 26 {
                        break;
                    }
                    n = n / 26 - 1;
                }
                s
            })
            .collect()
    }
}

/// Default labels: the four-part case uses `o`, `x`, `y1..`, `z1..`; fewer
/// parts take the trailing prefixes (`y`, `z` for two parts). Singleton parts
/// named `o` or `x` keep the bare letter.
pub(crate) fn default_labels(sizes: &[usize]) -> Vec<Vec<String>> {
    let prefixes = part_prefixes(sizes.len());
    sizes
        .iter()
        .zip(prefixes)
        .map(|(&size, p)| {
            if size == 1 && (p == "o" || p == "x") {
                vec![p]
            } else {
                (1..=size).map(|i| format!("{p}{i}")).collect()
            }
        })
        .collect()
}

impl Graph {
    /// Builds a graph from labeled parts and label-pair edges.
    pub fn new(parts: Vec<Vec<String>>, edges: &[(String, String)]) -> Result<Graph, GraphError> {
        let mut g = Graph::with_parts(parts)?;
        for (a, b) in edges {
            let u = g.require(a)?;
            let v = g.require(b)?;
            g.push_edge(u, v)?;
        }
        Ok(g)
    }

    fn with_parts(parts: Vec<Vec<String>>) -> Result<Graph, GraphError> {
        let mut labels = Vec::new();
        let mut ids = Vec::new();
        let mut part_of = Vec::new();
        let mut lookup = HashMap::new();
        for (pi, part) in parts.into_iter().enumerate() {
            if part.is_empty() {
                return Err(GraphError::InvalidParts(format!("part {pi} is empty")));
            }
            let mut members = Vec::with_capacity(part.len());
            for label in part {
                if label.is_empty() {
                    return Err(GraphError::InvalidParts("empty vertex label".into()));
                }
                let id = VertexId(labels.len());
                if lookup.insert(label.clone(), id).is_some() {
                    return Err(GraphError::DuplicateLabel(label));
                }
                labels.push(label);
                part_of.push(pi);
                members.push(id);
            }
            ids.push(members);
        }
        Ok(Graph { labels, parts: ids, part_of, edges: Vec::new(), lookup, edge_lookup: HashMap::new() })
    }

    fn push_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        if u == v {
            let l = self.label(u).to_string();
            return Err(GraphError::InvalidEdge(l.clone(), l, "self-loop"));
        }
        let e = Edge { a: u, b: v };
        let id = EdgeId(self.edges.len());
        if self.edge_lookup.insert(e.key(), id).is_some() {
            return Err(GraphError::InvalidEdge(
                self.label(u).to_string(),
                self.label(v).to_string(),
                "duplicate edge",
            ));
        }
        self.edges.push(e);
        Ok(id)
    }

    /// `K_{sizes}` with default labels.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph, GraphError> {
        if sizes.is_empty() {
            return Err(GraphError::InvalidParts("no parts".into()));
        }
        if let Some(i) = sizes.iter().position(|&s| s == 0) {
            return Err(GraphError::InvalidParts(format!("part {i} has size 0")));
        }
        Graph::complete_multipartite_labeled(default_labels(sizes))
    }

    /// The complete multipartite graph over the given labeled parts. Edges
    /// are listed in lexicographic order of vertex ids.
    pub fn complete_multipartite_labeled(parts: Vec<Vec<String>>) -> Result<Graph, GraphError> {
        if parts.is_empty() {
            return Err(GraphError::InvalidParts("no parts".into()));
        }
        let mut g = Graph::with_parts(parts)?;
        let n = g.labels.len();
        for i in 0..n {
            for j in i + 1..n {
                if g.part_of[i] != g.part_of[j] {
                    g.push_edge(VertexId(i), VertexId(j))?;
                }
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.labels.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.labels[v.0]
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.lookup.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<VertexId, GraphError> {
        self.vertex(label).ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e.0]
    }

    pub fn find_edge(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edge_lookup.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn find_edge_by_label(&self, u: &str, v: &str) -> Result<Option<EdgeId>, GraphError> {
        Ok(self.find_edge(self.require(u)?, self.require(v)?))
    }

    pub fn edge_labels(&self, e: EdgeId) -> (&str, &str) {
        let ed = self.edges[e.0];
        (self.label(ed.a), self.label(ed.b))
    }

    pub fn parts(&self) -> &[Vec<VertexId>] {
        &self.parts
    }

    pub fn part_of(&self, v: VertexId) -> usize {
        self.part_of[v.0]
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    pub fn part_labels(&self) -> Vec<Vec<String>> {
        self.parts.iter().map(|p| p.iter().map(|&v| self.labels[v.0].clone()).collect()).collect()
    }

    /// Neighbors of `v` in edge order.
    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.edges.iter().filter(|e| e.has(v)).map(|e| e.other(v)).collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.has(v)).count()
    }

    /// Edges incident to `v`.
    pub fn incident(&self, v: VertexId) -> Vec<EdgeId> {
        self.edge_ids().filter(|&e| self.edges[e.0].has(v)).collect()
    }

    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.find_edge(u, v).is_some()
    }

    /// `E(V1, V2)` by labels.
    pub fn edge_class(&self, name: &str, v1: &[&str], v2: &[&str]) -> Result<EdgeClass, GraphError> {
        let a = v1.iter().map(|l| self.require(l)).collect::<Result<Vec<_>, _>>()?;
        let b = v2.iter().map(|l| self.require(l)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.edge_class_ids(name, &a, &b))
    }

    /// `E(V1, V2)` by vertex ids: edges with one end in each set.
    pub fn edge_class_ids(&self, name: &str, v1: &[VertexId], v2: &[VertexId]) -> EdgeClass {
        let s1: BTreeSet<_> = v1.iter().copied().collect();
        let s2: BTreeSet<_> = v2.iter().copied().collect();
        let members = self
            .edge_ids()
            .filter(|&e| {
                let ed = self.edges[e.0];
                (s1.contains(&ed.a) && s2.contains(&ed.b)) || (s1.contains(&ed.b) && s2.contains(&ed.a))
            })
            .collect();
        EdgeClass::new(name, members)
    }

    /// All edges incident to `v`, as a class.
    pub fn star_class(&self, name: &str, v: VertexId) -> EdgeClass {
        EdgeClass::new(name, self.incident(v).into_iter().collect())
    }

    pub fn all_edges_class(&self, name: &str) -> EdgeClass {
        EdgeClass::new(name, self.edge_ids().collect())
    }

    /// `G^{new T v}`: adds `new_label` adjacent to every neighbor of `v`.
    /// The new vertex forms its own singleton part.
    pub fn twin_via_template(&self, v: &str, new_label: &str) -> Result<Graph, GraphError> {
        let vid = self.require(v)?;
        let mut g = self.with_vertex(new_label)?;
        let t = g.require(new_label)?;
        for u in self.neighbors(vid) {
            g.push_edge(t, u)?;
        }
        Ok(g)
    }

    /// Adds an isolated vertex in a new singleton part.
    pub fn with_vertex(&self, label: &str) -> Result<Graph, GraphError> {
        let mut parts = self.part_labels();
        parts.push(vec![label.to_string()]);
        let pairs: Vec<(String, String)> =
            self.edges.iter().map(|e| (self.labels[e.a.0].clone(), self.labels[e.b.0].clone())).collect();
        Graph::new(parts, &pairs)
    }

    pub fn with_edge(&self, u: &str, v: &str) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        let a = g.require(u)?;
        let b = g.require(v)?;
        g.push_edge(a, b)?;
        Ok(g)
    }

    /// Removes the given edges; surviving edges keep their relative order.
    pub fn without_edges(&self, remove: &BTreeSet<EdgeId>) -> Graph {
        let mut g = Graph {
            labels: self.labels.clone(),
            parts: self.parts.clone(),
            part_of: self.part_of.clone(),
            edges: Vec::new(),
            lookup: self.lookup.clone(),
            edge_lookup: HashMap::new(),
        };
        for (i, e) in self.edges.iter().enumerate() {
            if !remove.contains(&EdgeId(i)) {
                g.push_edge(e.a, e.b).expect("subset of a simple graph is simple");
            }
        }
        g
    }

    /// Rebuilds the graph with a new edge list (label pairs), keeping parts.
    pub fn with_edge_list(&self, edges: &[(String, String)]) -> Result<Graph, GraphError> {
        Graph::new(self.part_labels(), edges)
    }

    /// Edges of the complete multipartite graph on these parts that are
    /// missing here.
    pub fn removed_edges(&self) -> Vec<(VertexId, VertexId)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (u, v) = (VertexId(i), VertexId(j));
                if self.part_of[i] != self.part_of[j] && !self.are_adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edges present here that the complete multipartite graph on these parts
    /// lacks (edges inside a part).
    pub fn extra_edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out: Vec<_> = self
            .edges
            .iter()
            .filter(|e| self.part_of[e.a.0] == self.part_of[e.b.0])
            .map(|e| (e.a.min(e.b), e.a.max(e.b)))
            .collect();
        out.sort();
        out
    }

    /// If the graph is complete multipartite (non-adjacency is an
    /// equivalence relation), the sorted part sizes of that structure.
    pub fn complete_multipartite_shape(&self) -> Option<Vec<usize>> {
        let classes = self.independent_classes()?;
        let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        Some(sizes)
    }

    /// The maximal independent classes when non-adjacency is an equivalence
    /// relation; `None` otherwise.
    pub fn independent_classes(&self) -> Option<Vec<Vec<VertexId>>> {
        let n = self.vertex_count();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<VertexId>> = Vec::new();
        for i in 0..n {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let members: Vec<VertexId> =
                (0..n).filter(|&j| j == i || !self.are_adjacent(VertexId(i), VertexId(j))).map(VertexId).collect();
            for &m in &members {
                if class_of[m.0] != usize::MAX {
                    return None;
                }
                class_of[m.0] = c;
            }
            classes.push(members);
        }
        for i in 0..n {
            for j in i + 1..n {
                let same = class_of[i] == class_of[j];
                if same == self.are_adjacent(VertexId(i), VertexId(j)) {
                    return None;
                }
            }
        }
        Some(classes)
    }

    /// True iff both graphs have the same labels and the same edge set as
    /// unordered label pairs.
    pub fn same_labeled_edges(&self, other: &Graph) -> bool {
        let mine: BTreeSet<(String, String)> = self.label_pairs().into_iter().collect();
        let theirs: BTreeSet<(String, String)> = other.label_pairs().into_iter().collect();
        let l1: BTreeSet<&String> = self.labels.iter().collect();
        let l2: BTreeSet<&String> = other.labels.iter().collect();
        l1 == l2 && mine == theirs
    }

    /// Edge label pairs, each sorted, in edge order.
    pub fn label_pairs(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|e| {
                let (a, b) = (&self.labels[e.a.0], &self.labels[e.b.0]);
                if a <= b {
                    (a.clone(), b.clone())
                } else {
                    (b.clone(), a.clone())
                }
            })
            .collect()
    }

    /// Edge label pairs in edge order, keeping each edge's orientation.
    pub fn oriented_label_pairs(&self) -> Vec<(String, String)> {
        self.edges.iter().map(|e| (self.labels[e.a.0].clone(), self.labels[e.b.0].clone())).collect()
    }

    /// Renames vertices. Edge order and orientation are preserved.
    pub fn relabeled(&self, aliases: &[(&str, &str)]) -> Result<Graph, GraphError> {
        let mut map: HashMap<&str, &str> = HashMap::new();
        for &(old, new) in aliases {
            self.require(old)?;
            map.insert(old, new);
        }
        let rename = |l: &String| map.get(l.as_str()).map(|s| s.to_string()).unwrap_or_else(|| l.clone());
        let parts = self.part_labels().iter().map(|p| p.iter().map(rename).collect()).collect();
        let edges: Vec<(String, String)> =
            self.oriented_label_pairs().iter().map(|(a, b)| (rename(a), rename(b))).collect();
        Graph::new(parts, &edges)
    }

    /// Same vertices and edges grouped into new parts, which must cover the
    /// vertex set exactly. Edge ids are preserved.
    pub fn regrouped(&self, parts: Vec<Vec<String>>) -> Result<Graph, GraphError> {
        let given: BTreeSet<&String> = parts.iter().flatten().collect();
        let mine: BTreeSet<&String> = self.labels.iter().collect();
        if given != mine || parts.iter().map(Vec::len).sum::<usize>() != self.labels.len() {
            return Err(GraphError::InvalidParts("parts must cover the vertex set exactly".into()));
        }
        let g = Graph::new(parts, &self.oriented_label_pairs())?;
        Ok(g)
    }

    /// `K=...` spec of the part sizes.
    pub fn spec_string(&self) -> String {
        crate::format_graph_spec(&self.part_sizes())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.a.0].push(e.b.0);
            adj[e.b.0].push(e.a.0);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_part_labels() {
        let g = Graph::complete_multipartite(&[1, 1, 4, 4]).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 33);
        assert_eq!(g.labels()[..4], ["o", "x", "y1", "y2"]);
        assert_eq!(g.labels()[9], "z4");
    }

    #[test]
    fn bipartite_and_tripartite_counts() {
        assert_eq!(Graph::complete_multipartite(&[3, 3]).unwrap().edge_count(), 9);
        assert_eq!(Graph::complete_multipartite(&[2, 3, 2]).unwrap().edge_count(), 16);
        assert_eq!(Graph::complete_multipartite(&[2, 3]).unwrap().labels(), ["y1", "y2", "z1", "z2", "z3"]);
    }

    #[test]
    fn empty_parts_rejected() {
        assert_eq!(Graph::complete_multipartite(&[]).unwrap_err().code(), "INVALID_PARTS");
        assert_eq!(Graph::complete_multipartite(&[2, 0]).unwrap_err().code(), "INVALID_PARTS");
    }

    #[test]
    fn many_parts_get_letter_prefixes() {
        let g = Graph::complete_multipartite(&[1; 6]).unwrap();
        assert_eq!(g.labels(), ["a1", "b1", "c1", "d1", "e1", "f1"]);
        assert_eq!(part_prefixes(28)[27], "ab");
    }

    #[test]
    fn edge_classes_of_k1144() {
        let g = Graph::complete_multipartite(&[1, 1, 4, 4]).unwrap();
        let z = ["z1", "z2", "z3", "z4"];
        let y = ["y1", "y2", "y3", "y4"];
        assert_eq!(g.edge_class("OZ", &["o"], &z).unwrap().len(), 4);
        assert_eq!(g.edge_class("YZ", &y, &z).unwrap().len(), 16);
        let e = g.edge_class("bad", &["q"], &z).unwrap_err();
        assert_eq!(e.code(), "UNKNOWN_VERTEX");
    }

    #[test]
    fn independent_side_has_no_class_edges() {
        let g = Graph::complete_multipartite(&[3, 3]).unwrap();
        let side = ["y1", "y2", "y3"];
        assert!(g.edge_class("s", &side, &side).unwrap().is_empty());
    }

    #[test]
    fn twin_of_star_center() {
        let g = Graph::complete_multipartite(&[1, 3]).unwrap();
        let t = g.twin_via_template("y1", "t").unwrap();
        assert_eq!(t.edge_count(), 6);
        let tv = t.vertex("t").unwrap();
        let mut n: Vec<_> = t.neighbors(tv).iter().map(|&v| t.label(v).to_string()).collect();
        n.sort();
        assert_eq!(n, ["z1", "z2", "z3"]);
        assert_eq!(g.twin_via_template("y1", "z1").unwrap_err().code(), "DUPLICATE_LABEL");
    }

    #[test]
    fn twin_in_k33_gives_k34_shape() {
        let g = Graph::complete_multipartite(&[3, 3]).unwrap();
        let t = g.twin_via_template("y2", "y9").unwrap();
        assert_eq!(t.complete_multipartite_shape(), Some(vec![3, 4]));
    }

    #[test]
    fn twin_of_path_end() {
        let g = Graph::new(
            vec![vec!["a".into()], vec!["b".into()], vec!["c".into()]],
            &[("a".into(), "b".into()), ("b".into(), "c".into())],
        )
        .unwrap();
        let t = g.twin_via_template("a", "a2").unwrap();
        assert_eq!(t.edge_count(), 3);
        assert_eq!(t.degree(t.vertex("a2").unwrap()), 1);
    }

    #[test]
    fn recognition_rejects_non_multipartite() {
        let g = Graph::complete_multipartite(&[2, 2]).unwrap();
        let e = g.find_edge_by_label("y1", "z1").unwrap().unwrap();
        let h = g.without_edges(&[e].into_iter().collect());
        assert_eq!(h.complete_multipartite_shape(), None);
        assert_eq!(h.removed_edges().len(), 1);
        assert_eq!(g.complete_multipartite_shape(), Some(vec![2, 2]));
    }

    #[test]
    fn duplicate_and_loop_edges_rejected() {
        let parts = vec![vec!["a".into()], vec!["b".into()]];
        let dup = Graph::new(parts.clone(), &[("a".into(), "b".into()), ("b".into(), "a".into())]);
        assert_eq!(dup.unwrap_err().code(), "INVALID_EDGE");
        let lp = Graph::new(parts, &[("a".into(), "a".into())]);
        assert_eq!(lp.unwrap_err().code(), "INVALID_EDGE");
    }

    #[test]
    fn relabel_keeps_edge_order() {
        let g = Graph::complete_multipartite(&[1, 1, 2, 2]).unwrap();
        let r = g.relabeled(&[("x", "z0")]).unwrap();
        assert_eq!(r.edge_count(), g.edge_count());
        for e in g.edge_ids() {
            let (a, b) = g.edge_labels(e);
            let (c, d) = r.edge_labels(e);
            assert_eq!((a.replace('x', "z0"), b.replace('x', "z0")), (c.to_string(), d.to_string()));
        }
        assert!(g.relabeled(&[("q", "w")]).is_err());
        assert_eq!(g.relabeled(&[("x", "o")]).unwrap_err().code(), "DUPLICATE_LABEL");
    }

    #[test]
    fn regroup_recovers_bipartition() {
        let g = Graph::complete_multipartite(&[1, 2, 2]).unwrap();
        let b = g.edge_class("xz", &["x"], &["z1", "z2"]).unwrap();
        let h = g.without_edges(&b.members);
        let parts = vec![vec!["x".to_string(), "z1".into(), "z2".into()], vec!["y1".to_string(), "y2".into()]];
        let r = h.regrouped(parts).unwrap();
        assert_eq!(r.complete_multipartite_shape(), Some(vec![2, 3]));
        assert!(r.removed_edges().is_empty());
        assert!(h.regrouped(vec![vec!["x".into()]]).is_err());
    }
}
