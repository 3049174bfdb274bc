//! Mutable half-edge form of a drawing, used while performing surgery.
//!
//! Every segment is a pair of twin darts. Splitting a segment keeps both
//! old darts at their original endpoints, so rotations away from the split
//! are untouched. A dart's face is the face on its left; with
//! counterclockwise rotations the successor of `d` along its face is
//! `rot_prev(twin(d))`, and the angular sector from `r` to `rot_next(r)`
//! lies in the face of `r`.

use crosskit_graph::{EdgeId, Graph};

use crate::drawing::{CrossingId, Drawing, SegEnd};
use crate::MapError;

pub(crate) type Dart = usize;

#[derive(Debug, Clone)]
pub(crate) enum NodeKind {
    Vertex(usize),
    Crossing,
}

#[derive(Debug, Clone)]
pub(crate) struct MEdge {
    pub a: usize,
    pub b: usize,
    /// Forward dart leaving vertex `a`.
    pub first: Dart,
}

#[derive(Debug, Clone)]
pub(crate) struct Map {
    pub labels: Vec<String>,
    pub parts: Vec<Vec<usize>>,
    pub vertex_node: Vec<usize>,
    pub kind: Vec<NodeKind>,
    pub node_alive: Vec<bool>,
    pub node_dart: Vec<Option<Dart>>,
    pub origin: Vec<usize>,
    pub dart_edge: Vec<usize>,
    pub twin: Vec<Dart>,
    pub next: Vec<Dart>,
    pub prev: Vec<Dart>,
    pub dart_alive: Vec<bool>,
    pub edges: Vec<Option<MEdge>>,
}

impl Map {
    pub fn from_drawing(d: &Drawing) -> Map {
        let g = d.graph();
        let nv = g.vertex_count();
        let mut m = Map {
            labels: g.labels().to_vec(),
            parts: g.parts().iter().map(|p| p.iter().map(|v| v.0).collect()).collect(),
            vertex_node: (0..nv).collect(),
            kind: (0..nv).map(NodeKind::Vertex).collect(),
            node_alive: vec![true; d.node_count()],
            node_dart: vec![None; d.node_count()],
            origin: Vec::new(),
            dart_edge: Vec::new(),
            twin: Vec::new(),
            next: Vec::new(),
            prev: Vec::new(),
            dart_alive: Vec::new(),
            edges: Vec::new(),
        };
        m.kind.extend((0..d.crossing_count()).map(|_| NodeKind::Crossing));
        // dart ids: 2*(segment offset) forward, +1 backward
        let mut offset = Vec::with_capacity(g.edge_count());
        let mut total = 0;
        for e in g.edge_ids() {
            offset.push(total);
            total += d.path(e).len() + 1;
        }
        let dart_of = |n: usize, s: SegEnd| -> Dart {
            let (a, _) = d.segment_nodes(s);
            let base = 2 * (offset[s.edge.0] + s.seg);
            if d.node_index(a) == n {
                base
            } else {
                base + 1
            }
        };
        m.origin = vec![0; 2 * total];
        m.dart_edge = vec![0; 2 * total];
        m.twin = (0..2 * total).map(|x| x ^ 1).collect();
        m.next = vec![0; 2 * total];
        m.prev = vec![0; 2 * total];
        m.dart_alive = vec![true; 2 * total];
        for e in g.edge_ids() {
            let ed = g.edge(e);
            for k in 0..=d.path(e).len() {
                let (a, b) = d.segment_nodes(SegEnd { edge: e, seg: k });
                let base = 2 * (offset[e.0] + k);
                m.origin[base] = d.node_index(a);
                m.origin[base + 1] = d.node_index(b);
                m.dart_edge[base] = e.0;
                m.dart_edge[base + 1] = e.0;
            }
            m.edges.push(Some(MEdge { a: ed.a.0, b: ed.b.0, first: 2 * offset[e.0] }));
        }
        for n in 0..d.node_count() {
            let rot: Vec<Dart> = d.rotation_at(d.node_at(n)).iter().map(|&s| dart_of(n, s)).collect();
            for (i, &x) in rot.iter().enumerate() {
                m.next[x] = rot[(i + 1) % rot.len()];
                m.prev[x] = rot[(i + rot.len() - 1) % rot.len()];
            }
            m.node_dart[n] = rot.first().copied();
        }
        m
    }

    pub fn is_vertex(&self, n: usize) -> bool {
        matches!(self.kind[n], NodeKind::Vertex(_))
    }

    pub fn vertex_of(&self, n: usize) -> Option<usize> {
        match self.kind[n] {
            NodeKind::Vertex(v) => Some(v),
            NodeKind::Crossing => None,
        }
    }

    pub fn node_of_label(&self, label: &str) -> Result<usize, MapError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|v| self.vertex_node[v])
            .ok_or_else(|| MapError::UnknownVertex(label.to_string()))
    }

    pub fn node_label(&self, n: usize) -> String {
        match self.kind[n] {
            NodeKind::Vertex(v) => self.labels[v].clone(),
            NodeKind::Crossing => format!("crossing#{n}"),
        }
    }

    pub fn dest(&self, d: Dart) -> usize {
        self.origin[self.twin[d]]
    }

    /// Darts around a node, counterclockwise.
    pub fn darts_at(&self, n: usize) -> Vec<Dart> {
        let mut out = Vec::new();
        if let Some(start) = self.node_dart[n] {
            let mut d = start;
            loop {
                out.push(d);
                d = self.next[d];
                if d == start {
                    break;
                }
            }
        }
        out
    }

    /// Dart of the edge `uv` leaving vertex node `u`.
    pub fn spoke(&self, u: usize, v: usize) -> Result<Dart, MapError> {
        let (vu, vv) = (self.vertex_of(u), self.vertex_of(v));
        let e = self
            .edges
            .iter()
            .position(|e| {
                e.as_ref().is_some_and(|e| {
                    (e.a == vu.unwrap_or(usize::MAX) && e.b == vv.unwrap_or(usize::MAX))
                        || (e.b == vu.unwrap_or(usize::MAX) && e.a == vv.unwrap_or(usize::MAX))
                })
            })
            .ok_or_else(|| MapError::UnknownEdge(format!("{}{}", self.node_label(u), self.node_label(v))))?;
        self.darts_at(u)
            .into_iter()
            .find(|&d| self.dart_edge[d] == e)
            .ok_or_else(|| MapError::Malformed(format!("edge {e} missing from rotation")))
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.iter().position(|e| e.as_ref().is_some_and(|e| (e.a == a && e.b == b) || (e.a == b && e.b == a)))
    }

    /// Darts continuing straight through a crossing node.
    pub fn straight_on(&self, d: Dart) -> Option<Dart> {
        let n = self.dest(d);
        if self.is_vertex(n) {
            None
        } else {
            Some(self.next[self.next[self.twin[d]]])
        }
    }

    /// Forward darts of an edge from its first endpoint.
    pub fn chain(&self, e: usize) -> Vec<Dart> {
        let me = self.edges[e].as_ref().expect("live edge");
        let mut out = vec![me.first];
        let mut d = me.first;
        while let Some(n) = self.straight_on(d) {
            out.push(n);
            d = n;
        }
        out
    }

    /// Chain starting at a dart leaving a vertex, up to the far vertex.
    pub fn chain_from(&self, d: Dart) -> Vec<Dart> {
        let mut out = vec![d];
        let mut d = d;
        while let Some(n) = self.straight_on(d) {
            out.push(n);
            d = n;
        }
        out
    }

    /// Face index of every dart (the face on its left).
    pub fn faces(&self) -> Vec<usize> {
        let mut face = vec![usize::MAX; self.origin.len()];
        let mut count = 0;
        for s in 0..self.origin.len() {
            if !self.dart_alive[s] || face[s] != usize::MAX {
                continue;
            }
            let mut d = s;
            while face[d] == usize::MAX {
                face[d] = count;
                d = self.prev[self.twin[d]];
            }
            count += 1;
        }
        face
    }

    fn new_node(&mut self, kind: NodeKind) -> usize {
        self.kind.push(kind);
        self.node_alive.push(true);
        self.node_dart.push(None);
        self.kind.len() - 1
    }

    fn new_dart_pair(&mut self, o1: usize, o2: usize, edge: usize) -> (Dart, Dart) {
        let a = self.origin.len();
        let b = a + 1;
        self.origin.extend([o1, o2]);
        self.dart_edge.extend([edge, edge]);
        self.twin.extend([b, a]);
        self.next.extend([a, b]);
        self.prev.extend([a, b]);
        self.dart_alive.extend([true, true]);
        (a, b)
    }

    /// Puts `new` right after `r` in the rotation at `r`'s origin.
    pub fn insert_after(&mut self, r: Dart, new: Dart) {
        let n = self.next[r];
        self.next[r] = new;
        self.prev[new] = r;
        self.next[new] = n;
        self.prev[n] = new;
    }

    fn set_rotation(&mut self, node: usize, darts: &[Dart]) {
        for (i, &x) in darts.iter().enumerate() {
            self.next[x] = darts[(i + 1) % darts.len()];
            self.prev[x] = darts[(i + darts.len() - 1) % darts.len()];
        }
        self.node_dart[node] = darts.first().copied();
    }

    fn unlink(&mut self, d: Dart) {
        let n = self.origin[d];
        let (p, q) = (self.prev[d], self.next[d]);
        if q == d {
            self.node_dart[n] = None;
        } else {
            self.next[p] = q;
            self.prev[q] = p;
            if self.node_dart[n] == Some(d) {
                self.node_dart[n] = Some(q);
            }
        }
        self.dart_alive[d] = false;
    }

    /// Splits the segment of dart `d` (X→Y) at a new node `c`. Afterwards
    /// `d` runs X→c and its old twin Y→c; returns `(c, s, t)` with
    /// `s` = c→Y and `t` = c→X. The rotation at `c` is left to the caller.
    pub fn split(&mut self, d: Dart, kind: NodeKind) -> (usize, Dart, Dart) {
        let u = self.twin[d];
        let c = self.new_node(kind);
        let e = self.dart_edge[d];
        let (t, s) = self.new_dart_pair(c, c, e);
        self.twin[d] = t;
        self.twin[t] = d;
        self.twin[s] = u;
        self.twin[u] = s;
        (c, s, t)
    }

    /// Inserts a new edge from vertex node `a` to vertex node `b`. It
    /// starts in the corner after `r0`, crosses the segments of `crossed`
    /// (each from its left to its right) and ends in the corner after `rb`.
    pub fn insert_edge(&mut self, a: usize, r0: Dart, crossed: &[Dart], b: usize, rb: Dart) -> usize {
        let e = self.edges.len();
        let va = self.vertex_of(a).expect("vertex");
        let vb = self.vertex_of(b).expect("vertex");
        let mut nodes = vec![a];
        let mut rots = Vec::new();
        for &d in crossed {
            let (c, s, t) = self.split(d, NodeKind::Crossing);
            nodes.push(c);
            rots.push((s, t));
        }
        nodes.push(b);
        let mut fwd = Vec::new();
        let mut bwd = Vec::new();
        for w in nodes.windows(2) {
            let (f, r) = self.new_dart_pair(w[0], w[1], e);
            fwd.push(f);
            bwd.push(r);
        }
        for (i, &(s, t)) in rots.iter().enumerate() {
            let c = nodes[i + 1];
            self.set_rotation(c, &[s, bwd[i], t, fwd[i + 1]]);
        }
        self.insert_after(r0, fwd[0]);
        self.insert_after(rb, *bwd.last().expect("one segment"));
        self.edges.push(Some(MEdge { a: va, b: vb, first: fwd[0] }));
        e
    }

    /// Removes an edge, dissolving its crossing nodes.
    pub fn delete_edge(&mut self, e: usize) {
        let chain = self.chain(e);
        for &d in &chain {
            let c = self.dest(d);
            if !self.is_vertex(c) {
                // the other edge passes c as pa: P→c, pb: c→Q
                let tin = self.twin[d];
                let g1 = self.next[tin];
                let g2 = self.prev[tin];
                let (pa_back, pb) = (g1, g2);
                let pa = self.twin[pa_back];
                let pb_back = self.twin[pb];
                // pa becomes P→Q, pb_back becomes Q→P
                self.twin[pa] = pb_back;
                self.twin[pb_back] = pa;
                for x in [pa_back, pb] {
                    self.dart_alive[x] = false;
                }
                let ge = self.dart_edge[pa];
                if let Some(me) = self.edges[ge].as_mut() {
                    if me.first == pb {
                        me.first = pa;
                    }
                }
                self.node_alive[c] = false;
                self.node_dart[c] = None;
            }
        }
        for &d in &chain {
            self.dart_alive[d] = false;
            self.dart_alive[self.twin[d]] = false;
        }
        let me = self.edges[e].take().expect("live edge");
        let first = me.first;
        self.unlink(first);
        let last = *chain.last().expect("nonempty chain");
        let last_back = self.twin[last];
        self.unlink(last_back);
    }

    /// Adds a vertex in a new singleton part, placed on the segment of
    /// dart `d` (which leaves a vertex). The edge of `d` is replaced by two
    /// edges through the new vertex; returns `(vertex node, near edge, far edge)`.
    pub fn subdivide(&mut self, d: Dart, label: &str) -> (usize, usize, usize) {
        let v = self.labels.len();
        self.labels.push(label.to_string());
        self.parts.push(vec![v]);
        let e = self.dart_edge[d];
        let start = self.origin[d];
        let chain = self.chain_from(d);
        let far = self.dest(*chain.last().expect("nonempty"));
        let (x, s, t) = self.split(d, NodeKind::Vertex(v));
        self.vertex_node.push(x);
        self.set_rotation(x, &[s, t]);
        self.edges[e] = None;
        let near = self.edges.len();
        let (va, vf) = (self.vertex_of(start).expect("vertex"), self.vertex_of(far).expect("vertex"));
        self.edges.push(Some(MEdge { a: va, b: v, first: d }));
        let far_edge = self.edges.len();
        self.edges.push(Some(MEdge { a: v, b: vf, first: s }));
        for dd in [d, t] {
            self.dart_edge[dd] = near;
        }
        let far_chain = self.chain_from(s);
        for &dd in &far_chain {
            self.dart_edge[dd] = far_edge;
            let tw = self.twin[dd];
            self.dart_edge[tw] = far_edge;
        }
        (x, near, far_edge)
    }

    /// Moves edge `from` into slot `to`, which must be empty.
    pub fn move_edge(&mut self, from: usize, to: usize) {
        let me = self.edges[from].take();
        for d in 0..self.dart_edge.len() {
            if self.dart_edge[d] == from {
                self.dart_edge[d] = to;
            }
        }
        self.edges[to] = me;
    }

    /// Converts back to an immutable drawing. Crossing ids are assigned in
    /// order of their edge pairs.
    pub fn to_drawing(&self) -> Result<Drawing, MapError> {
        let parts: Vec<Vec<String>> =
            self.parts.iter().map(|p| p.iter().map(|&v| self.labels[v].clone()).collect()).collect();
        let live: Vec<usize> = (0..self.edges.len()).filter(|&e| self.edges[e].is_some()).collect();
        let mut new_id = vec![usize::MAX; self.edges.len()];
        for (i, &e) in live.iter().enumerate() {
            new_id[e] = i;
        }
        let pairs: Vec<(String, String)> = live
            .iter()
            .map(|&e| {
                let me = self.edges[e].as_ref().expect("live");
                (self.labels[me.a].clone(), self.labels[me.b].clone())
            })
            .collect();
        let graph = Graph::new(parts, &pairs)?;
        let nv = graph.vertex_count();
        // crossing nodes with their edge pairs in new ids
        let chains: Vec<Vec<Dart>> = live.iter().map(|&e| self.chain(e)).collect();
        let mut crossing_pairs: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut node_slot = vec![usize::MAX; self.kind.len()];
        for (i, ch) in chains.iter().enumerate() {
            for &d in &ch[..ch.len() - 1] {
                let c = self.dest(d);
                if node_slot[c] == usize::MAX {
                    node_slot[c] = crossing_pairs.len();
                    crossing_pairs.push((c, Vec::new()));
                }
                crossing_pairs[node_slot[c]].1.push(i);
            }
        }
        for (c, es) in &crossing_pairs {
            if es.len() != 2 {
                return Err(MapError::Malformed(format!("crossing node {c} lies on {} edge passes", es.len())));
            }
        }
        let mut order: Vec<usize> = (0..crossing_pairs.len()).collect();
        order.sort_by_key(|&i| {
            let es = &crossing_pairs[i].1;
            (es[0].min(es[1]), es[0].max(es[1]), crossing_pairs[i].0)
        });
        let mut cid = vec![usize::MAX; self.kind.len()];
        let mut crossings = Vec::with_capacity(order.len());
        for (k, &i) in order.iter().enumerate() {
            let (c, es) = &crossing_pairs[i];
            cid[*c] = k;
            crossings.push([EdgeId(es[0].min(es[1])), EdgeId(es[0].max(es[1]))]);
        }
        let mut seg_of = vec![None; self.origin.len()];
        let mut paths = Vec::with_capacity(live.len());
        for (i, ch) in chains.iter().enumerate() {
            for (k, &d) in ch.iter().enumerate() {
                seg_of[d] = Some(SegEnd { edge: EdgeId(i), seg: k });
                seg_of[self.twin[d]] = Some(SegEnd { edge: EdgeId(i), seg: k });
            }
            paths.push(ch[..ch.len() - 1].iter().map(|&d| CrossingId(cid[self.dest(d)])).collect());
        }
        let mut rotations = vec![Vec::new(); nv + crossings.len()];
        for (n, kind) in self.kind.iter().enumerate() {
            if !self.node_alive[n] {
                continue;
            }
            let idx = match *kind {
                NodeKind::Vertex(v) => graph.vertex(&self.labels[v]).expect("vertex kept").0,
                NodeKind::Crossing if cid[n] == usize::MAX => continue,
                NodeKind::Crossing => nv + cid[n],
            };
            rotations[idx] = self
                .darts_at(n)
                .into_iter()
                .map(|d| seg_of[d].ok_or_else(|| MapError::Malformed(format!("dart {d} on no edge"))))
                .collect::<Result<_, _>>()?;
        }
        Drawing::from_parts(graph, crossings, paths, rotations)
    }
}
