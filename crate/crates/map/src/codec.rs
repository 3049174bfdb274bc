//! The `.crdraw.json` drawing format.
//!
//! ```json
//! {"graph": {"spec": "K=1,1,4,4", "labels": [["o"],["x"],["y1",...],["z1",...]],
//!            "extra_edges": [], "removed_edges": []},
//!  "edges": [["o","x"],...],
//!  "crossings": [{"id":"c1","edges":[i,j]}],
//!  "edge_paths": [["c1","c4"],[],...],
//!  "rotations": {"<node-id>": [{"edge": i, "seg": k}, ...]}}
//! ```
//!
//! Edge indices refer to `edges`; each edge's path is read from its first
//! label. Rotations are counterclockwise. Decoding walks the JSON value by
//! hand so that every schema error names the offending key.

use std::collections::{BTreeSet, HashMap};

use crosskit_graph::{format_graph_spec, EdgeId, Graph};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::drawing::{CrossingId, Drawing, Node, SegEnd};
use crate::MapError;

pub const FILE_EXTENSION: &str = ".crdraw.json";

#[derive(Serialize)]
struct FileGraph<'a> {
    spec: String,
    labels: Vec<Vec<String>>,
    extra_edges: Vec<[&'a str; 2]>,
    removed_edges: Vec<[&'a str; 2]>,
}

#[derive(Serialize)]
struct FileCrossing {
    id: String,
    edges: [usize; 2],
}

#[derive(Serialize)]
struct FileSeg {
    edge: usize,
    seg: usize,
}

struct Rotations(Vec<(String, Vec<FileSeg>)>);

impl Serialize for Rotations {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(Serialize)]
struct File<'a> {
    graph: FileGraph<'a>,
    edges: Vec<[&'a str; 2]>,
    crossings: Vec<FileCrossing>,
    edge_paths: Vec<Vec<String>>,
    rotations: Rotations,
}

/// Prefix for crossing ids that cannot be mistaken for a vertex label.
fn crossing_prefix(g: &Graph, count: usize) -> String {
    let mut prefix = "c".to_string();
    loop {
        let clash = (1..=count).any(|i| g.vertex(&format!("{prefix}{i}")).is_some());
        if !clash {
            return prefix;
        }
        prefix.insert(0, '_');
    }
}

/// Deterministic serialization: one line of JSON and a newline.
pub fn encode(d: &Drawing) -> String {
    let g = d.graph();
    let prefix = crossing_prefix(g, d.crossing_count());
    let cid = |c: CrossingId| format!("{prefix}{}", c.0 + 1);
    let pair = |(u, v): (crosskit_graph::VertexId, crosskit_graph::VertexId)| [g.label(u), g.label(v)];
    let file = File {
        graph: FileGraph {
            spec: format_graph_spec(&g.part_sizes()),
            labels: g.part_labels(),
            extra_edges: g.extra_edges().into_iter().map(pair).collect(),
            removed_edges: g.removed_edges().into_iter().map(pair).collect(),
        },
        edges: g.edges().iter().map(|e| [g.label(e.a), g.label(e.b)]).collect(),
        crossings: d
            .crossing_ids()
            .map(|c| {
                let [e, f] = d.crossing(c);
                FileCrossing { id: cid(c), edges: [e.0, f.0] }
            })
            .collect(),
        edge_paths: g.edge_ids().map(|e| d.path(e).iter().map(|&c| cid(c)).collect()).collect(),
        rotations: Rotations(
            d.nodes()
                .map(|n| {
                    let key = match n {
                        Node::Vertex(v) => g.label(v).to_string(),
                        Node::Crossing(c) => cid(c),
                    };
                    let segs = d.rotation_at(n).iter().map(|s| FileSeg { edge: s.edge.0, seg: s.seg }).collect();
                    (key, segs)
                })
                .collect(),
        ),
    };
    let mut s = serde_json::to_string(&file).expect("plain data serializes");
    s.push('\n');
    s
}

fn obj<'a>(v: &'a Value, path: &str) -> Result<&'a serde_json::Map<String, Value>, MapError> {
    v.as_object().ok_or_else(|| MapError::schema(path, "expected an object"))
}

fn arr<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>, MapError> {
    v.as_array().ok_or_else(|| MapError::schema(path, "expected an array"))
}

fn string<'a>(v: &'a Value, path: &str) -> Result<&'a str, MapError> {
    v.as_str().ok_or_else(|| MapError::schema(path, "expected a string"))
}

fn index(v: &Value, path: &str) -> Result<usize, MapError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| MapError::schema(path, "expected a non-negative integer"))
}

fn field<'a>(m: &'a serde_json::Map<String, Value>, key: &str, path: &str) -> Result<&'a Value, MapError> {
    m.get(key).ok_or_else(|| MapError::schema(path, format!("missing key \"{key}\"")))
}

fn only_keys(m: &serde_json::Map<String, Value>, keys: &[&str], path: &str) -> Result<(), MapError> {
    match m.keys().find(|k| !keys.contains(&k.as_str())) {
        Some(k) => Err(MapError::schema(path, format!("unexpected key \"{k}\""))),
        None => Ok(()),
    }
}

fn label_pair(v: &Value, path: &str) -> Result<(String, String), MapError> {
    let a = arr(v, path)?;
    if a.len() != 2 {
        return Err(MapError::schema(path, "expected two labels"));
    }
    Ok((string(&a[0], &format!("{path}[0]"))?.to_string(), string(&a[1], &format!("{path}[1]"))?.to_string()))
}

fn sorted_pair((a, b): (String, String)) -> (String, String) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Parses a `.crdraw.json` document. Structural problems, including
/// crossing nodes that are not transversal degree-4 nodes, are schema
/// errors; the remaining good-drawing axioms are checked by `validate`.
pub fn decode(bytes: &[u8]) -> Result<Drawing, MapError> {
    let root: Value = serde_json::from_slice(bytes).map_err(|e| MapError::schema("$", e.to_string()))?;
    let top = obj(&root, "$")?;
    only_keys(top, &["graph", "edges", "crossings", "edge_paths", "rotations"], "$")?;

    let gv = obj(field(top, "graph", "$")?, "graph")?;
    only_keys(gv, &["spec", "labels", "extra_edges", "removed_edges"], "graph")?;
    let mut parts = Vec::new();
    for (i, p) in arr(field(gv, "labels", "graph")?, "graph.labels")?.iter().enumerate() {
        let path = format!("graph.labels[{i}]");
        let part = arr(p, &path)?
            .iter()
            .enumerate()
            .map(|(j, l)| string(l, &format!("{path}[{j}]")).map(str::to_string))
            .collect::<Result<Vec<_>, _>>()?;
        parts.push(part);
    }
    let spec = string(field(gv, "spec", "graph")?, "graph.spec")?;
    let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
    if spec != format_graph_spec(&sizes) {
        return Err(MapError::schema("graph.spec", format!("\"{spec}\" does not match the part sizes {sizes:?}")));
    }
    let mut declared = Vec::new();
    for key in ["extra_edges", "removed_edges"] {
        let path = format!("graph.{key}");
        let set = arr(field(gv, key, "graph")?, &path)?
            .iter()
            .enumerate()
            .map(|(i, v)| label_pair(v, &format!("{path}[{i}]")).map(sorted_pair))
            .collect::<Result<BTreeSet<_>, _>>()?;
        declared.push(set);
    }
    let edge_pairs = arr(field(top, "edges", "$")?, "edges")?
        .iter()
        .enumerate()
        .map(|(i, v)| label_pair(v, &format!("edges[{i}]")))
        .collect::<Result<Vec<_>, _>>()?;
    let graph = Graph::new(parts, &edge_pairs).map_err(|e| MapError::schema("edges", e.to_string()))?;
    let names = |pairs: Vec<(crosskit_graph::VertexId, crosskit_graph::VertexId)>| -> BTreeSet<(String, String)> {
        pairs.into_iter().map(|(u, v)| sorted_pair((graph.label(u).to_string(), graph.label(v).to_string()))).collect()
    };
    if names(graph.extra_edges()) != declared[0] {
        return Err(MapError::schema("graph.extra_edges", "does not match the edge list"));
    }
    if names(graph.removed_edges()) != declared[1] {
        return Err(MapError::schema("graph.removed_edges", "does not match the edge list"));
    }
    let ne = graph.edge_count();
    let nv = graph.vertex_count();

    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut crossings = Vec::new();
    for (i, c) in arr(field(top, "crossings", "$")?, "crossings")?.iter().enumerate() {
        let path = format!("crossings[{i}]");
        let m = obj(c, &path)?;
        only_keys(m, &["id", "edges"], &path)?;
        let id = string(field(m, "id", &path)?, &format!("{path}.id"))?;
        if graph.vertex(id).is_some() {
            return Err(MapError::schema(format!("{path}.id"), format!("\"{id}\" is also a vertex label")));
        }
        if ids.insert(id.to_string(), i).is_some() {
            return Err(MapError::schema(format!("{path}.id"), format!("duplicate crossing id \"{id}\"")));
        }
        let es = arr(field(m, "edges", &path)?, &format!("{path}.edges"))?;
        if es.len() != 2 {
            return Err(MapError::schema(format!("{path}.edges"), "expected two edge indices"));
        }
        let mut pair = [EdgeId(0); 2];
        for (k, e) in es.iter().enumerate() {
            let p = format!("{path}.edges[{k}]");
            let x = index(e, &p)?;
            if x >= ne {
                return Err(MapError::schema(p, format!("edge index {x} out of range")));
            }
            pair[k] = EdgeId(x);
        }
        crossings.push(pair);
    }

    let path_values = arr(field(top, "edge_paths", "$")?, "edge_paths")?;
    if path_values.len() != ne {
        return Err(MapError::schema("edge_paths", format!("expected {ne} paths, found {}", path_values.len())));
    }
    let mut paths = Vec::with_capacity(ne);
    for (i, p) in path_values.iter().enumerate() {
        let path = format!("edge_paths[{i}]");
        let cs = arr(p, &path)?
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let q = format!("{path}[{j}]");
                let id = string(c, &q)?;
                ids.get(id)
                    .map(|&k| CrossingId(k))
                    .ok_or_else(|| MapError::schema(q, format!("unknown crossing \"{id}\"")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        paths.push(cs);
    }

    let rv = obj(field(top, "rotations", "$")?, "rotations")?;
    let mut rotations: Vec<Option<Vec<SegEnd>>> = vec![None; nv + crossings.len()];
    for (key, list) in rv {
        let path = format!("rotations.{key}");
        let node = match graph.vertex(key) {
            Some(v) => v.0,
            None => nv + *ids.get(key).ok_or_else(|| MapError::schema(&path, "unknown node"))?,
        };
        let mut segs = Vec::new();
        for (j, s) in arr(list, &path)?.iter().enumerate() {
            let q = format!("{path}[{j}]");
            let m = obj(s, &q)?;
            only_keys(m, &["edge", "seg"], &q)?;
            let edge = index(field(m, "edge", &q)?, &format!("{q}.edge"))?;
            if edge >= ne {
                return Err(MapError::schema(format!("{q}.edge"), format!("edge index {edge} out of range")));
            }
            let seg = index(field(m, "seg", &q)?, &format!("{q}.seg"))?;
            segs.push(SegEnd { edge: EdgeId(edge), seg });
        }
        if node >= nv {
            if segs.len() != 4 {
                return Err(MapError::schema(&path, format!("crossing node has degree {}", segs.len())));
            }
            if segs[0].edge != segs[2].edge || segs[1].edge != segs[3].edge || segs[0].edge == segs[1].edge {
                return Err(MapError::schema(&path, "crossing rotation does not alternate between two edges"));
            }
        }
        rotations[node] = Some(segs);
    }
    let mut rots = Vec::with_capacity(rotations.len());
    for (i, r) in rotations.into_iter().enumerate() {
        match r {
            Some(r) => rots.push(r),
            None => {
                let name = if i < nv {
                    graph.label(crosskit_graph::VertexId(i)).to_string()
                } else {
                    ids.iter().find(|(_, &k)| k == i - nv).map(|(s, _)| s.clone()).unwrap_or_default()
                };
                return Err(MapError::schema("rotations", format!("missing rotation for node \"{name}\"")));
            }
        }
    }
    Drawing::from_parts(graph, crossings, paths, rots).map_err(|e| match e {
        MapError::Malformed(m) => MapError::schema("rotations", m),
        other => other,
    })
}
