use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::drawing::{CrossingId, Drawing, Node, SegEnd};
use crate::MapError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ViolationKind {
    /// A crossing node is not met exactly once by each of its two edges.
    CrossingPath,
    /// A crossing node whose rotation does not have four entries.
    CrossingDegree,
    /// A crossing rotation that does not alternate between its edges.
    NonAlternating,
    /// Two edges with a common endpoint cross.
    AdjacentCrossing,
    /// Two edges cross more than once.
    DoubleCrossing,
    /// An edge crosses itself.
    SelfCrossing,
    /// Euler's relation fails on some component.
    NonplanarMap,
}

impl ViolationKind {
    pub fn code(&self) -> &'static str {
        match self {
            ViolationKind::CrossingPath => "CROSSING_PATH",
            ViolationKind::CrossingDegree => "CROSSING_DEGREE",
            ViolationKind::NonAlternating => "NON_ALTERNATING",
            ViolationKind::AdjacentCrossing => "ADJACENT_CROSSING",
            ViolationKind::DoubleCrossing => "DOUBLE_CROSSING",
            ViolationKind::SelfCrossing => "SELF_CROSSING",
            ViolationKind::NonplanarMap => "NONPLANAR_MAP",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witness: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind.code(), self.witness)
    }
}

/// Outcome of checking the good-drawing axioms and planarity of the map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Real vertices plus crossing nodes.
    pub nodes: usize,
    pub segments: usize,
    /// Faces in the plane: the face orbits of every component, with the
    /// outer faces of all components counted once.
    pub faces: usize,
    pub components: usize,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }

    /// `V* - E* + F`, which is `1 + components` for a plane map.
    pub fn euler_characteristic(&self) -> i64 {
        self.nodes as i64 - self.segments as i64 + self.faces as i64
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "PASS");
        }
        write!(f, "FAIL")?;
        for v in &self.violations {
            write!(f, "; {v}")?;
        }
        Ok(())
    }
}

impl Drawing {
    pub fn validate(&self) -> ValidationReport {
        let g = self.graph();
        let mut violations = Vec::new();
        let mut push = |kind, witness: String| violations.push(Violation { kind, witness });

        let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); self.crossing_count()];
        for e in g.edge_ids() {
            let mut path = self.path(e).to_vec();
            for c in &path {
                occurrences[c.0].push(e.0);
            }
            path.sort_unstable();
            for run in path.chunk_by(|a, b| a == b).filter(|run| run.len() > 1) {
                push(
                    ViolationKind::SelfCrossing,
                    format!("edge {} passes {} {} times", self.edge_name(e), run[0], run.len()),
                );
            }
        }
        for c in self.crossing_ids() {
            let [e, f] = self.crossing(c);
            if e == f {
                push(ViolationKind::SelfCrossing, format!("{c} joins edge {} to itself", self.edge_name(e)));
            } else {
                let occ = &occurrences[c.0];
                let on_e = occ.iter().filter(|&&x| x == e.0).count();
                let on_f = occ.iter().filter(|&&x| x == f.0).count();
                if on_e != 1 || on_f != 1 || occ.len() != 2 {
                    push(
                        ViolationKind::CrossingPath,
                        format!(
                            "{c} of {} and {} lies on {} edge passes",
                            self.edge_name(e),
                            self.edge_name(f),
                            occ.len()
                        ),
                    );
                }
                if g.edge(e).shares_endpoint(&g.edge(f)) {
                    push(
                        ViolationKind::AdjacentCrossing,
                        format!("{c}: {} and {} share an endpoint", self.edge_name(e), self.edge_name(f)),
                    );
                }
            }
            let rot = self.rotation_at(Node::Crossing(c));
            if rot.len() != 4 {
                push(ViolationKind::CrossingDegree, format!("{c} has degree {}", rot.len()));
            } else if rot[0].edge != rot[2].edge || rot[1].edge != rot[3].edge || rot[0].edge == rot[1].edge {
                push(ViolationKind::NonAlternating, format!("{c} does not alternate between its edges"));
            }
        }
        for ((e, f), cs) in self.crossings_by_pair() {
            if cs.len() > 1 && e != f {
                let ids: Vec<String> = cs.iter().map(CrossingId::to_string).collect();
                push(
                    ViolationKind::DoubleCrossing,
                    format!("{} and {} cross at {}", self.edge_name(e), self.edge_name(f), ids.join(", ")),
                );
            }
        }

        let euler = self.euler_components();
        for comp in &euler.failing {
            push(ViolationKind::NonplanarMap, comp.clone());
        }
        ValidationReport {
            violations,
            nodes: self.node_count(),
            segments: euler.segments,
            faces: (euler.faces + 1).saturating_sub(euler.components),
            components: euler.components,
        }
    }

    /// Validates and returns the drawing, or fails with the report.
    pub fn validated(self) -> Result<Drawing, MapError> {
        let r = self.validate();
        if r.passed() {
            Ok(self)
        } else {
            Err(MapError::Goodness(r.to_string()))
        }
    }

    fn euler_components(&self) -> EulerSummary {
        let n = self.node_count();
        // two darts per segment, 2s at its first node and 2s + 1 at its second
        let mut offset = vec![0; self.graph().edge_count() + 1];
        for e in self.graph().edge_ids() {
            offset[e.0 + 1] = offset[e.0] + self.path(e).len() + 1;
        }
        let dart_count = 2 * offset[self.graph().edge_count()];
        let dart = |node: usize, s: SegEnd| {
            2 * (offset[s.edge.0] + s.seg) + usize::from(self.node_index(self.segment_nodes(s).0) != node)
        };
        let mut dart_node = vec![0; dart_count];
        let mut prev = vec![0; dart_count];
        for node in 0..n {
            let rot = &self.rotations()[node];
            for (i, &s) in rot.iter().enumerate() {
                let d = dart(node, s);
                dart_node[d] = node;
                prev[d] = dart(node, rot[(i + rot.len() - 1) % rot.len()]);
            }
        }
        let twin = |d: usize| d ^ 1;

        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for d in (0..dart_count).step_by(2) {
            let (a, b) = (find(&mut parent, dart_node[d]), find(&mut parent, dart_node[d + 1]));
            parent[a] = b;
        }
        let mut comp_nodes: BTreeMap<usize, usize> = BTreeMap::new();
        for v in 0..n {
            *comp_nodes.entry(find(&mut parent, v)).or_default() += 1;
        }
        let mut comp_darts: BTreeMap<usize, usize> = BTreeMap::new();
        for &node in &dart_node {
            *comp_darts.entry(find(&mut parent, node)).or_default() += 1;
        }
        let mut face = vec![usize::MAX; dart_count];
        let mut comp_faces: BTreeMap<usize, usize> = BTreeMap::new();
        let mut faces = 0;
        for s in 0..dart_count {
            if face[s] != usize::MAX {
                continue;
            }
            let mut d = s;
            while face[d] == usize::MAX {
                face[d] = faces;
                d = prev[twin(d)];
            }
            faces += 1;
            *comp_faces.entry(find(&mut parent, dart_node[s])).or_default() += 1;
        }
        let mut failing = Vec::new();
        let mut total_faces = 0;
        for (&root, &v) in &comp_nodes {
            let e = comp_darts.get(&root).copied().unwrap_or(0) / 2;
            let f = if e == 0 { 1 } else { comp_faces.get(&root).copied().unwrap_or(0) };
            total_faces += f;
            let chi = v as i64 - e as i64 + f as i64;
            if chi != 2 {
                failing.push(format!(
                    "component of {} has V-E+F = {v}-{e}+{f} = {chi}",
                    self.node_name(self.node_at(root))
                ));
            }
        }
        EulerSummary { segments: dart_count / 2, faces: total_faces, components: comp_nodes.len(), failing }
    }
}

struct EulerSummary {
    segments: usize,
    faces: usize,
    components: usize,
    failing: Vec<String>,
}
