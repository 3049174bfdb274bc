use crosskit_map::{encode, Drawing};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// One crossing-count equality: a value predicted from the input drawing
/// and the value measured on a constructed drawing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equality {
    pub tag: String,
    pub predicted: i64,
    pub measured: i64,
    pub pass: bool,
}

/// A structural fact about a constructed drawing (graph identity, shape,
/// side conditions such as `c ≤ (m−1)/2`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// A proof label standing for a vertex of the drawing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alias {
    pub name: String,
    pub vertex: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedDigest {
    pub name: String,
    pub graph: String,
    pub crossings: usize,
    pub sha256: String,
}

/// The inequality a pipeline proves, evaluated with certified crossing
/// numbers. `value` is absent when a needed crossing number is unknown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundStatement {
    pub statement: String,
    pub value: Option<i64>,
    pub exact: Option<String>,
    pub inputs: Vec<(String, i64)>,
}

/// The same inequality with the measured crossing counts of the
/// constructed drawings in place of the crossing numbers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub statement: String,
    pub lhs: i64,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineCertificate {
    pub pipeline: String,
    pub input: NamedDigest,
    pub aliases: Vec<Alias>,
    pub notes: Vec<String>,
    pub equalities: Vec<Equality>,
    pub checks: Vec<Check>,
    pub outputs: Vec<NamedDigest>,
    pub bound: Option<BoundStatement>,
    pub instance: Option<Instance>,
    pub passed: bool,
}

impl PipelineCertificate {
    pub(crate) fn new(pipeline: &str, input: &Drawing) -> PipelineCertificate {
        PipelineCertificate {
            pipeline: pipeline.to_string(),
            input: digest("D", input),
            aliases: Vec::new(),
            notes: Vec::new(),
            equalities: Vec::new(),
            checks: Vec::new(),
            outputs: Vec::new(),
            bound: None,
            instance: None,
            passed: true,
        }
    }

    pub(crate) fn equality(&mut self, tag: &str, predicted: i64, measured: i64) {
        self.equalities.push(Equality { tag: tag.to_string(), predicted, measured, pass: predicted == measured });
        self.refresh();
    }

    pub(crate) fn check(&mut self, name: &str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), pass, detail: detail.into() });
        self.refresh();
    }

    pub(crate) fn alias(&mut self, name: &str, vertex: &str) {
        self.aliases.push(Alias { name: name.to_string(), vertex: vertex.to_string() });
    }

    pub(crate) fn output(&mut self, name: &str, d: &Drawing) {
        self.outputs.push(digest(name, d));
    }

    /// Copies the equalities and checks of a sub-construction under a prefix.
    pub(crate) fn absorb(&mut self, prefix: &str, other: &PipelineCertificate) {
        for e in &other.equalities {
            self.equalities.push(Equality { tag: format!("{prefix}.{}", e.tag), ..e.clone() });
        }
        for c in &other.checks {
            self.checks.push(Check { name: format!("{prefix}.{}", c.name), ..c.clone() });
        }
        self.refresh();
    }

    fn refresh(&mut self) {
        self.passed = self.equalities.iter().all(|e| e.pass) && self.checks.iter().all(|c| c.pass);
    }

    pub fn equality_by_tag(&self, tag: &str) -> Option<&Equality> {
        self.equalities.iter().find(|e| e.tag == tag)
    }

    pub fn failures(&self) -> Vec<String> {
        let eq = self
            .equalities
            .iter()
            .filter(|e| !e.pass)
            .map(|e| format!("{}: predicted {}, measured {}", e.tag, e.predicted, e.measured));
        let ch = self.checks.iter().filter(|c| !c.pass).map(|c| format!("{}: {}", c.name, c.detail));
        eq.chain(ch).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }
}

/// SHA-256 of the canonical encoding of a drawing.
pub fn drawing_digest(d: &Drawing) -> String {
    hex::encode(Sha256::digest(encode(d).as_bytes()))
}

pub(crate) fn digest(name: &str, d: &Drawing) -> NamedDigest {
    NamedDigest {
        name: name.to_string(),
        graph: d.graph().spec_string(),
        crossings: d.crossings_total(),
        sha256: drawing_digest(d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crosskit_graph::Graph;

    fn edge() -> Drawing {
        let g = Graph::new(vec![vec!["a".into()], vec!["b".into()]], &[("a".into(), "b".into())]).unwrap();
        Drawing::from_vertex_rotations(g, &[]).unwrap()
    }

    #[test]
    fn passes_iff_everything_matches() {
        let mut c = PipelineCertificate::new("t", &edge());
        c.equality("A", 3, 3);
        assert!(c.passed);
        c.equality("B", 3, 4);
        assert!(!c.passed);
        assert_eq!(c.failures(), vec!["B: predicted 3, measured 4"]);
        let mut c = PipelineCertificate::new("t", &edge());
        c.check("shape", false, "no");
        assert!(!c.passed);
    }

    #[test]
    fn absorbed_tags_are_prefixed() {
        let mut inner = PipelineCertificate::new("i", &edge());
        inner.equality("Z1", 1, 1);
        let mut outer = PipelineCertificate::new("o", &edge());
        outer.absorb("D1", &inner);
        assert!(outer.equality_by_tag("D1.Z1").is_some());
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(drawing_digest(&edge()), drawing_digest(&edge()));
        assert_eq!(digest("D", &edge()).graph, "K=1,1");
    }
}
