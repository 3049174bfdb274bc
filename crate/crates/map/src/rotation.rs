use serde::Serialize;

use crate::drawing::{Drawing, Node};
use crate::MapError;

/// Neighbors of a vertex in counterclockwise rotation order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RotationView {
    pub vertex: String,
    pub neighbors: Vec<String>,
}

impl RotationView {
    /// The same cyclic order started at `first`.
    pub fn starting_at(&self, first: &str) -> Result<RotationView, MapError> {
        let i = self.position(first)?;
        let mut neighbors = self.neighbors.clone();
        neighbors.rotate_left(i);
        Ok(RotationView { vertex: self.vertex.clone(), neighbors })
    }

    fn position(&self, u: &str) -> Result<usize, MapError> {
        self.neighbors
            .iter()
            .position(|n| n == u)
            .ok_or_else(|| MapError::NotANeighbor(u.to_string(), self.vertex.clone()))
    }

    /// Neighbors strictly between `a` and `b` going counterclockwise; with
    /// `a = b`, all other neighbors.
    pub fn interval(&self, a: &str, b: &str) -> Result<Vec<String>, MapError> {
        let i = self.position(a)?;
        let j = self.position(b)?;
        let d = self.neighbors.len();
        let steps = if i == j { d - 1 } else { (j + d - i) % d - 1 };
        Ok((1..=steps).map(|k| self.neighbors[(i + k) % d].clone()).collect())
    }

    /// Restriction to the given neighbors, keeping the cyclic order.
    pub fn restricted(&self, keep: &[String]) -> Vec<String> {
        self.neighbors.iter().filter(|n| keep.contains(n)).cloned().collect()
    }
}

impl Drawing {
    /// `π_D(v)`: the rotation at a real vertex, read as neighbor labels.
    pub fn rotation(&self, v: &str) -> Result<RotationView, MapError> {
        let vid = self.graph().require(v)?;
        let neighbors = self
            .rotation_at(Node::Vertex(vid))
            .iter()
            .map(|s| self.graph().label(self.graph().edge(s.edge).other(vid)).to_string())
            .collect();
        Ok(RotationView { vertex: v.to_string(), neighbors })
    }

    /// `π_D(va, vb)`: neighbors strictly between `a` and `b`.
    pub fn subrotation_interval(&self, v: &str, a: &str, b: &str) -> Result<Vec<String>, MapError> {
        self.rotation(v)?.interval(a, b)
    }
}
