use std::collections::BTreeSet;

use crate::EdgeId;

/// A named set of edges of one host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeClass {
    pub name: String,
    pub members: BTreeSet<EdgeId>,
}

impl EdgeClass {
    pub fn new(name: &str, members: BTreeSet<EdgeId>) -> EdgeClass {
        EdgeClass { name: name.to_string(), members }
    }

    pub fn empty(name: &str) -> EdgeClass {
        EdgeClass::new(name, BTreeSet::new())
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.members.contains(&e)
    }

    pub fn union(&self, other: &EdgeClass) -> EdgeClass {
        EdgeClass::new(&format!("{}+{}", self.name, other.name), self.members.union(&other.members).copied().collect())
    }

    pub fn difference(&self, other: &EdgeClass) -> EdgeClass {
        EdgeClass::new(
            &format!("{}-{}", self.name, other.name),
            self.members.difference(&other.members).copied().collect(),
        )
    }

    pub fn is_disjoint(&self, other: &EdgeClass) -> bool {
        self.members.is_disjoint(&other.members)
    }

    pub fn renamed(mut self, name: &str) -> EdgeClass {
        self.name = name.to_string();
        self
    }
}
