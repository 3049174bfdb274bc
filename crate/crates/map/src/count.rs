use std::collections::BTreeSet;

use crosskit_graph::{EdgeClass, EdgeId, Graph};
use serde::Serialize;

use crate::drawing::Drawing;
use crate::MapError;

impl Drawing {
    pub fn crossings_total(&self) -> usize {
        self.crossing_count()
    }

    fn check_class(&self, a: &EdgeClass) -> Result<(), MapError> {
        match a.members.iter().find(|e| e.0 >= self.graph().edge_count()) {
            Some(e) => Err(MapError::UnknownEdge(format!("{} in class {}", e, a.name))),
            None => Ok(()),
        }
    }

    /// `cr_D(A,B)`: crossing nodes with one edge in `A` and the other in
    /// `B`. With `A = B` this is `cr_D(A)`.
    pub fn crossings_between(&self, a: &EdgeClass, b: &EdgeClass) -> Result<usize, MapError> {
        self.check_class(a)?;
        self.check_class(b)?;
        Ok(self
            .crossings()
            .iter()
            .filter(|[e, f]| (a.contains(*e) && b.contains(*f)) || (a.contains(*f) && b.contains(*e)))
            .count())
    }

    /// `cr_D(A)`: crossings among edges of `A`.
    pub fn crossings_within(&self, a: &EdgeClass) -> Result<usize, MapError> {
        self.crossings_between(a, a)
    }

    pub fn edge_crossings(&self, e: EdgeId) -> usize {
        self.path(e).len()
    }

    /// `cr_D(v)`: crossings on edges incident to `v`.
    pub fn vertex_crossings(&self, v: &str) -> Result<usize, MapError> {
        let vid = self.graph().require(v)?;
        let g = self.graph();
        Ok(self.crossings().iter().filter(|[e, f]| g.edge(*e).has(vid) || g.edge(*f).has(vid)).count())
    }

    /// Crossings between an edge at `u` and an edge at `v`.
    pub fn vertex_pair_crossings(&self, u: &str, v: &str) -> Result<usize, MapError> {
        let g = self.graph();
        let (uid, vid) = (g.require(u)?, g.require(v)?);
        Ok(self
            .crossings()
            .iter()
            .filter(|[e, f]| {
                let (e, f) = (g.edge(*e), g.edge(*f));
                (e.has(uid) && f.has(vid)) || (e.has(vid) && f.has(uid))
            })
            .count())
    }

    /// Crossing tallies between named classes.
    pub fn ledger(&self, classes: &[EdgeClass]) -> Result<CrossingLedger, MapError> {
        let mut self_terms = Vec::new();
        let mut pair_terms = Vec::new();
        for (i, a) in classes.iter().enumerate() {
            self_terms.push((a.name.clone(), self.crossings_within(a)?));
            for b in &classes[i + 1..] {
                pair_terms.push((a.name.clone(), b.name.clone(), self.crossings_between(a, b)?));
            }
        }
        Ok(CrossingLedger { self_terms, pair_terms, total: self.crossings_total() })
    }

    /// The seven-term decomposition of the crossings of a drawing of
    /// `K_{1,1,m,n}` with parts `O, X, Y, Z` in that order.
    pub fn lemma2_decomposition(&self) -> Result<Lemma2Ledger, MapError> {
        let c = FourClasses::of(self.graph())?;
        let yz_xy = c.xy.union(&c.yz);
        let terms = vec![
            ("cr(E(Y,Z))".to_string(), self.crossings_within(&c.yz)?),
            ("cr(E(O,X),E(Y,Z))".to_string(), self.crossings_between(&c.ox, &c.yz)?),
            ("cr(E(X,Y),E(Y,Z))".to_string(), self.crossings_between(&c.xy, &c.yz)?),
            ("cr(E(O,Z),E(X,Y)+E(Y,Z))".to_string(), self.crossings_between(&c.oz, &yz_xy)?),
            ("cr(E(O,Y),E(X,Z))".to_string(), self.crossings_between(&c.oy, &c.xz)?),
            ("cr(E(O,Y),E(X,Y)+E(Y,Z))".to_string(), self.crossings_between(&c.oy, &yz_xy)?),
            ("cr(E(X,Z),E(O,Z)+E(Y,Z))".to_string(), self.crossings_between(&c.xz, &c.oz.union(&c.yz))?),
        ];
        let sum = terms.iter().map(|(_, v)| v).sum();
        Ok(Lemma2Ledger { terms, sum, total: self.crossings_total() })
    }
}

/// Crossing tallies `cr_D(A)` and `cr_D(A,B)` over a list of classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingLedger {
    pub self_terms: Vec<(String, usize)>,
    pub pair_terms: Vec<(String, String, usize)>,
    pub total: usize,
}

impl CrossingLedger {
    /// Sum of all self and pair terms; equals the total when the classes
    /// partition the edges.
    pub fn sum(&self) -> usize {
        self.self_terms.iter().map(|t| t.1).sum::<usize>() + self.pair_terms.iter().map(|t| t.2).sum::<usize>()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma2Ledger {
    pub terms: Vec<(String, usize)>,
    pub sum: usize,
    pub total: usize,
}

impl Lemma2Ledger {
    pub fn holds(&self) -> bool {
        self.sum == self.total
    }
}

/// The six edge classes of `K_{1,1,m,n}` with parts `O, X, Y, Z`.
#[derive(Debug, Clone)]
pub struct FourClasses {
    pub o: String,
    pub x: String,
    pub ys: Vec<String>,
    pub zs: Vec<String>,
    pub ox: EdgeClass,
    pub oy: EdgeClass,
    pub oz: EdgeClass,
    pub xy: EdgeClass,
    pub xz: EdgeClass,
    pub yz: EdgeClass,
}

impl FourClasses {
    pub fn of(g: &Graph) -> Result<FourClasses, MapError> {
        let sizes = g.part_sizes();
        let ok = sizes.len() == 4
            && sizes[0] == 1
            && sizes[1] == 1
            && g.removed_edges().is_empty()
            && g.extra_edges().is_empty();
        if !ok {
            return Err(MapError::WrongFamily(format!(
                "expected K_{{1,1,m,n}} with parts O, X, Y, Z; got parts {:?}",
                g.part_labels()
            )));
        }
        let p = g.parts();
        let class = |name: &str, a: &[_], b: &[_]| g.edge_class_ids(name, a, b);
        let labels = |i: usize| p[i].iter().map(|&v| g.label(v).to_string()).collect::<Vec<_>>();
        Ok(FourClasses {
            o: g.label(p[0][0]).to_string(),
            x: g.label(p[1][0]).to_string(),
            ys: labels(2),
            zs: labels(3),
            ox: class("E(O,X)", &p[0], &p[1]),
            oy: class("E(O,Y)", &p[0], &p[2]),
            oz: class("E(O,Z)", &p[0], &p[3]),
            xy: class("E(X,Y)", &p[1], &p[2]),
            xz: class("E(X,Z)", &p[1], &p[3]),
            yz: class("E(Y,Z)", &p[2], &p[3]),
        })
    }

    pub fn all(&self) -> [&EdgeClass; 6] {
        [&self.ox, &self.oy, &self.oz, &self.xy, &self.xz, &self.yz]
    }

    pub fn everything(&self) -> EdgeClass {
        let members: BTreeSet<EdgeId> = self.all().iter().flat_map(|c| c.members.iter().copied()).collect();
        EdgeClass::new("E", members)
    }
}
