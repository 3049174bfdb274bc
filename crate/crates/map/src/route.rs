//! Drawing a new edge through an existing drawing.
//!
//! A route is planned on the current map as a walk through faces: it starts
//! in a corner at its first endpoint, follows existing edges on one side,
//! turns around vertices across their spokes, and ends in a corner at its
//! last endpoint. The state is always a corner dart `r`, meaning the angular
//! sector from `r` to the next dart counterclockwise; the route is inside
//! the face on the left of `r`. The plan is checked for face consistency
//! and goodness before the edge is inserted.

use std::collections::BTreeSet;

use crosskit_graph::EdgeId;
use serde::{Deserialize, Serialize};

use crate::drawing::Drawing;
use crate::halfedge::{Dart, Map};
use crate::MapError;

/// Which side of an existing edge a route runs along, looking from the
/// vertex it starts at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// Direction of a turn around a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Turn {
    Cw,
    Ccw,
}

impl Turn {
    pub fn opposite(self) -> Turn {
        match self {
            Turn::Cw => Turn::Ccw,
            Turn::Ccw => Turn::Cw,
        }
    }
}

/// Where a turn stops, relative to a spoke `v→w` at the current vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stop<'a> {
    /// The corner just counterclockwise of the spoke (its left side).
    LeftOf(&'a str),
    /// The corner just clockwise of the spoke (its right side).
    RightOf(&'a str),
}

pub struct Router {
    map: Map,
    faces: Vec<usize>,
    start: usize,
    r0: Option<Dart>,
    r: Option<Dart>,
    at: Option<usize>,
    crossed: Vec<Dart>,
}

impl Router {
    pub fn new(d: &Drawing, start: &str) -> Result<Router, MapError> {
        let map = Map::from_drawing(d);
        let faces = map.faces();
        let start = map.node_of_label(start)?;
        Ok(Router { map, faces, start, r0: None, r: None, at: Some(start), crossed: Vec::new() })
    }

    fn corner(&self) -> Result<Dart, MapError> {
        self.r.ok_or_else(|| MapError::Route("no corner chosen yet".into()))
    }

    fn here(&self) -> Result<usize, MapError> {
        self.at.ok_or_else(|| MapError::Route("route is between nodes".into()))
    }

    fn set_corner(&mut self, r: Dart) {
        if self.r0.is_none() {
            self.r0 = Some(r);
        }
        self.r = Some(r);
    }

    /// Current face, as a face index of the underlying map.
    pub fn face(&self) -> Result<usize, MapError> {
        Ok(self.faces[self.corner()?])
    }

    pub fn crossings_so_far(&self) -> usize {
        self.crossed.len()
    }

    /// Starts beside the spoke towards `w` on the given side.
    pub fn beside(&mut self, w: &str, side: Side) -> Result<&mut Router, MapError> {
        let here = self.here()?;
        let s = self.map.spoke(here, self.map.node_of_label(w)?)?;
        let r = match side {
            Side::Left => s,
            Side::Right => self.map.prev[s],
        };
        self.set_corner(r);
        Ok(self)
    }

    fn cross(&mut self, d: Dart) {
        self.crossed.push(d);
    }

    /// Runs along the edge from the current vertex towards `w`, on `side`,
    /// crossing every edge it crosses. With a limit, stops right after that
    /// many crossings, inside a face.
    pub fn follow(&mut self, w: &str, side: Side, limit: Option<usize>) -> Result<&mut Router, MapError> {
        let here = self.here()?;
        let target = self.map.node_of_label(w)?;
        let d = self.map.spoke(here, target)?;
        let r = self.corner()?;
        let ok = match side {
            Side::Left => r == d,
            Side::Right => r == self.map.prev[d],
        };
        if !ok {
            return Err(MapError::Route(format!(
                "not on the {side:?} side of {}{w} at {}",
                self.map.node_label(here),
                self.map.node_label(here)
            )));
        }
        let chain = self.map.chain_from(d);
        if let Some(k) = limit {
            if k > chain.len() - 1 {
                return Err(MapError::Route(format!("edge towards {w} has only {} crossings", chain.len() - 1)));
            }
        }
        let mut done = 0;
        for &e in &chain[..chain.len() - 1] {
            if limit == Some(done) {
                self.at = None;
                return Ok(self);
            }
            let e_out = self.map.straight_on(e).expect("crossing node");
            match side {
                Side::Left => {
                    let g = self.map.next[e_out];
                    self.cross(g);
                    self.r = Some(e_out);
                }
                Side::Right => {
                    let g = self.map.prev[e_out];
                    self.cross(self.map.twin[g]);
                    self.r = Some(g);
                }
            }
            done += 1;
        }
        if limit == Some(done) {
            self.at = None;
            return Ok(self);
        }
        let ew = self.map.twin[*chain.last().expect("nonempty")];
        self.r = Some(match side {
            Side::Left => self.map.prev[ew],
            Side::Right => ew,
        });
        self.at = Some(self.map.dest(*chain.last().expect("nonempty")));
        Ok(self)
    }

    /// Crosses the edge `uv` where it bounds the current face; the edge must
    /// meet the face along exactly one segment side.
    pub fn cross_edge(&mut self, u: &str, v: &str) -> Result<&mut Router, MapError> {
        let f = self.face()?;
        let (a, b) = (self.map.node_of_label(u)?, self.map.node_of_label(v)?);
        let (Some(a), Some(b)) = (self.map.vertex_of(a), self.map.vertex_of(b)) else {
            return Err(MapError::UnknownEdge(format!("{u}{v}")));
        };
        let e = self.map.edge_between(a, b).ok_or_else(|| MapError::UnknownEdge(format!("{u}{v}")))?;
        let found: Vec<Dart> = (0..self.map.dart_edge.len())
            .filter(|&d| self.map.dart_alive[d] && self.map.dart_edge[d] == e && self.faces[d] == f)
            .collect();
        match found.as_slice() {
            [d] => {
                self.cross(*d);
                self.r = Some(self.map.twin[*d]);
                self.at = None;
                Ok(self)
            }
            _ => Err(MapError::Route(format!("{u}{v} bounds the current face {} times", found.len()))),
        }
    }

    /// The side of the spoke towards `w` that the current corner touches.
    pub fn side_of(&self, w: &str) -> Result<Option<Side>, MapError> {
        let here = self.here()?;
        let s = self.map.spoke(here, self.map.node_of_label(w)?)?;
        let r = self.corner()?;
        Ok(if r == s {
            Some(Side::Left)
        } else if self.map.next[r] == s {
            Some(Side::Right)
        } else {
            None
        })
    }

    /// Crosses one spoke of the current vertex.
    pub fn turn(&mut self, dir: Turn) -> Result<&mut Router, MapError> {
        self.here()?;
        let r = self.corner()?;
        match dir {
            Turn::Cw => {
                self.cross(r);
                self.r = Some(self.map.prev[r]);
            }
            Turn::Ccw => {
                let s = self.map.next[r];
                self.cross(self.map.twin[s]);
                self.r = Some(s);
            }
        }
        Ok(self)
    }

    /// Label of the vertex at the far end of the edge of a spoke dart.
    fn spoke_label(&self, d: Dart) -> String {
        let me = self.map.edges[self.map.dart_edge[d]].as_ref().expect("live edge");
        let here = self.map.vertex_of(self.map.origin[d]).expect("vertex");
        let other = if me.a == here { me.b } else { me.a };
        self.map.labels[other].clone()
    }

    fn stop_reached(&self, stop: Stop<'_>) -> Result<bool, MapError> {
        let here = self.here()?;
        let r = self.corner()?;
        Ok(match stop {
            Stop::LeftOf(w) => r == self.map.spoke(here, self.map.node_of_label(w)?)?,
            Stop::RightOf(w) => self.map.next[r] == self.map.spoke(here, self.map.node_of_label(w)?)?,
        })
    }

    /// Turns until the stop corner is reached; returns the spokes crossed.
    pub fn turn_until(&mut self, dir: Turn, stop: Stop<'_>) -> Result<Vec<String>, MapError> {
        let here = self.here()?;
        let degree = self.map.darts_at(here).len();
        let mut crossed = Vec::new();
        while !self.stop_reached(stop)? {
            if crossed.len() > degree {
                return Err(MapError::Route(format!("turn at {} never reaches {stop:?}", self.map.node_label(here))));
            }
            let r = self.corner()?;
            let s = match dir {
                Turn::Cw => r,
                Turn::Ccw => self.map.next[r],
            };
            crossed.push(self.spoke_label(s));
            self.turn(dir)?;
        }
        Ok(crossed)
    }

    /// Spokes that `count` turns in direction `dir` would cross.
    fn preview(&self, dir: Turn, count: usize) -> Result<Vec<String>, MapError> {
        let mut r = self.corner()?;
        let mut out = Vec::new();
        for _ in 0..count {
            match dir {
                Turn::Cw => {
                    out.push(self.spoke_label(r));
                    r = self.map.prev[r];
                }
                Turn::Ccw => {
                    let s = self.map.next[r];
                    out.push(self.spoke_label(s));
                    r = s;
                }
            }
        }
        Ok(out)
    }

    /// Crosses exactly the given spokes in order, turning whichever way
    /// makes them consecutive from the current corner.
    pub fn turn_across(&mut self, spokes: &[&str]) -> Result<Turn, MapError> {
        self.here()?;
        let want: Vec<String> = spokes.iter().map(|s| s.to_string()).collect();
        for dir in [Turn::Cw, Turn::Ccw] {
            if self.preview(dir, want.len())? == want {
                for _ in 0..want.len() {
                    self.turn(dir)?;
                }
                return Ok(dir);
            }
        }
        Err(MapError::BadInterval(format!(
            "{:?} is not a run of consecutive spokes from the current corner at {}",
            want,
            self.map.node_label(self.here()?)
        )))
    }

    /// Moves to the unique corner of vertex `v` lying in the current face.
    pub fn move_to_corner(&mut self, v: &str) -> Result<&mut Router, MapError> {
        let f = self.face()?;
        let n = self.map.node_of_label(v)?;
        let found: Vec<Dart> = self.map.darts_at(n).into_iter().filter(|&d| self.faces[d] == f).collect();
        match found.as_slice() {
            [d] => {
                self.r = Some(*d);
                self.at = Some(n);
                Ok(self)
            }
            [] => Err(MapError::Route(format!("{v} has no corner in the current face"))),
            _ => Err(MapError::Route(format!("{v} has {} corners in the current face", found.len()))),
        }
    }

    /// Moves to a corner of vertex `v` in the current face that is next to
    /// one of the spokes `v·w` for `w` in `beside`; it must be unique.
    pub fn move_to_corner_beside(&mut self, v: &str, beside: &[&str]) -> Result<&mut Router, MapError> {
        let f = self.face()?;
        let n = self.map.node_of_label(v)?;
        let spokes = beside
            .iter()
            .map(|w| self.map.node_of_label(w).and_then(|wn| self.map.spoke(n, wn)))
            .collect::<Result<Vec<_>, _>>()?;
        let found: BTreeSet<Dart> = self
            .map
            .darts_at(n)
            .into_iter()
            .filter(|&d| self.faces[d] == f && (spokes.contains(&d) || spokes.contains(&self.map.next[d])))
            .collect();
        if found.len() != 1 {
            return Err(MapError::Route(format!(
                "{v} has {} corners beside {beside:?} in the current face",
                found.len()
            )));
        }
        self.r = found.first().copied();
        self.at = Some(n);
        Ok(self)
    }

    /// Ends the route at the current vertex and inserts the new edge.
    pub fn finish(self) -> Result<Drawing, MapError> {
        self.insert(None)
    }

    /// Like [`Router::finish`], then deletes `old`; the new edge takes its id.
    pub fn finish_replacing(self, old: EdgeId) -> Result<Drawing, MapError> {
        self.insert(Some(old))
    }

    fn insert(mut self, replacing: Option<EdgeId>) -> Result<Drawing, MapError> {
        let end = self.here()?;
        let rb = self.corner()?;
        let r0 = self.r0.ok_or_else(|| MapError::Route("route never left its start".into()))?;
        let m = &self.map;
        let (a, b) = (m.vertex_of(self.start), m.vertex_of(end));
        let (Some(a), Some(b)) = (a, b) else {
            return Err(MapError::Route("routes must join real vertices".into()));
        };
        if a == b {
            return Err(MapError::Goodness(format!("route from {} returns to itself", m.labels[a])));
        }
        let name = format!("{}{}", m.labels[a], m.labels[b]);
        if let Some(e) = m.edge_between(a, b) {
            if replacing.map(|o| o.0) != Some(e) {
                return Err(MapError::Goodness(format!("edge {name} already exists")));
            }
        }
        let mut seen = BTreeSet::new();
        for &d in &self.crossed {
            let e = m.dart_edge[d];
            let me = m.edges[e].as_ref().expect("live edge");
            let crossed_name = format!("{}{}", m.labels[me.a], m.labels[me.b]);
            if !seen.insert(e) {
                return Err(MapError::Goodness(format!("{name} would cross {crossed_name} twice")));
            }
            if me.a == a || me.a == b || me.b == a || me.b == b {
                return Err(MapError::Goodness(format!("{name} would cross adjacent edge {crossed_name}")));
            }
        }
        let f = &self.faces;
        let mut face = f[r0];
        for &d in &self.crossed {
            if f[d] != face {
                return Err(MapError::Route(format!("route for {name} leaves its face")));
            }
            face = f[m.twin[d]];
        }
        if f[rb] != face {
            return Err(MapError::Route(format!("route for {name} ends outside its face")));
        }
        let crossed = std::mem::take(&mut self.crossed);
        let e = self.map.insert_edge(self.start, r0, &crossed, end, rb);
        if let Some(old) = replacing {
            self.map.delete_edge(old.0);
            self.map.move_edge(e, old.0);
            self.map.edges.pop();
        }
        self.map.to_drawing()?.validated()
    }
}
