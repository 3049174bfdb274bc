use crosskit_graph::{EdgeClass, EdgeId};

use crate::drawing::Drawing;
use crate::halfedge::Map;
use crate::route::{Router, Side, Stop, Turn};
use crate::MapError;

/// How a parallel edge finishes once it has followed its template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParallelEnd {
    /// Follow the template to its end `w`, turn around `w` away from the
    /// template up to the spoke `w→t`, and run along that spoke to `t`. With
    /// `Some(spokes)` the spokes crossed around `w` must be exactly these, in
    /// any order.
    Disk(Option<Vec<String>>),
    /// Leave the template after this many of its crossings and go straight
    /// to `t` inside the current face.
    Truncate(usize),
}

impl Drawing {
    /// Removes a set of edges together with their crossing nodes.
    pub fn delete_edges(&self, s: &EdgeClass) -> Result<Drawing, MapError> {
        if let Some(e) = s.members.iter().find(|e| e.0 >= self.graph().edge_count()) {
            return Err(MapError::UnknownEdge(e.to_string()));
        }
        if s.is_empty() {
            return Ok(self.clone());
        }
        let mut m = Map::from_drawing(self);
        for e in &s.members {
            m.delete_edge(e.0);
        }
        m.to_drawing()?.validated()
    }

    /// Places a new vertex on the edge `vu` next to `v`, before any crossing.
    /// The edge is replaced by `v·new` (crossing-free) and `new·u` (with all
    /// of the old crossings), appended in that order.
    pub fn subdivide_on_spoke(&self, v: &str, u: &str, new_label: &str) -> Result<Drawing, MapError> {
        if self.graph().vertex(new_label).is_some() {
            return Err(crosskit_graph::GraphError::DuplicateLabel(new_label.to_string()).into());
        }
        let mut m = Map::from_drawing(self);
        let (vn, un) = (m.node_of_label(v)?, m.node_of_label(u)?);
        let d = m.spoke(vn, un)?;
        m.subdivide(d, new_label);
        m.to_drawing()?.validated()
    }

    /// Draws a new edge `a·t` alongside the edge `a·w` on the given side
    /// (`Left` places it right after `a·w` in the rotation at `a`), crossing
    /// every edge that `a·w` crosses, and finishing as `end` says.
    pub fn add_parallel_edge(
        &self,
        a: &str,
        t: &str,
        w: &str,
        side: Side,
        end: &ParallelEnd,
    ) -> Result<Drawing, MapError> {
        let mut r = Router::new(self, a)?;
        r.beside(w, side)?;
        match end {
            ParallelEnd::Disk(spokes) => {
                r.follow(w, side, None)?;
                let (dir, stop) = match side {
                    Side::Left => (Turn::Cw, Stop::LeftOf(t)),
                    Side::Right => (Turn::Ccw, Stop::RightOf(t)),
                };
                let crossed = r.turn_until(dir, stop)?;
                if let Some(want) = spokes {
                    let mut got = crossed.clone();
                    let mut want = want.clone();
                    got.sort();
                    want.sort();
                    if got != want {
                        return Err(MapError::BadInterval(format!(
                            "around {w} the edge would cross {crossed:?}, not {want:?}"
                        )));
                    }
                }
                r.follow(t, side, None)?;
            }
            ParallelEnd::Truncate(k) => {
                r.follow(w, side, Some(*k))?;
                r.move_to_corner(t)?;
            }
        }
        r.finish()
    }

    /// Redraws the edge `from·to` inside the disk of `v`: outside the disk
    /// the edge keeps its crossings, inside it crosses exactly `interval`
    /// (spokes of `v`, named by their far ends, in order from where the edge
    /// enters the disk). The disk part of the edge is the run of crossings
    /// with edges at `v` just before `to`.
    pub fn reroute_in_disk(&self, from: &str, to: &str, v: &str, interval: &[&str]) -> Result<Drawing, MapError> {
        let g = self.graph();
        let e = g.find_edge_by_label(from, to)?.ok_or_else(|| MapError::UnknownEdge(format!("{from}{to}")))?;
        let vid = g.require(v)?;
        let mut path: Vec<_> = self.path(e).to_vec();
        if g.edge(e).a != g.require(from)? {
            path.reverse();
        }
        let inside = path
            .iter()
            .rev()
            .take_while(|c| {
                let [p, q] = self.crossing(**c);
                let other = if p == e { q } else { p };
                g.edge(other).has(vid)
            })
            .count();
        let outside = path.len() - inside;
        // the disk is entered next to the first spoke the edge crosses there
        let mut entry = vec![match path.get(outside) {
            Some(c) => {
                let [p, q] = self.crossing(*c);
                let spoke = if p == e { q } else { p };
                g.label(g.edge(spoke).other(vid)).to_string()
            }
            None => to.to_string(),
        }];
        if outside == 0 && g.find_edge_by_label(v, from)?.is_some() {
            entry.push(from.to_string());
        }
        let entry: Vec<&str> = entry.iter().map(String::as_str).collect();
        let mut last = None;
        for side in [Side::Left, Side::Right] {
            match self.reroute_side(from, to, v, interval, e, outside, side, &entry) {
                Ok(d) => return Ok(d),
                Err(err) => {
                    let keep = matches!(last, Some(MapError::BadInterval(_)));
                    if !keep {
                        last = Some(err);
                    }
                }
            }
        }
        Err(last.expect("two attempts"))
    }

    #[allow(clippy::too_many_arguments)]
    fn reroute_side(
        &self,
        from: &str,
        to: &str,
        v: &str,
        interval: &[&str],
        e: EdgeId,
        outside: usize,
        side: Side,
        entry: &[&str],
    ) -> Result<Drawing, MapError> {
        let mut r = Router::new(self, from)?;
        r.beside(to, side)?.follow(to, side, Some(outside))?.move_to_corner_beside(v, entry)?;
        r.turn_across(interval)?;
        if has_edge(self, v, to)? {
            match r.side_of(to)? {
                Some(s) => r.follow(to, s, None)?,
                None => {
                    return Err(MapError::BadInterval(format!(
                        "crossing {interval:?} around {v} does not end beside {v}{to}"
                    )))
                }
            };
        } else {
            r.move_to_corner(to)?;
        }
        r.finish_replacing(e)
    }
}

fn has_edge(d: &Drawing, u: &str, v: &str) -> Result<bool, MapError> {
    Ok(d.graph().find_edge_by_label(u, v)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crosskit_graph::Graph;

    fn star_with_twin_target() -> Drawing {
        // v with spokes u0, w0, u1, w1 counterclockwise, then t on vu0
        let g = Graph::new(
            vec![vec!["v".into()], vec!["u0".into(), "w0".into(), "u1".into(), "w1".into()]],
            &[
                ("v".into(), "u0".into()),
                ("v".into(), "w0".into()),
                ("v".into(), "u1".into()),
                ("v".into(), "w1".into()),
            ],
        )
        .unwrap();
        let d = Drawing::from_vertex_rotations(
            g,
            &[("v", &["u0", "w0", "u1", "w1"]), ("u0", &["v"]), ("w0", &["v"]), ("u1", &["v"]), ("w1", &["v"])],
        )
        .unwrap();
        d.subdivide_on_spoke("v", "u0", "t").unwrap()
    }

    #[test]
    fn parallel_edge_crosses_disk_interval() {
        let d = star_with_twin_target();
        let out = d.add_parallel_edge("u1", "t", "v", Side::Left, &ParallelEnd::Disk(Some(vec!["w0".into()]))).unwrap();
        assert_eq!(out.crossings_total(), 1);
        let out = d.add_parallel_edge("u1", "t", "v", Side::Right, &ParallelEnd::Disk(None)).unwrap();
        assert_eq!(out.crossings_total(), 1);
        assert_eq!(out.vertex_pair_crossings("w1", "u1").unwrap(), 1);
        let bad = d.add_parallel_edge("u1", "t", "v", Side::Right, &ParallelEnd::Disk(Some(vec!["w0".into()])));
        assert_eq!(bad.unwrap_err().code(), "BAD_INTERVAL");
    }

    #[test]
    fn crossing_free_template_gives_crossing_free_edge() {
        let d = star_with_twin_target();
        let out = d.add_parallel_edge("w0", "t", "v", Side::Left, &ParallelEnd::Disk(Some(vec![]))).unwrap();
        assert_eq!(out.crossings_total(), 0);
    }

    #[test]
    fn subdivide_splits_edge() {
        let d = star_with_twin_target();
        assert_eq!(d.graph().edge_count(), 5);
        assert!(d.graph().find_edge_by_label("v", "u0").unwrap().is_none());
        assert!(d.graph().find_edge_by_label("t", "u0").unwrap().is_some());
        assert_eq!(d.subdivide_on_spoke("v", "u1", "t").unwrap_err().code(), "DUPLICATE_LABEL");
        assert_eq!(d.subdivide_on_spoke("v", "q", "s").unwrap_err().code(), "UNKNOWN_VERTEX");
    }

    #[test]
    fn reroute_switches_sides_of_the_disk() {
        let d = star_with_twin_target();
        let d = d.add_parallel_edge("u1", "t", "v", Side::Right, &ParallelEnd::Disk(None)).unwrap();
        assert_eq!(d.crossings_total(), 1);
        assert_eq!(d.vertex_pair_crossings("w1", "t").unwrap(), 1);
        let r = d.reroute_in_disk("u1", "t", "v", &["w0"]).unwrap();
        assert_eq!(r.crossings_total(), 1);
        assert_eq!(r.vertex_pair_crossings("w0", "t").unwrap(), 1);
        let same = d.reroute_in_disk("u1", "t", "v", &["w1"]).unwrap();
        assert_eq!(same.crossings_total(), 1);
        assert_eq!(same.crossings(), d.crossings());
        assert_eq!(d.reroute_in_disk("u1", "t", "v", &["u0"]).unwrap_err().code(), "BAD_INTERVAL");
    }
}
