//! Exact conversion of straight-line and polyline layouts into plane maps.
//!
//! Coordinates are integers bounded by [`COORD_LIMIT`]; a rational layout is
//! scaled to a common denominator first. With that bound every predicate
//! below is evaluated exactly in `i128`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crosskit_graph::{EdgeId, Graph, VertexId};
use crosskit_map::{CrossingId, Drawing, SegEnd};
use serde::{Deserialize, Serialize};

use crate::GenError;

/// Largest absolute coordinate accepted by [`from_geometric`].
pub const COORD_LIMIT: i64 = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Point {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Vertex positions (indexed by vertex id) and, for every edge, the interior
/// bend points of its polyline from its first to its second endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometricLayout {
    pub positions: Vec<Point>,
    pub bends: Vec<Vec<Point>>,
}

impl GeometricLayout {
    /// All edges straight.
    pub fn straight(g: &Graph, positions: Vec<Point>) -> GeometricLayout {
        GeometricLayout { positions, bends: vec![Vec::new(); g.edge_count()] }
    }

    /// The full polyline of an edge, endpoints included.
    pub fn polyline(&self, g: &Graph, e: EdgeId) -> Vec<Point> {
        let ed = g.edge(e);
        let mut pts = vec![self.positions[ed.a.0]];
        pts.extend_from_slice(&self.bends[e.0]);
        pts.push(self.positions[ed.b.0]);
        pts
    }
}

type Vec2 = (i128, i128);

fn diff(a: Point, b: Point) -> Vec2 {
    (a.x as i128 - b.x as i128, a.y as i128 - b.y as i128)
}

fn cross(a: Vec2, b: Vec2) -> i128 {
    a.0 * b.1 - a.1 * b.0
}

fn dot(a: Vec2, b: Vec2) -> i128 {
    a.0 * b.0 + a.1 * b.1
}

/// A parameter `n/d` along a segment, `d > 0`.
#[derive(Debug, Clone, Copy)]
struct Frac {
    n: i128,
    d: i128,
}

impl Frac {
    fn cmp(self, o: Frac) -> Ordering {
        (self.n * o.d).cmp(&(o.n * self.d))
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// A rational point, for witnesses.
fn rational_point(p: Point, r: Vec2, t: Frac) -> String {
    let show = |base: i64, dir: i128| {
        let num = base as i128 * t.d + dir * t.n;
        let g = gcd(num, t.d);
        let (num, den) = (num / g, t.d / g);
        if den == 1 {
            format!("{num}")
        } else {
            format!("{num}/{den}")
        }
    };
    format!("({}, {})", show(p.x, r.0), show(p.y, r.1))
}

/// Counterclockwise angular order of directions starting at the positive
/// x-axis.
fn angular(a: Vec2, b: Vec2) -> Ordering {
    let half = |d: Vec2| u8::from(!(d.1 > 0 || (d.1 == 0 && d.0 > 0)));
    half(a).cmp(&half(b)).then_with(|| cross(b, a).cmp(&0))
}

struct Piece {
    edge: usize,
    idx: usize,
    p: Point,
    q: Point,
    /// Vertex at `p` (first piece) and at `q` (last piece).
    start: Option<VertexId>,
    end: Option<VertexId>,
}

impl Piece {
    fn dir(&self) -> Vec2 {
        diff(self.q, self.p)
    }

    fn vertex_at(&self, x: Point) -> Option<VertexId> {
        if x == self.p {
            self.start
        } else if x == self.q {
            self.end
        } else {
            None
        }
    }

    fn bbox_disjoint(&self, o: &Piece) -> bool {
        let (ax0, ax1) = (self.p.x.min(self.q.x), self.p.x.max(self.q.x));
        let (ay0, ay1) = (self.p.y.min(self.q.y), self.p.y.max(self.q.y));
        let (bx0, bx1) = (o.p.x.min(o.q.x), o.p.x.max(o.q.x));
        let (by0, by1) = (o.p.y.min(o.q.y), o.p.y.max(o.q.y));
        ax1 < bx0 || bx1 < ax0 || ay1 < by0 || by1 < ay0
    }
}

enum Meet {
    Apart,
    Proper(Frac, Frac),
    /// The pieces share exactly one point, an endpoint of one of them.
    Touch(Option<Point>, String),
    Overlap(String),
}

fn meet(a: &Piece, b: &Piece) -> Meet {
    let (r, s) = (a.dir(), b.dir());
    let qp = diff(b.p, a.p);
    let den = cross(r, s);
    if den == 0 {
        if cross(qp, r) != 0 {
            return Meet::Apart;
        }
        let rr = dot(r, r);
        let t0 = dot(qp, r);
        let t1 = dot(diff(b.q, a.p), r);
        let lo = t0.min(t1).max(0);
        let hi = t0.max(t1).min(rr);
        return match lo.cmp(&hi) {
            Ordering::Less => Meet::Overlap(format!("{} {} / {} {}", a.p, a.q, b.p, b.q)),
            Ordering::Equal => {
                let x = if lo == 0 { a.p } else { a.q };
                Meet::Touch(Some(x), x.to_string())
            }
            Ordering::Greater => Meet::Apart,
        };
    }
    let (mut tn, mut un, mut d) = (cross(qp, s), cross(qp, r), den);
    if d < 0 {
        tn = -tn;
        un = -un;
        d = -d;
    }
    if tn < 0 || tn > d || un < 0 || un > d {
        return Meet::Apart;
    }
    let (t, u) = (Frac { n: tn, d }, Frac { n: un, d });
    if tn > 0 && tn < d && un > 0 && un < d {
        return Meet::Proper(t, u);
    }
    let x = if tn == 0 {
        Some(a.p)
    } else if tn == d {
        Some(a.q)
    } else if un == 0 {
        Some(b.p)
    } else {
        Some(b.q)
    };
    Meet::Touch(x, rational_point(a.p, r, t))
}

fn degenerate(reason: &str, witness: Vec<String>) -> GenError {
    GenError::DegenerateLayout { reason: reason.to_string(), witness }
}

fn check_range(p: Point) -> Result<(), GenError> {
    for c in [p.x, p.y] {
        if c.abs() > COORD_LIMIT {
            return Err(GenError::CoordinateRange(c));
        }
    }
    Ok(())
}

/// Builds the plane map of a layout: a crossing node at every interior
/// intersection, crossings ordered along each edge, rotations by angle.
/// Fails with `DEGENERATE_LAYOUT` on coincident vertices, overlapping
/// pieces, a vertex or bend lying on another piece, or three pieces through
/// one point.
pub fn from_geometric(g: &Graph, layout: &GeometricLayout) -> Result<Drawing, GenError> {
    if layout.positions.len() != g.vertex_count() {
        return Err(GenError::LayoutShape(format!(
            "{} positions for {} vertices",
            layout.positions.len(),
            g.vertex_count()
        )));
    }
    if layout.bends.len() != g.edge_count() {
        return Err(GenError::LayoutShape(format!("{} bend lists for {} edges", layout.bends.len(), g.edge_count())));
    }
    let mut at: HashMap<Point, VertexId> = HashMap::new();
    for v in g.vertices() {
        let p = layout.positions[v.0];
        check_range(p)?;
        if let Some(w) = at.insert(p, v) {
            return Err(degenerate(
                "two vertices at one point",
                vec![format!("{} and {} at {p}", g.label(w), g.label(v))],
            ));
        }
    }
    let mut pieces = Vec::new();
    for e in g.edge_ids() {
        let pts = layout.polyline(g, e);
        for b in &layout.bends[e.0] {
            check_range(*b)?;
            if let Some(v) = at.get(b) {
                return Err(degenerate(
                    "bend point on a vertex",
                    vec![format!("edge {} bends at {} {b}", g.edge_labels(e).0, g.label(*v))],
                ));
            }
        }
        let k = pts.len() - 1;
        for i in 0..k {
            if pts[i] == pts[i + 1] {
                return Err(degenerate("zero-length piece", vec![pts[i].to_string()]));
            }
            pieces.push(Piece {
                edge: e.0,
                idx: i,
                p: pts[i],
                q: pts[i + 1],
                start: (i == 0).then(|| g.edge(e).a),
                end: (i + 1 == k).then(|| g.edge(e).b),
            });
        }
    }
    // isolated vertices are not endpoints of any piece
    for v in g.vertices().filter(|&v| g.degree(v) == 0) {
        let w = layout.positions[v.0];
        for pc in &pieces {
            if cross(pc.dir(), diff(w, pc.p)) == 0
                && !pc.bbox_disjoint(&Piece { edge: 0, idx: 0, p: w, q: w, start: None, end: None })
            {
                return Err(degenerate("vertex on a segment", vec![format!("{} at {w}", g.label(v))]));
            }
        }
    }

    let mut hits: Vec<Vec<(usize, Frac, usize)>> = vec![Vec::new(); g.edge_count()];
    let mut crossings: Vec<[EdgeId; 2]> = Vec::new();
    let mut dirs: Vec<[Vec2; 2]> = Vec::new();
    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            let (a, b) = (&pieces[i], &pieces[j]);
            if a.bbox_disjoint(b) {
                continue;
            }
            let same = a.edge == b.edge;
            let consecutive = same && a.idx + 1 == b.idx;
            match meet(a, b) {
                Meet::Apart => {}
                Meet::Overlap(w) => return Err(degenerate("overlapping segments", vec![w])),
                Meet::Touch(x, w) => {
                    if consecutive {
                        continue;
                    }
                    let shared = x.and_then(|x| Some((a.vertex_at(x)?, b.vertex_at(x)?)));
                    match shared {
                        Some((u, v)) if u == v && !same => {}
                        _ => return Err(degenerate("a vertex or bend lies on another segment", vec![w])),
                    }
                }
                Meet::Proper(t, u) => {
                    if same {
                        return Err(degenerate("an edge crosses itself", vec![rational_point(a.p, a.dir(), t)]));
                    }
                    let c = crossings.len();
                    crossings.push([EdgeId(a.edge), EdgeId(b.edge)]);
                    dirs.push([a.dir(), b.dir()]);
                    hits[a.edge].push((a.idx, t, c));
                    hits[b.edge].push((b.idx, u, c));
                }
            }
        }
    }

    let mut paths = Vec::with_capacity(g.edge_count());
    let mut slot = vec![[0usize; 2]; crossings.len()];
    for (e, h) in hits.iter_mut().enumerate() {
        h.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| x.1.cmp(y.1)));
        for w in h.windows(2) {
            if w[0].0 == w[1].0 && w[0].1.cmp(w[1].1) == Ordering::Equal {
                let pc = pieces.iter().find(|p| p.edge == e && p.idx == w[0].0).expect("piece");
                return Err(degenerate(
                    "three segments through one point",
                    vec![rational_point(pc.p, pc.dir(), w[0].1)],
                ));
            }
        }
        for (k, &(_, _, c)) in h.iter().enumerate() {
            let side = usize::from(crossings[c][0].0 != e);
            slot[c][side] = k;
        }
        paths.push(h.iter().map(|&(_, _, c)| CrossingId(c)).collect::<Vec<_>>());
    }

    let mut rotations: Vec<Vec<SegEnd>> = Vec::with_capacity(g.vertex_count() + crossings.len());
    for v in g.vertices() {
        let mut ends: Vec<(Vec2, SegEnd)> = g
            .incident(v)
            .into_iter()
            .map(|e| {
                let pts = layout.polyline(g, e);
                let k = pts.len() - 1;
                if g.edge(e).a == v {
                    (diff(pts[1], pts[0]), SegEnd { edge: e, seg: 0 })
                } else {
                    (diff(pts[k - 1], pts[k]), SegEnd { edge: e, seg: paths[e.0].len() })
                }
            })
            .collect();
        ends.sort_by(|a, b| angular(a.0, b.0));
        rotations.push(ends.into_iter().map(|(_, s)| s).collect());
    }
    for (c, [e, f]) in crossings.iter().enumerate() {
        let [r, s] = dirs[c];
        let (je, jf) = (slot[c][0], slot[c][1]);
        let e_out = SegEnd { edge: *e, seg: je + 1 };
        let e_in = SegEnd { edge: *e, seg: je };
        let f_out = SegEnd { edge: *f, seg: jf + 1 };
        let f_in = SegEnd { edge: *f, seg: jf };
        rotations.push(if cross(r, s) > 0 { vec![e_out, f_out, e_in, f_in] } else { vec![e_out, f_in, e_in, f_out] });
    }
    Ok(Drawing::from_parts(g.clone(), crossings, paths, rotations)?.validated()?)
}
