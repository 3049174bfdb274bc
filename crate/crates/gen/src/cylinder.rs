//! A drawing of `K_{1,1,m,n}` with `Z(m+2,n+2) − mn + ⌊m/2⌋⌊n/2⌋` crossings.
//!
//! Think of the sphere as a cylinder whose two ends are the poles `o` (at
//! the origin) and `x` (at infinity). The parts `Y` and `Z` sit on the two
//! axes exactly as in Zarankiewicz's drawing of `K_{m,n}`, with straight
//! edges between them. The edges `o·y` run in corridors hugging the
//! horizontal axis below it, the edges `x·y` in corridors above it, coming
//! in from the far ends; likewise `o·z` left of the vertical axis and `x·z`
//! right of it. Corridors on one side are nested, so a corridor crosses only
//! the edges leaving the vertices it passes. The edge `o·x` leaves through
//! the quadrant with the fewest edges, `⌊m/2⌋⌊n/2⌋`, on a ray whose slope
//! avoids the crossings of mirror-image edge pairs.
//!
//! In the plane `x` sits on the horizontal axis beyond `Y`, and the edges
//! that reach infinity run along nested rectangles around the picture.

use crosskit_graph::{EdgeId, Graph, VertexId};
use crosskit_map::Drawing;

use crate::geometry::{from_geometric, GeometricLayout, Point};
use crate::zarankiewicz::axis_slots;
use crate::GenError;

/// Largest part size the cylinder layout is built and tested for.
pub const CYLINDER_MAX_SIDE: usize = 32;

const S: i64 = 1 << 20;
const B: i64 = S / 4;
const A: i64 = 1 << 10;
const U: i64 = 1 << 10;
const V0: i64 = 1 << 9;

fn p(x: i64, y: i64) -> Point {
    Point::new(x, y)
}

/// Axis coordinate of slot `k`; the cubic shift keeps the straight edges
/// free of triple points.
fn at(k: i64) -> i64 {
    S * k + k * k * k
}

/// The cylinder layout of `K_{1,1,m,n}` (default labels `o`, `x`, `y*`, `z*`).
pub fn cylinder_layout(g: &Graph, m: usize, n: usize) -> GeometricLayout {
    let (yp, yq) = (m.div_ceil(2) as i64, (m / 2) as i64);
    let (zp, zq) = (n.div_ceil(2) as i64, (n / 2) as i64);
    let big = yp.max(yq).max(zp).max(zq);
    let xx = S * (yp + 1);
    let w = S * (big + 1);
    let top = |r: i64| S * (big + 2) + r * U;

    let (o, x) = (VertexId(0), VertexId(1));
    let ys: Vec<(VertexId, i64)> = axis_slots(m).into_iter().enumerate().map(|(i, k)| (VertexId(2 + i), k)).collect();
    let zs: Vec<(VertexId, i64)> =
        axis_slots(n).into_iter().enumerate().map(|(i, k)| (VertexId(2 + m + i), k)).collect();

    let mut positions = vec![p(0, 0), p(xx, 0)];
    positions.extend(ys.iter().map(|&(_, k)| p(at(k), 0)));
    positions.extend(zs.iter().map(|&(_, l)| p(0, at(l))));
    let mut layout = GeometricLayout::straight(g, positions);
    let edge = |u: VertexId, v: VertexId| -> EdgeId { g.find_edge(u, v).expect("complete graph") };

    for &(y, k) in &ys {
        let sk = at(k);
        let (lane, far) = if k > 0 { (k, sk - B) } else { (-k, sk + B) };
        let near = if k > 0 { A } else { -A };
        layout.bends[edge(o, y).0] = vec![p(near, -lane), p(far, -lane)];
        if k > 0 {
            let f = yp - k + 1;
            layout.bends[edge(x, y).0] = vec![p(xx - A, f), p(sk + B, f)];
        } else {
            let j = -k;
            let f = yq - j + 1;
            let r = zp + j;
            let left = S * (big + 1) + r * U;
            layout.bends[edge(x, y).0] =
                vec![p(xx + r * U, V0 - r), p(xx + r * U, top(r)), p(-left, top(r)), p(-left, f), p(sk - B, f)];
        }
    }
    for &(z, l) in &zs {
        let sl = at(l);
        if l > 0 {
            layout.bends[edge(o, z).0] = vec![p(-l, A), p(-l, sl - B)];
            let g_off = zp - l + 1;
            let r = l;
            layout.bends[edge(x, z).0] =
                vec![p(xx + r * U, V0 - r), p(xx + r * U, top(r)), p(g_off, top(r)), p(g_off, sl + B)];
        } else {
            let j = -l;
            layout.bends[edge(o, z).0] = vec![p(-j, -A), p(-j, sl + B)];
            let g_off = zq - j + 1;
            let r = j;
            layout.bends[edge(x, z).0] =
                vec![p(xx + r * U, r - V0), p(xx + r * U, -top(r)), p(g_off, -top(r)), p(g_off, sl - B)];
        }
    }
    let r = zq + 1;
    layout.bends[edge(o, x).0] = vec![p(-w, -w - 7919), p(-w, -top(r)), p(xx + r * U, -top(r)), p(xx + r * U, r - V0)];
    layout
}

/// The cylinder drawing of `K_{1,1,m,n}` for `1 ≤ m, n ≤ CYLINDER_MAX_SIDE`.
pub fn cylinder_k11mn(m: usize, n: usize) -> Result<Drawing, GenError> {
    let range = 1..=CYLINDER_MAX_SIDE;
    if !range.contains(&m) || !range.contains(&n) {
        return Err(GenError::UnsupportedSize {
            what: "K_{1,1,m,n} cylinder drawing",
            m,
            n,
            supported: format!("1 <= m, n <= {CYLINDER_MAX_SIDE}"),
        });
    }
    let g = Graph::complete_multipartite(&[1, 1, m, n])?;
    from_geometric(&g, &cylinder_layout(&g, m, n))
}
