use crosskit_graph::Graph;
use crosskit_map::Drawing;

use crate::geometry::{from_geometric, GeometricLayout, Point};
use crate::GenError;

/// Axis positions `1..=⌈k/2⌉` followed by `-1..=-⌊k/2⌋`.
pub(crate) fn axis_slots(k: usize) -> Vec<i64> {
    let pos = k.div_ceil(2) as i64;
    let neg = (k / 2) as i64;
    (1..=pos).chain((1..=neg).map(|i| -i)).collect()
}

/// Zarankiewicz's straight-line drawing of `K_{m,n}` as a layout: the first
/// part on the horizontal axis, the second on the vertical axis. With
/// `jitter`, slot `k` moves to `k·scale + jitter(k)`, which keeps the order
/// along each axis and hence the crossing pairs.
pub fn zarankiewicz_layout(g: &Graph, m: usize, n: usize, scale: i64, jitter: impl Fn(i64) -> i64) -> GeometricLayout {
    let at = |k: i64| k * scale + jitter(k);
    let mut positions: Vec<Point> = axis_slots(m).into_iter().map(|k| Point::new(at(k), 0)).collect();
    positions.extend(axis_slots(n).into_iter().map(|k| Point::new(0, at(k))));
    GeometricLayout::straight(g, positions)
}

/// Zarankiewicz's drawing of `K_{m,n}` with `Z(m,n)` crossings.
///
/// The unit-spaced axis positions are used whenever they are in general
/// position; otherwise the positions are spread out and shifted by distinct
/// small cubes, which removes concurrent crossings without changing which
/// pairs cross.
pub fn zarankiewicz_drawing(m: usize, n: usize) -> Result<Drawing, GenError> {
    let g = Graph::complete_multipartite(&[m, n])?;
    match from_geometric(&g, &zarankiewicz_layout(&g, m, n, 1, |_| 0)) {
        Err(GenError::DegenerateLayout { .. }) => {
            let spread = 1 << 16;
            from_geometric(&g, &zarankiewicz_layout(&g, m, n, spread, |k| k * k * k))
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slots_split_by_parity() {
        assert_eq!(axis_slots(5), vec![1, 2, 3, -1, -2]);
        assert_eq!(axis_slots(1), vec![1]);
    }

    #[test]
    fn small_cases() {
        assert_eq!(zarankiewicz_drawing(3, 3).unwrap().crossings_total(), 1);
        assert_eq!(zarankiewicz_drawing(1, 6).unwrap().crossings_total(), 0);
        assert_eq!(zarankiewicz_drawing(5, 7).unwrap().crossings_total(), 36);
    }
}
