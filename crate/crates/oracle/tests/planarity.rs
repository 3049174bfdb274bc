use proptest::prelude::*;

use crosskit_oracle::{is_planar, planar_embedding};

/// Genus-zero test by trying every rotation system; only for tiny graphs.
fn planar_by_rotations(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut comps = 0;
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        comps += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    let isolated = adj.iter().filter(|a| a.is_empty()).count();
    let target = 2 * comps as i64 - n as i64 + edges.len() as i64 - isolated as i64;
    let mut rot = adj.clone();
    search(0, &mut rot, target)
}

fn faces(rot: &[Vec<usize>]) -> i64 {
    let mut used = std::collections::HashSet::new();
    let mut f = 0;
    for v in 0..rot.len() {
        for &w in &rot[v] {
            if used.contains(&(v, w)) {
                continue;
            }
            f += 1;
            let (mut a, mut b) = (v, w);
            while used.insert((a, b)) {
                let i = rot[b].iter().position(|&x| x == a).unwrap();
                let c = rot[b][(i + 1) % rot[b].len()];
                (a, b) = (b, c);
            }
        }
    }
    f
}

/// Fixes the first neighbor of every vertex and permutes the rest.
fn search(v: usize, rot: &mut Vec<Vec<usize>>, target: i64) -> bool {
    if v == rot.len() {
        return faces(rot) == target;
    }
    let d = rot[v].len();
    if d <= 2 {
        return search(v + 1, rot, target);
    }
    let orig = rot[v].clone();
    let mut tail: Vec<usize> = orig[1..].to_vec();
    let mut perms = Vec::new();
    permute(&mut tail, 0, &mut perms);
    for p in perms {
        rot[v] = std::iter::once(orig[0]).chain(p).collect();
        if search(v + 1, rot, target) {
            rot[v] = orig;
            return true;
        }
    }
    rot[v] = orig;
    false
}

fn permute(xs: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == xs.len() {
        out.push(xs.clone());
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, out);
        xs.swap(k, i);
    }
}

fn simple_edges(n: usize, raw: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> =
        raw.iter().map(|&(a, b)| (a % n, b % n)).filter(|(a, b)| a != b).map(|(a, b)| (a.min(b), a.max(b))).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn on_segment(p: (i64, i64), a: (i64, i64), b: (i64, i64)) -> bool {
    let (lx, hx) = (a.0.min(b.0), a.0.max(b.0));
    let (ly, hy) = (a.1.min(b.1), a.1.max(b.1));
    cross(a, b, p) == 0 && lx <= p.0 && p.0 <= hx && ly <= p.1 && p.1 <= hy
}

/// True iff the closed segments meet anywhere except at a shared endpoint.
fn conflict(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> bool {
    let shared = [a, b].iter().filter(|p| **p == c || **p == d).count();
    if shared == 2 {
        return true;
    }
    if shared == 1 {
        // collinear overlap is the only way to meet again
        let (p, q, r) =
            if a == c || a == d { (a, b, if a == c { d } else { c }) } else { (b, a, if b == c { d } else { c }) };
        return cross(p, q, r) == 0 && ((q.0 - p.0) * (r.0 - p.0) + (q.1 - p.1) * (r.1 - p.1)) > 0;
    }
    let (d1, d2, d3, d4) = (cross(c, d, a), cross(c, d, b), cross(a, b, c), cross(a, b, d));
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) || on_segment(d, a, b)
}

/// A straight-line plane graph: candidate segments are kept when they meet
/// no kept segment and pass through no other point.
fn plane_graph(points: &[(i64, i64)], cand: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut kept: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in &simple_edges(points.len(), cand) {
        if points[a] == points[b] {
            continue;
        }
        let through = (0..points.len()).any(|p| p != a && p != b && on_segment(points[p], points[a], points[b]));
        if through {
            continue;
        }
        if kept.iter().all(|&(c, d)| !conflict(points[a], points[b], points[c], points[d])) {
            kept.push((a, b));
        }
    }
    kept
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn agrees_with_rotation_enumeration(
        n in 4usize..7,
        density in 0.3f64..0.9,
        coins in prop::collection::vec(0.0f64..1.0, 15),
    ) {
        let all: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let edges: Vec<(usize, usize)> = all.into_iter().zip(&coins).filter(|(_, &c)| c < density).map(|(e, _)| e).collect();
        let mut deg = vec![0usize; n];
        for &(a, b) in &edges { deg[a] += 1; deg[b] += 1; }
        let work: f64 = deg.iter().map(|&d| (1..d.max(1)).product::<usize>() as f64).product();
        prop_assume!(work <= 300_000.0);
        let emb = planar_embedding(n, &edges);
        let brute = planar_by_rotations(n, &edges);
        prop_assert_eq!(emb.is_some(), brute);
        if let Some(e) = emb {
            prop_assert!(e.is_plane_embedding_of(n, &edges));
        }
    }

    #[test]
    fn straight_line_plane_graphs_are_planar(
        pts in prop::collection::vec((0i64..12, 0i64..12), 3..25),
        cand in prop::collection::vec((0usize..25, 0usize..25), 0..120),
    ) {
        let edges = plane_graph(&pts, &cand);
        let emb = planar_embedding(pts.len(), &edges);
        prop_assert!(emb.is_some(), "plane graph {:?} reported non-planar", edges);
        prop_assert!(emb.unwrap().is_plane_embedding_of(pts.len(), &edges));
    }

    #[test]
    fn kuratowski_subdivisions_are_not_planar(
        k5 in any::<bool>(),
        subdiv in prop::collection::vec(0usize..3, 10),
        extra in prop::collection::vec((0usize..40, 0usize..40), 0..15),
    ) {
        let base: Vec<(usize, usize)> = if k5 {
            (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect()
        } else {
            (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect()
        };
        let mut n = if k5 { 5 } else { 6 };
        let mut edges = Vec::new();
        for (i, &(a, b)) in base.iter().enumerate() {
            let mut prev = a;
            for _ in 0..subdiv[i] {
                edges.push((prev, n));
                prev = n;
                n += 1;
            }
            edges.push((prev, b));
        }
        edges.extend(extra);
        let edges = simple_edges(n, &edges);
        prop_assert!(!is_planar(n, &edges));
    }
}

#[test]
fn grids_and_wheels() {
    let (w, h) = (6, 5);
    let id = |x: usize, y: usize| y * w + x;
    let mut grid = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                grid.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < h {
                grid.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    let emb = planar_embedding(w * h, &grid).unwrap();
    assert!(emb.is_plane_embedding_of(w * h, &grid));
    assert_eq!(emb.face_orbits(), (w - 1) * (h - 1) + 1);
    let wheel: Vec<(usize, usize)> = (1..=8).flat_map(|i| [(0, i), (i, i % 8 + 1)]).collect();
    assert!(planar_embedding(9, &wheel).unwrap().is_plane_embedding_of(9, &wheel));
}
