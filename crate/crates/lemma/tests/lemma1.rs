use crosskit_gen::{cylinder_k11mn, random_geometric_drawing};
use crosskit_graph::{complete_multipartite, Graph};
use crosskit_lemma::{lemma1_d1, lemma1_d2, Lemma1Context};
use crosskit_map::Drawing;
use proptest::prelude::*;

fn star(leaves: &[&str]) -> Drawing {
    let g = Graph::new(
        vec![vec!["v".into()], leaves.iter().map(|s| s.to_string()).collect()],
        &leaves.iter().map(|l| ("v".to_string(), l.to_string())).collect::<Vec<_>>(),
    )
    .unwrap();
    Drawing::from_vertex_rotations(g, &[("v", leaves)]).unwrap()
}

/// Disk crossings of the first construction counted route by route: a
/// route from `u_i` turning clockwise meets the gaps `W_k..W_{i−1}`, one
/// turning counterclockwise meets `W_i..W_{k+p−1}`.
fn disk_by_routes(gaps: &[usize], k: usize) -> i64 {
    let p = gaps.len();
    let h = p / 2;
    let w = |s: usize| gaps[s % p] as i64;
    let cw: i64 = (k + 1..k + h).map(|i| (k..i).map(w).sum::<i64>()).sum();
    let ccw: i64 = (k + h..k + p).map(|i| (i..k + p).map(w).sum::<i64>()).sum();
    cw + ccw
}

/// Gap sizes read directly off the rotation at `v`.
fn gaps_of(d: &Drawing, v: &str, u: &[&str]) -> Vec<usize> {
    let rot = d.rotation(v).unwrap().starting_at(u[0]).unwrap();
    let pos: Vec<usize> =
        rot.neighbors.iter().enumerate().filter(|(_, n)| u.contains(&n.as_str())).map(|(i, _)| i).collect();
    let deg = rot.neighbors.len();
    (0..pos.len()).map(|i| (pos[(i + 1) % pos.len()] + deg - pos[i] - 1) % deg).collect()
}

/// `cr_D(E({v},U), E(G)−E(v))` by scanning crossing pairs.
fn spoke_load(d: &Drawing, v: &str, u: &[&str]) -> i64 {
    let g = d.graph();
    let vid = g.vertex(v).unwrap();
    let is_vu = |e| {
        let (a, b) = g.edge_labels(e);
        (a == v && u.contains(&b)) || (b == v && u.contains(&a))
    };
    d.crossings()
        .iter()
        .filter(|[e, f]| (is_vu(*e) && !g.edge(*f).has(vid)) || (is_vu(*f) && !g.edge(*e).has(vid)))
        .count() as i64
}

fn expected_split(d: &Drawing, v: &str, u: &[&str], x: &str, y: Option<&str>) -> Graph {
    let g = d.graph();
    let mut pairs: Vec<(String, String)> = g
        .label_pairs()
        .into_iter()
        .filter(|(a, b)| !((a == v && u.contains(&b.as_str())) || (b == v && u.contains(&a.as_str()))))
        .collect();
    let mut parts = g.part_labels();
    for t in std::iter::once(x).chain(y) {
        pairs.extend(u.iter().map(|ui| (t.to_string(), ui.to_string())));
        pairs.push((t.to_string(), v.to_string()));
        parts.push(vec![t.to_string()]);
    }
    Graph::new(parts, &pairs).unwrap()
}

#[test]
fn star_with_two_split_neighbors() {
    let d = star(&["u0", "w0", "u1", "w1"]);
    let ctx = Lemma1Context::new(&d, "v", &["u0", "u1"], 0).unwrap();
    assert_eq!((ctx.p(), ctx.q()), (2, 2));
    let (d1, c1) = lemma1_d1(&ctx).unwrap();
    assert_eq!(d1.crossings_total(), 1);
    assert!(c1.passed, "{:?}", c1.failures());
    let (d2, c2) = lemma1_d2(&ctx).unwrap();
    assert_eq!(d2.crossings_total(), 2);
    assert!(c2.passed, "{:?}", c2.failures());
    assert!(d2.graph().same_labeled_edges(&expected_split(&d, "v", &["u0", "u1"], "x", Some("y"))));
}

#[test]
fn empty_gaps_add_nothing() {
    let d = star(&["a", "b", "c", "e"]);
    let ctx = Lemma1Context::new(&d, "v", &["a", "b", "c", "e"], 1).unwrap();
    assert_eq!(ctx.q(), 0);
    let (d1, _) = lemma1_d1(&ctx).unwrap();
    assert_eq!(d1.crossings_total(), 0);
    let pair = star(&["a", "b"]);
    let ctx = Lemma1Context::new(&pair, "v", &["a", "b"], 0).unwrap();
    let (d2, c2) = lemma1_d2(&ctx).unwrap();
    assert_eq!(d2.crossings_total(), 0);
    assert!(c2.passed);
}

#[test]
fn odd_split_sets_are_rejected() {
    let d = star(&["u0", "w0", "u1", "w1"]);
    let err = Lemma1Context::new(&d, "v", &["u0", "u1", "w0"], 0).unwrap_err();
    assert_eq!(err.code(), "ODD_P");
    let mut ctx = Lemma1Context::new(&d, "v", &["u0", "u1"], 0).unwrap();
    ctx.u.push("w0".into());
    assert_eq!(lemma1_d1(&ctx).unwrap_err().code(), "ODD_P");
    assert_eq!(lemma1_d2(&ctx).unwrap_err().code(), "ODD_P");
    assert_eq!(Lemma1Context::new(&d, "v", &["u0", "q"], 0).unwrap_err().code(), "BAD_CONTEXT");
    let taken = Lemma1Context::new(&d, "v", &["u0", "u1"], 0).unwrap().with_labels("w0", "y");
    assert_eq!(lemma1_d1(&taken).unwrap_err().code(), "BAD_CONTEXT");
}

#[test]
fn cylinder_split_at_o_along_y() {
    let d = cylinder_k11mn(4, 4).unwrap();
    let ys = ["y1", "y2", "y3", "y4"];
    let gaps = gaps_of(&d, "o", &ys);
    assert_eq!(gaps.iter().sum::<usize>(), 5);
    let load = spoke_load(&d, "o", &ys);
    for k in 0..4 {
        let ctx = Lemma1Context::new(&d, "o", &ys, k).unwrap().with_labels("s", "t");
        let (d1, c1) = lemma1_d1(&ctx).unwrap();
        assert!(c1.passed, "{:?}", c1.failures());
        assert_eq!(d1.crossings_total() as i64, 24 + disk_by_routes(&gaps, k));
        let (d2, c2) = lemma1_d2(&ctx).unwrap();
        assert!(c2.passed, "{:?}", c2.failures());
        assert_eq!(d2.crossings_total() as i64, 24 + load + 2 * (5 + 1));
        assert!(d2.graph().same_labeled_edges(&expected_split(&d, "o", &ys, "s", Some("t"))));
    }
}

#[test]
fn neighboring_k_differ_as_the_disk_count_predicts() {
    let g = complete_multipartite(&[1, 1, 3, 3]).unwrap();
    let u = ["y1", "z1", "y2", "z2", "y3", "z3"];
    for seed in 0..5 {
        let d = random_geometric_drawing(&g, seed).unwrap();
        let gaps = gaps_of(&d, "o", &u);
        let ctx = Lemma1Context::new(&d, "o", &u, 0).unwrap().with_labels("s", "t");
        let totals: Vec<i64> =
            (0..6).map(|k| lemma1_d1(&ctx.clone().with_k(k)).unwrap().0.crossings_total() as i64).collect();
        for k in 0..6 {
            let k1 = (k + 1) % 6;
            assert_eq!(totals[k1] - totals[k], disk_by_routes(&gaps, k1) - disk_by_routes(&gaps, k));
        }
    }
}

fn sizes() -> impl Strategy<Value = Vec<usize>> {
    prop::sample::select(vec![vec![1, 1, 2, 2], vec![1, 1, 2, 3], vec![1, 1, 3, 3], vec![2, 2, 3], vec![1, 2, 4]])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn constructions_match_their_predictions(sizes in sizes(), seed in 0u64..1000, pick in 0usize..1000, k in 0usize..8) {
        let g = complete_multipartite(&sizes).unwrap();
        let d = random_geometric_drawing(&g, seed).unwrap();
        let labels = g.labels();
        let v = labels[pick % labels.len()].clone();
        let nbrs: Vec<String> = g.neighbors(g.vertex(&v).unwrap()).into_iter().map(|n| g.label(n).to_string()).collect();
        let p = nbrs.len() - nbrs.len() % 2;
        let start = pick % nbrs.len();
        let u: Vec<&str> = (0..p).map(|i| nbrs[(start + i) % nbrs.len()].as_str()).collect();
        let ctx = Lemma1Context::new(&d, &v, &u, k % p).unwrap().with_labels("s", "t");
        let gaps = gaps_of(&d, &v, &ctx.u.iter().map(String::as_str).collect::<Vec<_>>());
        prop_assert_eq!(gaps.iter().sum::<usize>(), ctx.q());
        let (d1, c1) = lemma1_d1(&ctx).unwrap();
        prop_assert!(c1.passed, "{:?}", c1.failures());
        prop_assert!(d1.validate().passed());
        prop_assert_eq!(d1.crossings_total() as i64, d.crossings_total() as i64 + disk_by_routes(&gaps, k % p));
        prop_assert!(d1.graph().same_labeled_edges(&expected_split(&d, &v, &u, "s", None)));
        let (d2, c2) = lemma1_d2(&ctx).unwrap();
        prop_assert!(c2.passed, "{:?}", c2.failures());
        prop_assert!(d2.validate().passed());
        let (h, q) = ((p / 2) as i64, ctx.q() as i64);
        prop_assert_eq!(d2.crossings_total() as i64, d.crossings_total() as i64 + spoke_load(&d, &v, &u) + h * (q + h - 1));
        prop_assert!(d2.graph().same_labeled_edges(&expected_split(&d, &v, &u, "s", Some("t"))));
    }
}
