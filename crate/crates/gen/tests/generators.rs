use std::collections::BTreeSet;

use crosskit_gen::{
    cylinder_k11mn, from_geometric, random_geometric_drawing, random_layout, zarankiewicz_drawing, GeometricLayout,
    Point, CYLINDER_MAX_SIDE,
};
use crosskit_graph::{EdgeClass, EdgeId, Graph};
use crosskit_map::{decode, encode, Drawing};
use proptest::prelude::*;

/// `Z(m,n)` from its floor-product definition.
fn z(m: usize, n: usize) -> usize {
    (m / 2) * ((m - 1) / 2) * (n / 2) * ((n - 1) / 2)
}

/// Harborth's value for `K_{1,1,m,n}`, written out independently.
fn k11mn(m: usize, n: usize) -> usize {
    z(m + 2, n + 2) - m * n + (m / 2) * (n / 2)
}

fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (ax, ay, bx, by, cx, cy) = (a.x as i128, a.y as i128, b.x as i128, b.y as i128, c.x as i128, c.y as i128);
    ((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)).signum()
}

/// Pairs of straight edges whose segments cross, by orientation signs.
fn brute_force_crossings(g: &Graph, pos: &[Point]) -> usize {
    let es = g.edges();
    let mut count = 0;
    for i in 0..es.len() {
        for j in i + 1..es.len() {
            let (e, f) = (es[i], es[j]);
            if e.shares_endpoint(&f) {
                continue;
            }
            let (a, b, c, d) = (pos[e.a.0], pos[e.b.0], pos[f.a.0], pos[f.b.0]);
            if orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0 {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn zarankiewicz_counts_on_the_grid() {
    for m in 1..=8 {
        for n in 1..=8 {
            let d = zarankiewicz_drawing(m, n).unwrap();
            assert_eq!(d.crossings_total(), z(m, n), "K_{{{m},{n}}}");
            assert!(d.validate().passed());
        }
    }
}

#[test]
fn zarankiewicz_known_values() {
    assert_eq!(zarankiewicz_drawing(3, 3).unwrap().crossings_total(), 1);
    assert_eq!(zarankiewicz_drawing(5, 7).unwrap().crossings_total(), 36);
    assert_eq!(zarankiewicz_drawing(1, 9).unwrap().crossings_total(), 0);
    assert_eq!(zarankiewicz_drawing(0, 3).unwrap_err().code(), "INVALID_PARTS");
}

#[test]
fn zarankiewicz_rotation_lists_the_other_axis_in_order() {
    // y1 sits at x = 1; its neighbors z1 (y = 1), z2 (y = 2), z3 (y = -1)
    // appear counterclockwise from the top down
    let d = zarankiewicz_drawing(3, 3).unwrap();
    let rot = d.rotation("y1").unwrap().starting_at("z2").unwrap();
    assert_eq!(rot.neighbors, vec!["z2", "z1", "z3"]);
    assert_eq!(d.vertex_pair_crossings("y1", "y2").unwrap(), 1);
    assert_eq!(d.vertex_pair_crossings("z1", "z2").unwrap(), 1);
    assert_eq!(d.vertex_pair_crossings("y2", "y1").unwrap(), 1);
}

#[test]
fn zarankiewicz_delete_one_crossing_edge() {
    let d = zarankiewicz_drawing(3, 3).unwrap();
    let [e, _] = d.crossings()[0];
    let after = d.delete_edges(&EdgeClass::new("S", BTreeSet::from([e]))).unwrap();
    assert_eq!(after.crossings_total(), 0);
    let same = d.delete_edges(&EdgeClass::empty("none")).unwrap();
    assert_eq!(same, d);
}

#[test]
fn cylinder_counts_match_the_closed_form() {
    for m in 1..=9 {
        for n in 1..=9 {
            let d = cylinder_k11mn(m, n).unwrap();
            assert_eq!(d.crossings_total(), k11mn(m, n), "K_{{1,1,{m},{n}}}");
            let l = d.lemma2_decomposition().unwrap();
            assert!(l.holds());
        }
    }
}

#[test]
fn cylinder_counts_across_the_range() {
    let sides = [1, 2, 10, 17, 24, 31, CYLINDER_MAX_SIDE];
    for (m, n) in sides.iter().flat_map(|&m| sides.iter().map(move |&n| (m, n))) {
        assert_eq!(cylinder_k11mn(m, n).unwrap().crossings_total(), k11mn(m, n), "K_{{1,1,{m},{n}}}");
    }
}

/// Every supported size; slow in debug builds, run with
/// `cargo test --release -- --ignored`.
#[test]
#[ignore]
fn cylinder_counts_on_the_whole_range() {
    for (m, n) in (1..=CYLINDER_MAX_SIDE).flat_map(|m| (1..=CYLINDER_MAX_SIDE).map(move |n| (m, n))) {
        assert_eq!(cylinder_k11mn(m, n).unwrap().crossings_total(), k11mn(m, n), "K_{{1,1,{m},{n}}}");
    }
}

#[test]
fn cylinder_reference_instances() {
    let d = cylinder_k11mn(4, 4).unwrap();
    assert_eq!(d.crossings_total(), 24);
    let l = d.lemma2_decomposition().unwrap();
    assert_eq!(l.sum, 24);
    assert_eq!(cylinder_k11mn(3, 3).unwrap().crossings_total(), 8);
    assert_eq!(cylinder_k11mn(4, 5).unwrap().crossings_total(), 38);
}

#[test]
fn cylinder_delete_xz_by_ledger() {
    let d = cylinder_k11mn(4, 4).unwrap();
    let g = d.graph();
    let zs: Vec<&str> = ["z1", "z2", "z3", "z4"].to_vec();
    let xz = g.edge_class("E(X,Z)", &["x"], &zs).unwrap();
    let all = g.all_edges_class("E");
    let expected = 24 - d.crossings_between(&xz, &all).unwrap();
    let after = d.delete_edges(&xz).unwrap();
    assert_eq!(after.crossings_total(), expected);
}

#[test]
fn random_drawings_are_deterministic_and_good() {
    let g = Graph::complete_multipartite(&[3, 3]).unwrap();
    for seed in 0..20 {
        let a = random_geometric_drawing(&g, seed).unwrap();
        let b = random_geometric_drawing(&g, seed).unwrap();
        assert_eq!(encode(&a), encode(&b));
        assert!(a.validate().passed());
        assert!(a.crossings_total() >= 1);
    }
}

#[test]
fn lemma2_terms_sum_to_the_total_on_random_drawings() {
    let g = Graph::complete_multipartite(&[1, 1, 3, 3]).unwrap();
    for seed in 0..100 {
        let d = random_geometric_drawing(&g, seed).unwrap();
        let l = d.lemma2_decomposition().unwrap();
        assert!(l.holds(), "seed {seed}: {l:?}");
    }
}

fn class_of(d: &Drawing, name: &str, mask: &[u8], tag: u8) -> EdgeClass {
    let members = d.graph().edge_ids().filter(|e| mask[e.0 % mask.len()] == tag).collect();
    EdgeClass::new(name, members)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn geometric_count_matches_brute_force(seed in any::<u64>(), m in 1usize..5, n in 1usize..5, k in 1usize..3) {
        let sizes: Vec<usize> = [m, n, k].to_vec();
        let g = Graph::complete_multipartite(&sizes).unwrap();
        let layout = random_layout(&g, seed, 0);
        if let Ok(d) = from_geometric(&g, &layout) {
            prop_assert_eq!(d.crossings_total(), brute_force_crossings(&g, &layout.positions));
            let report = d.validate();
            prop_assert!(report.passed());
            prop_assert_eq!(report.euler_characteristic(), 1 + report.components as i64);
        }
    }

    #[test]
    fn class_bookkeeping_identities(seed in any::<u64>(), mask in proptest::collection::vec(0u8..4, 1..12)) {
        let g = Graph::complete_multipartite(&[1, 1, 2, 3]).unwrap();
        let d = random_geometric_drawing(&g, seed).unwrap();
        let a = class_of(&d, "A", &mask, 0);
        let b = class_of(&d, "B", &mask, 1);
        let c = class_of(&d, "C", &mask, 2);
        let ab = a.union(&b);
        prop_assert_eq!(
            d.crossings_within(&ab).unwrap(),
            d.crossings_within(&a).unwrap() + d.crossings_within(&b).unwrap() + d.crossings_between(&a, &b).unwrap()
        );
        prop_assert_eq!(
            d.crossings_between(&a, &b.union(&c)).unwrap(),
            d.crossings_between(&a, &b).unwrap() + d.crossings_between(&a, &c).unwrap()
        );
        prop_assert_eq!(d.crossings_between(&a, &EdgeClass::empty("none")).unwrap(), 0);
    }

    #[test]
    fn adjacent_edges_never_cross(seed in any::<u64>()) {
        let g = Graph::complete_multipartite(&[1, 1, 3, 3]).unwrap();
        let d = random_geometric_drawing(&g, seed).unwrap();
        for v in g.vertices() {
            let star = g.star_class("E(v)", v);
            prop_assert_eq!(d.crossings_within(&star).unwrap(), 0);
        }
        let c = crosskit_map::FourClasses::of(&g).unwrap();
        let rest = g.all_edges_class("E").difference(&c.ox);
        prop_assert_eq!(d.crossings_between(&c.ox, &c.yz).unwrap(), d.crossings_between(&c.ox, &rest).unwrap());
    }

    #[test]
    fn deletion_count_law(seed in any::<u64>(), mask in proptest::collection::vec(0u8..3, 1..10)) {
        let g = Graph::complete_multipartite(&[1, 1, 2, 3]).unwrap();
        let d = random_geometric_drawing(&g, seed).unwrap();
        let s = class_of(&d, "S", &mask, 0);
        let rest = g.all_edges_class("E").difference(&s);
        let expected = d.crossings_total() - d.crossings_within(&s).unwrap() - d.crossings_between(&s, &rest).unwrap();
        let after = d.delete_edges(&s).unwrap();
        prop_assert_eq!(after.crossings_total(), expected);
        let report = after.validate();
        prop_assert!(report.passed());
        prop_assert_eq!(report.euler_characteristic(), 1 + report.components as i64);
        prop_assert_eq!(after.graph().edge_count(), g.edge_count() - s.len());
    }

    #[test]
    fn subdivision_keeps_the_total(seed in any::<u64>(), pick in 0usize..100) {
        let g = Graph::complete_multipartite(&[2, 3]).unwrap();
        let d = random_geometric_drawing(&g, seed).unwrap();
        let e = EdgeId(pick % g.edge_count());
        let (a, b) = g.edge_labels(e);
        let s = d.subdivide_on_spoke(a, b, "t").unwrap();
        prop_assert_eq!(s.crossings_total(), d.crossings_total());
        let near = s.graph().find_edge_by_label(a, "t").unwrap().unwrap();
        let far = s.graph().find_edge_by_label("t", b).unwrap().unwrap();
        prop_assert_eq!(s.edge_crossings(near), 0);
        prop_assert_eq!(s.edge_crossings(far), d.edge_crossings(e));
        prop_assert_eq!(s.rotation("t").unwrap().neighbors.len(), 2);
    }

    #[test]
    fn codec_round_trips_random_drawings(seed in any::<u64>()) {
        let g = Graph::complete_multipartite(&[1, 1, 2, 3]).unwrap();
        let d = random_geometric_drawing(&g, seed).unwrap();
        let s = encode(&d);
        let back = decode(s.as_bytes()).unwrap();
        prop_assert_eq!(encode(&back), s);
        prop_assert_eq!(back.lemma2_decomposition().unwrap(), d.lemma2_decomposition().unwrap());
        let m = d.mirrored();
        prop_assert!(m.validate().passed());
        prop_assert_eq!(m.crossings_total(), d.crossings_total());
    }
}

#[test]
fn straight_layout_helper_matches_edge_count() {
    let g = Graph::complete_multipartite(&[2, 2]).unwrap();
    let l = GeometricLayout::straight(&g, vec![Point::new(0, 0); 4]);
    assert_eq!(l.bends.len(), 4);
    assert_eq!(from_geometric(&g, &l).unwrap_err().code(), "DEGENERATE_LAYOUT");
}
