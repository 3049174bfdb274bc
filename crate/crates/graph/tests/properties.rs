use std::collections::BTreeSet;

use crosskit_graph::{complete_multipartite, format_graph_spec, parse_part_sizes, EdgeId};
use proptest::prelude::*;

fn k11_classes(m: usize, n: usize) -> Vec<BTreeSet<EdgeId>> {
    let g = complete_multipartite(&[1, 1, m, n]).unwrap();
    let y: Vec<String> = (1..=m).map(|i| format!("y{i}")).collect();
    let z: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    let y: Vec<&str> = y.iter().map(String::as_str).collect();
    let z: Vec<&str> = z.iter().map(String::as_str).collect();
    let sets: [(&[&str], &[&str]); 6] =
        [(&["o"], &["x"]), (&["o"], &y), (&["o"], &z), (&["x"], &y), (&["x"], &z), (&y, &z)];
    sets.iter().map(|(a, b)| g.edge_class("c", a, b).unwrap().members).collect()
}

proptest! {
    #[test]
    fn bipartite_edge_count(a in 1usize..=10, b in 1usize..=10) {
        let g = complete_multipartite(&[a, b]).unwrap();
        prop_assert_eq!(g.edge_count(), a * b);
        prop_assert_eq!(g.complete_multipartite_shape(), Some({
            let mut s = vec![a, b];
            s.sort();
            s
        }));
    }

    #[test]
    fn six_classes_partition_k11mn(m in 1usize..=6, n in 1usize..=6) {
        let classes = k11_classes(m, n);
        let total: usize = classes.iter().map(BTreeSet::len).sum();
        let union: BTreeSet<EdgeId> = classes.iter().flatten().copied().collect();
        prop_assert_eq!(total, union.len());
        prop_assert_eq!(union.len(), 1 + 2 * m + 2 * n + m * n);
    }

    #[test]
    fn twin_adds_degree_edges(sizes in prop::collection::vec(1usize..=4, 2..=4), pick in 0usize..16) {
        let g = complete_multipartite(&sizes).unwrap();
        let v = g.vertices().nth(pick % g.vertex_count()).unwrap();
        let label = g.label(v).to_string();
        let t = g.twin_via_template(&label, "twin").unwrap();
        prop_assert_eq!(t.edge_count(), g.edge_count() + g.degree(v));
        let tv = t.vertex("twin").unwrap();
        let mut a: Vec<String> = t.neighbors(tv).iter().map(|&u| t.label(u).to_string()).collect();
        let mut b: Vec<String> = g.neighbors(v).iter().map(|&u| g.label(u).to_string()).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn spec_round_trip(sizes in prop::collection::vec(1usize..=30, 2..=6)) {
        prop_assert_eq!(parse_part_sizes(&format_graph_spec(&sizes)).unwrap(), sizes);
    }

    #[test]
    fn spec_parser_never_panics(s in "\\PC{0,20}") {
        let _ = parse_part_sizes(&s);
    }
}
