use std::time::Instant;

use crosskit_graph::parse_graph_spec;
use crosskit_oracle::{exact_crossing_number, verify_witness};

#[test]
fn known_values() {
    for (spec, want) in [
        ("K=1,1,1,1", 0),
        ("K=3,3", 1),
        ("K=3,4", 2),
        ("K=2,2,2", 0),
        ("K=2,3,2", 2),
        ("K=1,3,3", 3),
        ("K=1,1,2,2", 1),
        ("K=1,1,2,3", 3),
        ("K=4,4", 4),
    ] {
        let t = Instant::now();
        let g = parse_graph_spec(spec).unwrap();
        let r = exact_crossing_number(&g, want + 1).unwrap();
        assert_eq!(r.value, want, "{spec}");
        let d = verify_witness(&g, &r.witness).unwrap();
        assert_eq!(d.crossings_total(), want);
        eprintln!("{spec}: {} in {:?}", r.value, t.elapsed());
    }
}
