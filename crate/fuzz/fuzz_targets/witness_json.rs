#![no_main]

use crosskit_graph::{parse_graph_spec, parse_part_sizes};
use crosskit_oracle::{verify_witness, Witness};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let Ok(w) = Witness::from_json(text) else { return };
    let spec = w.graph.as_deref().unwrap_or("K=3,3");
    // the search space, not correctness, limits what is worth checking
    match parse_part_sizes(spec) {
        Ok(sizes) if sizes.iter().sum::<usize>() <= 12 && w.k <= 16 => {}
        _ => return,
    }
    let g = parse_graph_spec(spec).expect("sizes parsed, so the graph builds");
    if let Ok(d) = verify_witness(&g, &w) {
        assert!(d.validate().passed());
        assert_eq!(d.crossings_total(), w.k);
    }
    let back = Witness::from_json(&w.to_json()).expect("serialized witnesses parse");
    assert_eq!(back, w);
});
