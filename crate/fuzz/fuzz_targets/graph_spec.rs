#![no_main]

use crosskit_graph::{format_graph_spec, parse_graph_spec, parse_part_sizes};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|text: &str| {
    let Ok(sizes) = parse_part_sizes(text) else { return };
    // large specs are valid but slow to build
    if sizes.iter().sum::<usize>() > 64 {
        return;
    }
    let g = parse_graph_spec(text).expect("sizes parsed, so the graph builds");
    assert_eq!(g.vertex_count(), sizes.iter().sum::<usize>());
    let canonical = format_graph_spec(&sizes);
    assert_eq!(parse_part_sizes(&canonical).unwrap(), sizes);
});
