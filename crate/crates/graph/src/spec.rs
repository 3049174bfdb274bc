use crate::{Graph, GraphError};

/// Upper limit on the total vertex count a spec may request.
pub const MAX_SPEC_VERTICES: usize = 4096;

fn err(offset: usize, message: &str) -> GraphError {
    GraphError::Parse { offset, message: message.to_string() }
}

/// Parses `K=<n1>,<n2>[,...]` into its part sizes.
pub fn parse_part_sizes(text: &str) -> Result<Vec<usize>, GraphError> {
    let bytes = text.as_bytes();
    if !text.starts_with("K=") {
        let at = if bytes.first() == Some(&b'K') { 1 } else { 0 };
        return Err(err(at, "expected `K=`"));
    }
    let mut sizes = Vec::new();
    let mut total = 0usize;
    let mut i = 2;
    loop {
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == start {
            return Err(err(i, "expected a positive integer"));
        }
        let n: usize = text[start..i].parse().map_err(|_| err(start, "integer too large"))?;
        if n == 0 {
            return Err(err(start, "part size must be at least 1"));
        }
        total = total.saturating_add(n);
        if total > MAX_SPEC_VERTICES {
            return Err(err(start, "too many vertices"));
        }
        sizes.push(n);
        if i == bytes.len() {
            break;
        }
        if bytes[i] != b',' {
            return Err(err(i, "expected `,` or end of input"));
        }
        i += 1;
    }
    if sizes.len() < 2 {
        return Err(err(bytes.len(), "at least two part sizes required"));
    }
    Ok(sizes)
}

/// Parses a graph spec into the complete multipartite graph it names.
pub fn parse_graph_spec(text: &str) -> Result<Graph, GraphError> {
    let sizes = parse_part_sizes(text)?;
    Graph::complete_multipartite(&sizes)
}

pub fn format_graph_spec(sizes: &[usize]) -> String {
    let body: Vec<String> = sizes.iter().map(usize::to_string).collect();
    format!("K={}", body.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let g = parse_graph_spec("K=1,1,4,4").unwrap();
        assert_eq!(g.part_sizes(), [1, 1, 4, 4]);
        assert_eq!(parse_graph_spec("K=5,7").unwrap().edge_count(), 35);
    }

    #[test]
    fn reports_offsets() {
        let e = parse_graph_spec("K=0,3").unwrap_err();
        assert_eq!(e, GraphError::Parse { offset: 2, message: "part size must be at least 1".into() });
        assert!(matches!(parse_graph_spec("K=3,,3"), Err(GraphError::Parse { offset: 4, .. })));
        assert!(matches!(parse_graph_spec("K=3;3"), Err(GraphError::Parse { offset: 3, .. })));
        assert!(matches!(parse_graph_spec("J=3"), Err(GraphError::Parse { offset: 0, .. })));
        assert!(matches!(parse_graph_spec("K=3"), Err(GraphError::Parse { offset: 3, .. })));
        assert!(matches!(parse_graph_spec("K=3,"), Err(GraphError::Parse { offset: 4, .. })));
        assert!(parse_graph_spec("K=99999999999999999999999,1").is_err());
        assert!(parse_graph_spec("K=4000,4000").is_err());
    }

    #[test]
    fn formats_round_trip() {
        assert_eq!(format_graph_spec(&[1, 1, 4, 4]), "K=1,1,4,4");
        assert_eq!(parse_part_sizes(&format_graph_spec(&[2, 3, 2])).unwrap(), [2, 3, 2]);
    }
}
