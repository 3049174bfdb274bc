//! Labeled multipartite graphs and the edge-class bookkeeping used by the
//! drawing machinery.
//!
//! Graphs are immutable values: every builder returns a fresh graph. Vertex
//! labels are stable text tokens so that renaming a vertex is an explicit
//! alias, never a mutation.

mod class;
mod error;
mod graph;
mod spec;

pub use class::EdgeClass;
pub use error::GraphError;
pub use graph::{Edge, EdgeId, Graph, VertexId};
pub use spec::{format_graph_spec, parse_graph_spec, parse_part_sizes, MAX_SPEC_VERTICES};

/// `K_{sizes}` with the default part-indexed labels.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph, GraphError> {
    Graph::complete_multipartite(sizes)
}
