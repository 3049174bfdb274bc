//! Exact crossing numbers of tiny graphs.
//!
//! Some drawing with the fewest crossings is good, so it suffices to try
//! sets of crossing pairs of independent edges, each pair at most once,
//! together with the order of crossings along every edge. A choice is
//! realizable iff replacing the crossings by vertices gives a planar graph.
//! The search deepens over the number of crossings and returns a witness
//! that [`verify_witness`] re-checks through the good-drawing validator.

mod error;
mod planarity;
mod planarize;
mod search;
mod symmetry;
mod witness;

pub use error::OracleError;
pub use planarity::{is_planar, planar_embedding, Embedding};
pub use planarize::{planarize, Planarization, PlanarizationSelection};
pub use search::{exact_crossing_number, exact_crossing_number_with, ExactCrossingNumber, SearchOptions};
pub use symmetry::{part_automorphisms, MAX_GROUP};
pub use witness::{selection_drawing, verify_witness, Witness};
