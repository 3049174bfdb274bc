//! Good drawings as plane maps.
//!
//! A [`Drawing`] stores a graph, its crossing nodes, the order of crossings
//! along every edge and a counterclockwise rotation at every node. The crate
//! validates the good-drawing axioms, counts crossings between edge classes
//! and performs the small surgeries (deletion, subdivision, parallel
//! routing, rerouting near a vertex) from which larger constructions are
//! composed. Surgeries return new drawings and fail rather than produce an
//! invalid one.

mod codec;
mod count;
mod drawing;
mod error;
mod halfedge;
mod rotation;
mod route;
mod surgery;
mod validate;

pub use codec::{decode, encode, FILE_EXTENSION};
pub use count::{CrossingLedger, FourClasses, Lemma2Ledger};
pub use drawing::{CrossingId, Drawing, Node, SegEnd};
pub use error::MapError;
pub use rotation::RotationView;
pub use route::{Router, Side, Stop, Turn};
pub use surgery::ParallelEnd;
pub use validate::{ValidationReport, Violation, ViolationKind};
