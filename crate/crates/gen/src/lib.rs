//! Concrete drawings: exact conversion of geometric layouts into plane maps,
//! Zarankiewicz drawings of `K_{m,n}`, cylinder drawings of `K_{1,1,m,n}`
//! and seeded random straight-line drawings.

mod cylinder;
mod error;
mod geometry;
mod random;
mod zarankiewicz;

pub use cylinder::{cylinder_k11mn, cylinder_layout, CYLINDER_MAX_SIDE};
pub use error::GenError;
pub use geometry::{from_geometric, GeometricLayout, Point, COORD_LIMIT};
pub use random::{random_geometric_drawing, random_layout};
pub use zarankiewicz::{zarankiewicz_drawing, zarankiewicz_layout};
