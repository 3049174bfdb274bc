use crosskit_graph::Graph;
use crosskit_map::Drawing;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{from_geometric, GeometricLayout, Point, COORD_LIMIT};
use crate::GenError;

/// Random lattice points for the vertices of `g`, from stream `attempt` of
/// the generator seeded with `seed`.
pub fn random_layout(g: &Graph, seed: u64, attempt: u64) -> GeometricLayout {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt);
    let positions = g
        .vertices()
        .map(|_| Point::new(rng.random_range(-COORD_LIMIT..=COORD_LIMIT), rng.random_range(-COORD_LIMIT..=COORD_LIMIT)))
        .collect();
    GeometricLayout::straight(g, positions)
}

/// A straight-line drawing of `g` at random points. Degenerate samples are
/// redrawn from the next stream, so the result depends only on `(g, seed)`.
pub fn random_geometric_drawing(g: &Graph, seed: u64) -> Result<Drawing, GenError> {
    let mut attempt = 0;
    loop {
        match from_geometric(g, &random_layout(g, seed, attempt)) {
            Err(GenError::DegenerateLayout { .. }) => attempt += 1,
            other => return other,
        }
    }
}
