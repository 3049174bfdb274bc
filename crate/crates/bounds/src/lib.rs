//! Exact evaluation of crossing-number formulas: Zarankiewicz's number,
//! Harborth's multipartite upper bound and its closed forms, lower bounds
//! for `K_{1,m,n}` and `K_{1,1,m,n}`, and a registry of certified values.

mod error;
mod formulas;
mod harborth;
mod registry;
mod report;
mod theorem;

pub use error::BoundsError;
pub use formulas::{floor_div, format_sizes, hc_value, zarankiewicz, Family};
pub use harborth::{harborth_bound, harborth_bound_with, harborth_exact, SumRange, SELECTED_RANGE};
pub use num_rational::Ratio;
pub use registry::{known_value, registry_matches, Assumptions, CrSource, SourcedValue};
pub use report::{cell_report, status_report, BoundReport, LowerEntry, Status, UpperEntry, CSV_HEADER};
pub use theorem::{prior_lower_bound, theorem_lower_bound, BoundValue, PriorKind, Theorem};
