//! Circuit-complexity analysis: the Toffoli lower bound, exact optimal sizes
//! for small `n`, and cost censuses of synthesized circuits.

mod bfs;
mod bounds;
mod census;

pub use bfs::{bfs_optimal_sizes, count_one_gate_functions, one_gate_library, BfsResult, Library};
pub use bounds::{
    check_induction_inequality, factorial_of_pow2, lower_bound_toffoli, lower_bound_toffoli_with,
    one_gate_count_formula, BoundMethod, BoundReport, EXACT_LIMIT, EXACT_MAX,
};
pub use census::{
    census, census_functions, classify_function, Census, CensusMode, ComplexityProfile,
    DEFAULT_SAMPLES,
};
