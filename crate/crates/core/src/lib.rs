//! Reversible logic synthesis and circuit-complexity tools.
//!
//! * [`boolfn`]: truth tables, permutations and control functions.
//! * [`esop`]: AND-EXOR expressions, expansion rules and PPRM.
//! * [`circuit`]: single-target and Toffoli gates, simulation, `.rc` files.
//! * [`synthesis`]: decomposition of any reversible function into at most
//!   `2n - 1` single-target gates.
//! * [`analysis`]: the Toffoli lower bound, BFS optimal sizes, censuses.
//! * [`embedding`]: half-V circuits and the `k`-line embedding of `B_{k-1,n}`.

pub mod analysis;
pub mod boolfn;
pub mod circuit;
pub mod cli;
pub mod embedding;
pub mod error;
pub mod esop;
pub mod synthesis;

pub use error::{Error, Result};
