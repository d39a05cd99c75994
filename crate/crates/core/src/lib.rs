//! Ternary linear codes and optimal locally repairable codes.
//!
//! A code with minimum distance `d` and locality `r` obeys
//! `d <= n - k - ceil(k/r) + 2`. Over GF(3) the codes meeting it fall into
//! eight classes; this crate builds each of them, verifies them by exact
//! computation, classifies arbitrary `(n, k, r)` and cross-checks the whole
//! picture against exhaustive search at small lengths.

pub mod bounds;
pub mod classifier;
pub mod code;
pub mod combinatorics;
pub mod constructions;
pub mod error;
pub mod gf3;
pub mod locality;
pub mod matrix_file;
pub mod oracle;
pub mod report;

pub use classifier::{classify, ClassVerdict};
pub use code::LinearCode;
pub use constructions::{construct, OptimalClass};
pub use error::{Error, Result};
pub use gf3::{Gf3, Gf3Matrix};
pub use locality::code_locality;
pub use oracle::{exists_optimal_lrc, scan_parameter_grid, SearchMode, SearchResult, SearchTask};
pub use report::{verify, verify_parity_check, VerificationReport};
