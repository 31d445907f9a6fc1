//! Exact data for the B/C/D-series pre-modular categories obtained by
//! specializing the Kauffman skein parameters (α, s) at roots of unity,
//! and for their modularizations.

pub mod catdata;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod export;
pub mod modularize;
mod poly;
pub mod partitions;
pub mod refine;
pub mod series;
pub mod smatrix;
pub mod verlinde;

pub use cyclotomic::CycNum;
pub use error::{Error, Result};
pub use partitions::Partition;
pub use series::{Series, SeriesSpec};
