//! Distinct-part partitions of `n` and their correspondence with marked
//! lambda-partitions (lambda = 2 or 3).
//!
//! The crate provides:
//!
//! * [`partition`]: the partition data model, standard forms, leading parts
//!   and marked lambda-partitions;
//! * [`enumerate`]: exhaustive enumeration and counting;
//! * [`frobenius`]: Frobenius coordinates and the diagonal bijection `S`;
//! * [`tmap`]: the recursive bijection `T` for both lambdas and its inverse;
//! * [`series`]: exact truncated bivariate series and generating-function
//!   identity checks;
//! * [`groups`]: the two automorphisms of `D(n)`, their orders and the order of
//!   the group they generate;
//! * [`cli`]: the `lampart` command-line front end.

pub mod cli;
pub mod diagram;
pub mod enumerate;
mod error;
pub mod frobenius;
pub mod groups;
pub mod partition;
pub mod series;
pub mod text;
pub mod tmap;

pub use error::{Error, Result};
pub use partition::{Lambda, MarkedPartition, Partition};
