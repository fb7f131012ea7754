//! Exact computer algebra for Jack symmetric functions and the commuting
//! Sekiguchi–Debiard hierarchy of the Calogero–Sutherland model.

pub mod alpha;
pub mod cli;
pub mod error;
pub mod field;
pub mod finite;
pub mod jack;
pub mod ops;
pub mod partition;
pub mod poly;
pub mod ratfunc;
pub mod symfun;
pub mod verify;

pub use alpha::{AlphaPoly, AlphaRat};
pub use error::{Error, Result};
pub use partition::Partition;
pub use symfun::{Basis, SymFun};
