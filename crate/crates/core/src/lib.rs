//! Maximal distance minimizers in the plane: evaluation, constructions,
//! first-order checks, numerical solvers and lower bounds.

pub mod bounds;
pub mod constructions;
pub mod energy;
pub mod error;
pub mod geometry;
pub mod mset;
pub mod network;
pub mod numeric;
pub mod regularity;
pub mod solver;

pub use error::{Error, Result};
pub use geometry::{Point, Ray};
pub use mset::{CompactSetModel, SampleNet};
pub use network::{Network, PathTrace};
