//! Cubic graphs, papillon graphs and the E2F / PMH / PH properties.

pub mod census;
pub mod check;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod iso;
pub mod matchings;
pub mod multipole;
mod par;
pub mod structure;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{CubicGraph, Cycle, EdgeId, Vertex};
pub use par::configure_threads;
