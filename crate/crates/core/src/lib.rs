//! Regions cut out by the diagonals of a convex polygon, labelled by their
//! two-standard consecutive cycles.

pub mod arrangements;
pub mod cycles;
pub mod error;
pub mod exactgeom;
pub mod format;
pub mod harness;
pub mod realize;
pub mod regions;
pub mod svg;

pub use error::{Error, Result};
