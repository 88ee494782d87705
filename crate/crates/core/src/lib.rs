//! Skew Young tableaux: plinths, the volume bijection for semistandard
//! tableaux, jeu de taquin, evacuation and its skew extension, and exact
//! generating functions.

pub mod bijection;
pub mod error;
pub mod jdt;
pub mod plinth;
pub mod qseries;
pub mod schutzenberger;
pub mod shape;
pub mod tableau;
pub mod verify;

#[cfg(test)]
mod proptests;

pub use error::{Error, Result};
pub use shape::{Cell, Partition, SkewShape};
pub use tableau::{ReadingPartition, StandardTableau, Tableau};
