pub mod error;
pub(crate) mod canon;
pub mod complex;
pub mod enumeration;
pub mod genus_one;
pub mod graph;
pub mod homology;
pub mod io;
pub mod reference;
pub mod retract;
pub mod tangent;
pub mod verify;

pub use error::{Error, Result};
