pub mod analysis;
pub mod binary;
pub mod codefile;
pub mod constructions;
pub mod error;
pub mod fields;
pub mod gabidulin;
pub mod geometry;
pub mod linalg;
pub mod selfcheck;
pub mod spreads;

pub use error::{Error, Result};
