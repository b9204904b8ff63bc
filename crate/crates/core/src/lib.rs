pub mod cache;
pub mod cli;
pub mod error;
pub mod families;
pub mod gl;
pub mod hit;
pub mod kameko;
pub mod lattice;
pub mod linalg;
pub mod poly;
pub mod steenrod;

pub use error::{Error, Result};
