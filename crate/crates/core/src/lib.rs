pub mod arith;
pub mod characters;
pub mod combinatorics;
pub mod conjecture;
pub mod delta;
pub mod dump;
pub mod error;
pub mod linalg;
pub mod phi;
pub mod spaces;

pub use error::{Error, Result};
