//! Cube-category index calculus and pure braid group presentations of
//! surfaces built as embedding tori, with the Möbius band worked end to end.

pub mod braids;
pub mod cli;
pub mod cube;
pub mod error;
pub mod group;
pub mod oracles;

pub use error::{BraidError, CubeError, OracleError, WordError};
