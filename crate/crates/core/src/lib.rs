//! Exact computations with comodules of string and special biserial
//! coalgebras, instantiated on the blocks of quantum SL(2) at an odd root of
//! unity.

pub mod cli;
pub mod error;
pub mod linalg;
pub mod qdim;
pub mod quantum;
pub mod quiver;
pub mod string;
pub mod syzygy;

pub use error::{Error, Result};
