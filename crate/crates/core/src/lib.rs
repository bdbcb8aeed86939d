//! Prime ideal sum graphs of finite commutative rings and their metric dimension.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod metric;
pub mod pis;
pub mod ring;
pub mod verify;

pub use error::{Error, Result};
