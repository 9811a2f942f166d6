pub mod arith;
pub mod classify;
pub mod cli;
pub mod decompose;
pub mod error;
pub mod fixtures;
pub mod multiplicative;
pub mod oracle;
pub mod parse;
pub mod report;
pub mod ring;

pub use error::{Error, Result};
