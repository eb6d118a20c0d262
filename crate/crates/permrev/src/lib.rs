//! File formats and the `permrev` command line on top of `permrev-core`.

pub mod cli;
pub mod dot;
pub mod report;
pub mod text;

pub use dot::emit_dot;
pub use text::{emit_dfa, parse_dfa, ParseError};
