//! Library half of the `zkloop` command-line tool: the facet document
//! format, the subcommands and report rendering.

pub mod commands;
pub mod document;
pub mod render;

pub use commands::{Options, Report};
pub use document::{parse, ComplexDocument, DocumentError, Input};
