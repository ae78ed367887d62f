//! File formats, the acceptance suite and the `ld` command-line tool.

pub mod cli;
pub mod format;
pub mod reproduce;
