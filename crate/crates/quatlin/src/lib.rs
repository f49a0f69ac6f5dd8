//! Parsing, reduction and rendering of linear quaternion function systems,
//! plus the `quatlin` command-line front end.

pub mod cli;
pub mod expr;
pub mod format;
