//! Command-line front end: the space-expression language, command
//! implementations and the verification suites.

pub mod commands;
pub mod config;
pub mod error;
pub mod eval;
pub mod expr;
pub mod verify;
