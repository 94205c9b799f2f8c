//! Library backing the `codedist` binary: run configuration, report
//! models, and the subcommand implementations.
//!
//! The binary in `main.rs` only parses the command line and dispatches
//! here. Keeping the logic in a library crate lets integration tests
//! exercise the exact report types the binary serializes.

pub mod commands;
pub mod config;
pub mod report;
