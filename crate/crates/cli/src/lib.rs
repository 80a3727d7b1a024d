//! Command-line front end for `monosat-core`: ideal file formats, the
//! subcommands, and the randomized verification harness.

pub mod commands;
pub mod format;
pub mod verify;

pub use commands::{run, Cli, Command, Output};
pub use format::{parse_any, parse_ideal, parse_json, IdealDocument, ParseError, Parsed};
pub use verify::{run_verify, run_verify_subset, Family, VerifyConfig, VerifyReport};
