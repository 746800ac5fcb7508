//! CLI companion to `agler-core`: JSON file formats, bundled demos, and
//! report rendering. The binary target `agler` wires these into the
//! `verify`, `realize`, `eval`, `to-rational`, `lower-bound`, `vn-test`,
//! and `demo` subcommands.

pub mod demos;
pub mod json;
pub mod report;
