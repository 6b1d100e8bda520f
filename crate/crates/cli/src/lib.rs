//! Library surface of the batch runner, exposed so the configuration and
//! report plumbing can be exercised directly (and fuzzed).

pub mod config;
pub mod output;
pub mod runner;
