//! Command-line front end: named-form expansion, identity suites, genera,
//! special values and lifts, with text or JSON output.

pub mod emit;
pub mod input;
pub mod run;
pub mod suites;

pub use run::{run, Cli, Outcome};

#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
    #[doc = include_str!("../../../book/src/checks.md")]
    pub mod checks {}
}
