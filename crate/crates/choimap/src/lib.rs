//! File formats and command-line front end for [`choimap_core`].

pub mod cli;
mod error;
pub mod json;
pub mod output;

pub use cli::run;
pub use error::CliError;
