//! Command line and HTTP front end for `poncelet-core`.

pub mod api;
pub mod cli;
pub mod layers;
pub mod payload;
pub mod report;

pub use api::router;
pub use cli::run_cli;
