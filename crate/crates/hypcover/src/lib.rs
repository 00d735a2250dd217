//! Command-line tools, file formats and experiment drivers on top of
//! `hypcover-core`.

pub mod cli;
pub mod clock;
pub mod experiments;
pub mod io;
