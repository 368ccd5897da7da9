//! Scene files, text lists and the command line front end for `xi-core`.

pub mod cli;
pub mod error;
pub mod lists;
pub mod problem;
pub mod report;
pub mod scene_file;
pub mod table;

pub use error::AppError;
