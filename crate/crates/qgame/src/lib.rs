//! File formats, run reports, parallel search and the command-line front end
//! for [`qgame_core`].

pub mod angles;
pub mod cli;
pub mod io;
pub mod parallel;
pub mod report;

pub use qgame_core as core;
