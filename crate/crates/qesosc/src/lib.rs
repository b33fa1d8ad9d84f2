//! File formats, the reproduction report and the command-line front end
//! built on [`qesosc_core`].

pub mod cli;
pub mod formats;
pub mod report;

pub use qesosc_core as core;
