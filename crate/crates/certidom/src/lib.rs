//! Command line front end, file formats and verification sweeps built on
//! [`certidom_core`].

pub mod cli;
pub mod graph6;
pub mod report;
pub mod sweep;
pub mod text;

pub use certidom_core as core;
