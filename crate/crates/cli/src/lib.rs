//! Configuration ingestion, the run/sweep/landscape/check commands, and
//! deterministic CSV emission for the phase-field damage simulator.

pub mod acceptance;
pub mod commands;
pub mod config;
pub mod csv_out;
