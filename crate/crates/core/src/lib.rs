//! Graph products of groups: normal forms, Bass–Serre trees of free
//! products, and classification verdicts computed from the defining graph.

pub mod bass_serre;
pub mod classifier;
pub mod cli_io;
pub mod graph_core;
pub mod group_engine;
pub mod labeled;
pub mod word_engine;
