//! File formats, builtin datasets and experiment drivers around
//! `lap-perturb-core`. Node indices are 1-based everywhere in this crate's
//! inputs and outputs.

pub mod config;
pub mod datasets;
pub mod edgelist;
pub mod evaluate;
pub mod formats;
pub mod reproduce;
pub mod sweep;

pub use lap_perturb_core as core;

