pub mod checkpoint;
pub mod cli;
pub mod format;
pub mod search;

pub use powtrip_core as core;
