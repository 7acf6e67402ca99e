//! Command implementations behind the `hypercode` binary.

pub mod report;
pub mod scan;
pub mod verify;
