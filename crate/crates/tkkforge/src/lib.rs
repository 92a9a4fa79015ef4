//! Structure-constant files, the example catalog and the verification
//! commands behind the `tkkforge` binary.

pub mod catalog;
pub mod commands;
pub mod format;
pub mod input;
pub mod report;
