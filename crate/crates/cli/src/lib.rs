//! Command-line support for `quasiarr`: text formats, built-in specs,
//! parallel enumeration and the verification report.

pub mod builtin;
pub mod error;
pub mod format;
pub mod parallel;
pub mod report;
