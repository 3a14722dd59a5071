//! Library behind the `ds` command: table generation and golden comparison,
//! the oracle cross-check, the family-II candidate scan and argument handling.

pub mod check;
pub mod cli;
pub mod table;
pub mod tables;
