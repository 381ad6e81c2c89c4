//! Input parsing and report types shared by the `selfdual` binary and its
//! integration tests.

pub mod doc;
pub mod output;
