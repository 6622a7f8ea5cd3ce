//! File formats, exports and the command-line front end of `relca-core`.

pub mod dot;
pub mod rcf;
pub mod render;
pub mod report;
pub mod tbox;

pub use rcf::{parse_rcf, parse_solution, write_rcf, write_solution, ParseError, RcfDocument};
