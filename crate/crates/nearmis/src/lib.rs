//! Graph files, JSON reports and the `nearmis` command line on top of
//! [`nearmis_core`].

pub mod cli;
pub mod family;
pub mod format;
pub mod report;

pub use format::{parse_graph, parse_str, write_graph, GraphFormat, LabeledGraph};
pub use report::RunReport;
