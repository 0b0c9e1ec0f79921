//! Instance files, task execution, reports and the corpus runner behind the
//! `filtralab` command.

pub mod corpus;
pub mod instance;
pub mod model;
pub mod report;
pub mod run;

pub use instance::{parse, InstanceFile, ParseError};
pub use run::{run_source, InstanceReport, RunConfig, Selection};
