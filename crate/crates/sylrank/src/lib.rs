//! File formats and the command line for `sylrank-core`.
//!
//! The binary is a thin wrapper around [`cli::run`]; the parsers are public so
//! other tools can read the same ring, matrix, module and rank-function text.

pub mod cli;
pub mod module;
pub mod output;
pub mod parse;
pub mod spec;

pub use cli::{run, Outcome};
pub use module::{parse_module, ModuleSpec};
pub use parse::{parse_group, parse_matrix, parse_ring, ParseError};
pub use spec::{parse_epi, parse_hom, parse_rank_fn, parse_system};
