//! Front end for checking the clopen tripos on finite spaces: model files,
//! the law suite and the subcommands of the `kh-tripos` binary.

pub mod check;
pub mod commands;
pub mod error;
pub mod gen;
pub mod model;

pub use check::{run_check, CheckOptions, LAWS};
pub use commands::{
    cmd_check, cmd_compactify, cmd_delta, cmd_eval, cmd_power, render_reports, Format, Outcome,
};
pub use error::InputError;
pub use model::{example_model, load_model, parse_model, LoadedModel};
