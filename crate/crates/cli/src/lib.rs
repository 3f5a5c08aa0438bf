//! File formats, report documents and command implementations behind the
//! `proxrecall` binary.

pub mod commands;
pub mod error;
pub mod formats;
pub mod report;

pub use commands::{cmd_capacity, cmd_enumerate, cmd_map, cmd_orders, cmd_recall, cmd_train};
pub use error::{exit, CliError, Result};
pub use report::{Format, Report};
