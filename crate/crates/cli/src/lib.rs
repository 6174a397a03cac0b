//! Command-line front end for `pcakit-core`.
//!
//! * [`dataset`]: CSV ingestion and output.
//! * [`table`]: fixed-point text tables.
//! * [`svg`]: standalone SVG scatterplots.
//! * [`app`]: argument parsing and the subcommands.

pub mod app;
pub mod dataset;
pub mod error;
pub mod svg;
pub mod table;

pub use app::run;
pub use dataset::{read_csv, read_csv_auto, write_csv, Dataset};
pub use error::{CliError, CsvError};
pub use svg::{scatter_svg, PlotSpec};
pub use table::write_table;
