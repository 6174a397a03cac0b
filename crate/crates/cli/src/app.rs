//! Subcommand dispatch.
//!
//! Exit codes: 0 success, 1 usage error, 2 data or parse error, 3 numerical
//! failure. Error text goes to stderr only.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use pcakit_core::decomp::{self, sort_eigenpairs_desc_abs};
use pcakit_core::format::NumberFormat;
use pcakit_core::pca::{self, PcaAlgorithm, PcaMethod};
use pcakit_core::{stats, DenseMatrix};

use crate::dataset::{read_csv_path, write_csv, Dataset};
use crate::error::CliError;
use crate::svg::{scatter_svg, PlotSpec};
use crate::table::{write_row, write_table};

#[derive(Debug, Parser)]
#[command(
    name = "pcakit",
    version,
    about = "Descriptive statistics, eigen/SVD factorizations and PCA on CSV data"
)]
struct Cli {
    /// Digits after the decimal point in printed tables.
    #[arg(long, global = true, default_value_t = 10)]
    precision: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Per-column sum, mean, standard deviation and variance.
    Stats { csv: PathBuf },
    /// Sample covariance matrix.
    Cov { csv: PathBuf },
    /// Eigendecomposition of a square symmetric matrix.
    Eig { csv: PathBuf },
    /// Singular values and right singular vectors.
    Svd { csv: PathBuf },
    /// Fit a principal component analysis.
    PcaFit {
        csv: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Center)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = AlgoArg::Svd)]
        algo: AlgoArg,
        /// Where to write the fitted model.
        #[arg(long)]
        model_out: Option<PathBuf>,
    },
    /// Project data with a previously fitted model.
    PcaTransform {
        csv: PathBuf,
        #[arg(long)]
        model: PathBuf,
        /// Number of leading components to keep (default: all).
        #[arg(long)]
        components: Option<usize>,
        /// Also write the projected data as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scatterplot of the first two columns as SVG.
    Plot {
        csv: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        title: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Center,
    Standardize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgoArg {
    Svd,
    Cov,
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    1
                }
            };
        }
    };

    let mut out = String::new();
    match execute(&cli, &mut out) {
        Ok(()) => match stdout.write_all(out.as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                2
            }
        },
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut String) -> Result<(), CliError> {
    let fixed = NumberFormat::Fixed(cli.precision);
    let signed = NumberFormat::Signed(cli.precision);
    match &cli.command {
        Command::Stats { csv } => {
            let ds = load(csv)?;
            let m = &ds.matrix;
            let means = stats::column_means(m)?;
            if let Some(names) = &ds.column_names {
                out.push_str(&format!("Columns: {}\n", names.join(" ")));
            }
            out.push_str(&format!(
                "Sum: {}\n",
                write_row(&stats::column_sums(m), fixed)
            ));
            out.push_str(&format!("Mean: {}\n", write_row(&means, fixed)));
            let sd = stats::column_std_devs(m)?;
            let var: Vec<f64> = sd.iter().map(|s| s * s).collect();
            out.push_str(&format!("Std dev: {}\n", write_row(&sd, fixed)));
            out.push_str(&format!("Variance: {}\n", write_row(&var, fixed)));
        }
        Command::Cov { csv } => {
            let ds = load(csv)?;
            out.push_str("Covariance matrix:\n");
            out.push_str(&write_table(&stats::covariance_matrix(&ds.matrix)?, signed));
        }
        Command::Eig { csv } => {
            let ds = load(csv)?;
            let e = sort_eigenpairs_desc_abs(decomp::eig_symmetric(&ds.matrix)?);
            let residual = decomp::reconstruct(&e).subtract(&ds.matrix)?.max_abs();
            out.push_str("Eigenvalues:\n");
            out.push_str(&write_row(&e.eigenvalues, signed));
            out.push_str("\n\nEigenvectors:\n");
            out.push_str(&write_table(&e.eigenvectors, signed));
            out.push_str(&format!("\nReconstruction residual: {residual:.3e}\n"));
        }
        Command::Svd { csv } => {
            let ds = load(csv)?;
            let s = decomp::svd(&ds.matrix)?;
            out.push_str("Singular values:\n");
            out.push_str(&write_row(&s.singular_values, signed));
            out.push_str("\n\nRight singular vectors:\n");
            out.push_str(&write_table(&s.right_vectors, signed));
        }
        Command::PcaFit {
            csv,
            method,
            algo,
            model_out,
        } => {
            let ds = load(csv)?;
            let (method, method_name) = match method {
                MethodArg::Center => (PcaMethod::Center, "center"),
                MethodArg::Standardize => (PcaMethod::Standardize, "standardize"),
            };
            let (algorithm, algo_name) = match algo {
                AlgoArg::Svd => (PcaAlgorithm::Svd, "svd"),
                AlgoArg::Cov => (PcaAlgorithm::Covariance, "cov"),
            };
            let model = pca::pca_fit_with(&ds.matrix, method, algorithm)?;
            out.push_str(&format!("Method: {method_name} ({algo_name})\n\n"));
            out.push_str("Eigenvalues:\n");
            out.push_str(&write_row(model.eigenvalues(), signed));
            out.push_str("\n\nEigenvectors:\n");
            out.push_str(&write_table(model.components(), signed));
            out.push_str("\nProportions:\n");
            out.push_str(&write_row(model.proportions(), fixed));
            out.push_str("\n\nCumulative proportions:\n");
            out.push_str(&write_row(model.cumulative_proportions(), fixed));
            out.push('\n');
            if let Some(path) = model_out {
                fs::write(path, pca::write_model(&model))
                    .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
            }
        }
        Command::PcaTransform {
            csv,
            model,
            components,
            out: out_path,
        } => {
            let ds = load(csv)?;
            let text = fs::read_to_string(model)
                .map_err(|e| CliError::Data(format!("{}: {e}", model.display())))?;
            let fitted = pca::read_model(&text)?;
            let projected = fitted.transform(&ds.matrix, *components)?;
            out.push_str("Transformed Data\n");
            out.push_str(&write_table(&projected, fixed));
            if let Some(path) = out_path {
                let names: Vec<String> = (1..=projected.cols()).map(|j| format!("pc{j}")).collect();
                let file = fs::File::create(path)
                    .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
                write_csv(file, Some(&names), &projected)?;
            }
        }
        Command::Plot {
            csv,
            out: svg_path,
            title,
        } => {
            let ds = load(csv)?;
            let spec = plot_spec(&ds, csv, title.as_deref())?;
            fs::write(svg_path, scatter_svg(&spec))
                .map_err(|e| CliError::Data(format!("{}: {e}", svg_path.display())))?;
        }
    }
    Ok(())
}

fn load(path: &Path) -> Result<Dataset, CliError> {
    read_csv_path(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

fn plot_spec(ds: &Dataset, csv: &Path, title: Option<&str>) -> Result<PlotSpec, CliError> {
    let m: &DenseMatrix = &ds.matrix;
    if m.cols() < 2 {
        return Err(CliError::Data(format!(
            "plot needs at least two columns, found {}",
            m.cols()
        )));
    }
    let points = m.row_iter().map(|r| (r[0], r[1])).collect();
    let title = title.map(str::to_owned).unwrap_or_else(|| {
        csv.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    });
    PlotSpec::with_defaults(title, ds.column_name(0), ds.column_name(1), points)
        .map_err(|e| CliError::Data(e.to_string()))
}
