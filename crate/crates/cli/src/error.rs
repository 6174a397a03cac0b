use thiserror::Error;

/// Failures while reading CSV input.
#[derive(Debug, Error)]
pub enum CsvError {
    #[error("input contains no data rows")]
    EmptyFile,

    #[error("row {row} has {found} fields, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },

    /// `row` counts data rows from 1 (a header is not counted); `column`
    /// counts from 1.
    #[error("row {row}, column {column}: cannot parse {value:?} as a finite number")]
    ParseError {
        row: usize,
        column: usize,
        value: String,
    },

    #[error("malformed CSV: {0}")]
    Format(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Top-level CLI failure, mapped onto the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{0}")]
    Data(String),

    #[error("{0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl From<pcakit_core::Error> for CliError {
    fn from(e: pcakit_core::Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Data(e.to_string())
        }
    }
}

impl From<CsvError> for CliError {
    fn from(e: CsvError) -> Self {
        CliError::Data(e.to_string())
    }
}
