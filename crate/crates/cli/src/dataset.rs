//! CSV input and output.
//!
//! The dialect is fixed: `,` separates fields, `.` is the decimal point,
//! cells are trimmed, and every row must have the same number of fields.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use pcakit_core::DenseMatrix;

use crate::error::CsvError;

/// A parsed table: optional column labels over a numeric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub column_names: Option<Vec<String>>,
    pub matrix: DenseMatrix,
}

impl Dataset {
    /// Label for column `j`, falling back to `x1`, `x2`, ...
    pub fn column_name(&self, j: usize) -> String {
        self.column_names
            .as_ref()
            .and_then(|names| names.get(j).cloned())
            .unwrap_or_else(|| format!("x{}", j + 1))
    }
}

pub fn read_csv<R: Read>(reader: R, has_header: bool) -> Result<Dataset, CsvError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let mut records = rdr.records();
    let column_names = if has_header {
        match records.next() {
            Some(header) => Some(header?.iter().map(str::to_owned).collect::<Vec<_>>()),
            None => return Err(CsvError::EmptyFile),
        }
    } else {
        None
    };

    let mut expected = column_names.as_ref().map(Vec::len);
    let mut data = Vec::new();
    let mut rows = 0;
    for record in records {
        let record = record?;
        let row = rows + 1;
        let width = *expected.get_or_insert(record.len());
        if record.len() != width {
            return Err(CsvError::RaggedRows {
                row,
                expected: width,
                found: record.len(),
            });
        }
        for (j, cell) in record.iter().enumerate() {
            let value = cell
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| CsvError::ParseError {
                    row,
                    column: j + 1,
                    value: cell.to_owned(),
                })?;
            data.push(value);
        }
        rows += 1;
    }

    let cols = expected.unwrap_or(0);
    if rows == 0 || cols == 0 {
        return Err(CsvError::EmptyFile);
    }
    let matrix = DenseMatrix::new(rows, cols, data).expect("shape and finiteness checked");
    Ok(Dataset {
        column_names,
        matrix,
    })
}

/// Reads CSV text, treating the first row as a header when any of its cells
/// is not a number.
pub fn read_csv_auto(text: &str) -> Result<Dataset, CsvError> {
    read_csv(text.as_bytes(), first_row_is_header(text))
}

pub fn read_csv_path(path: &Path) -> Result<Dataset, CsvError> {
    let mut text = String::new();
    File::open(path)?.read_to_string(&mut text)?;
    read_csv_auto(&text)
}

fn first_row_is_header(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .is_some_and(|line| line.split(',').any(|c| c.trim().parse::<f64>().is_err()))
}

/// Writes `matrix` as CSV using the shortest representation that parses
/// back to the same `f64`.
pub fn write_csv<W: Write>(
    writer: W,
    column_names: Option<&[String]>,
    matrix: &DenseMatrix,
) -> Result<(), CsvError> {
    let mut w = csv::WriterBuilder::new().from_writer(writer);
    if let Some(names) = column_names {
        w.write_record(names)?;
    }
    for row in matrix.row_iter() {
        w.write_record(row.iter().map(|v| v.to_string()))?;
    }
    w.flush()?;
    Ok(())
}
