//! Plain-text model files.
//!
//! ```text
//! pcakit-model v1
//! method center
//! samples 10
//! means 1.8100000000000001e0 1.9099999999999997e0
//! eigenvalues 1.2840277121727834e0 4.9083398938327270e-2
//! component 6.7787339852801165e-1 7.3517865554440798e-1
//! component 7.3517865554440798e-1 -6.7787339852801165e-1
//! ```
//!
//! Numbers carry 17 significant digits. `std_devs` is present only for
//! standardized models. Each `component` line is one principal direction,
//! in model order. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use super::{PcaMethod, PcaModel};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::vector::NumericVector;

pub const MODEL_HEADER: &str = "pcakit-model v1";

pub fn write_model(model: &PcaModel) -> String {
    let mut out = String::new();
    out.push_str(MODEL_HEADER);
    out.push('\n');
    let method = match model.method() {
        PcaMethod::Center => "center",
        PcaMethod::Standardize => "standardize",
    };
    writeln!(out, "method {method}").unwrap();
    writeln!(out, "samples {}", model.n_samples()).unwrap();
    write_values(&mut out, "means", model.column_means());
    if let Some(sd) = model.column_std_devs() {
        write_values(&mut out, "std_devs", sd);
    }
    write_values(&mut out, "eigenvalues", model.eigenvalues());
    for j in 0..model.n_components() {
        write_values(&mut out, "component", &model.components().column(j));
    }
    out
}

fn write_values(out: &mut String, key: &str, values: &[f64]) {
    out.push_str(key);
    for v in values {
        write!(out, " {v:.16e}").unwrap();
    }
    out.push('\n');
}

pub fn read_model(text: &str) -> Result<PcaModel> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    match lines.next() {
        Some((_, MODEL_HEADER)) => {}
        Some((line, other)) => {
            return Err(format_error(
                line,
                format!("expected header {MODEL_HEADER:?}, found {other:?}"),
            ))
        }
        None => return Err(format_error(0, "empty model file")),
    }

    let mut method = None;
    let mut samples = None;
    let mut means = None;
    let mut std_devs = None;
    let mut eigenvalues = None;
    let mut components: Vec<Vec<f64>> = Vec::new();
    let mut last_line = 1;

    for (line, content) in lines {
        last_line = line;
        let (key, rest) = content
            .split_once(char::is_whitespace)
            .unwrap_or((content, ""));
        let rest = rest.trim();
        match key {
            "method" => {
                method = Some(match rest {
                    "center" => PcaMethod::Center,
                    "standardize" => PcaMethod::Standardize,
                    other => return Err(format_error(line, format!("unknown method {other:?}"))),
                })
            }
            "samples" => {
                samples = Some(
                    rest.parse::<usize>()
                        .map_err(|e| format_error(line, format!("bad sample count: {e}")))?,
                )
            }
            "means" => means = Some(parse_values(line, rest)?),
            "std_devs" => std_devs = Some(parse_values(line, rest)?),
            "eigenvalues" => eigenvalues = Some(parse_values(line, rest)?),
            "component" => components.push(parse_values(line, rest)?),
            other => return Err(format_error(line, format!("unknown key {other:?}"))),
        }
    }

    let missing = |what: &str| format_error(last_line, format!("missing {what}"));
    let method = method.ok_or_else(|| missing("method"))?;
    let samples = samples.ok_or_else(|| missing("samples"))?;
    let means = means.ok_or_else(|| missing("means"))?;
    let eigenvalues = eigenvalues.ok_or_else(|| missing("eigenvalues"))?;
    if components.is_empty() {
        return Err(missing("component"));
    }

    let p = means.len();
    if let Some(bad) = components.iter().find(|c| c.len() != p) {
        return Err(format_error(
            last_line,
            format!("component has {} entries, expected {p}", bad.len()),
        ));
    }
    // Component lines are columns of the variables x components matrix.
    let k = components.len();
    let mut data = Vec::with_capacity(p * k);
    for i in 0..p {
        data.extend(components.iter().map(|c| c[i]));
    }
    let components =
        DenseMatrix::new(p, k, data).map_err(|e| format_error(last_line, e.to_string()))?;

    let to_vector =
        |v: Vec<f64>| NumericVector::new(v).map_err(|e| format_error(last_line, e.to_string()));
    PcaModel::from_parts(
        method,
        samples,
        to_vector(means)?,
        std_devs.map(to_vector).transpose()?,
        to_vector(eigenvalues)?,
        components,
    )
    .map_err(|e| format_error(last_line, e.to_string()))
}

fn parse_values(line: usize, rest: &str) -> Result<Vec<f64>> {
    rest.split_whitespace()
        .map(|tok| {
            tok.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format_error(line, format!("invalid number {tok:?}")))
        })
        .collect()
}

fn format_error(line: usize, message: impl Into<String>) -> Error {
    Error::ModelFormat {
        line,
        message: message.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pca::{pca_fit, PcaMethod};

    fn xy10() -> DenseMatrix {
        DenseMatrix::from_rows(&[
            [2.5, 2.4],
            [0.5, 0.7],
            [2.2, 2.9],
            [1.9, 2.2],
            [3.1, 3.0],
            [2.3, 2.7],
            [2.0, 1.6],
            [1.0, 1.1],
            [1.5, 1.6],
            [1.1, 0.9],
        ])
        .unwrap()
    }

    #[test]
    fn round_trips_both_methods() {
        for method in [PcaMethod::Center, PcaMethod::Standardize] {
            let model = pca_fit(&xy10(), method).unwrap();
            let text = write_model(&model);
            assert!(text.starts_with("pcakit-model v1\n"));
            assert_eq!(read_model(&text).unwrap(), model);
        }
    }

    #[test]
    fn std_devs_only_for_standardize() {
        let text = write_model(&pca_fit(&xy10(), PcaMethod::Center).unwrap());
        assert!(!text.contains("std_devs"));
        let text = write_model(&pca_fit(&xy10(), PcaMethod::Standardize).unwrap());
        assert!(text.contains("\nstd_devs "));
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(matches!(
            read_model(""),
            Err(Error::ModelFormat { line: 0, .. })
        ));
        assert!(matches!(
            read_model("pcakit-model v2\n"),
            Err(Error::ModelFormat { line: 1, .. })
        ));
        let good = write_model(&pca_fit(&xy10(), PcaMethod::Center).unwrap());

        let bad = good.replace("method center", "method sideways");
        assert!(matches!(
            read_model(&bad),
            Err(Error::ModelFormat { line: 2, .. })
        ));

        let bad = good.replace("samples 10", "samples ten");
        assert!(matches!(
            read_model(&bad),
            Err(Error::ModelFormat { line: 3, .. })
        ));

        let truncated: String = good.lines().take(4).collect::<Vec<_>>().join("\n");
        assert!(read_model(&truncated).is_err());

        let nan = good.replacen("means ", "means NaN ", 1);
        assert!(read_model(&nan).is_err());

        let std_mismatch = format!("{good}std_devs 1 1\n");
        assert!(read_model(&std_mismatch).is_err());
    }
}
