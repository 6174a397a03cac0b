use pcakit_core::format::NumberFormat;
use pcakit_core::DenseMatrix;

/// Space-separated rows, one per line, each terminated by `\n`.
pub fn write_table(m: &DenseMatrix, format: NumberFormat) -> String {
    m.to_text(format)
}

/// A single space-separated line for a vector of values (no newline).
pub fn write_row(values: &[f64], format: NumberFormat) -> String {
    values
        .iter()
        .map(|&v| pcakit_core::format::format_number(v, format))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use NumberFormat::{Fixed, Signed};

    #[test]
    fn listing_styles() {
        let ev = DenseMatrix::from_rows(&[[1.2840277122, 0.0490833989]]).unwrap();
        assert_eq!(
            write_table(&ev, Signed(10)),
            "+1.2840277122 +0.0490833989\n"
        );
        assert_eq!(write_table(&DenseMatrix::zeros(1, 1), Fixed(2)), "0.00\n");
        let neg = DenseMatrix::from_rows(&[[-0.1751153070]]).unwrap();
        assert_eq!(write_table(&neg, Signed(10)), "-0.1751153070\n");
    }

    #[test]
    fn multi_row_layout_is_deterministic() {
        let m = DenseMatrix::from_rows(&[[1.0, -2.5], [0.125, 3.0]]).unwrap();
        let a = write_table(&m, Fixed(2));
        assert_eq!(a, "1.00 -2.50\n0.13 3.00\n");
        assert_eq!(a, write_table(&m, Fixed(2)));
        assert_eq!(write_row(&[1.0, -1.0], Signed(1)), "+1.0 -1.0");
    }
}
