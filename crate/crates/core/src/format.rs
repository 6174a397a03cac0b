//! Fixed-point number rendering with round-half-away-from-zero.

/// Display style for a single number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberFormat {
    /// `precision` digits after the point; `-` on negatives only.
    Fixed(usize),
    /// As `Fixed`, with a leading `+` on non-negatives.
    Signed(usize),
}

impl NumberFormat {
    pub fn precision(self) -> usize {
        match self {
            NumberFormat::Fixed(p) | NumberFormat::Signed(p) => p,
        }
    }
}

// Enough fractional digits to print any finite f64 exactly.
const EXACT_DIGITS: usize = 1080;

/// Formats `value` with exactly `format.precision()` fractional digits.
///
/// Exact ties round away from zero. A value that rounds to zero is printed
/// without a minus sign.
pub fn format_number(value: f64, format: NumberFormat) -> String {
    let precision = format.precision();
    let exact = format!("{:.*}", EXACT_DIGITS, value.abs());
    let (int_part, frac_part) = exact.split_once('.').unwrap_or((&exact, ""));

    let mut digits: Vec<u8> = int_part
        .bytes()
        .chain(frac_part.bytes().take(precision))
        .map(|b| b - b'0')
        .collect();
    let round_up = frac_part
        .as_bytes()
        .get(precision)
        .is_some_and(|&b| b >= b'5');
    let mut int_len = int_part.len();
    if round_up {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, 1);
                int_len += 1;
                break;
            }
            i -= 1;
            if digits[i] == 9 {
                digits[i] = 0;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }

    let is_zero = digits.iter().all(|&d| d == 0);
    let mut out = String::with_capacity(digits.len() + 2);
    if value < 0.0 && !is_zero {
        out.push('-');
    } else if matches!(format, NumberFormat::Signed(_)) {
        out.push('+');
    }
    for (i, d) in digits.iter().enumerate() {
        if i == int_len {
            out.push('.');
        }
        out.push((b'0' + d) as char);
    }
    out
}
