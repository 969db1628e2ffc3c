//! Number formatting shared by every emitter.

use nalgebra::{DMatrix, DVector};
use serde_json::Value;

/// Significant digits in all floating-point output.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Round to [`SIGNIFICANT_DIGITS`] significant digits; `-0` becomes `0`.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let text = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let r: f64 = text.parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Text form of [`round_sig`], shortest representation.
pub fn fmt_sig(x: f64) -> String {
    format!("{}", round_sig(x))
}

pub fn json_number(x: f64) -> Value {
    serde_json::Number::from_f64(round_sig(x)).map_or(Value::Null, Value::Number)
}

pub fn json_vector(v: &DVector<f64>) -> Value {
    Value::Array(v.iter().map(|&x| json_number(x)).collect())
}

/// Row-major nested arrays.
pub fn json_matrix(m: &DMatrix<f64>) -> Value {
    Value::Array((0..m.nrows()).map(|i| Value::Array((0..m.ncols()).map(|j| json_number(m[(i, j)])).collect())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounds_to_twelve_digits() {
        assert_eq!(fmt_sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(fmt_sig(-0.0), "0");
        assert_eq!(fmt_sig(-1e-300 * 1e-300), "0");
        assert_eq!(fmt_sig(123_456_789.123_456_78), "123456789.123");
        assert_eq!(fmt_sig(2.0), "2");
    }
}
