//! Number formatting shared by reports.

/// Significant digits in every emitted number.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds `x` to [`SIGNIFICANT_DIGITS`] and prints the shortest decimal
/// that reads back as the rounded value.
pub fn significant(x: f64) -> String {
    let r = round_significant(x);
    if r == 0.0 {
        // also folds -0
        return "0".into();
    }
    if (1e-5..1e16).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

pub fn round_significant(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("scientific notation parses")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(significant(400.0 / 39.0), "10.2564102564");
        assert_eq!(significant(0.8 + 3.0 * 0.0005), "0.8015");
        assert_eq!(significant(-0.0), "0");
        assert_eq!(significant(1e-20 / 3.0), "3.33333333333e-21");
        assert_eq!(round_significant(f64::INFINITY), f64::INFINITY);
    }
}
