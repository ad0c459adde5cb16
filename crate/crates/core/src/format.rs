//! Number formatting shared by the text literals, matrix files and CLI output.

/// Formats `x` with 17 significant digits, dropping trailing zeros.
///
/// Values with `|x|` outside `[1e-4, 1e6)` use lowercase scientific notation.
/// The output parses back to the identical `f64`.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let ax = x.abs();
    if (1e-4..1e6).contains(&ax) {
        let exp = ax.log10().floor() as i32;
        let decimals = (16 - exp).max(0) as usize;
        trim_fraction(&format!("{x:.decimals$}"))
    } else {
        let s = format!("{x:.16e}");
        match s.split_once('e') {
            Some((mantissa, exp)) => format!("{}e{}", trim_fraction(mantissa), exp),
            None => s,
        }
    }
}

fn trim_fraction(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_values() {
        assert_eq!(fmt_real(0.0), "0");
        assert_eq!(fmt_real(-0.0), "0");
        assert_eq!(fmt_real(1.0), "1");
        assert_eq!(fmt_real(-2.5), "-2.5");
        assert_eq!(fmt_real(0.1), "0.10000000000000001");
        assert_eq!(fmt_real(123456.0), "123456");
    }

    #[test]
    fn scientific_values() {
        assert_eq!(fmt_real(1e-7), "9.9999999999999995e-8");
        assert_eq!(fmt_real(2e6), "2e6");
        assert_eq!(fmt_real(-1.5e-5), "-1.5e-5");
    }

    #[test]
    fn round_trips() {
        for &x in &[
            std::f64::consts::PI,
            -1.0 / 3.0,
            1e-4,
            9.999999999999999e5,
            1e6,
            6.02214076e23,
            -2.2250738585072014e-308,
            0.30000000000000004,
        ] {
            let s = fmt_real(x);
            assert_eq!(s.parse::<f64>().unwrap(), x, "{s}");
        }
    }
}
