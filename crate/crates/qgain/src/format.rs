//! Locale-independent decimal output.

/// `x` rounded to 12 significant digits, in positional notation when the
/// exponent is moderate and scientific notation otherwise.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    // the scientific formatter rounds first, so the exponent is post-rounding
    let sci = format!("{:.11e}", x);
    let exp: i32 = sci[sci.find('e').expect("exponent") + 1..]
        .parse()
        .expect("integer exponent");
    if (-7..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        format!("{:.*}", decimals, x)
    } else {
        sci
    }
}

/// Fixed twelve decimals, as used for determinant values on the terminal.
pub fn fixed12(x: f64) -> String {
    let s = format!("{:.12}", x);
    // avoid printing "-0.000000000000" for values that round to zero
    if s.trim_start_matches('-')
        .bytes()
        .all(|b| b == b'0' || b == b'.')
    {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}
