//! Locale-independent number rendering.

/// Sixteen significant digits, positional for moderate magnitudes and
/// scientific otherwise, with trailing zeros removed.
pub fn real(v: f64) -> String {
    if !v.is_finite() {
        return if v.is_nan() { "nan".into() } else if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{v:.15e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..16).contains(&exp) {
        let digits = (15 - exp).max(0) as usize;
        trim(&format!("{v:.digits$}"))
    } else {
        format!("{}e{exp}", trim(mantissa))
    }
}

/// Shortest round-trip representation, switching to exponent notation for
/// very small or very large magnitudes. Used where output must be re-readable.
pub fn exact(v: f64) -> String {
    if v == 0.0 || !v.is_finite() || (1e-5..1e16).contains(&v.abs()) {
        v.to_string()
    } else {
        format!("{v:e}")
    }
}

fn trim(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}
