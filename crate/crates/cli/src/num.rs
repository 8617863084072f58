//! Number formatting and complex-flag parsing.

use lommel::C64;
use serde_json::{Number, Value};
use std::str::FromStr;

/// `%.17g`: 17 significant digits, trailing zeros removed, scientific
/// notation outside `1e-4 <= |x| < 1e17`.
pub fn g17(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{x:.16e}");
    let (mant, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..17).contains(&exp) {
        let mant = trim_zeros(mant);
        return format!("{mant}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.abs());
    }
    let decimals = (16 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// A JSON number printed with `g17`, or `null` when not finite.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(Number::from_str(&g17(x)).expect("valid JSON number"))
}

/// `[re, im]`.
pub fn complex(z: C64) -> Value {
    Value::Array(vec![num(z.re), num(z.im)])
}

/// Parses `RE[,IM]`; the imaginary part defaults to zero.
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let mut parts = s.split(',');
    let re = parts.next().unwrap_or("").trim();
    let im = parts.next().map(str::trim);
    if parts.next().is_some() {
        return Err(format!("expected RE[,IM], got {s:?}"));
    }
    let re: f64 = re.parse().map_err(|_| format!("bad real part in {s:?}"))?;
    let im: f64 = match im {
        Some(t) => t.parse().map_err(|_| format!("bad imaginary part in {s:?}"))?,
        None => 0.0,
    };
    if !re.is_finite() || !im.is_finite() {
        return Err(format!("non-finite value {s:?}"));
    }
    Ok(C64::new(re, im))
}
