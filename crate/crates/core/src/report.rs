//! JSON rendering with every float rounded to 12 significant digits,
//! ties to even, so that reports are stable across platforms.

use serde::Serialize;
use serde_json::{Number, Value};

pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds `x` to `digits` significant decimal digits, ties to even, using
/// the exact decimal expansion of `x`.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 || digits == 0 {
        return x;
    }
    // f64 values have at most 767 significant decimal digits
    let exact = format!("{:.800e}", x.abs());
    let (mantissa, exp) = exact.split_once('e').expect("exponent present");
    let mut exp: i32 = exp.parse().expect("integer exponent");
    let all: Vec<u8> = mantissa.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
    let mut kept = all[..digits].to_vec();
    let rest = &all[digits..];
    let round_up = match rest.first() {
        Some(&d) if d > 5 => true,
        Some(&5) => rest[1..].iter().any(|&d| d != 0) || kept[digits - 1] % 2 == 1,
        _ => false,
    };
    if round_up {
        let mut i = digits;
        loop {
            if i == 0 {
                kept.insert(0, 1);
                kept.pop();
                exp += 1;
                break;
            }
            i -= 1;
            if kept[i] == 9 {
                kept[i] = 0;
            } else {
                kept[i] += 1;
                break;
            }
        }
    }
    let text: String = kept.iter().map(|d| char::from(b'0' + d)).collect();
    let value: f64 = format!("{}.{}e{exp}", &text[..1], &text[1..])
        .parse()
        .expect("valid float literal");
    value.copysign(x)
}

/// Rounds every float in a JSON tree; integers are left alone.
pub fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("f64 number");
            if let Some(r) = Number::from_f64(round_sig(x, SIGNIFICANT_DIGITS)) {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Pretty JSON with rounded floats and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let mut v = serde_json::to_value(value)?;
    round_value(&mut v);
    let mut s = serde_json::to_string_pretty(&v)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_sig(0.176_776_695_296_636_9, 12), 0.176_776_695_297);
        assert_eq!(round_sig(-2.0 / 3.0, 12), -0.666_666_666_667);
        assert_eq!(round_sig(8.0, 12), 8.0);
        assert_eq!(round_sig(0.0, 12), 0.0);
        assert_eq!(round_sig(9.999_999_999_999_7, 12), 10.0);
        assert!(round_sig(f64::NAN, 12).is_nan());
    }

    #[test]
    fn exact_ties_go_to_even() {
        // both are exactly representable with a 5 in the 13th digit
        assert_eq!(round_sig(1_234_567_890_125.0, 12), 1_234_567_890_120.0);
        assert_eq!(round_sig(1_234_567_890_135.0, 12), 1_234_567_890_140.0);
        assert_eq!(round_sig(0.5, 0), 0.5);
        assert_eq!(round_sig(2.5, 1), 2.0);
        assert_eq!(round_sig(3.5, 1), 4.0);
    }

    #[test]
    fn json_tree() {
        let v = serde_json::json!({"a": [1.0000000000004, 3], "b": {"c": 0.1234567890123456}});
        let s = to_json(&v).unwrap();
        assert!(s.contains("1.0"), "{s}");
        assert!(s.contains("0.123456789012"));
        assert!(s.contains('3'));
    }
}
