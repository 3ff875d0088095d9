//! JSON helpers: reals are written with 17 significant digits so that every
//! `f64` round-trips exactly and output is byte-stable across runs.

use serde::ser::{SerializeSeq, Serializer};
use serde_json::value::RawValue;

/// Format a real with 17 significant digits. Non-finite values become `null`.
pub fn format_real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

fn raw(x: f64) -> Box<RawValue> {
    RawValue::from_string(format_real(x)).expect("formatted real is valid JSON")
}

pub fn real<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&raw(*x), s)
}

pub fn reals<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for &x in xs {
        seq.serialize_element(&raw(x))?;
    }
    seq.end()
}

pub fn pairs<S: Serializer>(xs: &[[f64; 2]], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for p in xs {
        seq.serialize_element(&[raw(p[0]), raw(p[1])])?;
    }
    seq.end()
}

pub fn opt_reals<S: Serializer>(xs: &Option<Vec<f64>>, s: S) -> Result<S::Ok, S::Error> {
    match xs {
        Some(v) => reals(v, s),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [std::f64::consts::PI, 1e-300, -2.5, 0.1 + 0.2, 123456789.123] {
            let s = format_real(x);
            let mantissa = s.split('e').next().unwrap().replace(['-', '.'], "");
            assert_eq!(mantissa.len(), 17, "{s}");
            assert_eq!(s.parse::<f64>().unwrap(), x);
            let v: f64 = serde_json::from_str(&s).unwrap();
            assert_eq!(v, x);
        }
        assert_eq!(format_real(f64::NAN), "null");
    }
}
