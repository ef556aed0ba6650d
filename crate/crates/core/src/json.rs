//! Float formatting for JSON output: 17 significant digits, scientific form.

use serde::ser::{Error as _, SerializeSeq};
use serde::Serializer;
use serde_json::value::RawValue;

pub fn format_f64(x: f64) -> Option<String> {
    x.is_finite().then(|| format!("{x:.16e}"))
}

pub fn f64_17<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    match format_f64(*x) {
        Some(text) => {
            let raw = RawValue::from_string(text).map_err(S::Error::custom)?;
            s.serialize_some(&raw)
        }
        None => s.serialize_none(),
    }
}

pub fn vec_f64_17<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    struct Wrap(f64);
    impl serde::Serialize for Wrap {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            f64_17(&self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for &x in xs {
        seq.serialize_element(&Wrap(x))?;
    }
    seq.end()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(serde::Serialize)]
    struct Probe {
        #[serde(serialize_with = "f64_17")]
        a: f64,
        #[serde(serialize_with = "vec_f64_17")]
        b: Vec<f64>,
    }

    #[test]
    fn seventeen_digits_round_trip() {
        let p = Probe {
            a: 0.1,
            b: vec![4.0, f64::NAN, 1.0 / 3.0],
        };
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"a":1.0000000000000001e-1,"b":[4.0000000000000000e0,null,3.3333333333333331e-1]}"#
        );
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["a"].as_f64().unwrap(), 0.1);
        assert_eq!(v["b"][2].as_f64().unwrap(), 1.0 / 3.0);
    }
}
