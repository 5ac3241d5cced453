//! Fixed numeric formatting so that identical inputs give byte-identical output.

use std::fmt;

use dirac_shell::{Complex64, Mat2C};
use serde::de::{Deserialize, Deserializer};
use serde::ser::{Error as _, Serialize, Serializer};
use serde_json::value::RawValue;

/// `%.17g`: 17 significant digits, shortest of fixed or exponent notation,
/// trailing zeros removed. Negative zero prints as `0`.
pub fn g17(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

/// A real number serialized through [`g17`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(g17(self.0)).map_err(S::Error::custom)?;
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        f64::deserialize(d).map(Num)
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&g17(self.0))
    }
}

/// `[re, im]`.
pub fn complex(z: Complex64) -> [Num; 2] {
    [Num(z.re), Num(z.im)]
}

/// Row-major `[[a11, a12], [a21, a22]]` of `[re, im]` pairs.
pub fn matrix(a: &Mat2C) -> [[[Num; 2]; 2]; 2] {
    [
        [complex(a.a11()), complex(a.a12())],
        [complex(a.a21()), complex(a.a22())],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(g17(0.6), "0.59999999999999998");
        assert_eq!(g17(1.0), "1");
        assert_eq!(g17(-0.0), "0");
        assert_eq!(g17(-2.5), "-2.5");
        assert_eq!(g17(1e-7), "9.9999999999999995e-8");
        assert_eq!(g17(123456789.0), "123456789");
        assert_eq!(g17(1e20), "1e20");
        for x in [0.1, 5.0 / 13.0, -0.848528137423857, 1e-300, 6.02e23, f64::MIN_POSITIVE] {
            assert_eq!(g17(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn raw_numbers_in_json() {
        let v = serde_json::to_string(&[Num(0.6), Num(2.0), Num(f64::NAN)]).unwrap();
        assert_eq!(v, "[0.59999999999999998,2,null]");
    }
}
